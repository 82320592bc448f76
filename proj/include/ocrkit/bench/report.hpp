#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ocrkit::bench {

/// %.6g, the float format used in every report.
std::string format_real(double v);

double median(std::vector<double> values);

/// Worker count from OCRKIT_WORKERS, else the available hardware parallelism.
unsigned worker_count();

/// Runs job(0..count-1) on up to `workers` threads. The first exception thrown
/// by any job is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& job);

void write_text(const std::string& path, const std::string& text);

}  // namespace ocrkit::bench
