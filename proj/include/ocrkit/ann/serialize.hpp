#pragma once

// Text serialization of Mlp<double>.
//
//   ocrkit-mlp 1
//   activation <tanh|sigmoid>
//   bias <0|1>
//   layers <L> <N(1)> ... <N(L)>
//   weights <l> <rows> <cols>      then <rows> lines of <cols> values
//   bias <l> <n>                   then one line of <n> values (only when bias is 1)
//
// Weight blocks appear for l = 0..L-2 in order; each is followed by its bias
// block. Values are written with 17 significant digits so a save/load cycle is
// bit-exact.

#include <iosfwd>
#include <string>

#include "ocrkit/ann/mlp.hpp"

namespace ocrkit::ann {

void write_mlp(std::ostream& out, const Mlp<double>& net);
Mlp<double> read_mlp(std::istream& in);

void save_mlp(const std::string& path, const Mlp<double>& net);
Mlp<double> load_mlp(const std::string& path);

}  // namespace ocrkit::ann
