#!/usr/bin/env python3
"""Build an IDX image/label pair from the digit bundle of the npm `mnist` package.

The package ships about 10k real MNIST digits as JSON arrays of grayscale/255
values rounded to three decimals, which round-trip exactly to bytes. Digits
are interleaved by a seeded shuffle so that file order is label-mixed.

    npm pack mnist && tar xzf mnist-*.tgz
    python3 tools/mnist_from_npm.py package/src/digits data/mnist-sample --per-class 100
"""
import argparse
import json
import pathlib
import random
import struct


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("digits_dir", type=pathlib.Path)
    ap.add_argument("out_dir", type=pathlib.Path)
    ap.add_argument("--per-class", type=int, default=100)
    ap.add_argument("--seed", type=int, default=20160101)
    args = ap.parse_args()

    samples = []
    for label in range(10):
        flat = json.loads((args.digits_dir / f"{label}.json").read_text())["data"]
        count = len(flat) // 784
        for idx in range(min(count, args.per_class)):
            raw = bytes(round(v * 255) for v in flat[idx * 784:(idx + 1) * 784])
            samples.append((label, raw))

    random.Random(args.seed).shuffle(samples)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    with open(args.out_dir / "train-images-idx3-ubyte", "wb") as f:
        f.write(struct.pack(">IIII", 0x803, len(samples), 28, 28))
        for _, raw in samples:
            f.write(raw)
    with open(args.out_dir / "train-labels-idx1-ubyte", "wb") as f:
        f.write(struct.pack(">II", 0x801, len(samples)))
        f.write(bytes(label for label, _ in samples))
    print(f"wrote {len(samples)} digits to {args.out_dir}")


if __name__ == "__main__":
    main()
