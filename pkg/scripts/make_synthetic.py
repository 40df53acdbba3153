#!/usr/bin/env python3
"""Generate a labeled synthetic CSV for trying out the CLI.

The first --informative columns carry class structure (class-dependent means
with gaussian jitter), the remaining --noise columns are uniform noise. The
output has a header row (f0, f1, ..., class) so it can be fed straight to
`csufs evaluate --has-header --label-col class`.
"""

import argparse
from pathlib import Path

import numpy as np


def build(n, classes, informative, noise, sigma, rng):
    labels = np.arange(n) % classes
    rng.shuffle(labels)
    means = np.linspace(-1.0, 1.0, classes)
    m = informative + noise
    X = rng.uniform(-1.0, 1.0, (n, m))
    X[:, :informative] = means[labels][:, None] + rng.normal(0.0, sigma, (n, informative))
    return X, labels


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=300, help="number of samples")
    parser.add_argument("--classes", type=int, default=2, help="number of classes")
    parser.add_argument("--informative", type=int, default=10, help="class-bearing feature count")
    parser.add_argument("--noise", type=int, default=90, help="noise feature count")
    parser.add_argument("--sigma", type=float, default=0.1, help="jitter on informative features")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--output", type=Path, required=True)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    X, labels = build(args.n, args.classes, args.informative, args.noise, args.sigma, rng)
    m = X.shape[1]
    header = ",".join(f"f{j}" for j in range(m)) + ",class"
    rows = [header]
    for i in range(args.n):
        rows.append(",".join(repr(float(x)) for x in X[i]) + f",{labels[i]}")
    args.output.write_text("\n".join(rows) + "\n", encoding="utf-8")
    print(f"wrote {args.n} samples x {m} features to {args.output}")
    print(f"informative columns: f0..f{args.informative - 1}")


if __name__ == "__main__":
    main()
