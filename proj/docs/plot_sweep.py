#!/usr/bin/env python3
"""Plot a CSV written by `liecurve sweep`.

    liecurve sweep --n 3 --out sweep.csv
    python3 docs/plot_sweep.py sweep.csv sweep.png
"""
import csv
import sys

import matplotlib.pyplot as plt


def main(src, dst):
    with open(src, newline="") as f:
        rows = list(csv.DictReader(f))
    col = {k: [float(r[k]) for r in rows] for k in rows[0]}
    th = col["theta"]

    fig, ax = plt.subplots(1, 3, figsize=(13, 4))
    for k in ("lambda1", "lambda2", "lambda3", "mean"):
        ax[0].plot(th, col[k], label=k)
    ax[0].set_title("principal curvatures")
    for k in ("alpha1", "alpha2", "alpha3", "scalar"):
        ax[1].plot(th, col[k], label=k)
    ax[1].set_title("Ricci")
    for k in ("k_max", "k_min"):
        ax[2].plot(th, col[k], label=k)
    ax[2].set_title("sectional extrema")
    for a in ax:
        a.set_xlabel("theta")
        a.legend()
    fig.tight_layout()
    fig.savefig(dst, dpi=120)


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2] if len(sys.argv) > 2 else "sweep.png")
