"""Render the convergence figure from CSV data.

The CLI command

    etaq convergence "2^-1" --nmax 20 --Nmax 100 --out rows.csv

writes one row per (n, N) with the partial sum, the exact coefficient, and
the absolute error.  This script builds the same rows in-process for several
quotients and plots |d(n,N) - d(n)| against N, one line per n, log-scaled
vertically.  Requires matplotlib.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from etaq import parse_shape
from etaq.cli import build_convergence_report

quotients = ["1^-3 4^-1", "1^-3 4^1", "2^-1", "1^-2 11^-2"]

fig, axes = plt.subplots(2, 2, figsize=(11, 7), sharex=True)
for ax, text in zip(axes.flat, quotients):
    report = build_convergence_report(parse_shape(text), n_max=20, N_max=100)
    by_n = {}
    for n, N, partial, exact, abs_error in report.rows:
        by_n.setdefault(n, []).append(float(abs_error))
    for n, errors in sorted(by_n.items()):
        shade = 0.75 * (1 - n / max(by_n))
        ax.semilogy(range(1, len(errors) + 1), errors, color=str(shade), lw=0.8)
    ax.set_title(text)
    ax.set_xlabel("N")
    ax.set_ylabel("|d(n,N) - d(n)|")

fig.tight_layout()
fig.savefig("convergence.png", dpi=150)
print("wrote convergence.png")
