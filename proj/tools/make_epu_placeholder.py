#!/usr/bin/env python3
"""Regenerate data/epu_daily.csv, the synthetic stand-in for the US daily EPU index.

The published daily index (policyuncertainty.com/us_daily.html) could not be
retrieved when the snapshots were assembled. This writes a stationary AR(1)
series rescaled to the published sample moments of the Jan 21 - Mar 09 2020
window (mean 105.1, sd 36.79). Replace the output with the real download to
run on actual data; the column layout is identical.
"""
import datetime as dt
import numpy as np

rng = np.random.default_rng(20200310)
start, end = dt.date(2020, 1, 1), dt.date(2020, 3, 10)
n = (end - start).days + 1
x = np.zeros(n)
for t in range(1, n):
    x[t] = 0.3 * x[t - 1] + rng.standard_normal()
window = slice((dt.date(2020, 1, 21) - start).days, (dt.date(2020, 3, 9) - start).days + 1)
x = (x - x[window].mean()) / x[window].std(ddof=1) * 36.79 + 105.1
x = np.maximum(x, 1.0)
with open("data/epu_daily.csv", "w") as f:
    f.write("date,daily_policy_index\n")
    for i in range(n):
        d = start + dt.timedelta(i)
        f.write(f"{d.isoformat()},{x[i]:.2f}\n")
