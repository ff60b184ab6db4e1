"""Vertex counts of the constructions as d grows, with least-squares slopes."""

import numpy as np

from geomon import realize

for abc in [(3, 3, 3), (3, 4, 5), (2, 2, 3), (2, 4, 5), (2, 3, 4), (2, 3, 6)]:
    ds = np.arange(abc[2], abc[2] + 12)
    sizes = np.array([realize((*abc, int(d)))[0].n for d in ds])
    slope, icpt = np.polyfit(ds, sizes, 1)
    print(f"{abc}: sizes {sizes.tolist()}")
    print(f"    slope {slope:.2f}, intercept {icpt:.1f}")
