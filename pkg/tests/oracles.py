"""Independent brute-force oracles used to pin expected values.

The reversal oracle goes the opposite direction from the production code:
it forward-projects every central pixel into the target view and keeps,
per target pixel, the candidate with the largest disparity (front-most
surface), with ties broken by smaller projection residual and then
lexicographic (x', y').  Candidate acceptance uses the same strict
epsilon ball, so the two routes must agree exactly.
"""

from __future__ import annotations

import numpy as np

from lfconsist.model import DisparityField, ViewIndex


def oracle_reverse(central: DisparityField, view, eps: float = 1.4) -> DisparityField:
    s, t = view
    d0 = central.values
    h, w = d0.shape
    ys, xs = np.mgrid[0:h, 0:w]
    u = xs + s * d0
    v = ys + t * d0
    # integer target pixels within eps of each projection
    reach = int(np.ceil(eps)) + 1
    chunks = []
    for ky in range(-reach, reach + 1):
        for kx in range(-reach, reach + 1):
            x = np.floor(u).astype(np.int64) + kx
            y = np.floor(v).astype(np.int64) + ky
            r2 = (u - x) ** 2 + (v - y) ** 2
            ok = (r2 < eps * eps) & (x >= 0) & (x < w) & (y >= 0) & (y < h)
            if ok.any():
                chunks.append(np.stack([
                    (y[ok] * w + x[ok]).astype(np.float64),
                    -d0[ok].astype(np.float64),
                    r2[ok].astype(np.float64),
                    xs[ok].astype(np.float64),
                    ys[ok].astype(np.float64),
                ], axis=1))
    out = np.full(h * w, np.nan, dtype=np.float32)
    if chunks:
        cands = np.concatenate(chunks)
        order = np.lexsort((cands[:, 4], cands[:, 3], cands[:, 2],
                            cands[:, 1], cands[:, 0]))
        cands = cands[order]
        target = cands[:, 0].astype(np.int64)
        first = np.unique(target, return_index=True)[1]
        out[target[first]] = -cands[first, 1]
    return DisparityField(ViewIndex(*view), out.reshape(h, w))


def fields_equal(a: DisparityField, b: DisparityField) -> bool:
    """Exact equality of values and validity, NaN-position aware."""
    av, bv = a.values, b.values
    return bool(np.array_equal(np.isnan(av), np.isnan(bv))
                and np.array_equal(np.nan_to_num(av), np.nan_to_num(bv)))
