"""Cone feature map from the plane into unit 4-vectors.

A point (x, y) maps to (x, y, sqrt((x^2+y^2)/2), r) with r chosen so the
result has unit norm, i.e. the first three components are a projection
onto a cone and the last absorbs the normalization. The map is defined
where 1.5*(x^2 + y^2) <= 1, which covers the whole experiment square
(|x|, |y| <= 0.54).
"""

from __future__ import annotations

import numpy as np

#: radicand slack before the map reports a domain error
DOMAIN_TOL = 1e-12


def feature_map(points) -> np.ndarray:
    """Map one point (shape (2,)) or a batch (shape (n, 2)) to unit 4-vectors."""
    p = np.asarray(points, dtype=float)
    single = p.ndim == 1
    p = np.atleast_2d(p)
    if p.ndim != 2 or p.shape[1] != 2:
        raise ValueError(f"points must have shape (2,) or (n, 2), got {p.shape}")
    x, y = p[:, 0], p[:, 1]
    sq = x * x + y * y
    radicand = 1.0 - 1.5 * sq
    if np.any(radicand < -DOMAIN_TOL):
        bad = p[radicand < -DOMAIN_TOL][0]
        raise ValueError(f"point {tuple(bad)} outside the map domain "
                         "(needs 1.5*(x^2+y^2) <= 1)")
    feats = np.column_stack([x, y, np.sqrt(sq / 2.0),
                             np.sqrt(np.maximum(radicand, 0.0))])
    return feats[0] if single else feats
