"""Training grid, ideal circle labels, and seeded random evaluation points.

Points are (n, 2) float arrays. Class convention: strictly inside the
circle is the negative class (-1), everything else including the boundary
is positive (+1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GridSpec:
    """Square grid centred on the origin: side 2*half_side, step spacing."""

    half_side: float = 0.54
    spacing: float = 0.04

    def __post_init__(self):
        if not (self.half_side > 0 and self.spacing > 0):
            raise ValueError("half_side and spacing must be positive")
        intervals = 2.0 * self.half_side / self.spacing
        if abs(intervals - round(intervals)) > 1e-9:
            raise ValueError(
                f"spacing {self.spacing} does not divide the side "
                f"{2 * self.half_side} evenly")

    @property
    def n_per_axis(self) -> int:
        return int(round(2.0 * self.half_side / self.spacing)) + 1


@dataclass(frozen=True)
class CircleSpec:
    """Labelling circle; radius 0 makes every point exterior."""

    radius: float = 0.42
    center: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be non-negative")


def axis_coordinates(spec: GridSpec) -> np.ndarray:
    """Grid coordinates of one axis, exactly symmetric under negation."""
    n = spec.n_per_axis
    upper = spec.half_side - spec.spacing * np.arange(n // 2)
    coords = np.concatenate([-upper, [0.0] if n % 2 else [], upper])
    coords.sort()
    return coords


def generate_grid(spec: GridSpec = GridSpec()) -> np.ndarray:
    """All grid points as an (n_per_axis**2, 2) array, x varying fastest."""
    coords = axis_coordinates(spec)
    xs, ys = np.meshgrid(coords, coords, indexing="xy")
    return np.column_stack([xs.ravel(), ys.ravel()])


def label_point(points, circle: CircleSpec = CircleSpec()):
    """-1 strictly inside the circle, +1 outside or on the boundary.

    Accepts one point (2,) or a batch (n, 2) and returns an int or an
    int array accordingly.
    """
    p = np.asarray(points, dtype=float)
    single = p.ndim == 1
    p = np.atleast_2d(p)
    cx, cy = circle.center
    d2 = (p[:, 0] - cx) ** 2 + (p[:, 1] - cy) ** 2
    labels = np.where(d2 < circle.radius**2, -1, 1)
    return int(labels[0]) if single else labels


def random_points(count: int, seed: int, spec: GridSpec = GridSpec()) -> np.ndarray:
    """Uniform points in the square, reproducible for a fixed seed."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    rng = np.random.default_rng(seed)
    return rng.uniform(-spec.half_side, spec.half_side, size=(count, 2))
