"""Class-means kernel classifier over the squared-overlap kernel.

The kernel of two points is |<phi(p1)|phi(p2)>|^2 with phi the cone
feature map. Three engines evaluate it:

  * "direct" / "ancilla" — the statevector circuit with the respective
    readout (see :mod:`qkernel.inner_product`);
  * "oracle" — the classical dot-product reference (always exact; the
    shots setting only applies to circuit engines).

Training computes the bias of the class-means sign rule from the full
kernel matrix of the samples, evaluated once and reused (the matrix is
symmetric with unit diagonal). Decision rule: sign of
mean(kernel to positive samples) - mean(kernel to negative samples) + bias,
with an exact zero mapping to +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import inner_product as qip
from . import oracle
from .features import feature_map

__all__ = [
    "ENGINES", "LabeledSample", "TrainedModel", "feature_map", "make_samples",
    "kernel_value", "kernel_matrix", "compute_bias", "decision_values",
    "classify", "train_model",
]

ENGINES = ("direct", "ancilla", "oracle")


@dataclass(frozen=True)
class LabeledSample:
    """A plane point with its class label and feature-mapped image."""

    point: np.ndarray
    label: int
    features: np.ndarray

    @classmethod
    def from_point(cls, point, label: int) -> "LabeledSample":
        if label not in (-1, 1):
            raise ValueError(f"label must be +1 or -1, got {label}")
        point = np.asarray(point, dtype=float)
        return cls(point=point, label=int(label), features=feature_map(point))


def make_samples(points, labels) -> list[LabeledSample]:
    points = np.asarray(points, dtype=float)
    labels = np.asarray(labels)
    if len(points) != len(labels):
        raise ValueError("points and labels length mismatch")
    return [LabeledSample.from_point(p, l) for p, l in zip(points, labels)]


@dataclass(frozen=True)
class TrainedModel:
    """Training samples plus the bias of the sign rule.

    ``shots`` is the finite-shot setting for circuit engines (None =
    exact); evaluation seeds are passed to the classify functions so the
    model itself stays deterministic data.
    """

    points: np.ndarray
    labels: np.ndarray
    features: np.ndarray
    bias: float
    engine: str = "direct"
    shots: int | None = None

    def __post_init__(self):
        if self.engine not in ENGINES:
            raise ValueError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        if not (np.any(self.labels == 1) and np.any(self.labels == -1)):
            raise ValueError("model needs at least one sample of each class")

    @property
    def samples(self) -> list[LabeledSample]:
        return [LabeledSample(p, int(l), f)
                for p, l, f in zip(self.points, self.labels, self.features)]


def kernel_value(p1, p2, engine: str = "direct") -> float:
    """Kernel of two plane points under the chosen engine."""
    f1, f2 = feature_map(p1), feature_map(p2)
    if engine == "oracle":
        return oracle.classical_inner_sq(f1, f2)
    return qip.inner_product_sq(f1, f2, mode=engine)


def kernel_matrix(feats_a, feats_b, engine: str = "direct",
                  shots: int | None = None, seed: int = 0) -> np.ndarray:
    """All pairwise kernel values; one synthesis per vector, not per pair."""
    a = np.atleast_2d(np.asarray(feats_a, dtype=float))
    b = np.atleast_2d(np.asarray(feats_b, dtype=float))
    if engine == "oracle":
        return (a @ b.T) ** 2
    if engine not in ENGINES:
        raise ValueError(f"engine must be one of {ENGINES}, got {engine!r}")
    k = qip.gram_matrix(a, b, mode=engine)
    if shots is not None:
        if shots < 1:
            raise ValueError(f"shots must be >= 1 or None, got {shots}")
        rng = np.random.default_rng(seed)
        k = rng.binomial(shots, k) / shots
    return k


def compute_bias(samples: Sequence[LabeledSample], engine: str = "direct",
                 shots: int | None = None, seed: int = 0) -> float:
    """Bias b = (mean kernel within negatives - mean within positives) / 2."""
    labels = np.array([s.label for s in samples])
    feats = np.stack([s.features for s in samples])
    pos, neg = labels == 1, labels == -1
    if not (pos.any() and neg.any()):
        raise ValueError("both classes must be non-empty to compute the bias")
    k = kernel_matrix(feats, feats, engine, shots, seed)
    return float(0.5 * (k[np.ix_(neg, neg)].mean() - k[np.ix_(pos, pos)].mean()))


def train_model(points, labels, engine: str = "direct",
                shots: int | None = None, seed: int = 0) -> TrainedModel:
    """Feature-map the samples and fit the bias with the chosen engine."""
    samples = make_samples(points, labels)
    bias = compute_bias(samples, engine, shots, seed)
    return TrainedModel(points=np.asarray(points, dtype=float),
                        labels=np.asarray(labels, dtype=int),
                        features=np.stack([s.features for s in samples]),
                        bias=bias, engine=engine, shots=shots)


def decision_values(points, model: TrainedModel, seed: int = 0) -> np.ndarray:
    """Decision value of each point under the model's engine and shots."""
    feats = np.atleast_2d(feature_map(points))
    k = kernel_matrix(feats, model.features, model.engine, model.shots, seed)
    pos, neg = model.labels == 1, model.labels == -1
    return k[:, pos].mean(axis=1) - k[:, neg].mean(axis=1) + model.bias


def classify(point, model: TrainedModel, seed: int = 0) -> int:
    """Class label of one point; a decision value of exactly 0 maps to +1."""
    value = decision_values(np.asarray(point, dtype=float), model, seed)[0]
    return 1 if value >= 0.0 else -1
