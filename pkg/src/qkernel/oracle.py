"""Classical brute-force references for the circuit-based results.

Deliberately independent of the simulator stack: this module imports only
numpy and the feature map, so any agreement with the circuit path is
evidence, not tautology. Not a performance path.
"""

from __future__ import annotations

import numpy as np

from .features import feature_map


def classical_inner_sq(v, w) -> float:
    """(v . w)^2 computed directly, no circuit."""
    return float(np.dot(np.asarray(v, float), np.asarray(w, float)) ** 2)


def classical_decision_value(point, model) -> float:
    """Class-means decision value using the direct dot-product kernel.

    ``model`` only needs .features (n, 4), .labels (n,) and .bias.
    """
    feats = feature_map(np.asarray(point, dtype=float))
    k = (np.asarray(model.features) @ feats) ** 2
    labels = np.asarray(model.labels)
    return float(k[labels == 1].mean() - k[labels == -1].mean() + model.bias)


def classical_classify(point, model) -> int:
    """Sign rule on classical_decision_value; exact zero maps to +1."""
    return 1 if classical_decision_value(point, model) >= 0.0 else -1
