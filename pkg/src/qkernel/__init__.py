"""Hybrid quantum-classical kernel classifier on a tiny dense simulator.

The pieces, bottom up: a 2/3-qubit statevector simulator (`statevec`),
amplitude-pair rotation blocks (`blocks`), synthesis of state-preparation
unitaries from those blocks (`encoder`), the squared-inner-product circuit
(`inner_product`), the cone feature map (`features`), the class-means
kernel classifier (`kernel`), grid/circle data generation (`dataset`), a
circuit-independent classical reference (`oracle`), and a CLI (`cli`).
"""

from .blocks import block_gate_sequence, block_matrix, u3_matrix
from .dataset import (CircleSpec, GridSpec, generate_grid, label_point,
                      random_points)
from .encoder import (BlockAngles, BlockOrdering, DegenerateDenominatorError,
                      SynthesisError, canonical_prep_angles,
                      canonical_unprep_angles, prep_unitary, select_ordering,
                      solve_angles, unprep_unitary)
from .features import feature_map
from .inner_product import (ShotConfig, gram_matrix, inner_product_sq,
                            inner_product_sq_sampled)
from .kernel import (ENGINES, LabeledSample, TrainedModel, classify,
                     compute_bias, decision_values, kernel_matrix,
                     kernel_value, make_samples, train_model)
from .oracle import classical_classify, classical_inner_sq
from .statevec import (GateOp, apply_gate, apply_unitary, gate_matrix,
                       probability, zero_state)

__version__ = "0.1.0"

__all__ = [
    "BlockAngles", "BlockOrdering", "CircleSpec", "DegenerateDenominatorError",
    "ENGINES", "GateOp", "GridSpec", "LabeledSample", "ShotConfig",
    "SynthesisError", "TrainedModel", "apply_gate", "apply_unitary",
    "block_gate_sequence", "block_matrix", "canonical_prep_angles",
    "canonical_unprep_angles", "classical_classify", "classical_inner_sq",
    "classify", "compute_bias", "decision_values", "feature_map",
    "gate_matrix", "generate_grid", "gram_matrix", "inner_product_sq",
    "inner_product_sq_sampled", "kernel_matrix", "kernel_value",
    "label_point", "make_samples", "prep_unitary", "probability",
    "random_points", "select_ordering", "solve_angles", "train_model",
    "u3_matrix", "unprep_unitary", "zero_state",
]
