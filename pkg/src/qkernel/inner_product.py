"""Squared-inner-product evaluation by statevector circuits.

The circuit prepares the first unit vector from |00>, applies the
unprepare operator of the second, and reads out the probability of basis
state |11>, which equals |<w|v>|^2. Two readouts are supported:

  * "direct"  — probability of basis index 3 on the 2-qubit register;
  * "ancilla" — the register is extended by an ancilla qubit, a
    multi-controlled NOT copies the |11> amplitude onto it, and the
    ancilla excitation probability is returned.

Both agree to 1e-12; results are clamped to [0, 1] so downstream sign
logic never sees -1e-16 artifacts. All functions are pure; the sampled
estimator builds its generator per call from the configured seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .encoder import prep_unitary, unprep_unitary
from .statevec import GateOp, apply_gate, apply_unitary, zero_state

READOUT_MODES = ("direct", "ancilla")

#: multi-controlled NOT copying the |11> data amplitude onto the ancilla
MCX_ANCILLA = GateOp("mcx", target=2, controls=(0, 1))


@dataclass(frozen=True)
class ShotConfig:
    """Finite-shot estimation config; shots=None means exact readout."""

    shots: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.shots is not None and self.shots < 1:
            raise ValueError(f"shots must be >= 1 or None, got {self.shots}")


def _final_state(xi, xw, mode: str) -> np.ndarray:
    if mode not in READOUT_MODES:
        raise ValueError(f"mode must be one of {READOUT_MODES}, got {mode!r}")
    n = 2 if mode == "direct" else 3
    state = zero_state(n)
    state = apply_unitary(state, prep_unitary(xi), data_qubits=(0, 1))
    state = apply_unitary(state, unprep_unitary(xw), data_qubits=(0, 1))
    if mode == "ancilla":
        state = apply_gate(state, MCX_ANCILLA)
    return state


def inner_product_sq(xi, xw, mode: str = "direct") -> float:
    """|<xw|xi>|^2 for unit 4-vectors, evaluated through the circuit."""
    state = _final_state(xi, xw, mode)
    if mode == "direct":
        p = float(np.abs(state[3]) ** 2)
    else:
        p = float(np.sum(np.abs(state[4:]) ** 2))  # ancilla bit set
    return min(max(p, 0.0), 1.0)


def inner_product_sq_sampled(xi, xw, cfg: ShotConfig, mode: str = "direct") -> float:
    """Finite-shot estimate of inner_product_sq, reproducible per seed."""
    p = inner_product_sq(xi, xw, mode)
    if cfg.shots is None:
        return p
    rng = np.random.default_rng(cfg.seed)
    return rng.binomial(cfg.shots, p) / cfg.shots


def gram_matrix(feats_a, feats_b, mode: str = "direct") -> np.ndarray:
    """Exact kernel values for all pairs, synthesizing each vector once.

    Row i, column j holds inner_product_sq(feats_a[i], feats_b[j]); the
    per-pair circuit math is identical to the scalar path, batched.
    """
    if mode not in READOUT_MODES:
        raise ValueError(f"mode must be one of {READOUT_MODES}, got {mode!r}")
    a = np.atleast_2d(np.asarray(feats_a, dtype=float))
    b = np.atleast_2d(np.asarray(feats_b, dtype=float))
    prepped = np.stack([apply_unitary(zero_state(2), prep_unitary(v)) for v in a])
    unprep = np.stack([unprep_unitary(w) for w in b])
    # final 2-qubit states of every (i, j) circuit
    psi = np.einsum("jkl,il->ijk", unprep, prepped)
    if mode == "direct":
        p = np.abs(psi[:, :, 3]) ** 2
    else:
        full = np.zeros(psi.shape[:2] + (8,), dtype=complex)
        full[:, :, :4] = psi
        perm = np.arange(8)
        perm[[3, 7]] = perm[[7, 3]]  # the multi-controlled NOT
        full = full[:, :, perm]
        p = np.sum(np.abs(full[:, :, 4:]) ** 2, axis=2)
    return np.clip(p, 0.0, 1.0)
