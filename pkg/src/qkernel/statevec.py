"""Minimal dense statevector simulator for 2- and 3-qubit registers.

Basis convention (fixed here, used everywhere in this package):
    * little-endian — bit q of the basis index is the state of qubit q,
      so index k = sum_q bit_q * 2**q.
    * For two qubits, index 1 is |01> = qubit 0 excited, index 2 is |10> =
      qubit 1 excited; a Kronecker product written A (x) B therefore puts A
      on qubit 1 and B on qubit 0.

All operations are pure: the input state is never modified and a new array
is returned, so states may be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: entrywise tolerance for algebraic identities (U U^dag = I)
UNITARY_TOL = 1e-12
#: tolerance for accumulated norms over gate sequences
NORM_TOL = 1e-10

_GATE_KINDS = ("x", "cx", "cu3", "mcx")
_N_CONTROLS = {"x": (0, 0), "cx": (1, 1), "cu3": (1, 1), "mcx": (1, 3)}


@dataclass(frozen=True)
class GateOp:
    """One gate of the supported inventory.

    kind: "x" (NOT), "cx" (controlled NOT), "cu3" (controlled u3 rotation)
    or "mcx" (multi-controlled NOT). ``angles`` is the (theta, phi, lam)
    Euler triple and is required exactly for "cu3".
    """

    kind: str
    target: int
    controls: tuple[int, ...] = ()
    angles: tuple[float, float, float] | None = None

    def __post_init__(self):
        if self.kind not in _GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        object.__setattr__(self, "controls", tuple(self.controls))
        if self.target in self.controls:
            raise ValueError("target qubit cannot also be a control")
        if len(set(self.controls)) != len(self.controls):
            raise ValueError("duplicate control qubits")
        lo, hi = _N_CONTROLS[self.kind]
        if not lo <= len(self.controls) <= hi:
            raise ValueError(f"{self.kind} takes {lo}..{hi} controls, "
                             f"got {len(self.controls)}")
        if (self.angles is None) == (self.kind == "cu3"):
            raise ValueError("angles are required for cu3 and only for cu3")
        if self.angles is not None:
            object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))


def zero_state(n_qubits: int) -> np.ndarray:
    """Return |0...0> for a register of 2 or 3 qubits."""
    if n_qubits not in (2, 3):
        raise ValueError(f"unsupported qubit count {n_qubits} (need 2 or 3)")
    amps = np.zeros(2**n_qubits, dtype=complex)
    amps[0] = 1.0
    return amps


def n_qubits_of(state: np.ndarray) -> int:
    size = np.asarray(state).shape
    if size == (4,):
        return 2
    if size == (8,):
        return 3
    raise ValueError(f"state must have 4 or 8 amplitudes, got shape {size}")


def is_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0]))) <= tol


def apply_unitary(state: np.ndarray, u: np.ndarray,
                  data_qubits: tuple[int, int] = (0, 1)) -> np.ndarray:
    """Apply a 4x4 unitary to two qubits of the register, identity elsewhere.

    ``u`` is indexed in the same convention: its row/column index is
    bit(data_qubits[1])*2 + bit(data_qubits[0]).
    """
    state = np.asarray(state, dtype=complex)
    n = n_qubits_of(state)
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {u.shape}")
    if not is_unitary(u):
        raise ValueError("matrix failed the unitarity check")
    q0, q1 = data_qubits
    if q0 == q1 or not (0 <= q0 < n and 0 <= q1 < n):
        raise ValueError(f"invalid data qubits {data_qubits} for {n} qubits")
    if n == 2:
        return u @ state
    # axis j of the reshaped tensor is qubit n-1-j (C order)
    t = state.reshape([2] * n)
    ax0, ax1 = n - 1 - q0, n - 1 - q1
    t = np.moveaxis(t, (ax1, ax0), (0, 1))
    t = (u @ t.reshape(4, -1)).reshape([2, 2] + [2] * (n - 2))
    t = np.moveaxis(t, (0, 1), (ax1, ax0))
    return np.ascontiguousarray(t).reshape(-1)


def _u3_2x2(theta: float, phi: float, lam: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -np.exp(1j * lam) * s],
                     [np.exp(1j * phi) * s, np.exp(1j * (phi + lam)) * c]])


def _check_indices(gate: GateOp, n: int) -> None:
    for q in (gate.target, *gate.controls):
        if not 0 <= q < n:
            raise ValueError(f"gate qubit {q} out of range for {n} qubits")


def apply_gate(state: np.ndarray, gate: GateOp) -> np.ndarray:
    """Apply one GateOp by direct index arithmetic on the amplitudes."""
    state = np.asarray(state, dtype=complex)
    n = n_qubits_of(state)
    _check_indices(gate, n)
    dim = state.size
    tbit = 1 << gate.target
    cmask = 0
    for c in gate.controls:
        cmask |= 1 << c

    idx = np.arange(dim)
    active = (idx & cmask) == cmask
    if gate.kind in ("x", "cx", "mcx"):
        src = np.where(active, idx ^ tbit, idx)
        return state[src]

    # cu3: mix each (target=0, target=1) amplitude pair whose control is set
    u = _u3_2x2(*gate.angles)
    out = state.copy()
    lo = active & ((idx & tbit) == 0)
    hi = idx[lo] ^ tbit
    out[idx[lo]] = u[0, 0] * state[idx[lo]] + u[0, 1] * state[hi]
    out[hi] = u[1, 0] * state[idx[lo]] + u[1, 1] * state[hi]
    return out


def gate_matrix(gate: GateOp, n_qubits: int) -> np.ndarray:
    """Explicit dense matrix of a GateOp on the full register.

    Built entry by entry from the definition (independent of apply_gate, so
    the two can be cross-checked).
    """
    if n_qubits not in (2, 3):
        raise ValueError(f"unsupported qubit count {n_qubits}")
    _check_indices(gate, n_qubits)
    dim = 2**n_qubits
    tbit = 1 << gate.target
    cmask = 0
    for c in gate.controls:
        cmask |= 1 << c
    u = _u3_2x2(*gate.angles) if gate.kind == "cu3" else np.array([[0, 1], [1, 0]],
                                                                  dtype=complex)
    m = np.eye(dim, dtype=complex)
    for k in range(dim):
        if (k & cmask) != cmask or (k & tbit):
            continue
        lo, hi = k, k | tbit
        m[lo, lo], m[lo, hi] = u[0, 0], u[0, 1]
        m[hi, lo], m[hi, hi] = u[1, 0], u[1, 1]
    return m


def probability(state: np.ndarray, basis_index: int) -> float:
    """Return |amplitude|^2 of one computational basis state."""
    state = np.asarray(state)
    n_qubits_of(state)
    if not 0 <= basis_index < state.size:
        raise ValueError(f"basis index {basis_index} out of range "
                         f"for {state.size} amplitudes")
    return float(np.abs(state[basis_index]) ** 2)
