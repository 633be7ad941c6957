"""Amplitude-pair rotation blocks for the 2-qubit register.

``block_matrix(slot, angle)`` rotates the amplitude pair (slot, 3) by half
the given angle and leaves the other two basis amplitudes untouched;
amplitude 3 acts as the shared normalization slot. The matrix form is
normative. ``block_gate_sequence`` expresses the same block in the gate
inventory of :mod:`qkernel.statevec`; the sequences below are fixed under
the package's little-endian convention and are verified against the matrix
form the first time they are requested — construction fails loudly if the
two representations ever disagree.

Convention notes for the sequences:
  * the controlled-u3 uses qubit 0 as control and qubit 1 as target, with
    phi = lam = 0 so the rotation stays real;
  * slot 1 is a bare controlled-u3 (an uncontrolled u3 always touches two
    amplitude pairs, so it cannot act on a single pair);
  * slot 0 requires NOT-conjugation on qubit 1 and enters with the
    rotation angle negated;
  * slot 2 conjugates the controlled-u3 by a 3-CNOT swap.
"""

from __future__ import annotations

import numpy as np

from .statevec import GateOp, gate_matrix

#: entrywise tolerance for the sequence-vs-matrix verification
DECOMP_TOL = 1e-12


class DecompositionError(RuntimeError):
    """A gate sequence failed to reproduce its block matrix."""


def u3_matrix(theta: float, phi: float = 0.0, lam: float = 0.0) -> np.ndarray:
    """Standard 2x2 single-qubit Euler rotation u3(theta, phi, lam)."""
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -np.exp(1j * lam) * s],
                     [np.exp(1j * phi) * s, np.exp(1j * (phi + lam)) * c]])


def block_matrix(slot: int, angle: float) -> np.ndarray:
    """4x4 rotation of the amplitude pair (slot, 3) by angle/2."""
    if slot not in (0, 1, 2):
        raise ValueError(f"slot must be 0, 1 or 2, got {slot}")
    c, s = np.cos(angle / 2), np.sin(angle / 2)
    m = np.eye(4, dtype=complex)
    m[slot, slot] = c
    m[slot, 3] = -s
    m[3, slot] = s
    m[3, 3] = c
    return m


_X1 = GateOp("x", target=1)
_CX10 = GateOp("cx", target=0, controls=(1,))
_CX01 = GateOp("cx", target=1, controls=(0,))
_SWAP = (_CX10, _CX01, _CX10)


def _cu3(theta: float) -> GateOp:
    return GateOp("cu3", target=1, controls=(0,), angles=(theta, 0.0, 0.0))


def block_gate_sequence(slot: int, angle: float) -> list[GateOp]:
    """Gates, in application order, whose product equals block_matrix."""
    _verify_decompositions()
    angle = float(angle)
    if slot == 0:
        return [_X1, _CX10, _cu3(-angle), _CX10, _X1]
    if slot == 1:
        return [_cu3(angle)]
    if slot == 2:
        return [*_SWAP, _cu3(angle), *_SWAP]
    raise ValueError(f"slot must be 0, 1 or 2, got {slot}")


def sequence_matrix(gates: list[GateOp], n_qubits: int = 2) -> np.ndarray:
    """Dense matrix of a gate list applied first-to-last."""
    m = np.eye(2**n_qubits, dtype=complex)
    for g in gates:
        m = gate_matrix(g, n_qubits) @ m
    return m


_verified = False


def _verify_decompositions() -> None:
    """One-time check that every slot's sequence reproduces its matrix."""
    global _verified
    if _verified:
        return
    _verified = True  # set first so the recursive block_gate_sequence call returns
    probes = (0.0, 0.7, -1.3, np.pi, 2 * np.pi - 0.1)
    for slot in (0, 1, 2):
        for angle in probes:
            got = sequence_matrix(block_gate_sequence(slot, angle))
            want = block_matrix(slot, angle)
            dev = float(np.max(np.abs(got - want)))
            if dev > DECOMP_TOL:
                _verified = False
                raise DecompositionError(
                    f"gate sequence for slot {slot} deviates from the block "
                    f"matrix by {dev:.3e} at angle {angle!r}")
