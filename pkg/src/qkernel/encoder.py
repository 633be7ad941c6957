"""Synthesis of the two state-preparation unitaries from rotation blocks.

``prep_unitary(t)`` returns a real-orthogonal 4x4 matrix whose first column
is the unit target ``t`` (so it maps |00> to the amplitude-encoded state)
and ``unprep_unitary(t)`` returns one whose last row is ``t`` (so it maps
the encoded state onto |11>). Both are chains of the pair rotations from
:mod:`qkernel.blocks`.

Angle solving comes in two flavours:

  * the canonical closed forms (`canonical_prep_angles`,
    `canonical_unprep_angles`) for the fixed block order 0,1,2 — these
    raise :class:`DegenerateDenominatorError` whenever a quotient
    denominator (|sin(a/2)|, |cos(b/2)| or |cos(c/2)| as applicable) drops
    below 1e-8, signalling the caller to re-order;
  * the general path (`select_ordering` + `solve_angles`), which orders the
    blocks by ascending target magnitude — that bounds every denominator
    away from zero for any unit vector — and resolves each arcsin/arccos
    branch directly with atan2 against cancellation-free remainders.

Every returned angle set is validated by rebuilding the chain and checking
the preparation contract to 1e-10; a violation raises
:class:`SynthesisError` (only reachable for non-unit input or a bug).
"""

from __future__ import annotations

from typing import Literal, NamedTuple

import numpy as np

from .blocks import block_matrix

#: quotient-denominator threshold that triggers the reordering path
DEGENERATE_TOL = 1e-8
#: reconstruction-residual tolerance of the preparation contracts
RESIDUAL_TOL = 1e-10
#: entrywise unitarity tolerance of the delivered matrices
UNITARY_TOL = 1e-12

#: the |00> <-> |11>, |01> <-> |10> preamble used by the reordered chain
FLIP_XX = np.eye(4, dtype=complex)[::-1].copy()

_E3 = np.array([0.0, 0.0, 0.0, 1.0])


class DegenerateDenominatorError(ValueError):
    """Canonical closed form hit a near-zero denominator; re-order blocks."""


class SynthesisError(RuntimeError):
    """Solved angles failed the reconstruction contract."""


class BlockAngles(NamedTuple):
    """Rotation angles indexed by block slot (a -> slot 0, b -> 1, c -> 2)."""

    a: float
    b: float
    c: float


class BlockOrdering(NamedTuple):
    """Slot application order (ascending target magnitude) plus whether the
    prepare-mode chain starts from the flipped register."""

    order: tuple[int, int, int]
    pre_flip: bool = True


def _as_unit_target(target) -> np.ndarray:
    t = np.asarray(target, dtype=float).reshape(-1)
    if t.shape != (4,):
        raise ValueError(f"target must have 4 components, got shape {t.shape}")
    if not np.all(np.isfinite(t)):
        raise ValueError("target has non-finite components")
    norm = float(np.linalg.norm(t))
    if abs(norm - 1.0) > RESIDUAL_TOL:
        raise ValueError(f"target norm {norm!r} is not 1 within {RESIDUAL_TOL}")
    return t / norm


def chain_matrix(angles: BlockAngles, order: tuple[int, int, int] = (0, 1, 2),
                 pre_flip: bool = False,
                 mode: Literal["prepare", "unprepare"] = "prepare") -> np.ndarray:
    """Matrix of a block chain.

    prepare: blocks applied in ``order`` (optionally after the register
    flip), so the product is M_k . M_j . M_i [. XX].
    unprepare: the V chain applied in reversed ``order`` (product
    M_i . M_j . M_k); the delivered operator is its transpose.
    """
    seq = order if mode == "prepare" else order[::-1]
    u = FLIP_XX.copy() if (mode == "prepare" and pre_flip) else np.eye(4, dtype=complex)
    for slot in seq:
        u = block_matrix(slot, angles[slot]) @ u
    return u


def _prep_residual(angles, order, pre_flip, t) -> float:
    u = chain_matrix(angles, order, pre_flip, "prepare")
    return float(np.max(np.abs(u[:, 0] - t)))


def _unprep_residual(angles, order, t) -> float:
    v = chain_matrix(angles, order, mode="unprepare")
    return float(np.max(np.abs(v @ _E3 - t)))


def canonical_prep_angles(target) -> BlockAngles:
    """Closed-form prepare angles for block order 0,1,2 (no flip).

    Branch ranges: a in [0, 2pi], b in [-pi, pi], c in (-2pi, 2pi].
    Raises DegenerateDenominatorError when a quotient denominator is below
    1e-8 and the zero-angle convention cannot meet the contract.
    """
    t = _as_unit_target(target)
    t0, t1, t2, t3 = t
    sin_half_a = float(np.sqrt(t1 * t1 + t2 * t2 + t3 * t3))
    a = 2.0 * float(np.arctan2(sin_half_a, t0))
    if sin_half_a < DEGENERATE_TOL:
        return _finish_canonical(BlockAngles(a, 0.0, 0.0), t, "prepare")
    b = 2.0 * float(np.arcsin(np.clip(-t1 / sin_half_a, -1.0, 1.0)))
    cos_half_b = float(np.sqrt(t2 * t2 + t3 * t3)) / sin_half_a
    if cos_half_b < DEGENERATE_TOL:
        return _finish_canonical(BlockAngles(a, b, 0.0), t, "prepare")
    c = 2.0 * float(np.arctan2(-t2, t3))
    angles = BlockAngles(a, b, c)
    if _prep_residual(angles, (0, 1, 2), False, t) > RESIDUAL_TOL:
        raise SynthesisError(f"canonical prepare angles missed target {t!r}")
    return angles


def canonical_unprep_angles(target) -> BlockAngles:
    """Closed-form unprepare angles for block order 0,1,2.

    Branch ranges: c in [-pi, pi], b in [-pi, pi], a in (-2pi, 2pi].
    """
    t = _as_unit_target(target)
    t0, t1, t2, t3 = t
    c = 2.0 * float(np.arcsin(np.clip(-t2, -1.0, 1.0)))
    cos_half_c = float(np.sqrt(t0 * t0 + t1 * t1 + t3 * t3))
    if cos_half_c < DEGENERATE_TOL:
        return _finish_canonical(BlockAngles(0.0, 0.0, c), t, "unprepare")
    b = 2.0 * float(np.arcsin(np.clip(-t1 / cos_half_c, -1.0, 1.0)))
    cos_half_bc = float(np.sqrt(t0 * t0 + t3 * t3))  # = cos(b/2) cos(c/2)
    if cos_half_bc / cos_half_c < DEGENERATE_TOL:
        return _finish_canonical(BlockAngles(0.0, b, c), t, "unprepare")
    a = 2.0 * float(np.arctan2(-t0, t3))
    angles = BlockAngles(a, b, c)
    if _unprep_residual(angles, (0, 1, 2), t) > RESIDUAL_TOL:
        raise SynthesisError(f"canonical unprepare angles missed target {t!r}")
    return angles


def _finish_canonical(angles: BlockAngles, t: np.ndarray, mode: str) -> BlockAngles:
    resid = (_prep_residual(angles, (0, 1, 2), False, t) if mode == "prepare"
             else _unprep_residual(angles, (0, 1, 2), t))
    if resid > RESIDUAL_TOL:
        raise DegenerateDenominatorError(
            f"canonical {mode} denominators below {DEGENERATE_TOL} for "
            f"target {t!r}; use select_ordering")
    return angles


def select_ordering(target) -> BlockOrdering:
    """Slot order of ascending |component|, ties broken by lowest slot."""
    t = _as_unit_target(target)
    order = np.argsort(np.abs(t[:3]), kind="stable")
    return BlockOrdering(order=tuple(int(s) for s in order), pre_flip=True)


def solve_angles(target, ordering: BlockOrdering,
                 mode: Literal["prepare", "unprepare"]) -> BlockAngles:
    """Solve the chain angles for an arbitrary ordering.

    Each angle comes from atan2 of the matching target component against
    the root-sum-square of the components still to be consumed, which
    resolves the branch and sign in one step and never divides by a small
    quantity for a unit target.
    """
    if mode not in ("prepare", "unprepare"):
        raise ValueError(f"mode must be 'prepare' or 'unprepare', got {mode!r}")
    t = _as_unit_target(target)
    i, j, k = ordering.order
    if sorted((i, j, k)) != [0, 1, 2]:
        raise ValueError(f"ordering {ordering.order!r} is not a slot permutation")
    if mode == "prepare" and not ordering.pre_flip and i != 0:
        # without the register flip only block 0 couples to the |00> start
        raise ValueError("prepare without pre_flip requires slot 0 first")
    ti, tj, tk, t3 = t[i], t[j], t[k], t[3]

    angles = np.zeros(3)
    if mode == "unprepare":
        # chain applied M_k, M_j, M_i onto the |11> column
        angles[k] = 2.0 * np.arctan2(-tk, np.sqrt(ti * ti + tj * tj + t3 * t3))
        angles[j] = 2.0 * np.arctan2(-tj, np.sqrt(ti * ti + t3 * t3))
        angles[i] = 2.0 * np.arctan2(-ti, t3)
        solved = BlockAngles(*angles)
        resid = _unprep_residual(solved, ordering.order, t)
    else:
        if ordering.pre_flip:
            angles[i] = 2.0 * np.arctan2(-ti, np.sqrt(tj * tj + tk * tk + t3 * t3))
        else:
            angles[i] = 2.0 * np.arctan2(np.sqrt(tj * tj + tk * tk + t3 * t3), ti)
        angles[j] = 2.0 * np.arctan2(-tj, np.sqrt(tk * tk + t3 * t3))
        angles[k] = 2.0 * np.arctan2(-tk, t3)
        solved = BlockAngles(*angles)
        resid = _prep_residual(solved, ordering.order, ordering.pre_flip, t)
    if resid > RESIDUAL_TOL:
        raise SynthesisError(
            f"angle synthesis residual {resid:.3e} exceeds {RESIDUAL_TOL} "
            f"for target {t!r} (mode={mode}, ordering={ordering})")
    return solved


def prep_unitary(target) -> np.ndarray:
    """Real-orthogonal 4x4 matrix whose first column equals the unit target."""
    t = _as_unit_target(target)
    try:
        angles = canonical_prep_angles(t)
        order, flip = (0, 1, 2), False
    except DegenerateDenominatorError:
        ordering = select_ordering(t)
        angles = solve_angles(t, ordering, "prepare")
        order, flip = ordering.order, ordering.pre_flip
    u = chain_matrix(angles, order, flip, "prepare")
    _check_delivery(u, np.max(np.abs(u[:, 0] - t)), t)
    return u


def unprep_unitary(target) -> np.ndarray:
    """Real-orthogonal 4x4 matrix with last row = target; maps target to |11>."""
    t = _as_unit_target(target)
    try:
        angles = canonical_unprep_angles(t)
        order = (0, 1, 2)
    except DegenerateDenominatorError:
        ordering = select_ordering(t)
        angles = solve_angles(t, ordering, "unprepare")
        order = ordering.order
    u = np.ascontiguousarray(chain_matrix(angles, order, mode="unprepare").T)
    _check_delivery(u, np.max(np.abs(u[3, :] - t)), t)
    return u


def _check_delivery(u: np.ndarray, resid: float, t: np.ndarray) -> None:
    if resid > RESIDUAL_TOL:
        raise SynthesisError(f"delivered matrix misses target {t!r} by {resid:.3e}")
    dev = float(np.max(np.abs(u @ u.conj().T - np.eye(4))))
    if dev > UNITARY_TOL:
        raise SynthesisError(f"delivered matrix unitarity deviation {dev:.3e}")
