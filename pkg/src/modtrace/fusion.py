"""Fusion rings: exact integer structure constants and Frobenius-Perron data.

A fusion ring is given by a finite set of simple classes with non-negative
integer structure constants ``N[a][b][c]`` (multiplicity of ``c`` in
``a * b``), a unit and a duality involution.  All ring axioms are checked in
exact integer arithmetic; only dimensions are floating point.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

from .common import (
    NumericError,
    StructuralError,
    ValidationReport,
    Violation,
)

#: Iteration budget and relative residual for the power iteration.
POWER_ITER_BUDGET = 10**6
POWER_ITER_TOL = 1e-12

FusionReport = ValidationReport


def _int_array(data, name: str, shape: tuple | None = None) -> np.ndarray:
    try:
        arr = np.asarray(data)
    except ValueError as exc:
        raise StructuralError(f"{name} is not a rectangular array: {exc}") from None
    if arr.dtype == object or not np.issubdtype(arr.dtype, np.number):
        raise StructuralError(f"{name} must be an integer array")
    if np.issubdtype(arr.dtype, np.floating):
        rounded = np.rint(arr)
        if not np.array_equal(rounded, arr):
            raise StructuralError(f"{name} must contain integers only")
        arr = rounded
    arr = arr.astype(np.int64)
    if shape is not None and arr.shape != shape:
        raise StructuralError(f"{name} has shape {arr.shape}, expected {shape}")
    return arr


@dataclass(frozen=True, eq=False)
class FusionRing:
    """Immutable fusion-ring data.

    ``N[a][b][c]`` is the multiplicity of simple ``c`` in the product of
    simples ``a`` and ``b``; ``dual`` is an involution on the simple indices
    and ``unit`` the index of the monoidal unit.  Construction checks shapes,
    index ranges and non-negativity; the ring axioms themselves are checked by
    :func:`validate_fusion_ring`.
    """

    rank: int
    labels: tuple[str, ...]
    unit: int
    dual: np.ndarray
    N: np.ndarray

    def __post_init__(self):
        n = int(self.rank)
        if n < 1:
            raise StructuralError("rank must be a positive integer")
        object.__setattr__(self, "rank", n)
        labels = tuple(str(s) for s in self.labels)
        if len(labels) != n:
            raise StructuralError(f"expected {n} labels, got {len(labels)}")
        object.__setattr__(self, "labels", labels)
        unit = int(self.unit)
        if not 0 <= unit < n:
            raise StructuralError(f"unit index {unit} out of range")
        object.__setattr__(self, "unit", unit)
        dual = _int_array(self.dual, "dual", (n,))
        if dual.min() < 0 or dual.max() >= n:
            raise StructuralError("dual entries out of range")
        dual.flags.writeable = False
        object.__setattr__(self, "dual", dual)
        N = _int_array(self.N, "N", (n, n, n))
        if N.min() < 0:
            raise StructuralError("structure constants must be non-negative")
        N.flags.writeable = False
        object.__setattr__(self, "N", N)

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "labels": list(self.labels),
            "unit": self.unit,
            "dual": [int(x) for x in self.dual],
            "N": self.N.tolist(),
        }

    def content_hash(self) -> str:
        blob = json.dumps(self.to_dict(), separators=(",", ":"), sort_keys=False)
        return hashlib.sha256(blob.encode()).hexdigest()[:12]

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.N, self.N.transpose(1, 0, 2)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.labels == other.labels
            and self.unit == other.unit
            and np.array_equal(self.dual, other.dual)
            and np.array_equal(self.N, other.N)
        )

    def __hash__(self) -> int:
        return hash(self.content_hash())

    def __repr__(self) -> str:
        return f"FusionRing(rank={self.rank}, labels={list(self.labels)})"


def _collect(mask: np.ndarray, axiom: str, lhs: np.ndarray, rhs: np.ndarray, out: list):
    for idx in zip(*np.nonzero(mask)):
        out.append(Violation(axiom, tuple(int(i) for i in idx), int(lhs[idx]), int(rhs[idx])))


def validate_fusion_ring(ring: FusionRing) -> FusionReport:
    """Check every ring axiom exhaustively and report all violations.

    Checked: unit law, duality (involution, self-dual unit, pairing with the
    unit), Frobenius reciprocity and associativity.  Everything is done in
    exact integer arithmetic.
    """
    n, N, dual, unit = ring.rank, ring.N, ring.dual, ring.unit
    if N.shape != (n, n, n) or dual.shape != (n,):
        raise StructuralError("array shapes inconsistent with rank")
    if N.min() < 0:
        raise StructuralError("negative structure constant")
    viols: list[Violation] = []

    eye = np.eye(n, dtype=np.int64)
    _collect(N[unit] != eye, "unit_left", N[unit], eye, viols)
    _collect(N[:, unit, :] != eye, "unit_right", N[:, unit, :], eye, viols)

    invol = dual[dual]
    ids = np.arange(n)
    _collect(invol != ids, "dual_involution", invol, ids, viols)
    if dual[unit] != unit:
        viols.append(Violation("dual_unit", (unit,), int(dual[unit]), unit))
    # pairing with the unit: N[a][b][unit] = 1 iff b = dual(a)
    pairing = N[:, :, unit]
    expected = np.zeros((n, n), dtype=np.int64)
    expected[ids, dual] = 1
    _collect(pairing != expected, "dual_pairing", pairing, expected, viols)

    # Frobenius reciprocity: N[a][b][c] = N[a*][c][b] = N[c][b*][a]
    recip1 = N[dual][:, :, :].transpose(0, 2, 1)  # N[a*][c][b] indexed (a,b,c)
    _collect(N != recip1, "frobenius_reciprocity", N, recip1, viols)
    recip2 = N[:, dual, :].transpose(2, 1, 0)  # N[c][b*][a] indexed (a,b,c)
    _collect(N != recip2, "frobenius_reciprocity", N, recip2, viols)

    lhs = np.einsum("abe,ecd->abcd", N, N)
    rhs = np.einsum("bcf,afd->abcd", N, N)
    _collect(lhs != rhs, "associativity", lhs, rhs, viols)

    return FusionReport(tuple(viols))


def fusion_matrices(ring: FusionRing) -> list[np.ndarray]:
    """Left-multiplication matrices ``(N_a)[c][b] = N[a][b][c]``.

    Rows index the output simple, columns the input simple, so the matrices
    satisfy ``N_a @ N_b = sum_e N[a][b][e] N_e`` and ``N_{a*} = N_a.T``.
    """
    return [ring.N[a].T.copy() for a in range(ring.rank)]


def perron_vector(
    mat: np.ndarray,
    tol: float = POWER_ITER_TOL,
    budget: int = POWER_ITER_BUDGET,
) -> tuple[float, np.ndarray]:
    """Perron eigenpair of a symmetric non-negative irreducible matrix.

    Power iteration seeded with the all-ones vector; converges when
    ``max|A v - lam v| < tol * lam``.  Returns the eigenvalue and the
    2-normalised non-negative eigenvector.
    """
    a = np.asarray(mat, dtype=float)
    k = a.shape[0]
    v = np.ones(k) / np.sqrt(k)
    for _ in range(budget):
        w = a @ v
        lam = float(v @ w)
        if lam <= 0.0:
            raise NumericError("power iteration collapsed to a non-positive value")
        if np.max(np.abs(w - lam * v)) < tol * lam:
            return lam, v
        v = w / np.linalg.norm(w)
    raise NumericError(f"power iteration did not converge within {budget} steps")


def fp_dimensions(ring: FusionRing) -> np.ndarray:
    """Frobenius-Perron dimension of every simple class.

    The Perron vector of ``sum_a N_a`` is a simultaneous eigenvector of all
    left-multiplication matrices; the dimension of ``a`` is read off as the
    eigenvalue ``(N_a v)_k / v_k`` at the largest component ``k``.
    """
    mats = fusion_matrices(ring)
    total = np.zeros((ring.rank, ring.rank), dtype=np.int64)
    for m in mats:
        total += m
    _, v = perron_vector(total.astype(float))
    k = int(np.argmax(v))
    dims = np.array([float((m @ v)[k] / v[k]) for m in mats])
    return dims
