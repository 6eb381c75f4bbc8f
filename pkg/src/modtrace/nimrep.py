"""Module categories at multiplicity level: NIM-reps of a fusion ring.

A NIM-rep assigns to every ring simple ``u`` a non-negative integer matrix
``M_u`` with ``(M_u)[j][i]`` the multiplicity of the module simple ``m_j`` in
``u`` acting on ``m_i`` (rows index the target, columns the source, so
composition reads ``M_u @ M_v = sum_w N[u][v][w] M_w`` without transposes).
Associativity constraint data of the underlying module category is assumed
realisable and never represented; everything downstream depends only on these
multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .common import StructuralError, ValidationReport, Violation
from .fusion import FusionRing, _int_array, fusion_matrices


@dataclass(frozen=True, eq=False)
class NimRep:
    """Multiplicity matrices of a module category over a fusion ring."""

    ring: FusionRing
    module_rank: int
    M: np.ndarray

    def __post_init__(self):
        k = int(self.module_rank)
        if k < 1:
            raise StructuralError("module_rank must be a positive integer")
        object.__setattr__(self, "module_rank", k)
        m = _int_array(self.M, "M", (self.ring.rank, k, k))
        if m.min() < 0:
            raise StructuralError("multiplicities must be non-negative")
        m.flags.writeable = False
        object.__setattr__(self, "M", m)

    def action_sum(self) -> np.ndarray:
        """``sum_u M_u``; symmetric for valid reps."""
        return self.M.sum(axis=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NimRep):
            return NotImplemented
        return self.ring == other.ring and np.array_equal(self.M, other.M)

    def __repr__(self) -> str:
        return f"NimRep(module_rank={self.module_rank}, ring={self.ring!r})"


def validate_nimrep(rep: NimRep) -> ValidationReport:
    """Check the unit, composition, duality and action axioms exhaustively."""
    ring, M, k = rep.ring, rep.M, rep.module_rank
    n = ring.rank
    if M.shape != (n, k, k):
        raise StructuralError("matrix shapes inconsistent with ranks")
    viols: list[Violation] = []

    eye = np.eye(k, dtype=np.int64)
    for idx in zip(*np.nonzero(M[ring.unit] != eye)):
        j, i = (int(x) for x in idx)
        viols.append(Violation("unit", (j, i), int(M[ring.unit, j, i]), int(eye[j, i])))

    for u in range(n):
        for v in range(n):
            lhs = M[u] @ M[v]
            rhs = np.einsum("w,wji->ji", ring.N[u, v], M)
            for idx in zip(*np.nonzero(lhs != rhs)):
                j, i = (int(x) for x in idx)
                viols.append(Violation("composition", (u, v, j, i), int(lhs[j, i]), int(rhs[j, i])))

    for u in range(n):
        diff = M[ring.dual[u]] != M[u].T
        for idx in zip(*np.nonzero(diff)):
            j, i = (int(x) for x in idx)
            viols.append(
                Violation("duality", (u, j, i), int(M[ring.dual[u], j, i]), int(M[u, i, j]))
            )

    column_weight = rep.action_sum().sum(axis=0)
    for i in np.nonzero(column_weight == 0)[0]:
        viols.append(Violation("action", (int(i),), 0, "positive column sum"))

    return ValidationReport(tuple(viols))


def regular_module(ring: FusionRing) -> NimRep:
    """The ring acting on itself: ``M_u = N_u``."""
    return NimRep(ring, ring.rank, np.stack(fusion_matrices(ring)))


def direct_sum(rep1: NimRep, rep2: NimRep) -> NimRep:
    """Block-diagonal sum of two NIM-reps over the same ring."""
    if rep1.ring != rep2.ring:
        raise StructuralError("direct sum requires reps over the same ring")
    n = rep1.ring.rank
    k1, k2 = rep1.module_rank, rep2.module_rank
    M = np.zeros((n, k1 + k2, k1 + k2), dtype=np.int64)
    M[:, :k1, :k1] = rep1.M
    M[:, k1:, k1:] = rep2.M
    return NimRep(rep1.ring, k1 + k2, M)


def is_indecomposable(rep: NimRep) -> bool:
    """True iff the action graph on module simples is connected.

    ``sum_u M_u`` is symmetric by duality, so strong connectivity reduces to
    connectivity; computed by union-find on nonzero entries.
    """
    k = rep.module_rank
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    total = rep.action_sum()
    for j, i in zip(*np.nonzero(total)):
        rj, ri = find(int(j)), find(int(i))
        if rj != ri:
            parent[rj] = ri
    return len({find(x) for x in range(k)}) == 1
