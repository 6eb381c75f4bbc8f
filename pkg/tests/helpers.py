"""Shared builders for the test suite: instance universe and oracles."""

from __future__ import annotations

import math

import numpy as np

import modtrace as mt

PHI = (1.0 + math.sqrt(5.0)) / 2.0
ROOT2 = math.sqrt(2.0)

NAMED_RINGS = ("fibonacci", "ising", "rep_s3")


def ring_families(max_zn: int = 10):
    """(name, ring, chars, base_modules) for the builtin universe.

    Base modules are the indecomposable generators: the regular module for
    the named rings, and one coset module per subgroup for the cyclic group
    rings (the trivial subgroup gives the regular module).
    """
    families = []
    for name in NAMED_RINGS:
        ring, chars = mt.builtin(name)
        families.append((name, ring, chars, [("regular", mt.regular_module(ring))]))
    for n in range(1, max_zn + 1):
        table = mt.cyclic_table(n)
        ring, chars = mt.builtin(f"zn:{n}")
        base = [
            (f"H{idx}", mt.vect_g_module(table, sub))
            for idx, sub in enumerate(mt.subgroups(table))
        ]
        families.append((f"zn:{n}", ring, chars, base))
    return families


def instance_universe(max_zn: int = 10, with_sums: bool = True):
    """Yield (label, ring, char, rep) over builtin rings, enumerated characters
    and {subgroup / regular / direct-sum} modules."""
    for name, ring, chars, base in ring_families(max_zn):
        modules = list(base)
        if with_sums:
            for i in range(len(base)):
                for j in range(i, len(base)):
                    modules.append(
                        (
                            f"{base[i][0]}+{base[j][0]}",
                            mt.direct_sum(base[i][1], base[j][1]),
                        )
                    )
        for ci, char in enumerate(chars):
            for mlabel, rep in modules:
                yield f"{name}/char{ci}/{mlabel}", ring, char, rep


def trace_exists_bruteforce(Q: np.ndarray, dim_c: float, tol: float = 1e-7) -> bool:
    """Independent existence test: search the dim(C)-eigenspace of Q for a
    nowhere-zero vector.

    A subspace contains a vector with no zero coordinate iff no coordinate
    functional vanishes on all of it (a generic combination then works), so it
    suffices to check that every row of an orthonormal eigenspace basis is
    nonzero.  Uses a dense hermitian eigendecomposition; no minors, no rank.
    """
    herm = (Q + Q.conj().T) / 2.0
    vals, vecs = np.linalg.eigh(herm)
    keep = np.abs(vals - dim_c) <= tol * max(1.0, abs(dim_c))
    basis = vecs[:, keep]
    if basis.shape[1] == 0:
        return False
    support = np.linalg.norm(basis, axis=1)
    return bool(np.min(support) > tol)


def abelian_tables_up_to(max_order: int = 12):
    """One table per isomorphism class of abelian groups of order <= max_order."""
    partitions = {
        1: [(1,)],
        2: [(2,)],
        3: [(3,)],
        4: [(4,), (2, 2)],
        5: [(5,)],
        6: [(6,)],
        7: [(7,)],
        8: [(8,), (4, 2), (2, 2, 2)],
        9: [(9,), (3, 3)],
        10: [(10,)],
        11: [(11,)],
        12: [(12,), (6, 2)],
    }
    tables = []
    for order in range(1, max_order + 1):
        for factors in partitions[order]:
            table = mt.cyclic_table(factors[0])
            for n in factors[1:]:
                table = mt.direct_product(table, mt.cyclic_table(n))
            tables.append(("x".join(f"Z{n}" for n in factors), table))
    return tables


def fibonacci_broken():
    """Fibonacci ring with one structure constant bumped; breaks associativity."""
    ring = mt.builtin("fibonacci")[0]
    N = ring.N.copy()
    N[1, 1, 1] = 2
    return mt.FusionRing(2, ring.labels, 0, ring.dual.copy(), N)
