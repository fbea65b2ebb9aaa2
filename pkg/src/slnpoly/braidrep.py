"""The representation of the singular braid monoid by Kronecker products.

A generator acting on strands (i, i+1) of a k-strand braid maps to
I x ... x X x ... x I with the crossing tensor X in the i-th slot, so the
image of a word is an n^k x n^k matrix over the Laurent ring.  Matrix
entries are indexed by spin tuples flattened with the leftmost strand most
significant, matching the tangle evaluator's convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import BraidWord
from .spintensor import CrossingKind, PolyMatrix, crossing_matrix, kron


@dataclass(frozen=True)
class RepImage:
    strands: int
    n: int
    matrix: PolyMatrix


@lru_cache(maxsize=None)
def _generator_image(kind: CrossingKind, index: int, strands: int, n: int) -> PolyMatrix:
    left = PolyMatrix.identity(n ** (index - 1))
    right = PolyMatrix.identity(n ** (strands - index - 1))
    return kron(kron(left, crossing_matrix(kind, n)), right)


def rho(w: BraidWord, n: int) -> RepImage:
    """Evaluate a singular braid word in the representation; empty word -> identity."""
    if n < 2:
        raise ValueError(f"the representation needs n >= 2, got {n}")
    mat = PolyMatrix.identity(n ** w.strands)
    for kind, i in w.letters:
        mat = mat @ _generator_image(kind, i, w.strands, n)
    return RepImage(w.strands, n, mat)


@dataclass(frozen=True)
class RelationCheck:
    name: str
    lhs: str
    rhs: str
    passed: bool


_GENS = (("s", CrossingKind.POS), ("S", CrossingKind.NEG), ("t", CrossingKind.SING))


def check_monoid_relations(n: int, k: int) -> list[RelationCheck]:
    """Verify every defining relation instance of the monoid on k strands.

    Checks distant commutation of all generator pairs, the inverse pair
    relation, the braid relation, the mixed relation moving a singular
    generator past a braiding pair, and commutation of a crossing with the
    singular generator at the same index.
    """
    if n < 2 or k < 2:
        raise ValueError("relation checks need n >= 2 and k >= 2")

    def image(letters) -> PolyMatrix:
        return rho(BraidWord(k, letters), n).matrix

    checks = []

    def record(name: str, lhs_name: str, lhs, rhs_name: str, rhs):
        checks.append(RelationCheck(name, lhs_name, rhs_name, image(lhs) == image(rhs)))

    for i in range(1, k):
        for j in range(i + 2, k):
            for gname, g in _GENS:
                for hname, h in _GENS:
                    record("distant-commutation",
                           f"{gname}{i} {hname}{j}", [(g, i), (h, j)],
                           f"{hname}{j} {gname}{i}", [(h, j), (g, i)])
    for i in range(1, k):
        record("R2", f"s{i} S{i}", [(CrossingKind.POS, i), (CrossingKind.NEG, i)],
               "1", [])
        record("R2", f"S{i} s{i}", [(CrossingKind.NEG, i), (CrossingKind.POS, i)],
               "1", [])
    P, T = CrossingKind.POS, CrossingKind.SING
    for i in range(1, k):
        for j in (i - 1, i + 1):
            if not 1 <= j < k:
                continue
            record("R3", f"s{i} s{j} s{i}", [(P, i), (P, j), (P, i)],
                   f"s{j} s{i} s{j}", [(P, j), (P, i), (P, j)])
            record("R4", f"t{i} s{j} s{i}", [(T, i), (P, j), (P, i)],
                   f"s{j} s{i} t{j}", [(P, j), (P, i), (T, j)])
    for i in range(1, k):
        record("R5", f"s{i} t{i}", [(P, i), (T, i)],
               f"t{i} s{i}", [(T, i), (P, i)])
    return checks
