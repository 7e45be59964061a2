"""Root-system combinatorics for simple types A-G and products thereof.

Everything is exact: Cartan matrices are integer, the symmetrizer and the
invariant inner product are `fractions.Fraction`.  Simple roots follow the
Bourbaki labelling per factor, factors concatenated in input order.  Positive
roots are generated by root-string closure, so one code path covers the
exceptional types, and are ordered by (height, coordinates) for reproducible
output.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidType, NegativeRootCoordinate

__all__ = [
    "CartanType",
    "RootSystem",
    "RootVec",
    "WeightVec",
    "build_root_system",
    "root_to_weight",
    "weight_to_root",
    "supp",
    "wsupp",
    "is_dominant",
    "inner",
    "positive_root_count",
]

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class CartanType:
    """A product of simple factors, e.g. ``CartanType((("A", 5),))``."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.factors:
            raise InvalidType("empty Cartan type")
        for fam, n in self.factors:
            if fam not in _RANK_BOUNDS:
                raise InvalidType(f"unknown family {fam!r}")
            lo, hi = _RANK_BOUNDS[fam]
            if n < lo or (hi is not None and n > hi):
                raise InvalidType(f"rank {n} out of range for family {fam}")

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.factors)


@dataclass(frozen=True)
class RootVec:
    """A vector in the simple-root basis."""

    coeffs: tuple[int, ...]

    def __add__(self, other: "RootVec") -> "RootVec":
        return RootVec(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RootVec") -> "RootVec":
        return RootVec(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    @property
    def height(self) -> int:
        return sum(self.coeffs)


@dataclass(frozen=True)
class WeightVec:
    """A vector in the fundamental-weight basis."""

    coeffs: tuple[int, ...]

    def __add__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "WeightVec":
        return WeightVec(tuple(-a for a in self.coeffs))

    def scale(self, k: int) -> "WeightVec":
        return WeightVec(tuple(k * a for a in self.coeffs))


@dataclass(frozen=True)
class RootSystem:
    ctype: CartanType
    cartan: tuple[tuple[int, ...], ...]
    sym: tuple[Fraction, ...]
    pos_roots: tuple[RootVec, ...]

    @property
    def rank(self) -> int:
        return self.ctype.rank


def _simple_cartan(family: str, n: int) -> tuple[list[list[int]], list[int]]:
    """Cartan matrix C[i][j] = 2(a_i,a_j)/(a_i,a_i) and integer symmetrizer
    d_i = (a_i,a_i)/2, normalized so short roots have squared length 2."""
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j):
        C[i][j] = -1
        C[j][i] = -1

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
    if family == "A":
        d = [1] * n
    elif family == "B":
        # alpha_n short; d = (2,...,2,1)
        C[n - 1][n - 2] = -2
        d = [2] * (n - 1) + [1]
    elif family == "C":
        # alpha_n long; d = (1,...,1,2)
        C[n - 2][n - 1] = -2
        d = [1] * (n - 1) + [2]
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
        d = [1] * n
    elif family == "E":
        # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if n >= 7:
            edges.append((5, 6))
        if n == 8:
            edges.append((6, 7))
        for i, j in edges:
            bond(i, j)
        d = [1] * n
    elif family == "F":
        for i in range(3):
            bond(i, i + 1)
        C[2][1] = -2
        d = [2, 2, 1, 1]
    elif family == "G":
        # alpha_1 short, alpha_2 long.
        C[0][1] = -3
        C[1][0] = -1
        d = [1, 3]
    else:  # pragma: no cover - guarded by CartanType validation
        raise InvalidType(family)
    return C, d


def _positive_roots_closure(C: Sequence[Sequence[int]]) -> list[RootVec]:
    """Generate all positive roots from the simple ones by root-string closure."""
    n = len(C)
    simples = [RootVec(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]
    known = set(simples)
    frontier = list(simples)
    while frontier:
        new: list[RootVec] = []
        for beta in frontier:
            for i in range(n):
                # <beta, alpha_i^vee> = (row i of C) . beta
                pairing = sum(C[i][j] * beta.coeffs[j] for j in range(n))
                p = 0
                gamma = beta - simples[i]
                while gamma in known:
                    p += 1
                    gamma = gamma - simples[i]
                if p - pairing > 0:
                    cand = beta + simples[i]
                    if cand not in known:
                        known.add(cand)
                        new.append(cand)
        frontier = new
    return sorted(known, key=lambda r: (r.height, r.coeffs))


@functools.lru_cache(maxsize=None)
def build_root_system(ctype: CartanType) -> RootSystem:
    """Assemble Cartan matrix, symmetrizer and positive roots for a product type."""
    rank = ctype.rank
    C = [[0] * rank for _ in range(rank)]
    d: list[Fraction] = []
    offset = 0
    for fam, n in ctype.factors:
        Cf, df = _simple_cartan(fam, n)
        for i in range(n):
            for j in range(n):
                C[offset + i][offset + j] = Cf[i][j]
        d.extend(Fraction(x) for x in df)
        offset += n
    pos = _positive_roots_closure(C)
    return RootSystem(
        ctype=ctype,
        cartan=tuple(tuple(row) for row in C),
        sym=tuple(d),
        pos_roots=tuple(pos),
    )


def root_to_weight(rs: RootSystem, r: RootVec) -> WeightVec:
    """Change of basis: alpha_j = sum_i C[i][j] pi_i, so the result is C.r."""
    C = rs.cartan
    n = rs.rank
    return WeightVec(tuple(sum(C[i][j] * r.coeffs[j] for j in range(n)) for i in range(n)))


def weight_to_root(rs: RootSystem, w: WeightVec) -> tuple[Fraction, ...]:
    """Exact rational solution of C.x = w (C is invertible for semisimple types)."""
    n = rs.rank
    # Gaussian elimination over Fraction on an augmented copy.
    M = [[Fraction(rs.cartan[i][j]) for j in range(n)] + [Fraction(w.coeffs[i])]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return tuple(M[i][n] for i in range(n))


def supp(r: RootVec) -> frozenset[int]:
    """Indices of strictly positive coordinates; rejects mixed-sign input."""
    if any(c < 0 for c in r.coeffs):
        raise NegativeRootCoordinate(f"supp on mixed-sign vector {r.coeffs}")
    return frozenset(i for i, c in enumerate(r.coeffs) if c > 0)


def wsupp(w: WeightVec) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(w.coeffs) if c > 0)


def is_dominant(w: WeightVec) -> bool:
    return all(c >= 0 for c in w.coeffs)


def inner(rs: RootSystem, a: WeightVec, b: WeightVec) -> Fraction:
    """Weyl-invariant inner product, short roots of each factor of length^2 = 2.

    Computed via the root basis: (a, b) = x^T B y with B[i][j] = d_i C[i][j]
    and x, y the root-basis coordinate vectors.
    """
    n = rs.rank
    x = weight_to_root(rs, a)
    y = weight_to_root(rs, b)
    total = Fraction(0)
    for i in range(n):
        for j in range(n):
            cij = rs.cartan[i][j]
            if cij:
                total += x[i] * rs.sym[i] * cij * y[j]
    return total


def positive_root_count(family: str, n: int) -> int:
    """Closed-form number of positive roots, used as a test oracle."""
    if family == "A":
        return n * (n + 1) // 2
    if family in ("B", "C"):
        return n * n
    if family == "D":
        return n * (n - 1)
    if family == "E":
        return {6: 36, 7: 63, 8: 120}[n]
    if family == "F":
        return 24
    if family == "G":
        return 6
    raise InvalidType(family)
