"""Chevalley-basis structure constants and subspace arithmetic.

Builds the table N_{beta,gamma} for each root system with the classical
extraspecial-pair sign convention (the extraspecial pair of every non-simple
positive root gets a positive constant), then exposes bracket computation,
ideal closure inside a nilradical, containment and commutation tests -- the
Lie-algebra half of the simple-spherical-root sufficient test.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GeneratorsOutsideAmbient
from .rootsys import RootSystem, RootVec

__all__ = [
    "ChevalleyAlgebra",
    "AlgVec",
    "build_algebra",
    "bracket",
    "root_vector",
    "cartan_vector",
    "ideal_closure",
    "is_contained",
    "commutes_with_all",
]

Root = tuple[int, ...]  # coordinate tuple in the simple-root basis, any sign
Key = tuple[str, object]  # ("e", root) or ("h", index)


@dataclass(frozen=True)
class AlgVec:
    """Sparse element of the algebra; keys are basis labels, values Fractions."""

    items: tuple[tuple[Key, Fraction], ...]

    @staticmethod
    def make(d: dict) -> "AlgVec":
        cleaned = {k: Fraction(v) for k, v in d.items() if v != 0}
        return AlgVec(tuple(sorted(cleaned.items(), key=lambda kv: repr(kv[0]))))

    def as_dict(self) -> dict:
        return dict(self.items)

    def is_zero(self) -> bool:
        return not self.items

    def __add__(self, other: "AlgVec") -> "AlgVec":
        d = self.as_dict()
        for k, v in other.items:
            d[k] = d.get(k, Fraction(0)) + v
        return AlgVec.make(d)

    def scale(self, c) -> "AlgVec":
        return AlgVec.make({k: Fraction(c) * v for k, v in self.items})


@dataclass(frozen=True)
class ChevalleyAlgebra:
    rs: RootSystem
    constants: tuple[tuple[tuple[Root, Root], int], ...]  # N on positive pairs
    basis: tuple[Key, ...]

    def const_table(self) -> dict:
        return dict(self.constants)


def _norm2(rs: RootSystem, r: Root) -> Fraction:
    """Squared length of a root via the symmetrized Cartan matrix."""
    total = Fraction(0)
    n = rs.rank
    for i in range(n):
        if r[i]:
            for j in range(n):
                if r[j] and rs.cartan[i][j]:
                    total += r[i] * rs.sym[i] * rs.cartan[i][j] * r[j]
    return total


def _string_down(root_set: set, beta: Root, alpha: Root) -> int:
    """Largest p with beta - p*alpha still a root."""
    p = 0
    cur = tuple(b - a for b, a in zip(beta, alpha))
    while cur in root_set or tuple(-c for c in cur) in root_set:
        if all(c == 0 for c in cur):
            break
        p += 1
        cur = tuple(c - a for c, a in zip(cur, alpha))
    return p


def build_algebra(rs: RootSystem) -> ChevalleyAlgebra:
    """Fill the positive-pair structure-constant table by height recursion."""
    pos = [r.coeffs for r in rs.pos_roots]  # already (height, lex) sorted
    pos_set = set(pos)
    order = {r: i for i, r in enumerate(pos)}
    table: dict[tuple[Root, Root], Fraction] = {}

    def is_root(r: Root) -> bool:
        return r in pos_set or tuple(-c for c in r) in pos_set

    def N(a: Root, b: Root) -> Fraction:
        """Structure constant for arbitrary-sign roots, reduced to the table."""
        s = tuple(x + y for x, y in zip(a, b))
        if not is_root(s):
            return Fraction(0)
        a_pos = a in pos_set
        b_pos = b in pos_set
        if a_pos and b_pos:
            if (a, b) in table:
                return table[(a, b)]
            return -table[(b, a)]
        if not a_pos and not b_pos:
            return -N(tuple(-x for x in a), tuple(-x for x in b))
        if not a_pos:  # a = -u, b = v, both u, v positive
            u = tuple(-x for x in a)
            v = b
            if s in pos_set:  # v - u is a positive root
                w = s
                return N(u, w) * _norm2(rs, w) / _norm2(rs, v)
            # u - v is a positive root: N(-u, v) = N(-v, u)
            w = tuple(-x for x in s)
            return N(v, w) * _norm2(rs, w) / _norm2(rs, u)
        return -N(b, a)

    for delta in pos:
        if sum(delta) == 1:
            continue
        # extraspecial pair: minimal alpha (in root order) with delta-alpha positive
        alpha = next(
            a for a in pos if tuple(d - x for d, x in zip(delta, a)) in pos_set
        )
        beta = tuple(d - x for d, x in zip(delta, alpha))
        p = _string_down(pos_set, beta, alpha)
        table[(alpha, beta)] = Fraction(p + 1)
        # remaining pairs summing to delta, via the Jacobi identity with -alpha
        n_delta_malpha = -N(alpha, beta) * _norm2(rs, beta) / _norm2(rs, delta)
        pairs = [
            (x, tuple(d - v for d, v in zip(delta, x)))
            for x in pos
            if tuple(d - v for d, v in zip(delta, x)) in pos_set
        ]
        for xi, eta in pairs:
            if xi == alpha or eta == alpha:
                continue
            if (xi, eta) in table or (eta, xi) in table:
                continue
            acc = Fraction(0)
            xi_m = tuple(x - a for x, a in zip(xi, alpha))
            if is_root(xi_m):
                acc += N(tuple(-a for a in alpha), xi) * N(xi_m, eta)
            eta_m = tuple(x - a for x, a in zip(eta, alpha))
            if is_root(eta_m):
                acc += N(eta, tuple(-a for a in alpha)) * N(eta_m, xi)
            val = -acc / n_delta_malpha
            assert val.denominator == 1
            table[(xi, eta)] = val

    const = tuple(sorted(((k, int(v)) for k, v in table.items())))
    basis: list[Key] = [("e", r) for r in pos]
    basis += [("e", tuple(-c for c in r)) for r in pos]
    basis += [("h", i) for i in range(rs.rank)]
    return ChevalleyAlgebra(rs=rs, constants=const, basis=tuple(basis))


def root_vector(alg: ChevalleyAlgebra, r: Sequence[int]) -> AlgVec:
    return AlgVec.make({("e", tuple(r)): Fraction(1)})


def cartan_vector(alg: ChevalleyAlgebra, i: int) -> AlgVec:
    return AlgVec.make({("h", i): Fraction(1)})


def _coroot_coeffs(alg: ChevalleyAlgebra, beta: Root) -> list[Fraction]:
    """h_beta = sum_j k_j d_j / d_beta * h_j for a positive root beta."""
    rs = alg.rs
    d_beta = _norm2(rs, beta) / 2
    return [beta[j] * rs.sym[j] / d_beta for j in range(rs.rank)]


@functools.lru_cache(maxsize=None)
def _pos_set(alg: ChevalleyAlgebra) -> frozenset:
    return frozenset(r.coeffs for r in alg.rs.pos_roots)


@functools.lru_cache(maxsize=None)
def _table_cached(alg: ChevalleyAlgebra) -> dict:
    return dict(alg.constants)


def _bracket_basis(alg: ChevalleyAlgebra, a: Key, b: Key) -> AlgVec:
    rs = alg.rs
    pos_set = _pos_set(alg)
    table = _table_cached(alg)

    def is_root(r: Root) -> bool:
        return r in pos_set or tuple(-c for c in r) in pos_set

    def N(x: Root, y: Root) -> Fraction:
        s = tuple(p + q for p, q in zip(x, y))
        if not is_root(s):
            return Fraction(0)
        xp, yp = x in pos_set, y in pos_set
        if xp and yp:
            return Fraction(table[(x, y)]) if (x, y) in table else -Fraction(table[(y, x)])
        if not xp and not yp:
            return -N(tuple(-c for c in x), tuple(-c for c in y))
        if not xp:
            u = tuple(-c for c in x)
            v = y
            if s in pos_set:
                return N(u, s) * _norm2(rs, s) / _norm2(rs, v)
            w = tuple(-c for c in s)
            return N(v, w) * _norm2(rs, w) / _norm2(rs, u)
        return -N(y, x)

    ka, kb = a[0], b[0]
    if ka == "h" and kb == "h":
        return AlgVec.make({})
    if ka == "h" and kb == "e":
        beta = b[1]
        pair = sum(rs.cartan[a[1]][j] * beta[j] for j in range(rs.rank))
        return AlgVec.make({b: Fraction(pair)})
    if ka == "e" and kb == "h":
        return _bracket_basis(alg, b, a).scale(-1)
    beta, gamma = a[1], b[1]
    s = tuple(p + q for p, q in zip(beta, gamma))
    if all(c == 0 for c in s):
        bpos = beta if beta in pos_set else gamma
        sign = 1 if beta in pos_set else -1
        cc = _coroot_coeffs(alg, bpos)
        return AlgVec.make({("h", j): sign * cc[j] for j in range(rs.rank)})
    if is_root(s):
        return AlgVec.make({("e", s): N(beta, gamma)})
    return AlgVec.make({})


def bracket(alg: ChevalleyAlgebra, x: AlgVec, y: AlgVec) -> AlgVec:
    """Bilinear extension of the structure constants."""
    acc: dict = {}
    for ka, ca in x.items:
        for kb, cb in y.items:
            term = _bracket_basis(alg, ka, kb)
            for k, v in term.items:
                acc[k] = acc.get(k, Fraction(0)) + ca * cb * v
    return AlgVec.make(acc)


def _to_coords(alg: ChevalleyAlgebra, v: AlgVec) -> list[Fraction]:
    idx = {k: i for i, k in enumerate(alg.basis)}
    out = [Fraction(0)] * len(alg.basis)
    for k, c in v.items:
        out[idx[k]] = c
    return out


class _Span:
    """Incremental row-echelon span over the rationals."""

    def __init__(self, dim: int):
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []
        self.dim = dim

    def _reduce(self, vec: list[Fraction]) -> list[Fraction]:
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p] / row[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, vec: list[Fraction]) -> bool:
        return all(c == 0 for c in self._reduce(vec))

    def add(self, vec: list[Fraction]) -> bool:
        """Insert vec; returns True if it enlarged the span."""
        v = self._reduce(vec)
        for i, c in enumerate(v):
            if c != 0:
                self.rows.append(v)
                self.pivots.append(i)
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def ideal_closure(
    alg: ChevalleyAlgebra, generators: Sequence[AlgVec], ambient: Sequence[AlgVec]
) -> list[AlgVec]:
    """Smallest subspace containing the generators and stable under bracketing
    with every ambient basis vector (fixpoint iteration, exact rank tests)."""
    amb = _Span(len(alg.basis))
    for a in ambient:
        amb.add(_to_coords(alg, a))
    for g in generators:
        if not amb.contains(_to_coords(alg, g)):
            raise GeneratorsOutsideAmbient("generator outside ambient span")
    span = _Span(len(alg.basis))
    current = [g for g in generators if not g.is_zero()]
    basis_vecs: list[AlgVec] = []
    for g in current:
        if span.add(_to_coords(alg, g)):
            basis_vecs.append(g)
    frontier = list(basis_vecs)
    while frontier:
        new: list[AlgVec] = []
        for v in frontier:
            for a in ambient:
                w = bracket(alg, a, v)
                if not w.is_zero() and span.add(_to_coords(alg, w)):
                    basis_vecs.append(w)
                    new.append(w)
        frontier = new
    return basis_vecs


def is_contained(alg: ChevalleyAlgebra, sub: Sequence[AlgVec], space: Sequence[AlgVec]) -> bool:
    sp = _Span(len(alg.basis))
    for v in space:
        sp.add(_to_coords(alg, v))
    return all(sp.contains(_to_coords(alg, v)) for v in sub)


def commutes_with_all(alg: ChevalleyAlgebra, x: AlgVec, gens: Iterable[AlgVec]) -> bool:
    return all(bracket(alg, x, g).is_zero() for g in gens)
