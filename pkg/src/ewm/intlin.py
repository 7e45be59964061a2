"""Exact integer linear algebra over free abelian groups with torsion.

The single engine is the Smith normal form; kernels, congruence solving and
lattice membership are all phrased as SNF problems on a matrix augmented with
one column m_i * e_i per torsion row.  All arithmetic is arbitrary-precision
Python int, so intermediate coefficient growth is a non-issue.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

__all__ = [
    "IntMatrix",
    "CharSpace",
    "CharVec",
    "smith_normal_form",
    "kernel_with_moduli",
    "solve_with_moduli",
    "in_sublattice",
    "lattice_equal",
    "hnf_rows",
    "mat_vec",
]

Vec = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """A rectangular integer matrix stored as a tuple of row tuples."""

    entries: tuple[Vec, ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in rows))

    @staticmethod
    def from_cols(cols: Sequence[Sequence[int]]) -> "IntMatrix":
        return IntMatrix.from_rows(list(zip(*cols))) if cols else IntMatrix(())

    def column(self, j: int) -> Vec:
        return tuple(r[j] for r in self.entries)


@dataclass(frozen=True)
class CharSpace:
    """A finitely generated abelian group Z^free_rank x prod Z/m_i.

    Element vectors have length free_rank + len(moduli); the torsion tail is
    always stored reduced into [0, m_i).
    """

    free_rank: int
    moduli: tuple[int, ...] = ()
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        assert all(m >= 2 for m in self.moduli)

    @property
    def dim(self) -> int:
        return self.free_rank + len(self.moduli)

    def reduce(self, coords: Sequence[int]) -> Vec:
        assert len(coords) == self.dim, (len(coords), self.dim)
        head = tuple(int(c) for c in coords[: self.free_rank])
        tail = tuple(int(c) % m for c, m in zip(coords[self.free_rank:], self.moduli))
        return head + tail

    def zero(self) -> "CharVec":
        return CharVec(self, (0,) * self.dim)


@dataclass(frozen=True)
class CharVec:
    """An element of a CharSpace, torsion part reduced canonically."""

    space: CharSpace
    coords: Vec

    def __post_init__(self):
        object.__setattr__(self, "coords", self.space.reduce(self.coords))

    def __add__(self, other: "CharVec") -> "CharVec":
        assert self.space == other.space
        return CharVec(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "CharVec") -> "CharVec":
        assert self.space == other.space
        return CharVec(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "CharVec":
        return CharVec(self.space, tuple(-a for a in self.coords))

    def scale(self, k: int) -> "CharVec":
        return CharVec(self.space, tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


def mat_vec(A: IntMatrix, x: Sequence[int]) -> Vec:
    return tuple(sum(r[j] * x[j] for j in range(len(x))) for r in A.entries)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with D = U*A*V, U and V unimodular, D diagonal with
    non-negative entries satisfying d1 | d2 | ...
    """
    m, n = A.rows, A.cols
    M = [list(r) for r in A.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, k):  # row i += k * row j
        M[i] = [a + k * b for a, b in zip(M[i], M[j])]
        U[i] = [a + k * b for a, b in zip(U[i], U[j])]

    def add_col(i, j, k):  # col i += k * col j
        for r in M:
            r[i] += k * r[j]
        for r in V:
            r[i] += k * r[j]

    def negate_row(i):
        M[i] = [-a for a in M[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        # locate a pivot of minimal absolute value in the trailing submatrix
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = M[i][j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            done = True
            for i in range(t + 1, m):
                if M[i][t] != 0:
                    q = M[i][t] // M[t][t]
                    add_row(i, t, -q)
                    if M[i][t] != 0:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if M[t][j] != 0:
                    q = M[t][j] // M[t][t]
                    add_col(j, t, -q)
                    if M[t][j] != 0:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # enforce that the pivot divides every remaining entry
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if M[i][j] % M[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if M[t][t] < 0:
            negate_row(t)
        t += 1

    return (
        IntMatrix.from_rows(U),
        IntMatrix.from_rows(M),
        IntMatrix.from_rows(V),
    )


def _augment_with_moduli(A: IntMatrix, moduli: Sequence[int]) -> IntMatrix:
    """Append one column m_i * e_i per torsion row (modulus >= 2)."""
    assert len(moduli) == A.rows
    extra = [i for i, mmod in enumerate(moduli) if mmod != 0]
    rows = []
    for i, r in enumerate(A.entries):
        tail = tuple(moduli[i] if i == k else 0 for k in extra)
        rows.append(r + tail)
    return IntMatrix.from_rows(rows)


def _kernel_columns(A: IntMatrix) -> list[Vec]:
    """Integer kernel basis of A x = 0 via SNF: columns of V past the rank."""
    U, D, V = smith_normal_form(A)
    n = A.cols
    rank = sum(
        1
        for i in range(min(A.rows, n))
        if D.entries[i][i] != 0
    )
    return [V.column(j) for j in range(rank, n)]


def kernel_with_moduli(A: IntMatrix, moduli: Sequence[int]) -> list[Vec]:
    """Basis of {x : (Ax)_i = 0 when m_i = 0, (Ax)_i = 0 mod m_i otherwise}."""
    if A.rows == 0:
        n = A.cols
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    aug = _augment_with_moduli(A, moduli)
    gens = [k[: A.cols] for k in _kernel_columns(aug)]
    return hnf_rows(gens, A.cols)


def solve_with_moduli(
    A: IntMatrix, moduli: Sequence[int], b: Sequence[int]
) -> Optional[tuple[Vec, list[Vec]]]:
    """Full integer solution set of A x = b under the row moduli.

    Returns (particular, homogeneous_basis), or None when inconsistent.
    """
    assert len(b) == A.rows
    aug = _augment_with_moduli(A, moduli)
    U, D, V = smith_normal_form(aug)
    m, n = aug.rows, aug.cols
    c = mat_vec(U, b)
    y = [0] * n
    for i in range(m):
        d = D.entries[i][i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    z = mat_vec(V, y)
    particular = z[: A.cols]
    return particular, kernel_with_moduli(A, moduli)


def in_sublattice(v: Sequence[int], basis: Sequence[Sequence[int]], moduli: Sequence[int]) -> bool:
    """Is v an integer combination of the basis vectors, modulo the torsion?

    `moduli` describes the ambient group: one entry per coordinate, 0 for a
    free coordinate and m >= 2 for a Z/m coordinate.
    """
    if not basis:
        return all(
            (x == 0) if mmod == 0 else (x % mmod == 0) for x, mmod in zip(v, moduli)
        )
    A = IntMatrix.from_cols(list(basis))
    return solve_with_moduli(A, moduli, list(v)) is not None


def lattice_equal(
    basis1: Sequence[Sequence[int]],
    basis2: Sequence[Sequence[int]],
    moduli: Sequence[int],
) -> bool:
    return all(in_sublattice(v, basis2, moduli) for v in basis1) and all(
        in_sublattice(v, basis1, moduli) for v in basis2
    )


def hnf_rows(vectors: Sequence[Sequence[int]], ncols: int) -> list[Vec]:
    """Row-style Hermite normal form of the given generators.

    Returns a canonical basis (positive pivots, entries above each pivot
    reduced into [0, pivot)) of the lattice they span in Z^ncols, with zero
    rows dropped — the deterministic serialization used everywhere.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    r = 0
    for col in range(ncols):
        # find a row with nonzero entry in this column at or below r
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        # gcd out the column below the pivot
        changed = True
        while changed:
            changed = False
            for i in range(r + 1, len(rows)):
                if rows[i][col] != 0:
                    if abs(rows[i][col]) < abs(rows[r][col]):
                        rows[r], rows[i] = rows[i], rows[r]
                    q = rows[i][col] // rows[r][col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][col] != 0:
                        changed = True
        if rows[r][col] < 0:
            rows[r] = [-a for a in rows[r]]
        # reduce entries above the pivot
        for i in range(r):
            q = rows[i][col] // rows[r][col]
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return [tuple(row) for row in rows[:r] if any(row)]
