"""Exact integer and rational primitives.

Everything here works on plain Python integers (arbitrary precision), so no
overflow can occur.  Matrices are lists of rows.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterator, Sequence

from .errors import BadInput, InfiniteQuotient, NoInverse

Rational = Fraction

__all__ = [
    "Rational",
    "FiniteAbelianGroup",
    "mod_inverse",
    "smith_normal_form",
    "smith_decomposition",
    "group_from_quotient",
    "lattice_basis",
    "rational_inverse",
    "matmul",
    "lcm",
]


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def mod_inverse(a: int, m: int) -> int:
    """Least positive ``u`` with ``a*u = 1 (mod m)``.

    >>> mod_inverse(5, 7)
    3
    """
    if m < 2:
        raise BadInput(f"modulus must be >= 2, got {m}")
    if gcd(a, m) != 1:
        raise NoInverse(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


def _as_matrix(rows) -> list[list[int]]:
    mat = [[int(v) for v in row] for row in rows]
    if mat and any(len(row) != len(mat[0]) for row in mat):
        raise BadInput("matrix rows have different lengths")
    return mat


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def smith_decomposition(rows, ncols: int | None = None):
    """Smith normal form with unimodular transforms.

    Returns ``(D, U, V)`` with ``U @ A @ V == D``.  ``ncols`` is only needed
    when ``rows`` is empty.

    Pivoting is the textbook one: move the smallest nonzero entry to the
    corner, clear its row and column by Euclidean steps, and when an entry
    of the trailing block is not divisible by the pivot, fold its row into
    the pivot row and start over.
    """
    a = _as_matrix(rows)
    m = len(a)
    n = len(a[0]) if a else (ncols or 0)
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for mat in (a, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row[dst] += k * row[src]
        for mat in (a, u):
            rs, rd = mat[src], mat[dst]
            for c in range(len(rd)):
                rd[c] += k * rs[c]

    def add_col(dst, src, k):
        for mat in (a, v):
            for row in mat:
                row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return a, u, v
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, m)) or any(a[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is not None:
                add_row(t, bad, 1)
                continue
            if p < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            break
    return a, u, v


def smith_normal_form(rows) -> list[int]:
    """Diagonal ``d1 | d2 | ...`` of the Smith normal form, length ``min(rows, cols)``.

    >>> smith_normal_form([[7, 0], [0, 7], [1, 2], [4, 1]])
    [1, 7]
    """
    d, _, _ = smith_decomposition(rows)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct sum of cyclic groups ``Z_d1 + ... + Z_dk`` with ``d1 | d2 | ... | dk``.

    Unit factors are not stored, so equality is structural equality.
    Elements are mixed-radix tuples over the invariant factors.
    """

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        if any(d < 2 for d in factors):
            raise BadInput(f"invariant factors must be >= 2: {factors}")
        if any(factors[i + 1] % factors[i] for i in range(len(factors) - 1)):
            raise BadInput(f"invariant factors must form a divisibility chain: {factors}")

    @classmethod
    def from_diagonal(cls, diagonal: Sequence[int]) -> "FiniteAbelianGroup":
        """Build from an SNF diagonal, dropping units.  Zeros mean infinite order."""
        if any(d == 0 for d in diagonal):
            raise InfiniteQuotient(f"diagonal {list(diagonal)} has a free part")
        return cls(tuple(abs(d) for d in diagonal if abs(d) != 1))

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls(() if n == 1 else (n,))

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def elements(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def add(self, g, h) -> tuple[int, ...]:
        return tuple((x + y) % d for x, y, d in zip(g, h, self.invariant_factors))

    def neg(self, g) -> tuple[int, ...]:
        return tuple(-x % d for x, d in zip(g, self.invariant_factors))

    def index(self, g) -> int:
        """Position of ``g`` in :meth:`elements` order."""
        idx = 0
        for x, d in zip(g, self.invariant_factors):
            idx = idx * d + x
        return idx

    def __str__(self):
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z{d}" for d in self.invariant_factors)


def group_from_quotient(ambient_rank: int, generators) -> FiniteAbelianGroup:
    """Invariant factors of ``Z^ambient_rank / <generators>``.

    Raises :class:`InfiniteQuotient` when the generators do not span a
    full-rank sublattice.
    """
    gens = _as_matrix(generators)
    if any(len(g) != ambient_rank for g in gens):
        raise BadInput(f"generators must have length {ambient_rank}")
    if ambient_rank == 0:
        return FiniteAbelianGroup()
    if len(gens) < ambient_rank:
        raise InfiniteQuotient(f"{len(gens)} generators cannot span rank {ambient_rank}")
    return FiniteAbelianGroup.from_diagonal(smith_normal_form(gens))


def lattice_basis(generators, ambient_rank: int) -> list[list[int]]:
    """A basis (as rows) of the full-rank lattice spanned by ``generators``."""
    gens = _as_matrix(generators)
    d, u, _ = smith_decomposition(gens, ncols=ambient_rank)
    diag = [d[i][i] for i in range(min(len(d), ambient_rank))]
    if len(diag) < ambient_rank or any(x == 0 for x in diag):
        raise InfiniteQuotient("generators do not span a full-rank lattice")
    return matmul(u[:ambient_rank], gens)


def rational_inverse(rows) -> list[list[Fraction]]:
    """Inverse of a square nonsingular integer matrix over the rationals."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise BadInput("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
