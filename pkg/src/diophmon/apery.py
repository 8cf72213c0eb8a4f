"""Apéry sets with respect to the extremal rays, and the group law on them.

An element of the monoid lies in the Apéry set exactly when it sits inside
the box ``prod [0, w_i)``, so the set is found by scanning that box.  For two
unknowns there is also a closed form, one point per admissible first
coordinate.

Adding two Apéry elements and reducing coordinatewise modulo the ray widths
gives ``a (+) b``; the quotients are the carry ``I(a, b)``:

    a + b = (a (+) b) + sum_i I(a, b)_i * q_i
"""
from __future__ import annotations

from math import gcd
from typing import Iterable

import numpy as np

from .errors import BoxTooLarge, NotInApery, NotTwoDimensional, ZeroCoefficient
from .exact_arith import mod_inverse
from .monoid import EquationSpec, Point, _check_point, _member

DEFAULT_GUARD = 10_000_000

__all__ = [
    "DEFAULT_GUARD",
    "AperyTable",
    "apery_box",
    "apery_closed_form",
    "reduce",
    "oplus",
    "carry",
    "bar_multiple",
]


class AperyTable:
    """The Apéry set of a monoid, lex-sorted, with O(1) point lookup.

    Instances are treated as immutable.  The Cayley table of the group law
    is computed on first use and cached.
    """

    def __init__(self, spec: EquationSpec, elements: Iterable[Point]):
        self.spec = spec
        self.elements: tuple[Point, ...] = tuple(sorted(tuple(int(v) for v in p) for p in elements))
        self.index = {p: i for i, p in enumerate(self.elements)}
        self.points = np.array(self.elements, dtype=np.int64).reshape(len(self.elements), spec.dim)
        self._widths = np.array(spec.widths, dtype=np.int64)
        strides = np.ones(spec.dim, dtype=np.int64)
        for i in range(spec.dim - 2, -1, -1):
            strides[i] = strides[i + 1] * spec.widths[i + 1]
        self._strides = strides
        self.keys = self.points @ strides
        self._cayley = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return tuple(x) in self.index

    def __eq__(self, other):
        if not isinstance(other, AperyTable):
            return NotImplemented
        return self.spec == other.spec and self.elements == other.elements

    def __repr__(self):
        return f"AperyTable({self.spec}, {list(self.elements)})"

    @property
    def zero(self) -> Point:
        return (0,) * self.spec.dim

    def position(self, a) -> int:
        try:
            return self.index[tuple(a)]
        except KeyError:
            raise NotInApery(f"{tuple(a)} is not in the Apéry set of {self.spec}") from None

    def lookup(self, pts: np.ndarray) -> np.ndarray:
        """Vectorized positions of box-reduced points (last axis = coordinates)."""
        keys = pts @ self._strides
        pos = np.searchsorted(self.keys, keys)
        pos = np.minimum(pos, len(self.keys) - 1)
        if not np.array_equal(self.keys[pos], keys):
            raise NotInApery("reduced point missing from the Apéry table")
        return pos

    def cayley(self) -> tuple[np.ndarray, np.ndarray]:
        """``(sums, carries)``: ``sums[i, j]`` is the position of ``a_i (+) a_j``,
        ``carries[i, j]`` is ``I(a_i, a_j)`` as ray multiplicities."""
        if self._cayley is None:
            total = self.points[:, None, :] + self.points[None, :, :]
            carries = total // self._widths
            sums = self.lookup(total - carries * self._widths)
            sums.setflags(write=False)
            carries.setflags(write=False)
            self._cayley = (sums, carries)
        return self._cayley


def apery_box(spec: EquationSpec, guard: int = DEFAULT_GUARD) -> AperyTable:
    """Scan the box ``prod [0, w_i)`` for solutions of the congruence."""
    volume = spec.box_volume
    if volume > guard:
        raise BoxTooLarge(f"box volume {volume} exceeds guard {guard}")
    c = spec.modulus
    res = np.zeros((), dtype=np.int64)
    for a, w in zip(spec.coeffs, spec.widths):
        res = (res[..., None] + a * np.arange(w, dtype=np.int64)) % c
    hits = np.argwhere(res == 0)
    return AperyTable(spec, map(tuple, hits.tolist()))


def apery_closed_form(spec: EquationSpec) -> AperyTable:
    """Closed form for two unknowns: ``(g_b*i, -i*d*a mod (c/g_b))`` where
    ``d`` inverts ``b/g_b`` modulo ``c/g_b`` and ``0 <= i < c/(g_a*g_b)``."""
    if spec.r != 3:
        raise NotTwoDimensional(f"closed form needs exactly two unknowns, {spec} has {spec.dim}")
    a, b = spec.coeffs
    if a == 0 or b == 0:
        raise ZeroCoefficient(f"closed form needs nonzero reduced coefficients, got {spec}")
    c = spec.modulus
    ga, gb = gcd(a, c), gcd(b, c)
    mb = c // gb
    d = mod_inverse(b // gb, mb)
    count = c // (ga * gb)
    return AperyTable(spec, ((gb * i, (-i * d * a) % mb) for i in range(count)))


def _reduce_point(spec: EquationSpec, x: Point) -> tuple[Point, tuple[int, ...]]:
    rem = tuple(v % w for v, w in zip(x, spec.widths))
    quo = tuple(v // w for v, w in zip(x, spec.widths))
    return rem, quo


def reduce(table: AperyTable, x) -> tuple[Point, tuple[int, ...]]:
    """Split ``x`` as ``a + sum carries_i * q_i`` with ``a`` in the Apéry set."""
    x = _member(table.spec, x)
    a, carries = _reduce_point(table.spec, x)
    table.position(a)
    return a, carries


def _apery_arg(table: AperyTable, a) -> Point:
    a = _check_point(table.spec, a)
    table.position(a)
    return a


def oplus(table: AperyTable, a, b) -> Point:
    a, b = _apery_arg(table, a), _apery_arg(table, b)
    return tuple((x + y) % w for x, y, w in zip(a, b, table.spec.widths))


def carry(table: AperyTable, a, b) -> tuple[int, ...]:
    """Ray multiplicities of ``I(a, b) = a + b - (a (+) b)``."""
    a, b = _apery_arg(table, a), _apery_arg(table, b)
    return tuple((x + y) // w for x, y, w in zip(a, b, table.spec.widths))


def bar_multiple(table: AperyTable, n: int, a) -> Point:
    """The Apéry component of ``n * a``, i.e. ``a (+) ... (+) a`` (n times)."""
    if n < 0:
        raise ValueError("multiple must be nonnegative")
    a = _apery_arg(table, a)
    return tuple(n * x % w for x, w in zip(a, table.spec.widths))
