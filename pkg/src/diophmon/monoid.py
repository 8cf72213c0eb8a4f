"""The monoid of nonnegative solutions of ``a1*x1 + ... + a_{r-1}*x_{r-1} = 0 (mod c)``.

The extremal rays are ``q_i = w_i * e_i`` with ``w_i = c / gcd(a_i, c)``.
For an element ``x`` the ray coefficients are ``lambda(q_i, x) = x_i / w_i``;
``n(x)`` is the least positive integer making all of them integral.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as _fold
from math import gcd
from typing import Sequence

from .errors import BadInput, DimensionMismatch, NotInMonoid
from .exact_arith import lcm

Point = tuple[int, ...]

__all__ = [
    "Point",
    "EquationSpec",
    "CaleData",
    "normalize_equation",
    "contains",
    "rays",
    "lift",
    "project",
    "ray_lambda",
    "cale_data",
    "max_ray_lambda",
    "lambda_denominator",
    "lambda_denominators",
]


@dataclass(frozen=True)
class EquationSpec:
    """Normalized data of the equation; build it with :func:`normalize_equation`."""

    raw: tuple[int, ...]
    coeffs: tuple[int, ...]
    modulus: int
    gcds: tuple[int, ...]
    widths: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.coeffs) + 1

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @property
    def box_volume(self) -> int:
        out = 1
        for w in self.widths:
            out *= w
        return out

    def __str__(self):
        return "M(" + ",".join(map(str, (*self.coeffs, self.modulus))) + ")"


@dataclass(frozen=True)
class CaleData:
    n: int
    ray_coords: tuple[int, ...]


def normalize_equation(raw: Sequence[int]) -> EquationSpec:
    """Divide out the common gcd and reduce the coefficients modulo the last entry.

    >>> normalize_equation([8, 5, 7]).coeffs
    (1, 5)
    """
    raw = tuple(int(v) for v in raw)
    if len(raw) < 2:
        raise BadInput(f"need at least two coefficients, got {len(raw)}")
    if any(v < 1 for v in raw):
        raise BadInput(f"coefficients must be positive integers: {raw}")
    g = _fold(gcd, raw)
    scaled = [v // g for v in raw]
    c = scaled[-1]
    coeffs = tuple(v % c for v in scaled[:-1])
    gcds = tuple(gcd(a, c) for a in coeffs)
    widths = tuple(c // d for d in gcds)
    return EquationSpec(raw, coeffs, c, gcds, widths)


def _check_point(spec: EquationSpec, x) -> Point:
    x = tuple(int(v) for v in x)
    if len(x) != spec.dim:
        raise DimensionMismatch(f"expected a point of dimension {spec.dim}, got {len(x)}")
    return x


def contains(spec: EquationSpec, x) -> bool:
    x = _check_point(spec, x)
    if any(v < 0 for v in x):
        return False
    return sum(a * v for a, v in zip(spec.coeffs, x)) % spec.modulus == 0


def _member(spec: EquationSpec, x) -> Point:
    x = _check_point(spec, x)
    if not contains(spec, x):
        raise NotInMonoid(f"{x} is not in {spec}")
    return x


def rays(spec: EquationSpec) -> list[Point]:
    d = spec.dim
    return [tuple(w if j == i else 0 for j in range(d)) for i, w in enumerate(spec.widths)]


def lift(spec: EquationSpec, x) -> Point:
    """Append the last coordinate of the matching solution of the linear equation.

    Uses the normalized coefficients; for the raw equation use ``spec.raw``.
    """
    x = _member(spec, x)
    return (*x, sum(a * v for a, v in zip(spec.coeffs, x)) // spec.modulus)


def project(spec: EquationSpec, y) -> Point:
    y = tuple(int(v) for v in y)
    if len(y) != spec.r:
        raise DimensionMismatch(f"expected a point of dimension {spec.r}, got {len(y)}")
    return y[:-1]


def ray_lambda(spec: EquationSpec, i: int, x) -> Fraction:
    """Coefficient of the ray ``q_i`` in ``x``, as an exact fraction ``x_i / w_i``."""
    x = _member(spec, x)
    return Fraction(x[i], spec.widths[i])


def cale_data(spec: EquationSpec, x) -> CaleData:
    """Least ``n`` with ``n*x`` in the free monoid on the rays, and the ray coordinates of ``n*x``."""
    x = _member(spec, x)
    n = lcm(*(w // gcd(v, w) for v, w in zip(x, spec.widths)))
    return CaleData(n, tuple(n * v // w for v, w in zip(x, spec.widths)))


def max_ray_lambda(spec: EquationSpec, x) -> Fraction:
    x = _member(spec, x)
    if not x:
        return Fraction(0)
    return max(Fraction(v, w) for v, w in zip(x, spec.widths))


def lambda_denominators(spec: EquationSpec, table=None, guard: int | None = None) -> list[int]:
    """Per ray, the lcm of the denominators of ``lambda(q_i, a)`` over the Apéry set."""
    if table is None:
        from .apery import DEFAULT_GUARD, apery_box
        table = apery_box(spec, DEFAULT_GUARD if guard is None else guard)
    out = []
    for i, w in enumerate(spec.widths):
        out.append(lcm(*(w // gcd(a[i], w) for a in table.elements)))
    return out


def lambda_denominator(spec: EquationSpec, i: int, table=None, guard: int | None = None) -> int:
    """Least ``l`` such that ``l * lambda(q_i, x)`` is an integer for every ``x`` in the monoid."""
    return lambda_denominators(spec, table, guard)[i]
