"""Unique decompositions of monoid elements.

Every element is uniquely ``a + sum k_i q_i`` with ``a`` in the Apéry set.
When the Hilbert basis has at most two elements ``u < v`` besides the rays,
the Apéry part is itself uniquely ``m*u + n*v`` with ``m*u_i + n*v_i < w_i``
for every coordinate, which gives a parametrized description of the whole
monoid.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .apery import DEFAULT_GUARD, AperyTable, _reduce_point, apery_box, reduce
from .errors import SchemeInconsistent, TooManyExtras
from .hilbert import hilbert_basis
from .monoid import EquationSpec, Point, _member

__all__ = [
    "Decomposition",
    "ElliottScheme",
    "ElliottRepresentation",
    "decompose",
    "recompose",
    "elliott_scheme",
    "elliott_decompose",
    "elliott_recompose",
]


@dataclass(frozen=True)
class Decomposition:
    apery_part: Point
    ray_mults: tuple[int, ...]


@dataclass(frozen=True)
class ElliottScheme:
    spec: EquationSpec
    u: Point | None
    v: Point | None
    admissible: tuple[tuple[int, int], ...]
    # Apéry point -> (m, n)
    lookup: dict = field(compare=False, repr=False, default_factory=dict)


@dataclass(frozen=True)
class ElliottRepresentation:
    ray_mults: tuple[int, ...]
    m: int
    n: int


def decompose(spec: EquationSpec, x, table: AperyTable | None = None) -> Decomposition:
    if table is not None:
        a, k = reduce(table, x)
    else:
        a, k = _reduce_point(spec, _member(spec, x))
    return Decomposition(a, k)


def recompose(spec: EquationSpec, d: Decomposition) -> Point:
    return tuple(a + k * w for a, k, w in zip(d.apery_part, d.ray_mults, spec.widths))


def _combine(m: int, u, n: int, v) -> Point:
    if v is None:
        return tuple(m * x for x in u)
    return tuple(m * x + n * y for x, y in zip(u, v))


def elliott_scheme(spec: EquationSpec, guard: int = DEFAULT_GUARD, table: AperyTable | None = None) -> ElliottScheme:
    """Admissible ``(m, n)`` region for the non-ray Hilbert basis elements.

    Raises :class:`TooManyExtras` when there are three or more of them.
    """
    if table is None:
        table = apery_box(spec, guard)
    extras = hilbert_basis(spec, table=table).extras
    if len(extras) > 2:
        raise TooManyExtras(f"{spec} has {len(extras)} non-ray Hilbert basis elements: {list(extras)}")
    zero = table.zero
    if not extras:
        return ElliottScheme(spec, None, None, ((0, 0),), {zero: (0, 0)})
    u = extras[0]
    v = extras[1] if len(extras) == 2 else None
    w = spec.widths

    def fits(p):
        return all(x < wi for x, wi in zip(p, w))

    admissible = []
    m = 0
    while fits(_combine(m, u, 0, v)):
        n = 0
        while fits(_combine(m, u, n, v)):
            admissible.append((m, n))
            if v is None:
                break
            n += 1
        m += 1
    lookup = {_combine(m, u, n, v): (m, n) for m, n in admissible}
    if len(lookup) != len(table) or any(p not in table for p in lookup):
        raise SchemeInconsistent(f"admissible region of {spec} does not match its Apéry set")
    return ElliottScheme(spec, u, v, tuple(admissible), lookup)


def elliott_decompose(scheme: ElliottScheme, spec: EquationSpec, x) -> ElliottRepresentation:
    d = decompose(spec, x)
    try:
        m, n = scheme.lookup[d.apery_part]
    except KeyError:
        raise SchemeInconsistent(f"no admissible pair produces {d.apery_part}") from None
    return ElliottRepresentation(d.ray_mults, m, n)


def elliott_recompose(scheme: ElliottScheme, rep: ElliottRepresentation) -> Point:
    spec = scheme.spec
    base = [k * w for k, w in zip(rep.ray_mults, spec.widths)]
    if scheme.u is not None:
        extra = _combine(rep.m, scheme.u, rep.n, scheme.v)
        base = [b + e for b, e in zip(base, extra)]
    return tuple(base)
