"""Monoids ``G x F`` with a carry: ``(a, f) + (b, g) = (a + b, f + g + I(a, b))``.

``G`` is a finite abelian group, ``F`` the free monoid on ``ray_count``
labels and ``I`` a table ``G x G -> F``.  The Diophantine monoid is of this
form with ``G`` the Apéry group and ``I`` its carry; :func:`canonical_spec`
builds that instance and :func:`verify_isomorphism` checks it against the
monoid itself.

Axioms checked by :func:`check_axioms`:

1. ``I(a, b) = I(b, a)``
2. ``I(a, 0) = 0``
3. ``I(a, b) + I(a + b, c) = I(b, c) + I(a, b + c)``
4. ``I(a, -a)`` is neither zero nor a single label, for ``a != 0``
5. ``sum_{i<n} I(a, i*a) + n*f`` in ``F`` implies ``f`` in ``F``
   (only checked for ``n <= depth_bound`` and ``f`` in ``[-B, B]^|Q|``)
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .apery import DEFAULT_GUARD, AperyTable, apery_box
from .errors import BadInput, SpecMismatch
from .exact_arith import FiniteAbelianGroup, smith_decomposition
from .monoid import EquationSpec, Point

# element budget for vectorized blocks
_CHUNK = 4_000_000

__all__ = [
    "CarryMonoidSpec",
    "CarryElement",
    "AxiomReport",
    "add",
    "identity",
    "elements",
    "check_axioms",
    "canonical_spec",
    "verify_isomorphism",
    "to_json",
    "from_json",
]


@dataclass(frozen=True, eq=False)
class CarryMonoidSpec:
    """``table[i, j]`` is ``I(g_i, g_j)`` with group elements indexed in
    ``group.elements()`` order.  ``points``, when present, labels each group
    element with the Apéry point it stands for."""

    group: FiniteAbelianGroup
    ray_count: int
    table: np.ndarray
    points: tuple[Point, ...] | None = None
    _elements: np.ndarray = field(init=False, repr=False)
    _sums: np.ndarray = field(init=False, repr=False)
    _negs: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        n = self.group.order
        table = np.array(self.table, dtype=np.int64).reshape(n, n, self.ray_count)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        if self.points is not None:
            pts = tuple(tuple(int(v) for v in p) for p in self.points)
            if len(pts) != n:
                raise BadInput("one point label per group element required")
            object.__setattr__(self, "points", pts)
        factors = np.array(self.group.invariant_factors, dtype=np.int64)
        elems = np.array(list(self.group.elements()), dtype=np.int64).reshape(n, self.group.rank)
        strides = np.ones(self.group.rank, dtype=np.int64)
        for i in range(self.group.rank - 2, -1, -1):
            strides[i] = strides[i + 1] * factors[i + 1]
        sums = ((elems[:, None, :] + elems[None, :, :]) % factors) @ strides
        negs = ((-elems) % factors) @ strides
        object.__setattr__(self, "_elements", elems)
        object.__setattr__(self, "_sums", sums)
        object.__setattr__(self, "_negs", negs)

    def __eq__(self, other):
        if not isinstance(other, CarryMonoidSpec):
            return NotImplemented
        return (self.group == other.group and self.ray_count == other.ray_count
                and np.array_equal(self.table, other.table) and self.points == other.points)

    @property
    def order(self) -> int:
        return self.group.order

    def carry(self, g, h) -> tuple[int, ...]:
        return tuple(self.table[self.group.index(g), self.group.index(h)].tolist())

    def element_of(self, point) -> tuple[int, ...]:
        """Group element labelled by an Apéry point."""
        if self.points is None:
            raise SpecMismatch("spec carries no point labels")
        return tuple(self._elements[self.points.index(tuple(point))].tolist())


@dataclass(frozen=True)
class CarryElement:
    g: tuple[int, ...]
    f: tuple[int, ...]


def _check_element(spec: CarryMonoidSpec, x: CarryElement):
    if len(x.g) != spec.group.rank or len(x.f) != spec.ray_count:
        raise SpecMismatch(f"{x} does not fit the carry table shape")
    if any(not 0 <= v < d for v, d in zip(x.g, spec.group.invariant_factors)):
        raise SpecMismatch(f"{x.g} is not a reduced group element")


def add(spec: CarryMonoidSpec, x: CarryElement, y: CarryElement) -> CarryElement:
    _check_element(spec, x)
    _check_element(spec, y)
    c = spec.carry(x.g, y.g)
    return CarryElement(spec.group.add(x.g, y.g), tuple(a + b + k for a, b, k in zip(x.f, y.f, c)))


def identity(spec: CarryMonoidSpec) -> CarryElement:
    return CarryElement(spec.group.zero(), (0,) * spec.ray_count)


def elements(spec: CarryMonoidSpec, bound: int):
    """All elements with free part in ``[0, bound]^|Q|``."""
    for g in spec.group.elements():
        for f in itertools.product(range(bound + 1), repeat=spec.ray_count):
            yield CarryElement(g, f)


@dataclass
class AxiomReport:
    """First counterexample per axiom (``None`` means the axiom held)."""

    failures: dict[int, object]
    depth_bound: int
    coord_bound: int

    @property
    def passed(self) -> bool:
        return all(v is None for v in self.failures.values())

    def lines(self) -> list[str]:
        return [f"axiom {k}: " + ("pass" if v is None else f"FAIL at {v}") for k, v in sorted(self.failures.items())]


def _elem(spec, i):
    return tuple(spec._elements[i].tolist())


def check_axioms(spec: CarryMonoidSpec, depth_bound: int | None = None, coord_bound: int = 3) -> AxiomReport:
    """Exhaustive check of axioms 1-4, bounded check of axiom 5.

    ``depth_bound`` defaults to twice the exponent of the group.
    """
    if depth_bound is None:
        depth_bound = 2 * spec.group.exponent
    if depth_bound < 1 or coord_bound < 1:
        raise BadInput("bounds must be positive")
    t, s, neg = spec.table, spec._sums, spec._negs
    n, k = spec.order, spec.ray_count
    out: dict[int, object] = {}

    bad = np.argwhere((t != t.transpose(1, 0, 2)).any(axis=2))
    out[1] = None if not bad.size else tuple(_elem(spec, i) for i in bad[0])

    bad = np.flatnonzero(t[:, 0].any(axis=1))
    out[2] = None if not bad.size else _elem(spec, bad[0])

    out[3] = None
    idx = np.arange(n)
    flat = t.reshape(n * n, k)
    block = max(1, _CHUNK // (n * n * max(k, 1)))
    for lo in range(0, n, block):
        a = idx[lo:lo + block]
        # I(a,b) + I(a+b,c)  vs  I(b,c) + I(a,b+c), over all (b, c)
        lhs = t[a][:, :, None, :] + np.take(flat, s[a][:, :, None] * n + idx, axis=0)
        rhs = t[None, :, :, :] + np.take(flat, a[:, None, None] * n + s[None, :, :], axis=0)
        if not np.array_equal(lhs, rhs):
            i, b, c = np.argwhere((lhs != rhs).any(axis=3))[0]
            out[3] = (_elem(spec, a[i]), _elem(spec, b), _elem(spec, c))
            break

    inv_carry = t[idx, neg]
    trivial = ~inv_carry.any(axis=1) | ((inv_carry.sum(axis=1) == 1) & (inv_carry.max(axis=1, initial=0) == 1))
    trivial[0] = False
    bad = np.flatnonzero(trivial)
    out[4] = None if not bad.size else _elem(spec, bad[0])

    out[5] = None
    grid = np.array(list(itertools.product(range(-coord_bound, coord_bound + 1), repeat=k)), dtype=np.int64).reshape(-1, k)
    grid = grid[(grid < 0).any(axis=1)]
    if k and len(grid):
        # multiples[a, i] = index of i*a for i = 0..depth_bound-1
        multiples = np.zeros((n, depth_bound), dtype=np.int64)
        for i in range(1, depth_bound):
            multiples[:, i] = s[multiples[:, i - 1], idx]
        steps = t[idx[:, None], multiples]              # (n, N, k): I(a, i*a)
        steps[:, 0] = 0
        partial = np.cumsum(steps, axis=1)              # partial[a, m-1] = sum_{i<m} I(a, i*a)
        ns = np.arange(1, depth_bound + 1)
        scaled = ns[:, None] * grid.T[:, None, :]      # (k, N, |grid|): n * f_i
        block = max(1, _CHUNK // (depth_bound * len(grid)))
        for lo in range(0, n, block):
            part = partial[lo:lo + block]
            inside = np.ones((len(part), depth_bound, len(grid)), dtype=bool)
            for i in range(k):
                inside &= part[:, :, i, None] >= -scaled[i][None]
            if inside.any():
                a, m, j = np.argwhere(inside)[0]
                out[5] = (int(ns[m]), _elem(spec, lo + a), tuple(grid[j].tolist()))
                break
    return AxiomReport(out, depth_bound, coord_bound)


def _group_coordinates(sums: np.ndarray, zero: int):
    """Greedy generators for the Cayley table ``sums``.

    Returns ``(coords, relations)`` where ``coords[i]`` writes element ``i`` in
    the generators and the rows of ``relations`` span the relation lattice.
    """
    n = sums.shape[0]
    coords: dict[int, tuple[int, ...]] = {zero: ()}
    relations = []
    for g in range(n):
        if g in coords:
            continue
        k = len(relations)
        order, cur = 1, g
        while cur not in coords:
            cur = int(sums[cur, g])
            order += 1
        relations.append([-c for c in coords[cur]] + [order])
        grown = {}
        for h, word in coords.items():
            x = h
            for step in range(order):
                grown[x] = word + (step,)
                x = int(sums[x, g])
        coords = grown
    rank = len(relations)
    relations = [r + [0] * (rank - len(r)) for r in relations]
    return coords, relations


def canonical_spec(spec: EquationSpec, guard: int = DEFAULT_GUARD, table: AperyTable | None = None) -> CarryMonoidSpec:
    """The carry monoid isomorphic to the Diophantine monoid ``spec``."""
    if table is None:
        table = apery_box(spec, guard)
    sums, carries = table.cayley()
    zero = table.position(table.zero)
    coords, relations = _group_coordinates(sums, zero)
    rank = len(relations)
    if rank == 0:
        group = FiniteAbelianGroup()
        return CarryMonoidSpec(group, spec.dim, carries.reshape(1, 1, spec.dim), (table.zero,))
    d, _, v = smith_decomposition(relations)
    diag = [abs(d[i][i]) for i in range(rank)]
    keep = [i for i in range(rank) if diag[i] > 1]
    group = FiniteAbelianGroup(tuple(diag[i] for i in keep))
    vmat = np.array(v, dtype=object)
    to_group = np.empty(len(table), dtype=np.int64)
    for pos, word in coords.items():
        image = np.array(word, dtype=object) @ vmat
        to_group[pos] = group.index(tuple(int(image[i]) % diag[i] for i in keep))
    if sorted(to_group.tolist()) != list(range(group.order)):
        raise SpecMismatch("generator discovery did not produce a bijection")
    order = np.argsort(to_group)
    return CarryMonoidSpec(
        group,
        spec.dim,
        carries[order][:, order],
        tuple(table.elements[i] for i in order),
    )


def verify_isomorphism(spec: EquationSpec, cspec: CarryMonoidSpec, coord_bound: int = 2) -> bool:
    """Check that ``psi(g, f) = point(g) + sum f_i q_i`` is additive and
    bijective onto the monoid elements whose ray carries are all ``<= coord_bound``."""
    if cspec.points is None or cspec.ray_count != spec.dim:
        raise SpecMismatch("spec is not labelled by points of this monoid")
    w = np.array(spec.widths, dtype=np.int64)
    pts = np.array(cspec.points, dtype=np.int64).reshape(cspec.order, spec.dim)
    frees = np.array(list(itertools.product(range(coord_bound + 1), repeat=spec.dim)), dtype=np.int64)
    g_idx = np.repeat(np.arange(cspec.order), len(frees))
    f_all = np.tile(frees, (cspec.order, 1))
    psi = pts[g_idx] + f_all * w

    coeffs = np.array(spec.coeffs, dtype=np.int64)
    if ((psi @ coeffs) % spec.modulus).any():
        return False
    limit = (coord_bound + 1) * w
    if (psi >= limit).any():
        return False
    # injective into the box, and the box holds no other monoid elements
    strides = np.cumprod(np.concatenate(([1], limit[:0:-1])))[::-1]
    if len(np.unique(psi @ strides)) != len(psi):
        return False
    grid = np.indices(tuple(limit.tolist())).reshape(spec.dim, -1).T
    if int(((grid @ coeffs) % spec.modulus == 0).sum()) != len(psi):
        return False

    # additivity over all pairs ((g, f), (h, f')), one coordinate at a time,
    # laid out as (g, f, h, f')
    n = cspec.order
    fw = frees * w
    summed = pts[cspec._sums] + cspec.table * w
    plain = pts[:, None, :] + pts[None, :, :]
    block = max(1, _CHUNK // (len(frees) * n * len(frees)))
    for i in range(spec.dim):
        free_part = fw[None, :, None, None, i] + fw[None, None, None, :, i]
        for lo in range(0, n, block):
            lhs = summed[lo:lo + block, None, :, None, i] + free_part
            rhs = plain[lo:lo + block, None, :, None, i] + free_part
            if not np.array_equal(lhs, rhs):
                return False
    return True


def to_json(spec: CarryMonoidSpec) -> str:
    elems = list(spec.group.elements())
    doc = {
        "invariant_factors": list(spec.group.invariant_factors),
        "ray_count": spec.ray_count,
        "table": [
            {"g": list(g), "h": list(h), "carry": spec.table[i, j].tolist()}
            for i, g in enumerate(elems)
            for j, h in enumerate(elems)
        ],
    }
    if spec.points is not None:
        doc["points"] = [{"g": list(g), "point": list(p)} for g, p in zip(elems, spec.points)]
    return json.dumps(doc, separators=(",", ":"))


def _group_index(group: FiniteAbelianGroup, g) -> int:
    g = tuple(int(v) for v in g)
    if len(g) != group.rank or any(not 0 <= v < d for v, d in zip(g, group.invariant_factors)):
        raise BadInput(f"{list(g)} is not a reduced element of {group}")
    return group.index(g)


def from_json(text: str) -> CarryMonoidSpec:
    try:
        doc = json.loads(text)
        group = FiniteAbelianGroup(tuple(int(d) for d in doc["invariant_factors"]))
        k = int(doc["ray_count"])
        entries = list(doc["table"])
        labels = doc.get("points")
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise BadInput(f"malformed carry spec: {exc}") from None
    if k < 0:
        raise BadInput("ray_count must be non-negative")
    n = group.order
    table = np.zeros((n, n, k), dtype=np.int64)
    seen = np.zeros((n, n), dtype=bool)
    try:
        for entry in entries:
            i, j = _group_index(group, entry["g"]), _group_index(group, entry["h"])
            carry = [int(c) for c in entry["carry"]]
            if len(carry) != k or any(c < 0 for c in carry):
                raise BadInput(f"bad carry vector {carry}")
            table[i, j] = carry
            seen[i, j] = True
        if not seen.all():
            raise BadInput("carry table is not defined on all of G x G")
        points = None
        if labels is not None:
            labelled = {_group_index(group, e["g"]): tuple(int(v) for v in e["point"]) for e in labels}
            if len(labelled) != n:
                raise BadInput("point labels must cover the group")
            points = tuple(labelled[i] for i in range(n))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, BadInput):
            raise
        raise BadInput(f"malformed carry spec: {exc}") from None
    return CarryMonoidSpec(group, k, table, points)
