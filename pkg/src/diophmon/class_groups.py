"""Class group and inner class group.

The map ``phi(x)_i = l_i * lambda(q_i, x)`` (``l_i`` the lambda denominator of
ray ``i``) embeds the monoid in ``Z^(r-1)``.  Then

    Cl   = Z^(r-1)    / phi(G(M))
    inCl = phi(G(M)) / phi(G(F))

where ``G(F)`` is the group generated by the rays, whose image is spanned by
``l_i * e_i``.  ``phi(G(M))`` is generated by the images of the Hilbert basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .apery import DEFAULT_GUARD, AperyTable, apery_box
from .errors import BadInput, SchemeInconsistent
from .exact_arith import (
    FiniteAbelianGroup,
    group_from_quotient,
    lattice_basis,
    rational_inverse,
    smith_normal_form,
)
from .hilbert import HilbertBasis, hilbert_basis
from .monoid import EquationSpec, _member, lambda_denominators

__all__ = [
    "phi",
    "class_group",
    "inner_class_group",
    "ProductIdentity",
    "verify_product_identity",
    "two_dim_closed_form",
]


def phi(spec: EquationSpec, x, ells) -> tuple[int, ...]:
    """Integer vector ``l_i * x_i / w_i``; ``ells`` from :func:`lambda_denominators`."""
    x = _member(spec, x)
    out = []
    for v, w, l in zip(x, spec.widths, ells):
        num = l * v
        if num % w:
            raise SchemeInconsistent(f"lambda denominator {l} does not clear {v}/{w}")
        out.append(num // w)
    return tuple(out)


def _context(spec, guard, table, basis):
    if table is None:
        table = apery_box(spec, guard)
    if basis is None:
        basis = hilbert_basis(spec, table=table)
    return table, basis, lambda_denominators(spec, table)


def class_group(spec: EquationSpec, guard: int = DEFAULT_GUARD, *,
                table: AperyTable | None = None, basis: HilbertBasis | None = None) -> FiniteAbelianGroup:
    table, basis, ells = _context(spec, guard, table, basis)
    images = [phi(spec, h, ells) for h in basis.generators]
    return group_from_quotient(spec.dim, images)


def inner_class_group(spec: EquationSpec, guard: int = DEFAULT_GUARD, *,
                      table: AperyTable | None = None, basis: HilbertBasis | None = None) -> FiniteAbelianGroup:
    """Quotient of the lattice ``phi(G(M))`` by its sublattice ``phi(G(F))``."""
    table, basis, ells = _context(spec, guard, table, basis)
    images = [phi(spec, h, ells) for h in basis.generators]
    lattice = lattice_basis(images, spec.dim)
    inv = rational_inverse(lattice)
    coords = []
    # row i of diag(l) @ lattice^-1: coordinates of l_i * e_i in the lattice basis
    for i, l in enumerate(ells):
        row = [l * x for x in inv[i]]
        if any(x.denominator != 1 for x in row):
            raise SchemeInconsistent("ray images are not in the lattice spanned by the Hilbert basis")
        coords.append([int(x) for x in row])
    return FiniteAbelianGroup.from_diagonal(smith_normal_form(coords))


@dataclass(frozen=True)
class ProductIdentity:
    lhs: int
    class_order: int
    inner_order: int

    @property
    def rhs(self) -> int:
        return self.class_order * self.inner_order

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def verify_product_identity(spec: EquationSpec, guard: int = DEFAULT_GUARD, *,
                            table: AperyTable | None = None) -> ProductIdentity:
    """Compare the product of the lambda denominators with ``|Cl| * |inCl|``."""
    table, basis, ells = _context(spec, guard, table, None)
    cl = class_group(spec, table=table, basis=basis)
    incl = inner_class_group(spec, table=table, basis=basis)
    return ProductIdentity(prod(ells), cl.order, incl.order)


def two_dim_closed_form(a: int, b: int, c: int) -> FiniteAbelianGroup:
    """Cyclic group of order ``c / (gcd(a, c) * gcd(b, c))``."""
    if c < 2 or not (1 <= a < c and 1 <= b < c):
        raise BadInput(f"need 1 <= a, b < c, got ({a}, {b}, {c})")
    if gcd(gcd(a, b), c) != 1:
        raise BadInput(f"gcd({a}, {b}, {c}) must be 1")
    return FiniteAbelianGroup.cyclic(c // (gcd(a, c) * gcd(b, c)))
