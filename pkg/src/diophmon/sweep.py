"""Cross-checks of every closed form against the brute-force oracle."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import gcd, prod

from . import oracle
from .apery import DEFAULT_GUARD, apery_box, apery_closed_form
from .class_groups import class_group, inner_class_group, two_dim_closed_form
from .hilbert import hilbert_basis
from .monoid import EquationSpec, lambda_denominators, normalize_equation

__all__ = ["InstanceCheck", "SweepSummary", "two_dim_instances", "check_instance", "sweep_two_dim"]


@dataclass
class InstanceCheck:
    equation: tuple[int, ...]
    apery_size: int
    lambda_denominators: list[int]
    class_group: list[int]
    inner_class_group: list[int]
    oracle_group: list[int] | None
    product_lhs: int
    product_rhs: int
    oracle_apery_match: bool
    closed_apery_match: bool | None = None
    closed_group: list[int] | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        out = asdict(self)
        out["equation"] = list(self.equation)
        out["ok"] = self.ok
        return out


def two_dim_instances(max_c: int):
    """All ``(a, b, c)`` with ``2 <= c <= max_c``, ``1 <= a, b < c`` and ``gcd(a, b, c) = 1``."""
    for c in range(2, max_c + 1):
        for a in range(1, c):
            for b in range(1, c):
                if gcd(gcd(a, b), c) == 1:
                    yield a, b, c


def check_instance(spec: EquationSpec, guard: int = DEFAULT_GUARD, oracle_limit: int = 400) -> InstanceCheck:
    """Run every available cross-check on one equation.

    The Cayley-table oracle is cubic in the Apéry set size and is skipped
    above ``oracle_limit`` elements.
    """
    table = apery_box(spec, guard)
    basis = hilbert_basis(spec, table=table)
    ells = lambda_denominators(spec, table)
    cl = class_group(spec, table=table, basis=basis)
    incl = inner_class_group(spec, table=table, basis=basis)
    og = None
    if len(table) <= oracle_limit:
        sums, _ = table.cayley()
        og = oracle.brute_group_structure(sums, table.position(table.zero))
    check = InstanceCheck(
        equation=(*spec.coeffs, spec.modulus),
        apery_size=len(table),
        lambda_denominators=ells,
        class_group=list(cl.invariant_factors),
        inner_class_group=list(incl.invariant_factors),
        oracle_group=None if og is None else list(og.invariant_factors),
        product_lhs=prod(ells),
        product_rhs=cl.order * incl.order,
        oracle_apery_match=oracle.brute_apery(spec, 4 * guard) == list(table.elements),
    )
    if not check.oracle_apery_match:
        check.failures.append("box scan differs from the brute-force Apéry set")
    if check.product_lhs != check.product_rhs:
        check.failures.append("product of lambda denominators differs from |Cl|*|inCl|")
    if og is not None and og != incl:
        check.failures.append("lattice inner class group differs from the Cayley-table group")
    if incl.order != len(table):
        check.failures.append("|inCl| differs from the Apéry set size")
    if spec.r == 3 and all(spec.coeffs):
        a, b = spec.coeffs
        check.closed_apery_match = apery_closed_form(spec).elements == table.elements
        closed = two_dim_closed_form(a, b, spec.modulus)
        check.closed_group = list(closed.invariant_factors)
        if not check.closed_apery_match:
            check.failures.append("closed-form Apéry set differs from the box scan")
        if not (closed == cl == incl):
            check.failures.append("two-unknown closed form differs from Cl or inCl")
    return check


@dataclass
class SweepSummary:
    max_c: int
    instances: int
    failures: list[dict]

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"max_c": self.max_c, "instances": self.instances, "failures": self.failures, "ok": self.ok}


def sweep_two_dim(max_c: int, guard: int = DEFAULT_GUARD) -> SweepSummary:
    count = 0
    failures = []
    for a, b, c in two_dim_instances(max_c):
        count += 1
        result = check_instance(normalize_equation((a, b, c)), guard)
        if not result.ok:
            failures.append(result.as_dict())
    return SweepSummary(max_c, count, failures)
