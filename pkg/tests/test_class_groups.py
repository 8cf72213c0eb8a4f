import random
from math import gcd, prod

import pytest
from brute import coset_count

from diophmon import (
    FiniteAbelianGroup,
    apery_box,
    class_group,
    hilbert_basis,
    inner_class_group,
    lambda_denominators,
    normalize_equation,
    phi,
    two_dim_closed_form,
    verify_product_identity,
)
from diophmon.errors import BadInput, NotInMonoid
from diophmon.hilbert import HilbertBasis
from diophmon.oracle import enumerate_solutions
from diophmon.sweep import check_instance


def test_phi_examples(m457, m1112):
    assert phi(m457, (1, 2), [7, 7]) == (1, 2)
    assert phi(m457, (7, 0), [7, 7]) == (7, 0)
    assert phi(m1112, (0, 1, 1), [2, 2, 2]) == (0, 1, 1)
    with pytest.raises(NotInMonoid):
        phi(m457, (1, 1), [7, 7])


def test_phi_additive(m457):
    ells = lambda_denominators(m457)
    pts = enumerate_solutions(m457, [15, 15])
    for x in pts[:30]:
        for y in pts[:30]:
            s = tuple(a + b for a, b in zip(x, y))
            assert phi(m457, s, ells) == tuple(a + b for a, b in zip(phi(m457, x, ells), phi(m457, y, ells)))


@pytest.mark.parametrize("raw, cl, incl", [
    ([4, 5, 7], (7,), (7,)),
    ([2, 3, 6], (), ()),
    ([1, 1, 1, 2], (2,), (2, 2)),
    ([1, 5, 13], (13,), (13,)),
    ([2, 4, 8], (2,), (2,)),
])
def test_group_examples(raw, cl, incl):
    m = normalize_equation(raw)
    assert class_group(m).invariant_factors == cl
    assert inner_class_group(m).invariant_factors == incl


@pytest.mark.parametrize("raw, lhs", [([4, 5, 7], 49), ([2, 3, 6], 1), ([1, 1, 1, 2], 8)])
def test_product_identity_examples(raw, lhs):
    res = verify_product_identity(normalize_equation(raw))
    assert res.lhs == lhs
    assert res.holds and res.rhs == lhs


def test_class_group_against_coset_count():
    # |Z^(r-1) / phi(G(M))| by closing phi(H) modulo prod(l)
    rng = random.Random(5)
    for _ in range(25):
        raw = [rng.randint(1, 9) for _ in range(rng.choice([3, 4]))]
        m = normalize_equation(raw)
        hb = hilbert_basis(m)
        ells = lambda_denominators(m)
        images = [phi(m, h, ells) for h in hb.generators]
        modulus = max(ells)
        assert class_group(m).order == coset_count(images, m.dim, modulus), raw


def test_two_dim_closed_form():
    assert two_dim_closed_form(4, 5, 7) == FiniteAbelianGroup.cyclic(7)
    assert two_dim_closed_form(2, 3, 6) == FiniteAbelianGroup()
    assert two_dim_closed_form(2, 4, 9) == FiniteAbelianGroup.cyclic(9)
    assert two_dim_closed_form(3, 4, 12).order == 1
    for bad in [(0, 1, 5), (5, 1, 5), (2, 4, 6), (1, 1, 1)]:
        with pytest.raises(BadInput):
            two_dim_closed_form(*bad)


def test_two_dim_sweep_small():
    for c in range(2, 13):
        for a in range(1, c):
            for b in range(1, c):
                if gcd(gcd(a, b), c) != 1:
                    continue
                m = normalize_equation([a, b, c])
                expected = two_dim_closed_form(a, b, c)
                assert class_group(m) == expected == inner_class_group(m)


def test_redundant_generators_leave_groups_unchanged(m1112):
    table = apery_box(m1112)
    hb = hilbert_basis(m1112, table=table)
    padded = HilbertBasis(m1112, hb.rays, hb.extras + tuple(p for p in table.elements if sum(p) > 2))
    padded = HilbertBasis(m1112, hb.rays, padded.extras + ((2, 1, 1), (3, 3, 0)))
    assert class_group(m1112, table=table, basis=padded) == class_group(m1112)
    assert inner_class_group(m1112, table=table, basis=padded) == inner_class_group(m1112)


def test_inner_class_order_is_apery_size():
    rng = random.Random(8)
    for _ in range(30):
        raw = [rng.randint(1, 12) for _ in range(rng.choice([3, 4, 5]))]
        m = normalize_equation(raw)
        if prod(m.widths) > 200_000:
            continue
        res = check_instance(m, oracle_limit=100)
        assert res.ok, res.failures
