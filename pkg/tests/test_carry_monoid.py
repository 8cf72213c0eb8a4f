import itertools
import json

import numpy as np
import pytest

from diophmon import FiniteAbelianGroup, apery_box, normalize_equation
from diophmon.carry_monoid import (
    CarryElement,
    CarryMonoidSpec,
    add,
    canonical_spec,
    check_axioms,
    elements,
    from_json,
    identity,
    to_json,
    verify_isomorphism,
)
from diophmon.errors import BadInput, SpecMismatch


@pytest.fixture(scope="module")
def c457(m457):
    return canonical_spec(m457)


def _zero_carry(group, k):
    n = group.order
    return CarryMonoidSpec(group, k, np.zeros((n, n, k), dtype=np.int64))


def test_canonical_examples(c457, m1112, m236):
    assert c457.group == FiniteAbelianGroup.cyclic(7)
    assert c457.ray_count == 2 and c457.table.shape == (7, 7, 2)
    assert set(c457.points) == set(apery_box(normalize_equation([4, 5, 7])).elements)
    assert c457.points[0] == (0, 0)
    c = canonical_spec(m1112)
    assert c.group.invariant_factors == (2, 2)
    c = canonical_spec(m236)
    assert c.group.order == 1 and c.points == ((0, 0),)


def test_add_examples(c457):
    g = c457.element_of((4, 1))
    x = CarryElement(g, (0, 0))
    s = add(c457, x, x)
    # (4,1) + (4,1) = (1,2) + q1
    assert s == CarryElement(c457.element_of((1, 2)), (1, 0))
    y = CarryElement(c457.element_of((1, 2)), (2, 3))
    assert add(c457, y, identity(c457)) == y
    with pytest.raises(SpecMismatch):
        add(c457, CarryElement((7,), (0, 0)), x)
    with pytest.raises(SpecMismatch):
        add(c457, CarryElement((1,), (0,)), x)


def test_axioms_pass_on_example(c457):
    report = check_axioms(c457, 14, 3)
    assert report.passed, report.lines()
    assert report.depth_bound == 14 and report.coord_bound == 3
    assert check_axioms(c457).depth_bound == 14
    assert all(line.endswith("pass") for line in report.lines())


def test_zero_carry_fails_reducedness():
    report = check_axioms(_zero_carry(FiniteAbelianGroup.cyclic(2), 1))
    assert report.failures[4] == (1,)
    assert report.failures[1] is None and report.failures[2] is None and report.failures[3] is None
    assert not report.passed


def test_trivial_group_passes():
    assert check_axioms(_zero_carry(FiniteAbelianGroup(), 2)).passed


def test_asymmetric_table_fails_commutativity():
    t = np.zeros((2, 2, 1), dtype=np.int64)
    t[1, 1] = 1
    t[0, 1] = 1
    report = check_axioms(CarryMonoidSpec(FiniteAbelianGroup.cyclic(2), 1, t))
    assert report.failures[1] is not None
    assert report.failures[2] == (1,) or report.failures[2] is None


def test_bad_bounds(c457):
    with pytest.raises(BadInput):
        check_axioms(c457, 0, 3)


def test_isomorphism(m457, c457, m1112):
    assert verify_isomorphism(m457, c457, 2)
    assert verify_isomorphism(m1112, canonical_spec(m1112), 2)
    # permuting the point labels breaks additivity
    pts = list(c457.points)
    pts[1], pts[2] = pts[2], pts[1]
    broken = CarryMonoidSpec(c457.group, 2, c457.table, tuple(pts))
    assert not verify_isomorphism(m457, broken, 2)
    with pytest.raises(SpecMismatch):
        verify_isomorphism(m457, _zero_carry(FiniteAbelianGroup.cyclic(7), 2), 2)


@pytest.mark.parametrize("raw", [[4, 5, 7], [1, 1, 1, 2], [3, 5, 9, 12]])
def test_monoid_properties(raw):
    c = canonical_spec(normalize_equation(raw))
    elems = list(elements(c, 1))
    zero = identity(c)
    for x in elems:
        assert add(c, x, zero) == x
        for y in elems:
            xy = add(c, x, y)
            assert xy == add(c, y, x)
            if xy == zero:
                assert x == y == zero
            # cancellativity on the sample
            for z in elems[:20]:
                if add(c, x, z) == add(c, y, z):
                    assert x == y
    small = elems[:12]
    for x, y, z in itertools.product(small, repeat=3):
        assert add(c, add(c, x, y), z) == add(c, x, add(c, y, z))
    # Apery points are exactly G x {0}
    for g in c.group.elements():
        x = CarryElement(g, (0,) * c.ray_count)
        assert c.points[c.group.index(g)] in apery_box(normalize_equation(raw))
        assert x in elems


def test_rays_are_atoms(c457):
    # (0, e_i) is not a sum of two nonzero elements
    zero = identity(c457)
    elems = [e for e in elements(c457, 1) if e != zero]
    for atom in (CarryElement((0,), (1, 0)), CarryElement((0,), (0, 1))):
        assert all(add(c457, x, y) != atom for x in elems for y in elems)


def test_json_roundtrip(c457):
    text = to_json(c457)
    back = from_json(text)
    assert back == c457
    doc = json.loads(text)
    assert set(doc) == {"invariant_factors", "ray_count", "table", "points"}
    del doc["points"]
    bare = from_json(json.dumps(doc))
    assert bare.points is None and np.array_equal(bare.table, c457.table)


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("table"),
    lambda d: d["table"].pop(),
    lambda d: d["table"][0].update(carry=[-1, 0]),
    lambda d: d["table"][0].update(carry=[0]),
    lambda d: d["table"][0].update(g=[9]),
    lambda d: d.update(invariant_factors=[4, 2]),
    lambda d: d["points"].pop(),
])
def test_json_errors(c457, mutate):
    doc = json.loads(to_json(c457))
    mutate(doc)
    with pytest.raises(BadInput):
        from_json(json.dumps(doc))
    with pytest.raises(BadInput):
        from_json("not json")
