"""End-to-end acceptance checks, each with its own time budget.

Every test prints one ``PASS``/``FAIL`` line with the elapsed time.
"""
import random
import time
from math import gcd, prod

import numpy as np
import pytest

from diophmon import (
    apery_box,
    bar_multiple,
    cale_data,
    class_group,
    decompose,
    elliott_scheme,
    hilbert_basis,
    inner_class_group,
    lambda_denominators,
    normalize_equation,
    recompose,
    verify_product_identity,
)
from diophmon.carry_monoid import canonical_spec, check_axioms, verify_isomorphism
from diophmon.oracle import brute_apery, enumerate_solutions
from diophmon.sweep import check_instance, two_dim_instances

MAX_C = 30


def report(capsys, number, title, ok, elapsed, limit, detail=""):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"[acceptance {number}] {status}  {title}  ({elapsed:.2f}s / limit {limit}s)"
    if detail:
        line += f"  {detail}"
    with capsys.disabled():
        print("\n" + line)
    assert ok, detail
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


@pytest.fixture(scope="module")
def two_dim_sweep():
    start = time.perf_counter()
    results = [check_instance(normalize_equation(abc)) for abc in two_dim_instances(MAX_C)]
    return results, time.perf_counter() - start


def test_1_worked_example(capsys):
    start = time.perf_counter()
    m = normalize_equation([4, 5, 7])
    table = apery_box(m)
    hb = hilbert_basis(m, table=table)
    checks = {
        "apery": set(table.elements) == {(0, 0), (1, 2), (2, 4), (3, 6), (4, 1), (5, 3), (6, 5)} and len(table) == 7,
        "hilbert": hb.as_set() == {(7, 0), (0, 7), (1, 2), (4, 1)},
        "ells": lambda_denominators(m, table) == [7, 7],
        "cl": class_group(m, table=table).invariant_factors == (7,),
        "incl": inner_class_group(m, table=table).invariant_factors == (7,),
        "elliott": set(elliott_scheme(m, table=table).admissible)
        == {(i, j) for i in range(3) for j in range(2)} | {(3, 0)},
    }
    elapsed = time.perf_counter() - start
    bad = [k for k, v in checks.items() if not v]
    report(capsys, 1, "worked example M(4,5,7)", not bad, elapsed, 1, f"mismatched: {bad}" if bad else "")


def test_2_two_unknown_class_groups(capsys, two_dim_sweep):
    results, elapsed = two_dim_sweep
    bad = []
    for r in results:
        a, b, c = r.equation
        order = c // (gcd(a, c) * gcd(b, c))
        expected = [order] if order > 1 else []
        if not (r.class_group == r.inner_class_group == r.oracle_group == r.closed_group == expected):
            bad.append(r.equation)
    report(capsys, 2, f"Cl = inCl = oracle = closed form, {len(results)} equations with c <= {MAX_C}",
           not bad, elapsed, 30, f"failures: {bad[:5]}" if bad else "")


def test_3_two_unknown_apery(capsys, two_dim_sweep):
    results, elapsed = two_dim_sweep
    bad = [r.equation for r in results if not (r.closed_apery_match and r.oracle_apery_match)]
    report(capsys, 3, f"closed-form = box = brute Apery sets, {len(results)} equations",
           not bad, elapsed, 30, f"failures: {bad[:5]}" if bad else "")


def _random_instances(rng, count, ranks, box_limit):
    out = []
    while len(out) < count:
        raw = [rng.randint(1, 12) for _ in range(rng.choice(ranks))]
        m = normalize_equation(raw)
        if prod(m.widths) <= box_limit:
            out.append(m)
    return out


def test_4_product_identity(capsys):
    start = time.perf_counter()
    specs = [normalize_equation(abc) for abc in two_dim_instances(MAX_C)]
    specs += _random_instances(random.Random(2024), 200, (4, 5), 10 ** 6)
    bad = []
    for m in specs:
        res = verify_product_identity(m)
        if not res.holds:
            bad.append((m.raw, res.lhs, res.rhs))
    elapsed = time.perf_counter() - start
    report(capsys, 4, f"product of lambda denominators = |Cl|*|inCl|, {len(specs)} equations",
           not bad, elapsed, 60, f"failures: {bad[:5]}" if bad else "")


def test_5_decomposition_uniqueness(capsys):
    start = time.perf_counter()
    rng = random.Random(77)
    specs = []
    while len(specs) < 50:
        m = normalize_equation([rng.randint(1, 12) for _ in range(rng.choice((3, 4, 5)))])
        if (3 * m.modulus) ** m.dim <= 2_000_000:
            specs.append(m)
    bad = []
    points = 0
    for m in specs:
        table = apery_box(m)
        seen = set()
        for x in enumerate_solutions(m, [3 * m.modulus] * m.dim):
            points += 1
            d = decompose(m, x, table)
            key = (d.apery_part, d.ray_mults)
            if recompose(m, d) != x or d.apery_part not in table or key in seen:
                bad.append((m.raw, x))
                break
            seen.add(key)
    elapsed = time.perf_counter() - start
    report(capsys, 5, f"decomposition unique on [0,3c)^(r-1), 50 equations, {points} points",
           not bad, elapsed, 60, f"failures: {bad[:5]}" if bad else "")


def test_6_elliott_family(capsys):
    start = time.perf_counter()
    bad = []
    for a in range(1, 21):
        c = 2 * a + 1
        m = normalize_equation([a, 1, c])
        table = apery_box(m)
        hb = hilbert_basis(m, table=table)
        region = {(0, n) for n in range(a + 1)} | {(1, n) for n in range(a)}
        ok = (hb.as_set() == {(c, 0), (0, c), (1, a + 1), (2, 1)}
              and set(elliott_scheme(m, table=table).admissible) == region
              and list(table.elements) == brute_apery(m)
              and len(table) == c)
        if not ok:
            bad.append(a)
    elapsed = time.perf_counter() - start
    report(capsys, 6, "family a*x + y = 0 (mod 2a+1), a = 1..20", not bad, elapsed, 5,
           f"failures at a = {bad}" if bad else "")


def _small_two_dim():
    for abc in two_dim_instances(MAX_C):
        m = normalize_equation(abc)
        table = apery_box(m)
        if len(table) <= 50:
            yield m, table


def test_7_carry_structure(capsys):
    start = time.perf_counter()
    bad = []
    count = 0
    for m, table in _small_two_dim():
        count += 1
        cspec = canonical_spec(m, table=table)
        rep = check_axioms(cspec, 2 * cspec.group.exponent, 3)
        if not rep.passed or not verify_isomorphism(m, cspec, 2):
            bad.append(m.raw)
    elapsed = time.perf_counter() - start
    report(capsys, 7, f"carry axioms 1-5 and isomorphism, {count} equations", not bad, elapsed, 30,
           f"failures: {bad[:5]}" if bad else "")


def test_8_apery_group_axioms(capsys):
    start = time.perf_counter()
    bad = []
    count = 0
    for m, table in _small_two_dim():
        count += 1
        sums, _ = table.cayley()
        n = len(table)
        zero = table.position(table.zero)
        idx = np.arange(n)
        inverses = np.array([table.position(bar_multiple(table, cale_data(m, a).n - 1, a)) for a in table])
        ok = (np.array_equal(sums[zero], idx)
              and np.array_equal(sums, sums.T)
              and np.array_equal(sums[sums[:, :, None], idx], sums[idx[:, None, None], sums[None, :, :]])
              and np.all(sums[idx, inverses] == zero))
        if not ok:
            bad.append(m.raw)
    elapsed = time.perf_counter() - start
    report(capsys, 8, f"(Ap, oplus) is an abelian group with inverse bar(n(a)-1, a), {count} tables",
           not bad, elapsed, 30, f"failures: {bad[:5]}" if bad else "")
