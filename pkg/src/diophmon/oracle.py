"""Brute-force references.

Nothing here reuses the Apéry, Hilbert or class-group code paths; the only
shared pieces are membership and the integer arithmetic primitives.  These
routines are meant for cross-checking, not speed.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import BoxTooLarge, NotAGroup
from .exact_arith import FiniteAbelianGroup, smith_normal_form
from .monoid import EquationSpec, Point, contains, rays

DEFAULT_GUARD = 10_000_000

__all__ = [
    "enumerate_solutions",
    "brute_apery",
    "brute_minimal",
    "brute_group_structure",
    "element_order_counts",
]


def enumerate_solutions(spec: EquationSpec, box: Sequence[int], guard: int = DEFAULT_GUARD) -> list[Point]:
    """All monoid elements ``x`` with ``0 <= x_i < box[i]``, lex-sorted."""
    box = tuple(int(b) for b in box)
    if len(box) != spec.dim or any(b < 1 for b in box):
        raise ValueError(f"box {box} does not fit {spec}")
    volume = int(np.prod(box, dtype=object))
    if volume > guard:
        raise BoxTooLarge(f"box volume {volume} exceeds guard {guard}")
    grid = np.indices(box).reshape(spec.dim, -1).T
    weights = np.array(spec.coeffs, dtype=np.int64)
    keep = (grid @ weights) % spec.modulus == 0
    return [tuple(p) for p in grid[keep].tolist()]


def brute_apery(spec: EquationSpec, guard: int = DEFAULT_GUARD) -> list[Point]:
    """Elements ``x`` with ``x - q`` outside the monoid for every ray ``q``.

    The scan covers twice the ray widths so that points past the expected
    boundary are actually tested and rejected.
    """
    ray_list = rays(spec)
    found = []
    for x in enumerate_solutions(spec, [2 * w for w in spec.widths], guard):
        shifted = ([xi - qi for xi, qi in zip(x, q)] for q in ray_list)
        if not any(contains(spec, y) for y in shifted):
            found.append(x)
    return found


def brute_minimal(points) -> list[Point]:
    """Points not dominated (componentwise ``<=``) by any other point of the input."""
    pts = sorted(set(tuple(p) for p in points))
    if not pts:
        return []
    arr = np.array(pts, dtype=np.int64)
    keep = np.ones(len(pts), dtype=bool)
    step = max(1, 2_000_000 // (len(pts) * arr.shape[1] + 1))
    for start in range(0, len(pts), step):
        block = arr[start:start + step]
        below = (arr[None, :, :] <= block[:, None, :]).all(axis=2)
        below[np.arange(len(block)), np.arange(start, start + len(block))] = False
        keep[start:start + step] = ~below.any(axis=1)
    return [p for p, k in zip(pts, keep) if k]


def _validate_group(table: np.ndarray, identity: int) -> None:
    n = table.shape[0]
    if table.shape != (n, n):
        raise NotAGroup("square table", table.shape)
    if table.min(initial=0) < 0 or table.max(initial=0) >= n:
        raise NotAGroup("closure", None)
    idx = np.arange(n)
    bad = np.flatnonzero(table[identity] != idx)
    if bad.size:
        raise NotAGroup("identity", int(bad[0]))
    bad = np.argwhere(table != table.T)
    if bad.size:
        raise NotAGroup("commutativity", tuple(bad[0].tolist()))
    # (a*b)*c == a*(b*c), in blocks of a
    block = max(1, 4_000_000 // (n * n))
    for lo in range(0, n, block):
        a = idx[lo:lo + block]
        left = table[table[a][:, :, None], idx[None, None, :]]
        right = table[a[:, None, None], table[None, :, :]]
        bad = np.argwhere(left != right)
        if bad.size:
            i, b, c = bad[0].tolist()
            raise NotAGroup("associativity", (lo + i, b, c))
    no_inverse = np.flatnonzero(~(table == identity).any(axis=1))
    if no_inverse.size:
        raise NotAGroup("inverses", int(no_inverse[0]))


def brute_group_structure(table, identity: int = 0) -> FiniteAbelianGroup:
    """Invariant factors of the abelian group whose Cayley table is ``table``.

    ``table[i][j]`` is the index of ``i * j``.  Generators are collected
    greedily; each new generator ``g`` contributes the relation
    ``m*g = (word in earlier generators)`` with ``m`` minimal, and the SNF of
    those relations gives the invariant factors.
    """
    table = np.asarray(table, dtype=np.int64)
    _validate_group(table, identity)
    n = table.shape[0]
    words: dict[int, tuple[int, ...]] = {identity: ()}
    relations: list[tuple[int, ...]] = []
    for g in range(n):
        if g in words:
            continue
        k = len(relations)
        m, cur = 1, g
        while cur not in words:
            cur = int(table[cur, g])
            m += 1
        relations.append(tuple(-c for c in words[cur]) + (0,) * (k - len(words[cur])) + (m,))
        grown = {}
        for h, word in words.items():
            x = h
            padded = word + (0,) * (k - len(word))
            for step in range(m):
                grown[x] = padded + (step,)
                x = int(table[x, g])
        words = grown
    if len(words) != n:
        raise NotAGroup("generation", len(words))
    rank = len(relations)
    rows = [list(r) + [0] * (rank - len(r)) for r in relations]
    return FiniteAbelianGroup.from_diagonal(smith_normal_form(rows)) if rows else FiniteAbelianGroup()


def element_order_counts(table, identity: int = 0) -> dict[int, int]:
    """Number of elements of each order; a second, SNF-free fingerprint of the group."""
    table = np.asarray(table, dtype=np.int64)
    counts: dict[int, int] = {}
    for g in range(table.shape[0]):
        m, cur = 1, g
        while cur != identity:
            cur = int(table[cur, g])
            m += 1
        counts[m] = counts.get(m, 0) + 1
    return counts
