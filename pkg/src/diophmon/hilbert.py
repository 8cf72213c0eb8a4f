"""Hilbert basis: the extremal rays together with the minimal nonzero Apéry elements.

A monoid element with ``x_i >= w_i`` is ``q_i`` plus another element, so
every atom other than a ray lives in the Apéry box.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .apery import DEFAULT_GUARD, AperyTable, apery_box
from .monoid import EquationSpec, Point, rays

__all__ = ["HilbertBasis", "hilbert_basis", "minimal_nonzero"]


@dataclass(frozen=True)
class HilbertBasis:
    spec: EquationSpec
    rays: tuple[Point, ...]
    extras: tuple[Point, ...]

    @property
    def generators(self) -> tuple[Point, ...]:
        return self.rays + self.extras

    def __len__(self):
        return len(self.rays) + len(self.extras)

    def as_set(self) -> set[Point]:
        return set(self.generators)


def minimal_nonzero(table: AperyTable) -> list[Point]:
    """Lex-sorted minimal elements of the Apéry set minus the origin."""
    pts = table.points[table.points.any(axis=1)]
    n = len(pts)
    if n == 0:
        return []
    dominated = np.zeros(n, dtype=bool)
    # pairwise dominance in row blocks to bound memory
    step = max(1, 4_000_000 // (n * pts.shape[1]))
    for lo in range(0, n, step):
        blk = pts[lo:lo + step]
        le = (pts[None, :, :] <= blk[:, None, :]).all(axis=2)
        le[np.arange(len(blk)), lo + np.arange(len(blk))] = False
        dominated[lo:lo + step] = le.any(axis=1)
    return [tuple(p) for p in pts[~dominated].tolist()]


def hilbert_basis(spec: EquationSpec, guard: int = DEFAULT_GUARD, table: AperyTable | None = None) -> HilbertBasis:
    if table is None:
        table = apery_box(spec, guard)
    return HilbertBasis(spec, tuple(rays(spec)), tuple(minimal_nonzero(table)))
