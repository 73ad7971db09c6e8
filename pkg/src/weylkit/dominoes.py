"""Domino tableaux and the symmetric/alternating split of V tensor V.

Rows are indexed from the base upward: row 0 is the longest row and
sits at the bottom.  Labels weakly increase left to right along rows and
strictly increase going up columns.  The column reading takes the
columns left to right, each from top to bottom; a horizontal domino is
read once, in its left column.  A tableau is Yamanouchi when every
suffix of that word has at least as many j's as (j+1)'s.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .weights import Decomposition, canon_partition, partition_to_weight, weight_to_partition


@dataclass(frozen=True)
class Domino:
    row: int  # lower (vertical) or only (horizontal) row
    col: int  # left column
    horizontal: bool
    label: int

    def cells(self):
        if self.horizontal:
            return ((self.row, self.col), (self.row, self.col + 1))
        return ((self.row, self.col), (self.row + 1, self.col))


@dataclass(frozen=True)
class DominoTableau:
    shape: Tuple[int, ...]  # row lengths from the base up
    dominoes: Tuple[Domino, ...]

    def content(self) -> Tuple[int, ...]:
        top = max((d.label for d in self.dominoes), default=0)
        out = [0] * top
        for d in self.dominoes:
            out[d.label - 1] += 1
        return tuple(out)

    def horizontal_count(self) -> int:
        return sum(1 for d in self.dominoes if d.horizontal)

    def column_word(self) -> Tuple[int, ...]:
        ds = sorted(self.dominoes, key=lambda d: (d.col, -d.row))
        return tuple(d.label for d in ds)

    def label_at(self, r, c):
        for d in self.dominoes:
            if (r, c) in d.cells():
                return d.label
        raise KeyError((r, c))


def doubled_shape(rho: Sequence[int]) -> Tuple[int, ...]:
    out = []
    for p in canon_partition(rho):
        out += [2 * p, 2 * p]
    return tuple(out)


def is_yamanouchi(word: Sequence[int]) -> bool:
    counts = {}
    for x in reversed(word):
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def enumerate_domino_tableaux(rho: Sequence[int], n: int, yamanouchi: bool = True) -> List[DominoTableau]:
    """Domino tableaux of the doubled shape of rho with labels <= n.

    The tiling is built column by column from the right, each column from
    the bottom, which is the column reading in reverse.  With
    ``yamanouchi`` the reversed word is kept a lattice word after every
    finished column.
    """
    shape = doubled_shape(rho)
    if not shape:
        return [DominoTableau((), ())]
    width = shape[0]
    heights = [sum(1 for L in shape if L > c) for c in range(width)]
    order = [(r, c) for c in range(width - 1, -1, -1) for r in range(heights[c])]
    owner = {cell: None for cell in order}
    by_left = [[] for _ in range(width)]
    placed: List[Domino] = []
    counts = [0] * (n + 2)
    results: List[DominoTableau] = []

    def label(cell):
        d = owner.get(cell)
        return None if d is None else d.label

    def fits(dom):
        mine = set(dom.cells())
        x = dom.label
        for (r, c) in mine:
            for (rr, cc), rel in (((r, c - 1), "left"), ((r, c + 1), "right"),
                                  ((r - 1, c), "below"), ((r + 1, c), "above")):
                if (rr, cc) in mine:
                    continue
                y = label((rr, cc))
                if y is None:
                    continue
                if rel == "left" and y > x:
                    return False
                if rel == "right" and y < x:
                    return False
                if rel == "below" and y >= x:
                    return False
                if rel == "above" and y <= x:
                    return False
        return True

    def read_column(c):
        """Append column c to the reversed word; return letters added or
        None when the lattice condition fails."""
        letters = [d.label for d in sorted(by_left[c], key=lambda d: d.row)]
        added = []
        ok = True
        for x in letters:
            counts[x] += 1
            added.append(x)
            if x > 1 and counts[x] > counts[x - 1]:
                ok = False
                break
        if not ok:
            for x in added:
                counts[x] -= 1
            return None
        return added

    def rec(k):
        if k == len(order):
            if yamanouchi:
                added = read_column(0)
                if added is None:
                    return
                for x in added:
                    counts[x] -= 1
            results.append(DominoTableau(shape, tuple(sorted(placed, key=lambda d: (d.row, d.col)))))
            return
        r, c = order[k]
        added = []
        if yamanouchi and r == 0 and c + 1 < width:
            added = read_column(c + 1)
            if added is None:
                return
        try:
            if owner[(r, c)] is not None:
                rec(k + 1)
                return
            options = []
            if r + 1 < heights[c] and owner[(r + 1, c)] is None:
                options.append((r, c, False))
            if c >= 1 and owner.get((r, c - 1), 1) is None:
                options.append((r, c - 1, True))
            for (rr, cc, hor) in options:
                for x in range(1, n + 1):
                    dom = Domino(rr, cc, hor, x)
                    if not fits(dom):
                        continue
                    for cell in dom.cells():
                        owner[cell] = dom
                    by_left[cc].append(dom)
                    placed.append(dom)
                    rec(k + 1)
                    placed.pop()
                    by_left[cc].pop()
                    for cell in dom.cells():
                        owner[cell] = None
        finally:
            for x in added:
                counts[x] -= 1

    rec(0)
    return results


def square_decompose(lam: Sequence[int]) -> Tuple[Decomposition, Decomposition]:
    """(S^2 V(lam), wedge^2 V(lam)) from Yamanouchi domino tableaux."""
    lam = tuple(lam)
    rank = len(lam)
    rho = weight_to_partition(lam)
    sym: Decomposition = {}
    alt: Decomposition = {}
    for t in enumerate_domino_tableaux(rho, rank + 1):
        w = partition_to_weight(canon_partition(t.content()), rank)
        side = sym if t.horizontal_count() % 4 == 0 else alt
        side[w] = side.get(w, 0) + 1
    return sym, alt
