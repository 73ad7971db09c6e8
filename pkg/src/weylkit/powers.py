"""Symmetric and exterior powers, GL to SO branching, Howe's increasing
sets and parabolic levels."""

from __future__ import annotations

from itertools import product
from typing import Dict, List, Sequence

from .lr import skew_decompose
from .weights import (
    Character,
    Decomposition,
    Partition,
    Weight,
    canon_partition,
    char_add,
    char_mul,
    char_of_irrep,
    decompose_character,
    eps_to_weight,
    pad,
    root_coords,
)


class OutOfStableRange(ValueError):
    pass


# ---------------------------------------------------------------------------
# powers via Newton's identities

def adams(k: int, ch: Character) -> Character:
    if k < 1:
        raise ValueError("Adams operations need k >= 1")
    return {tuple(k * x for x in w): m for w, m in ch.items()}


def _power_chars(k: int, ch: Character, sign: int, max_entries=None) -> List[Character]:
    """[P_0, ..., P_k] with j P_j = sum_i sign^(i-1) psi^i(ch) P_{j-i}."""
    rank = len(next(iter(ch))) if ch else 0
    out = [{(0,) * rank: 1}]
    psis = [None] + [adams(i, ch) for i in range(1, k + 1)]
    for j in range(1, k + 1):
        acc: Character = {}
        for i in range(1, j + 1):
            term = char_mul(psis[i], out[j - i], max_entries)
            acc = char_add(acc, term, sign ** (i - 1))
        nxt = {}
        for w, m in acc.items():
            q, r = divmod(m, j)
            if r:
                raise ArithmeticError("Newton recursion is not integral")
            if q:
                nxt[w] = q
        out.append(nxt)
    return out


def alt_power_char(k: int, ch: Character, max_entries=None) -> Character:
    return _power_chars(k, ch, -1, max_entries)[k]


def sym_power_char(k: int, ch: Character, max_entries=None) -> Character:
    return _power_chars(k, ch, 1, max_entries)[k]


def alt_power(k: int, lam: Sequence[int], max_entries=None) -> Decomposition:
    """wedge^k V(lam)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return decompose_character(alt_power_char(k, char_of_irrep(lam, max_entries), max_entries))


def sym_power(k: int, lam: Sequence[int], max_entries=None) -> Decomposition:
    """S^k V(lam)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return decompose_character(sym_power_char(k, char_of_irrep(lam, max_entries), max_entries))


# ---------------------------------------------------------------------------
# Howe's increasing sets

def _strict_partitions(total: int, caps: Sequence[int]):
    """Strictly decreasing sequences k_1 > k_2 > ... > 0 summing to total
    with k_r <= caps[r]."""
    def rec(r, left, prev, acc):
        if left == 0:
            yield tuple(acc)
            return
        if r >= len(caps):
            return
        for v in range(min(prev - 1, caps[r], left), 0, -1):
            acc.append(v)
            yield from rec(r + 1, left - v, v, acc)
            acc.pop()

    yield from rec(0, total, total + 1, [])


def howe_cells(base: str, l: int):
    """Rows of the e_rs array for X = A_{l+1}: base 'omega2' uses r < s,
    base '2omega1' uses r <= s.  Indices are 1-based."""
    N = l + 2
    if base == "omega2":
        return [[(r, s) for s in range(r + 1, N + 1)] for r in range(1, N)]
    if base == "2omega1":
        return [[(r, s) for s in range(r, N + 1)] for r in range(1, N + 1)]
    raise ValueError(f"unknown base {base!r}")


def increasing_sets(base: str, l: int, j: int):
    """Row-length sequences of the increasing sets of size j."""
    rows = howe_cells(base, l)
    return list(_strict_partitions(j, [len(r) for r in rows]))


def increasing_set_weight(base: str, l: int, seq: Sequence[int]) -> Weight:
    """Weight of the wedge of the first seq[r] cells of row r."""
    rows = howe_cells(base, l)
    N = l + 2
    x = [0] * N
    for r, k in enumerate(seq):
        if k > len(rows[r]) or (r and k >= seq[r - 1]):
            raise ValueError(f"{tuple(seq)} is not an increasing set")
        for (a, b) in rows[r][:k]:
            x[a - 1] += 1
            x[b - 1] += 1
    return eps_to_weight(x)


def howe_wedge_highest_weights(base: str, l: int, j: int) -> Decomposition:
    out: Decomposition = {}
    for seq in increasing_sets(base, l, j):
        w = increasing_set_weight(base, l, seq)
        out[w] = out.get(w, 0) + 1
    return out


# ---------------------------------------------------------------------------
# GL to SO branching

def even_partitions_inside(gamma: Partition):
    gamma = canon_partition(gamma)

    def rec(r, prev, acc):
        if r == len(gamma):
            yield canon_partition(acc)
            return
        top = min(prev, gamma[r])
        for v in range(top - top % 2, -1, -2):
            acc.append(v)
            yield from rec(r + 1, v, acc)
            acc.pop()

    yield from rec(0, gamma[0] if gamma else 0, [])


def gl_to_so_branching(gamma: Sequence[int], so_dim: int) -> Dict[Partition, int]:
    """N_{gamma, xi} = sum over even eps of c^gamma_{eps, xi}."""
    gamma = canon_partition(gamma)
    if len(gamma) > so_dim // 2:
        raise OutOfStableRange(f"{gamma} has more than {so_dim // 2} rows")
    out: Dict[Partition, int] = {}
    for eps in even_partitions_inside(gamma):
        for xi, c in skew_decompose(gamma, eps).items():
            out[xi] = out.get(xi, 0) + c
    return out


def so6_to_a3(xi: Sequence[int], spin_sign: int = 1) -> Weight:
    """A_3 label of the SO_6 weight with partition label xi.

    Writing xi = (a+b+c, a+b, a) gives (2a+b, c, b); spin_sign -1 picks
    the dual member (b, c, 2a+b) when a is nonzero.
    """
    x = pad(canon_partition(xi), 3)
    a, b, c = x[2], x[1] - x[2], x[0] - x[1]
    w = (2 * a + b, c, b)
    if spin_sign < 0:
        w = (b, c, 2 * a + b)
    return w


def so6_images(xi: Sequence[int]) -> List[Weight]:
    x = pad(canon_partition(xi), 3)
    if x[2]:
        return [so6_to_a3(x, 1), so6_to_a3(x, -1)]
    return [so6_to_a3(x, 1)]


def gl6_to_a3(gamma: Sequence[int]) -> Decomposition:
    """V_{GL_6}(gamma) restricted to A_3 = Spin_6, dual pairs expanded."""
    out: Decomposition = {}
    for xi, m in gl_to_so_branching(gamma, 6).items():
        for w in so6_images(xi):
            out[w] = out.get(w, 0) + m
    return out


# ---------------------------------------------------------------------------
# parabolic levels

def parabolic_levels(lam: Sequence[int], which_end: str = "last", max_entries=None) -> List[Decomposition]:
    """Grade V(lam) by the coefficient of the deleted simple root in
    lam - mu and decompose each slice under the Levi factor."""
    lam = tuple(lam)
    if which_end not in ("first", "last"):
        raise ValueError("which_end must be 'first' or 'last'")
    slices: Dict[int, Character] = {}
    for mu, m in char_of_irrep(lam, max_entries).items():
        c = root_coords(tuple(a - b for a, b in zip(lam, mu)))
        if which_end == "last":
            grade, levi = c[-1], mu[:-1]
        else:
            grade, levi = c[0], mu[1:]
        sl = slices.setdefault(grade, {})
        sl[levi] = sl.get(levi, 0) + m
    top = max(slices)
    return [decompose_character(slices.get(d, {})) for d in range(top + 1)]


def level_sequences(delta: Sequence[int], i: int):
    """Sequences (a_1..a_{l+1}) with sum i and 0 <= a_j <= d_j."""
    ranges = [range(min(d, i) + 1) for d in delta]
    for a in product(*ranges):
        if sum(a) == i:
            yield a


def levels_closed_form(delta: Sequence[int]) -> List[Decomposition]:
    """Levels of V(delta) under the Levi A_l, one summand per sequence."""
    delta = tuple(delta)
    l = len(delta) - 1
    out = []
    for i in range(sum(delta) + 1):
        level: Decomposition = {}
        for a in level_sequences(delta, i):
            w = tuple(delta[j] - a[j] + a[j + 1] for j in range(l))
            level[w] = level.get(w, 0) + 1
        out.append(level)
    return out
