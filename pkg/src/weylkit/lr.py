"""Littlewood-Richardson coefficients and tensor products of SL modules.

LR tableaux use the English convention: row 0 is the longest row, on
top.  The reading word reads each row right to left, rows top to
bottom, and must be a lattice word (every prefix has at least as many
i's as (i+1)'s).
"""

from __future__ import annotations

from collections import Counter
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .weights import (
    Decomposition,
    Partition,
    Weight,
    canon_partition,
    l_value,
    pad,
    partition_to_weight,
    weight_to_partition,
)

Filling = Tuple[Tuple[int, ...], ...]


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return not any(inner[len(outer):]) and contains(outer, inner[: len(outer)])
    return all(i <= o for i, o in zip(inner, outer))


def _fillings(outer: Partition, inner: Partition, content: Optional[Partition]) -> Iterator[Tuple[Filling, Tuple[int, ...]]]:
    """LR fillings of outer/inner, optionally with fixed content.

    Cells are filled row by row from the top, each row right to left, so
    the lattice condition is checked on the reading word as it grows.
    """
    rows = len(outer)
    inner = pad(inner, rows)
    cells = [(r, c) for r in range(rows) for c in range(outer[r] - 1, inner[r] - 1, -1)]
    ncells = len(cells)
    maxlab = len(content) if content is not None else rows
    counts = [0] * (maxlab + 2)
    grid = [[0] * outer[r] for r in range(rows)]

    def rec(k):
        if k == ncells:
            got = tuple(counts[1:maxlab + 1])
            if content is None or got == tuple(content):
                yield (tuple(tuple(grid[r][inner[r]:]) for r in range(rows)),
                       canon_partition(got))
            return
        r, c = cells[k]
        hi = maxlab
        if c + 1 < outer[r]:
            hi = min(hi, grid[r][c + 1])
        lo = 1
        if r > 0 and c >= inner[r - 1]:
            lo = grid[r - 1][c] + 1
        # a label in row r is at most r+1 by the lattice condition
        hi = min(hi, r + 1)
        for x in range(lo, hi + 1):
            if content is not None and counts[x] >= content[x - 1]:
                continue
            if x > 1 and counts[x] + 1 > counts[x - 1]:
                continue
            counts[x] += 1
            grid[r][c] = x
            yield from rec(k + 1)
            counts[x] -= 1
        grid[r][c] = 0

    yield from rec(0)


def enumerate_lr_tableaux(delta, eps, nu) -> List[Filling]:
    """All LR tableaux of shape nu/eps and weight delta.

    Each tableau is a tuple of rows; row r lists the labels of its skew
    cells from left to right.
    """
    delta, eps, nu = canon_partition(delta), canon_partition(eps), canon_partition(nu)
    if sum(nu) != sum(eps) + sum(delta) or not contains(nu, eps):
        return []
    return [f for f, _ in _fillings(nu, eps, delta)]


def lr_coefficient(delta, eps, nu) -> int:
    """c^nu_{delta, eps}: LR tableaux of shape nu/eps and weight delta."""
    delta, eps, nu = canon_partition(delta), canon_partition(eps), canon_partition(nu)
    if sum(nu) != sum(eps) + sum(delta) or not contains(nu, eps):
        return 0
    return sum(1 for _ in _fillings(nu, eps, delta))


def skew_decompose(outer, inner) -> Dict[Partition, int]:
    """s_{outer/inner} = sum over xi of c^outer_{inner, xi} s_xi."""
    outer, inner = canon_partition(outer), canon_partition(inner)
    if not contains(outer, inner):
        return {}
    out = Counter()
    for _, content in _fillings(outer, inner, None):
        out[content] += 1
    return dict(out)


def _candidate_shapes(alpha: Partition, beta: Partition, nrows: int) -> Iterator[Partition]:
    """Shapes nu with at most nrows rows, alpha and beta inside nu and
    |nu| = |alpha| + |beta|, with the crude row bound from the lattice
    condition."""
    alpha = pad(alpha, nrows)
    beta_p = pad(beta, nrows)
    total = sum(alpha) + sum(beta)
    prefix_beta = [sum(beta_p[: r + 1]) for r in range(nrows)]

    def rec(r, acc, prev, sofar):
        if r == nrows:
            if sofar == total:
                yield canon_partition(acc)
            return
        lo = max(alpha[r], beta_p[r])
        hi = min(prev, alpha[r] + prefix_beta[r], total - sofar)
        for v in range(hi, lo - 1, -1):
            if v * (nrows - r) < total - sofar:
                break
            acc.append(v)
            yield from rec(r + 1, acc, v, sofar + v)
            acc.pop()

    yield from rec(0, [], total, 0)


def tensor_decompose(a: Sequence[int], b: Sequence[int]) -> Decomposition:
    """V(a) tensor V(b) for SL_{n+1}, n = len(a)."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("weights of different rank")
    n = len(a)
    alpha = weight_to_partition(a)
    beta = weight_to_partition(b)
    # the smaller factor supplies the labels
    if sum(beta) > sum(alpha):
        alpha, beta = beta, alpha
    out: Decomposition = {}
    for nu in _candidate_shapes(alpha, beta, n + 1):
        c = lr_coefficient(beta, alpha, nu)
        if c:
            w = partition_to_weight(nu, n)
            out[w] = out.get(w, 0) + c
    return out


def pieri(k: int, a: Sequence[int]) -> Decomposition:
    """(k,0,...,0) tensor a as a sum over admissible c-sequences."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = tuple(a)
    n = len(a)
    out: Decomposition = {}

    def rec(i, acc, left):
        # acc holds c_1..c_i; c_{i+1} <= a_i
        if i == n + 1:
            if left == 0:
                b = tuple(a[t] + acc[t] - acc[t + 1] for t in range(n))
                out[b] = out.get(b, 0) + 1
            return
        cap = left if i == 0 else min(left, a[i - 1])
        for c in range(cap + 1):
            acc.append(c)
            rec(i + 1, acc, left - c)
            acc.pop()

    rec(0, [], k)
    return out


def _shifted(c: Sequence[int], changes: Dict[int, int]) -> Weight:
    """Apply 1-based coefficient changes; index len(c)+1 is dropped."""
    v = list(c) + [0]
    for i, d in changes.items():
        v[i - 1] += d
    return tuple(v[:-1])


def tensor_with_last_fundamental(delta: Sequence[int]) -> Decomposition:
    """delta tensor omega_n for A_n, written out term by term."""
    c = tuple(delta)
    r = len(c)
    out: Decomposition = {}
    for i in range(2, r + 1):
        if c[i - 1]:
            out[_shifted(c, {i - 1: 1, i: -1})] = 1
    if c[0]:
        out[_shifted(c, {1: -1})] = 1
    out[_shifted(c, {r: 1})] = 1
    return out


def omega2_summands(delta: Sequence[int]) -> List[Tuple[str, Weight]]:
    """Summands of delta tensor omega_2 (rank >= 3), tagged by family."""
    c = tuple(delta)
    r = len(c)
    if r < 3:
        raise ValueError("tensor_with_omega2 needs rank at least 3")
    n = r + 1
    cc = list(c) + [0]

    def co(i):
        return cc[i - 1]

    out = [("i", _shifted(c, {2: 1}))]
    for j in range(2, n):
        if co(j):
            out.append(("ii", _shifted(c, {1: 1, j: -1, j + 1: 1})))
    if co(1):
        out.append(("iii", _shifted(c, {1: -1, 3: 1})))
    for j in range(3, n):
        if co(1) and co(j):
            out.append(("iv", _shifted(c, {1: -1, 2: 1, j: -1, j + 1: 1})))
    for j in range(3, n):
        if co(j - 1):
            out.append(("v", _shifted(c, {j - 1: -1, j + 1: 1})))
    for i in range(3, n):
        for j in range(i + 1, n):
            if co(i - 1) and co(j):
                out.append(("vi", _shifted(c, {i - 1: -1, i: 1, j: -1, j + 1: 1})))
    return out


def tensor_with_omega2(delta: Sequence[int]) -> Decomposition:
    out: Decomposition = {}
    for _, w in omega2_summands(delta):
        out[w] = out.get(w, 0) + 1
    return out


# ---------------------------------------------------------------------------
# multiplicity-free tensor products

def fundamental_multiple(w: Sequence[int]) -> bool:
    """True for 0 and for multiples of a single fundamental weight."""
    return l_value(w) <= 1


def fundamental_multiple_mf(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """False is a certified non-MF verdict; True only means not excluded."""
    return fundamental_multiple(mu) or fundamental_multiple(nu)


def _support(w):
    return [i + 1 for i, x in enumerate(w) if x]


def _under_two(nu, n, allowed_pair) -> bool:
    """nu << m w_j + m w_k for some m > 0 and a pair (j, k) accepted by
    allowed_pair; m can always be taken large, so only the support
    matters."""
    s = _support(nu)
    if len(s) > 2:
        return False
    idx = range(1, n + 1)
    return any(allowed_pair(j, k) and set(s) <= {j, k} for j in idx for k in idx)


def _stembridge_one_way(mu, nu) -> bool:
    n = len(mu)
    smu = _support(mu)
    # (i)
    if not smu or (len(smu) == 1 and (mu[smu[0] - 1] == 1 or smu[0] in (1, n))):
        return True
    if len(smu) != 1:
        return False
    i = smu[0]
    t = mu[i - 1]
    any_pair = lambda j, k: True
    # (ii)
    if t == 2 and _under_two(nu, n, any_pair):
        return True
    # (iii)
    if i in (2, n - 1) and _under_two(nu, n, any_pair):
        return True
    # (iv): nu << w_j + m w_k
    snu = _support(nu)
    if len(snu) <= 1:
        return True
    if len(snu) == 2 and min(nu[snu[0] - 1], nu[snu[1] - 1]) == 1:
        return True
    # (v)
    if _under_two(nu, n, lambda j, k: k in (1, j + 1, n)):
        return True
    return False


def stembridge_mf(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """Closed-form test for V(mu) tensor V(nu) of A_n to be MF."""
    mu, nu = tuple(mu), tuple(nu)
    if len(mu) != len(nu):
        raise ValueError("weights of different rank")
    return _stembridge_one_way(mu, nu) or _stembridge_one_way(nu, mu)
