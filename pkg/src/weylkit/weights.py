"""Type-A weights, partitions, characters and weight multiplicities.

Weights are tuples of integers in fundamental-weight coordinates, so a
weight of A_n is a tuple of length n.  Partitions are tuples of
nonnegative integers, weakly decreasing.  A character is a plain dict
mapping weight tuples to positive multiplicities, and a decomposition
is a dict mapping dominant weight tuples to positive multiplicities.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Iterator, Sequence, Tuple

Weight = Tuple[int, ...]
Partition = Tuple[int, ...]
Character = Dict[Weight, int]
Decomposition = Dict[Weight, int]

DEFAULT_MAX_ENTRIES = 5_000_000
_settings = {"max_entries": DEFAULT_MAX_ENTRIES}


class GuardExceeded(RuntimeError):
    """Raised when a weight table would exceed the configured size."""

    def __init__(self, needed, limit, what=""):
        self.needed = needed
        self.limit = limit
        msg = f"weight table of {needed} entries exceeds guard {limit}"
        if what:
            msg = f"{what}: {msg}"
        super().__init__(msg)


class RankMismatch(ValueError):
    pass


class NotACharacter(ValueError):
    pass


def set_max_entries(n: int) -> None:
    if n <= 0:
        raise ValueError("max_entries must be positive")
    _settings["max_entries"] = int(n)


def get_max_entries() -> int:
    return _settings["max_entries"]


def weight_label(w: Sequence[int]) -> str:
    """Short printable form; long weights list only their nonzero
    coefficients."""
    w = tuple(w)
    if len(w) <= 12:
        return str(w)
    nz = ", ".join(f"{i + 1}: {c}" for i, c in enumerate(w) if c)
    return f"A_{len(w)} weight {{{nz}}}"


def check_guard(needed: int, max_entries=None, what="") -> None:
    limit = get_max_entries() if max_entries is None else max_entries
    if needed > limit:
        raise GuardExceeded(needed, limit, what)


# ---------------------------------------------------------------------------
# partitions and coordinates

def canon_partition(p: Iterable[int]) -> Partition:
    parts = [int(x) for x in p]
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def pad(p: Sequence[int], length: int) -> Tuple[int, ...]:
    if len(p) > length:
        if any(p[length:]):
            raise RankMismatch(f"{tuple(p)} has more than {length} nonzero parts")
        return tuple(p[:length])
    return tuple(p) + (0,) * (length - len(p))


def partition_to_weight(p: Sequence[int], rank: int) -> Weight:
    """SL_{rank+1} highest weight of a partition: differences of parts."""
    parts = pad(canon_partition(p), rank + 1)
    return tuple(parts[i] - parts[i + 1] for i in range(rank))


def weight_to_partition(w: Sequence[int], size=None) -> Partition:
    """Lift a dominant weight to a partition.

    Without ``size`` this is the minimal lift (c(1), ..., c(n), 0) with
    c(i) = w_i + ... + w_n.  With ``size`` every part is shifted by the
    same amount so that the parts sum to ``size``.
    """
    if any(x < 0 for x in w):
        raise ValueError(f"{tuple(w)} is not dominant")
    n = len(w)
    lift = [sum(w[i:]) for i in range(n)] + [0]
    if size is not None:
        extra = size - sum(lift)
        if extra < 0 or extra % (n + 1):
            raise ValueError(f"no partition of {size} lifts {tuple(w)}")
        lift = [x + extra // (n + 1) for x in lift]
    return canon_partition(lift)


def eps_to_weight(x: Sequence[int]) -> Weight:
    return tuple(x[i] - x[i + 1] for i in range(len(x) - 1))


def weight_to_eps(w: Sequence[int], total=None):
    """epsilon coordinates of a weight (length rank+1).

    With ``total`` the coordinates sum to ``total``; returns None when no
    integral lift of that total exists.  Without it the last coordinate
    is 0.
    """
    n = len(w)
    x = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        x[k] = x[k + 1] + w[k]
    if total is not None:
        shift, r = divmod(total - sum(x), n + 1)
        if r:
            return None
        x = [v + shift for v in x]
    return tuple(x)


def dual_weight(w: Sequence[int]) -> Weight:
    return tuple(reversed(tuple(w)))


def s_value(w: Sequence[int]) -> int:
    return sum(w)


def l_value(w: Sequence[int]) -> int:
    return sum(1 for x in w if x)


def height(w: Sequence[int]) -> int:
    """Pairing with 2*rho-check; strictly increases along positive roots."""
    n1 = len(w) + 1
    return sum((i + 1) * (n1 - i - 1) * x for i, x in enumerate(w))


def root_coords(d: Sequence[int]):
    """Coefficients of d on the simple roots, or None if not integral."""
    n1 = len(d) + 1
    out = []
    for i in range(1, n1):
        num = sum(min(i, j) * (n1 - max(i, j)) * d[j - 1] for j in range(1, n1))
        q, r = divmod(num, n1)
        if r:
            return None
        out.append(q)
    return tuple(out)


def simple_root(i: int, rank: int) -> Weight:
    """alpha_i (1-based) in fundamental-weight coordinates."""
    a = [0] * rank
    a[i - 1] = 2
    if i > 1:
        a[i - 2] = -1
    if i < rank:
        a[i] = -1
    return tuple(a)


def sub_roots(w: Sequence[int], c: Sequence[int]) -> Weight:
    """w - sum c_i alpha_i."""
    out = list(w)
    n = len(w)
    for i, ci in enumerate(c):
        if not ci:
            continue
        out[i] -= 2 * ci
        if i > 0:
            out[i - 1] += ci
        if i < n - 1:
            out[i + 1] += ci
    return tuple(out)


def weyl_dim(w: Sequence[int]) -> int:
    """Dimension of V(w), exact.  Uses the hook-content form of the Weyl
    product so the cost grows with |partition|, not with rank squared."""
    n1 = len(w) + 1
    lam = weight_to_partition(tuple(w))
    cols = [sum(1 for p in lam if p > c) for c in range(lam[0])] if lam else []
    num = 1
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n1 + j - i
            den *= (row - j) + (cols[j] - i) - 1
    return num // den


# ---------------------------------------------------------------------------
# dominant weights and Freudenthal

def dominated_partitions(lam: Sequence[int], nparts: int) -> Iterator[Partition]:
    """Partitions mu of |lam| with at most nparts parts and mu <= lam in
    dominance order.  Yields tuples of length nparts."""
    lam = pad(lam, nparts)
    total = sum(lam)
    prefix = [sum(lam[: k + 1]) for k in range(nparts)]

    def rec(k, acc, prev, sofar):
        left = total - sofar
        if left == 0:
            yield tuple(acc) + (0,) * (nparts - k)
            return
        if k == nparts:
            return
        slots = nparts - k
        hi = min(prev, prefix[k] - sofar, left)
        lo = -(-left // slots)
        for part in range(hi, lo - 1, -1):
            acc.append(part)
            yield from rec(k + 1, acc, part, sofar + part)
            acc.pop()

    if nparts == 0:
        if total == 0:
            yield ()
        return
    yield from rec(0, [], lam[0] if lam else 0, 0)


def orbit_size(x: Sequence[int]) -> int:
    out = factorial(len(x))
    for m in Counter(x).values():
        out //= factorial(m)
    return out


def multiset_permutations(seq: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    counts = Counter(seq)
    values = sorted(counts, reverse=True)
    n = len(seq)
    acc = []

    def rec():
        if len(acc) == n:
            yield tuple(acc)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                acc.append(v)
                yield from rec()
                acc.pop()
                counts[v] += 1

    yield from rec()


@lru_cache(maxsize=4096)
def _freudenthal_eps(lam: Partition, nparts: int) -> Dict[Partition, int]:
    lam = pad(lam, nparts)
    rho = tuple(range(nparts - 1, -1, -1))

    def norm(x):
        return sum((a + b) ** 2 for a, b in zip(x, rho))

    doms = list(dominated_partitions(lam, nparts))

    def depth(mu):
        s = 0
        acc = 0
        for a, b in zip(lam, mu):
            acc += a - b
            s += acc
        return s

    doms.sort(key=depth)
    mult = {lam: 1}
    base = norm(lam)
    for mu in doms:
        if mu == lam:
            continue
        # the term for a pair i < j depends only on the values mu_i >= mu_j,
        # so each value pair is done once and weighted by its pair count
        counts = Counter(mu)
        vals = sorted(counts, reverse=True)
        total = 0
        for x, a in enumerate(vals):
            for b in vals[x:]:
                pairs = counts[a] * (counts[a] - 1) // 2 if a == b else counts[a] * counts[b]
                if not pairs:
                    continue
                k = 1
                while True:
                    nu = list(mu)
                    ia = nu.index(a)
                    ib = len(nu) - 1 - nu[::-1].index(b)
                    nu[ia] += k
                    nu[ib] -= k
                    key = tuple(sorted(nu, reverse=True))
                    m = mult.get(key)
                    if m is None:
                        break
                    total += pairs * m * (a - b + 2 * k)
                    k += 1
        q, r = divmod(2 * total, base - norm(mu))
        if r:
            raise ArithmeticError(f"Freudenthal division not exact at {mu}")
        mult[mu] = q
    return mult


def dominant_eps_multiplicities(lam: Sequence[int]) -> Dict[Partition, int]:
    """Multiplicities of the dominant weights of V(lam), keyed by their
    epsilon coordinates (partitions padded to rank+1 entries)."""
    lam = tuple(lam)
    return dict(_freudenthal_eps(pad(weight_to_partition(lam), len(lam) + 1),
                                 len(lam) + 1))


@lru_cache(maxsize=4096)
def _dominant_mults(lam: Weight) -> Dict[Weight, int]:
    return {eps_to_weight(mu): m for mu, m in dominant_eps_multiplicities(lam).items()}


def dominant_multiplicities(lam: Sequence[int]) -> Dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam)."""
    return dict(_dominant_mults(tuple(lam)))


def weight_multiplicity(lam: Sequence[int], mu: Sequence[int]) -> int:
    lam = tuple(lam)
    if len(mu) != len(lam):
        raise RankMismatch("weights of different rank")
    total = sum(weight_to_partition(lam))
    x = weight_to_eps(mu, total)
    if x is None or min(x) < 0:
        return 0
    key = tuple(sorted(x, reverse=True))
    return dominant_eps_multiplicities(lam).get(key, 0)


def weight_table_size(lam: Sequence[int]) -> int:
    """Number of distinct weights of V(lam).  Every partition dominated by
    lam is a weight, so no multiplicities are needed."""
    lam = tuple(lam)
    return sum(orbit_size(mu) for mu in dominated_partitions(weight_to_partition(lam), len(lam) + 1))


def char_of_irrep(lam: Sequence[int], max_entries=None) -> Character:
    lam = tuple(lam)
    check_guard(weight_table_size(lam), max_entries, f"V{weight_label(lam)}")
    doms = dominant_eps_multiplicities(lam)
    ch = {}
    for mu, m in doms.items():
        for x in multiset_permutations(mu):
            ch[eps_to_weight(x)] = m
    return ch


def dominant_rep(w: Sequence[int]) -> Weight:
    """Dominant weight in the Weyl orbit of w."""
    x = weight_to_eps(w)
    return eps_to_weight(sorted(x, reverse=True))


def is_dominant(w: Sequence[int]) -> bool:
    return all(x >= 0 for x in w)


# ---------------------------------------------------------------------------
# character arithmetic

def char_add(a: Character, b: Character, scale: int = 1) -> Character:
    out = dict(a)
    for w, m in b.items():
        v = out.get(w, 0) + scale * m
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def char_mul(a: Character, b: Character, max_entries=None) -> Character:
    out: Dict[Weight, int] = {}
    for wa, ma in a.items():
        for wb, mb in b.items():
            w = tuple(x + y for x, y in zip(wa, wb))
            out[w] = out.get(w, 0) + ma * mb
        check_guard(len(out), max_entries, "character product")
    return {w: m for w, m in out.items() if m}


def char_of_decomposition(dec: Decomposition, max_entries=None) -> Character:
    out: Character = {}
    for w, m in dec.items():
        out = char_add(out, char_of_irrep(w, max_entries), m)
    return out


def char_dim(ch: Character) -> int:
    return sum(ch.values())


def decompose_character(ch: Character, check_symmetry: bool = True) -> Decomposition:
    """Split a character into irreducibles.

    Works on the dominant part: the summand with the highest dominant
    weight (by height, then lexicographic) is removed using its dominant
    multiplicities until nothing is left.
    """
    if not ch:
        return {}
    if check_symmetry:
        for w, m in ch.items():
            d = dominant_rep(w)
            if ch.get(d) != m:
                raise NotACharacter(f"multiplicity of {w} differs from {d}")
    dom = {w: m for w, m in ch.items() if is_dominant(w)}
    out: Decomposition = {}
    while dom:
        top = max(dom, key=lambda w: (height(w), w))
        k = dom[top]
        if k < 0:
            raise NotACharacter(f"negative multiplicity at {top}")
        out[top] = k
        for w, m in _dominant_mults(top).items():
            v = dom.get(w, 0) - k * m
            if v < 0:
                raise NotACharacter(f"negative multiplicity at {w}")
            if v:
                dom[w] = v
            else:
                dom.pop(w, None)
    if check_symmetry and decomposition_dim(out) != char_dim(ch):
        raise NotACharacter("weights are not a union of full Weyl orbits")
    return out


def decomposition_dim(dec: Decomposition) -> int:
    return sum(m * weyl_dim(w) for w, m in dec.items())


def is_mf(dec: Decomposition) -> bool:
    return all(m == 1 for m in dec.values())


def dual_decomposition(dec: Decomposition) -> Decomposition:
    return {dual_weight(w): m for w, m in dec.items()}


def sorted_summands(dec: Decomposition):
    """Summands in a fixed order: descending height, then descending lex."""
    return sorted(dec.items(), key=lambda wm: (-height(wm[0]), tuple(-x for x in wm[0])))


# ---------------------------------------------------------------------------
# Cavallin's reductions

def cavallin_reduce(lam: Sequence[int], mu: Sequence[int], J: Iterable[int]):
    """Return (lam', mu') with the same weight multiplicity.

    J holds 1-based node indices with c_j <= a_j, where
    lam - mu = sum c_i alpha_i.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    J = sorted(set(J))
    if not J:
        raise ValueError("J must be nonempty")
    c = root_coords(tuple(a - b for a, b in zip(lam, mu)))
    if c is None or min(c, default=0) < 0:
        raise ValueError(f"{mu} is not lam minus a nonnegative root combination")
    new = list(lam)
    for j in J:
        if not 1 <= j <= len(lam):
            raise ValueError(f"index {j} out of range")
        if c[j - 1] > lam[j - 1]:
            raise ValueError(f"c_{j} = {c[j - 1]} exceeds a_{j} = {lam[j - 1]}")
        new[j - 1] = c[j - 1]
    lam2 = tuple(new)
    mu2 = tuple(x - (a - b) for x, a, b in zip(lam2, lam, mu))
    return lam2, mu2


def cavallin_rho_mult(lam: Sequence[int]) -> int:
    """Multiplicity of lam - (alpha_1 + ... + alpha_n) in V(lam)."""
    support = [i + 1 for i, a in enumerate(lam) if a]
    if not support:
        return 0
    out = 1
    for r0, r1 in zip(support, support[1:]):
        out *= r1 - r0 + 1
    return out
