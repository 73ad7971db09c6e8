"""X = A_{l+1} inside Y = SL(W) for W = V_X(delta), and restriction of
Y-modules to X by pushing weights."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .weights import (
    Character,
    Decomposition,
    Weight,
    RankMismatch,
    char_of_irrep,
    check_guard,
    decompose_character,
    decomposition_dim,
    dominant_eps_multiplicities,
    dual_decomposition,
    dual_weight,
    root_coords,
    weight_label,
    weight_table_size,
    weyl_dim,
)


@dataclass(frozen=True)
class Embedding:
    x_rank: int
    delta: Weight
    y_rank: int
    w_weights: Tuple[Weight, ...]


@dataclass(frozen=True)
class MFReport:
    embedding: Embedding
    lam: Weight
    decomposition: Dict[Weight, int]
    is_mf: bool
    max_multiplicity: int
    dims: Tuple[int, int]


def _order_key(delta, mu):
    c = root_coords(tuple(a - b for a, b in zip(delta, mu)))
    return (sum(c), tuple(-x for x in c))


def build_embedding(l: int, delta: Sequence[int], max_entries=None) -> Embedding:
    """Weights of W = V_X(delta), X = A_{l+1}, listed with multiplicity
    by ascending depth below delta, ties broken by larger coefficients on
    the earlier simple roots first."""
    delta = tuple(delta)
    if len(delta) != l + 1:
        raise RankMismatch(f"delta {delta} is not a weight of A_{l + 1}")
    ch = char_of_irrep(delta, max_entries)
    ws = []
    for mu in sorted(ch, key=lambda mu: _order_key(delta, mu)):
        ws += [mu] * ch[mu]
    assert all(sum(col) == 0 for col in zip(*ws)), "weights of W do not sum to 0"
    return Embedding(l + 1, delta, len(ws) - 1, tuple(ws))


def restrict_simple_roots(e: Embedding, order: Optional[Sequence[Weight]] = None) -> List[Weight]:
    """beta_j restricted to T_X, as w_j - w_{j+1} along the chosen order
    of the weights of W (the embedding's own order by default)."""
    ws = list(e.w_weights if order is None else order)
    if sorted(ws) != sorted(e.w_weights):
        raise ValueError("order is not a rearrangement of the weights of W")
    return [tuple(a - b for a, b in zip(ws[j], ws[j + 1])) for j in range(len(ws) - 1)]


def _pushed(values: Sequence[int], ws: Sequence[Weight], rank: int):
    """Yield sum_i x_i ws[i] over the distinct rearrangements x of values."""
    groups = {}
    for v in values:
        if v:
            groups[v] = groups.get(v, 0) + 1
    groups = sorted(groups.items(), reverse=True)
    N = len(ws)
    zero = (0,) * rank

    def add(u, w, k=1):
        return tuple(a + k * b for a, b in zip(u, w))

    def rec(g, free, acc):
        if g == len(groups):
            yield acc
            return
        v, k = groups[g]
        F = len(free)
        last = g == len(groups) - 1
        if k <= F - k:
            for chosen in combinations(range(F), k):
                s = zero
                for i in chosen:
                    s = add(s, ws[free[i]])
                if last:
                    yield add(acc, s, v)
                    continue
                cs = set(chosen)
                rest = [free[i] for i in range(F) if i not in cs]
                yield from rec(g + 1, rest, add(acc, s, v))
        else:
            total = zero
            for i in free:
                total = add(total, ws[i])
            for skipped in combinations(range(F), F - k):
                s = total
                for i in skipped:
                    s = add(s, ws[free[i]], -1)
                yield from rec(g + 1, [free[i] for i in skipped], add(acc, s, v))

    yield from rec(0, list(range(N)), zero)


def restriction_character(e: Embedding, lam: Sequence[int], max_entries=None) -> Character:
    lam = tuple(lam)
    if len(lam) != e.y_rank:
        raise RankMismatch(f"{weight_label(lam)} is not a weight of A_{e.y_rank}")
    check_guard(weight_table_size(lam), max_entries, f"V_Y {weight_label(lam)}")
    doms = dominant_eps_multiplicities(lam)
    out: Character = {}
    for mu, m in doms.items():
        for w in _pushed(mu, e.w_weights, e.x_rank):
            out[w] = out.get(w, 0) + m
    return out


def restrict_module(e: Embedding, lam: Sequence[int], max_entries=None) -> Decomposition:
    """V_Y(lam) restricted to X."""
    return decompose_character(restriction_character(e, lam, max_entries))


def is_multiplicity_free(e: Embedding, lam: Sequence[int], max_entries=None) -> MFReport:
    lam = tuple(lam)
    dec = restrict_module(e, lam, max_entries)
    top = max(dec.values(), default=0)
    return MFReport(e, lam, dec, top <= 1, top, (weyl_dim(lam), decomposition_dim(dec)))


def restriction_dual_check(e: Embedding, lam: Sequence[int], max_entries=None) -> bool:
    lam = tuple(lam)
    return restrict_module(e, dual_weight(lam), max_entries) == dual_decomposition(
        restrict_module(e, lam, max_entries))
