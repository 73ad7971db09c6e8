import itertools

import pytest
from hypothesis import given, settings, strategies as st

from weylkit.weights import (
    GuardExceeded,
    NotACharacter,
    RankMismatch,
    cavallin_reduce,
    cavallin_rho_mult,
    char_add,
    char_of_irrep,
    decompose_character,
    decomposition_dim,
    dual_weight,
    l_value,
    partition_to_weight,
    root_coords,
    s_value,
    sub_roots,
    weight_multiplicity,
    weight_to_partition,
    weyl_dim,
)

from oracles import brute_char, char_product, kostka, small_weights


def weights(max_rank=4, max_coef=3):
    return st.integers(1, max_rank).flatmap(
        lambda n: st.tuples(*[st.integers(0, max_coef)] * n))


# --- partitions and weights

def test_partition_to_weight_examples():
    assert partition_to_weight((5, 3, 0), 2) == (2, 3)
    assert partition_to_weight((), 3) == (0, 0, 0)
    assert partition_to_weight((1, 1, 0, 0), 3) == (0, 1, 0)


def test_weight_to_partition_with_size():
    assert weight_to_partition((2, 3), 14) == (7, 5, 2)
    assert weight_to_partition((0, 0)) == ()
    with pytest.raises(ValueError):
        weight_to_partition((2, 3), 13)


@given(weights())
def test_partition_round_trip(w):
    assert partition_to_weight(weight_to_partition(w), len(w)) == w


def test_duals():
    assert dual_weight((0, 1, 0, 0, 0)) == (0, 0, 0, 1, 0)
    a = 4
    assert dual_weight((a, 1) + (0,) * 7) == (0,) * 7 + (1, a)
    assert dual_weight((1, 0, 1)) == (1, 0, 1)


def test_s_and_l_values():
    assert (s_value((2, 3)), l_value((2, 3))) == (5, 2)
    for n in range(1, 6):
        w = (1,) + (0,) * (n - 2) + (1,) if n > 1 else (2,)
        if n > 1:
            assert (s_value(w), l_value(w)) == (2, 2)
    assert (s_value((0, 0, 0)), l_value((0, 0, 0))) == (0, 0)


# --- dimensions

def test_weyl_dim_examples():
    for n in range(1, 8):
        assert weyl_dim((1,) + (0,) * (n - 1)) == n + 1
    for l in range(2, 8):
        w = tuple(2 if i == 1 else 0 for i in range(l))
        assert weyl_dim(w) == (l + 2) * (l + 1) ** 2 * l // 12
    assert weyl_dim((0, 2, 0)) == 20
    assert weyl_dim((1, 1)) == 8


@settings(max_examples=60, deadline=None)
@given(weights(max_rank=3, max_coef=2))
def test_weyl_dim_matches_tableaux(w):
    assert weyl_dim(w) == sum(brute_char(w).values())


def test_weyl_dim_is_exact_for_huge_weights():
    w = (40,) * 20
    d = weyl_dim(w)
    assert d == weyl_dim(dual_weight(w)) and d > 2 ** 64


# --- multiplicities

def test_multiplicity_examples():
    assert weight_multiplicity((3, 1, 2), (3, 1, 2)) == 1
    assert weight_multiplicity((1, 1), (0, 0)) == 2
    assert kostka((2, 1, 0), (1, 1, 1)) == 2
    lam = (1, 0, 1)
    assert weight_multiplicity(lam, sub_roots(lam, (1, 1, 1))) == 3
    with pytest.raises(RankMismatch):
        weight_multiplicity((1, 0), (1, 0, 0))


def test_freudenthal_matches_kostka_exhaustive():
    # n <= 4 and |lambda| <= 8, every weight of the character
    for n in range(1, 5):
        for w in itertools.product(range(5), repeat=n):
            if sum(weight_to_partition(w)) > 8:
                continue
            assert char_of_irrep(w) == brute_char(w), w


def test_char_examples():
    assert char_of_irrep((0, 0)) == {(0, 0): 1}
    ch = char_of_irrep((3,))
    assert ch == {(3,): 1, (1,): 1, (-1,): 1, (-3,): 1}
    ch = char_of_irrep((1, 1))
    assert len(ch) == 7 and ch[(0, 0)] == 2
    assert sorted(m for w, m in ch.items() if w != (0, 0)) == [1] * 6


# --- decomposition

@given(weights(max_rank=3, max_coef=3))
def test_decompose_identity(w):
    assert decompose_character(char_of_irrep(w)) == {w: 1}


@settings(deadline=None)
@given(weights(max_rank=3, max_coef=2), weights(max_rank=3, max_coef=2), st.integers(1, 3))
def test_decompose_sum(a, b, k):
    if len(a) != len(b) or a == b:
        return
    ch = char_add(char_of_irrep(a), char_of_irrep(b), k)
    assert decompose_character(ch) == {a: 1, b: k}


def test_decompose_product():
    ch = char_product(char_of_irrep((1, 0)), char_of_irrep((0, 1)))
    dec = decompose_character(ch)
    assert dec == {(1, 1): 1, (0, 0): 1}
    assert decomposition_dim(dec) == 9


def test_not_a_character():
    with pytest.raises(NotACharacter):
        decompose_character({(1, 0): 1})
    ch = char_add(char_of_irrep((1, 1)), {(0, 0): 3}, -1)
    with pytest.raises(NotACharacter):
        decompose_character(ch)


def test_guard():
    with pytest.raises(GuardExceeded) as exc:
        char_of_irrep((3, 3, 3, 3), max_entries=100)
    assert "100" in str(exc.value)
    assert char_of_irrep((1, 0), max_entries=3)


# --- Cavallin's reductions

def test_cavallin_reduce_examples():
    lam = (2, 0)
    mu = sub_roots(lam, (1, 0))
    lam2, mu2 = cavallin_reduce(lam, mu, [1])
    assert lam2 == (1, 0) and mu2 == sub_roots((1, 0), (1, 0))
    assert weight_multiplicity(lam, mu) == weight_multiplicity(lam2, mu2) == 1
    lam = (1, 2, 1)
    mu = sub_roots(lam, (1, 2, 1))
    assert cavallin_reduce(lam, mu, [1, 2, 3]) == (lam, mu)


def test_cavallin_reduce_preserves_multiplicity():
    for lam in small_weights(4, 5):
        ch = char_of_irrep(lam)
        for mu, m in ch.items():
            c = root_coords(tuple(a - b for a, b in zip(lam, mu)))
            J = [j + 1 for j in range(len(lam)) if c[j] <= lam[j]]
            if not J:
                continue
            lam2, mu2 = cavallin_reduce(lam, mu, J)
            assert weight_multiplicity(lam2, mu2) == m, (lam, mu, J)


def test_cavallin_reduce_rank5_example():
    lam = (0, 0, 0, 0, 6)
    mu = sub_roots(lam, (1, 1, 1, 2, 2))
    lam2, mu2 = cavallin_reduce(lam, mu, [5])
    assert lam2 == (0, 0, 0, 0, 2)
    assert weight_multiplicity(lam, mu) == weight_multiplicity(lam2, mu2)


def test_cavallin_reduce_errors():
    with pytest.raises(ValueError):
        cavallin_reduce((1, 0), (1, 0), [])
    with pytest.raises(ValueError):
        cavallin_reduce((1, 0), sub_roots((1, 0), (2, 0)), [1])


def test_cavallin_rho_mult_examples():
    for c in range(1, 5):
        assert cavallin_rho_mult((0, c, 0)) == 1
    assert cavallin_rho_mult((1, 0, 1)) == 3
    assert cavallin_rho_mult((1, 1, 0, 1)) == 6


def test_cavallin_rho_mult_matches_freudenthal():
    for n in range(1, 6):
        for lam in itertools.product(range(3), repeat=n):
            mu = sub_roots(lam, (1,) * n)
            assert cavallin_rho_mult(lam) == weight_multiplicity(lam, mu), lam
