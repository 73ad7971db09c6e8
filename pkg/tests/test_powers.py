import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from weylkit.dominoes import square_decompose
from weylkit.powers import (
    OutOfStableRange,
    adams,
    alt_power,
    alt_power_char,
    gl6_to_a3,
    gl_to_so_branching,
    howe_wedge_highest_weights,
    increasing_set_weight,
    increasing_sets,
    level_sequences,
    levels_closed_form,
    parabolic_levels,
    so6_images,
    so6_to_a3,
    sym_power,
    sym_power_char,
)
from weylkit.weights import (
    char_dim,
    char_of_irrep,
    decomposition_dim,
    is_mf,
    partition_to_weight,
    s_value,
    sub_roots,
    weyl_dim,
)

from oracles import brute_char, complete_char, elementary_char, small_weights


def fund(n, *pairs):
    v = [0] * n
    for i, c in pairs:
        v[i - 1] += c
    return tuple(v)


# --- Adams operations and powers

def test_adams():
    ch = char_of_irrep((1, 1))
    assert adams(1, ch) == ch
    assert adams(2, char_of_irrep((1,))) == {(2,): 1, (-2,): 1}
    with pytest.raises(ValueError):
        adams(0, ch)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(*[st.integers(0, 3)] * n)), st.integers(1, 4))
def test_adams_preserves_dimension(w, k):
    ch = char_of_irrep(w)
    assert char_dim(adams(k, ch)) == char_dim(ch)


def test_wedge2_omega2():
    assert alt_power(2, (0, 1, 0)) == {(1, 0, 1): 1}


def test_power_dimensions():
    for w in [(1,), (2,), (1, 0), (1, 1), (0, 2), (1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 0, 0),
              (2, 0, 0), (1, 1, 0), (0, 0, 2, 0)]:
        d = weyl_dim(w)
        if d > 200:
            continue
        for k in range(5):
            if d <= 40 or k <= 3:
                assert decomposition_dim(alt_power(k, w)) == comb(d, k)
                assert decomposition_dim(sym_power(k, w)) == comb(d + k - 1, k)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(*[st.integers(0, 2)] * n)), st.integers(0, 3))
def test_newton_matches_elementary_and_complete(w, k):
    ch = brute_char(w)
    assert alt_power_char(k, ch) == {x: m for x, m in elementary_char(k, ch).items() if m}
    assert sym_power_char(k, ch) == {x: m for x, m in complete_char(k, ch).items() if m}


def test_square_powers_match_dominoes():
    for n in range(1, 5):
        for w in small_weights(n, 3):
            sym, alt = square_decompose(w)
            assert sym_power(2, w) == sym, w
            assert alt_power(2, w) == alt, w


def test_omega2_powers_are_mf():
    for l in range(1, 5):
        om2 = fund(l + 1, (2, 1))
        for c in range(1, 5):
            assert is_mf(sym_power(c, om2)), (l, c)
            if c <= weyl_dim(om2):
                assert is_mf(alt_power(c, om2)), (l, c)


def test_wedge3_adjoint_summand():
    for n in range(3, 6):
        lam = fund(n, (1, 1), (n, 1))
        top = sub_roots(tuple(3 * x for x in lam), (2,) + (1,) * (n - 1))
        assert alt_power(3, lam).get(top) == 1, n


# --- Howe's increasing sets

def test_howe_examples():
    for l in range(9, 13):
        # wedge^{l+1} of omega_2 for A_{l+1}
        w = increasing_set_weight("omega2", l, (l - 2, 3))
        assert w == fund(l + 1, (1, l - 6), (2, 2), (5, 1), (l - 1, 1))
    for j in range(5, 10):
        for l in range(j, j + 3):
            w = increasing_set_weight("2omega1", l, (j - 2, 2))
            assert w == fund(l + 1, (1, j - 5), (2, 2), (3, 1), (j - 2, 1))
    assert howe_wedge_highest_weights("omega2", 4, 1) == {fund(5, (2, 1)): 1}
    assert howe_wedge_highest_weights("2omega1", 4, 1) == {fund(5, (1, 2)): 1}


def test_increasing_set_rejects_bad_sequences():
    with pytest.raises(ValueError):
        increasing_set_weight("omega2", 3, (2, 2))
    with pytest.raises(ValueError):
        increasing_sets("omega3", 3, 2)


def test_howe_matches_wedge_powers():
    for base, top in (("omega2", lambda l: fund(l + 1, (2, 1))), ("2omega1", lambda l: fund(l + 1, (1, 2)))):
        for l in range(1, 6):
            w = top(l)
            for j in range(1, min(6, weyl_dim(w)) + 1):
                assert alt_power(j, w) == howe_wedge_highest_weights(base, l, j), (base, l, j)


# --- GL to SO

def test_symmetric_powers_of_natural():
    for m in range(5, 9):
        for c in range(0, 7):
            got = gl_to_so_branching((c,), m)
            assert got == {((c - 2 * i,) if c - 2 * i else ()): 1 for i in range(c // 2 + 1)}


def test_natural_branches_to_natural():
    assert gl_to_so_branching((1,), 7) == {(1,): 1}


def test_stability_guard():
    with pytest.raises(OutOfStableRange):
        gl_to_so_branching((1, 1, 1, 1), 6)


def dual_pair(w):
    return [w, tuple(reversed(w))]


def test_d4_fixture():
    got = gl6_to_a3((4, 4, 4))
    expect = [(0, 0, 0), (0, 2, 0), (0, 4, 0), (2, 0, 2), (2, 2, 2), (4, 0, 4)]
    for p in [(4, 0, 0), (4, 2, 0), (6, 0, 2), (8, 0, 0)]:
        expect += dual_pair(p)
    assert got == {w: 1 for w in expect}
    assert len(gl_to_so_branching((4, 4, 4), 6)) == 10


def test_01300_fixture():
    gamma = (4, 4, 3)
    got = gl6_to_a3(gamma)
    expect = [(0, 1, 0), (0, 3, 0), (1, 1, 1), (2, 1, 2), (3, 1, 3), (1, 3, 1)]
    for p in [(3, 0, 1), (3, 2, 1), (5, 0, 3), (5, 1, 1), (7, 0, 1), (4, 1, 0)]:
        expect += dual_pair(p)
    assert got == {w: 1 for w in expect}
    assert len(gl_to_so_branching(gamma, 6)) == 12


def test_so6_relabel():
    assert so6_to_a3((3, 2, 1)) == (3, 1, 1)
    assert so6_to_a3((3, 2, 1), -1) == (1, 1, 3)
    assert so6_to_a3(()) == (0, 0, 0)
    assert so6_images((2, 2)) == [(2, 0, 2)]


def test_gl6_dimension_conservation():
    for size in range(13):
        for p in itertools.product(range(size + 1), repeat=3):
            if sum(p) != size or list(p) != sorted(p, reverse=True):
                continue
            dec = gl6_to_a3(p)
            assert decomposition_dim(dec) == weyl_dim(partition_to_weight(p, 5)), p


# --- levels

DELTA_63 = [[6], [7, 5], [8, 6, 4], [9, 7, 5, 3], [8, 6, 4, 2], [7, 5, 3, 1], [6, 4, 2, 0],
            [5, 3, 1], [4, 2], [3]]


def as_levels(rows):
    return [{(k,): 1 for k in row} for row in rows]


def test_delta_63_array():
    assert levels_closed_form((6, 3)) == as_levels(DELTA_63)
    assert parabolic_levels((6, 3)) == as_levels(DELTA_63)


def rectangle(r, s):
    rows = []
    for i in range(r + s + 1):
        if i <= s:
            rows.append(list(range(r + i, r - i - 1, -2)))
        elif i <= r:
            j = i - s
            rows.append(list(range(r + s - j, r - s - j - 1, -2)))
        else:
            j = i - r
            rows.append(list(range(2 * s - j, j - 1, -2)))
    return rows


@pytest.mark.parametrize("r,s", [(3, 2), (4, 1), (6, 3)])
def test_rectangle_formulas(r, s):
    assert levels_closed_form((r, s)) == as_levels(rectangle(r, s))


def test_single_coefficient_levels():
    for d in range(6):
        lv = levels_closed_form((d, 0, 0))
        assert lv == [{(d - i, 0): 1} for i in range(d + 1)]
    assert parabolic_levels((1, 0)) == [{(1,): 1}, {(0,): 1}]


def test_levels_agree():
    for l in range(1, 4):
        for d in small_weights(l + 1, 4):
            lv = levels_closed_form(d)
            assert parabolic_levels(d) == lv, d
            assert sum(decomposition_dim(x) for x in lv) == weyl_dim(d)
            assert all(is_mf(x) for x in lv)


def test_level_one_coefficients():
    for l in range(1, 4):
        for d in itertools.product(range(1, 3), repeat=l + 1):
            expect = [tuple(d[:l - 1]) + (d[l - 1] + 1,), (d[0] - 1,) + tuple(d[1:l])]
            for i in range(2, l + 1):
                w = list(d[:l])
                w[i - 2] += 1
                w[i - 1] -= 1
                expect.append(tuple(w))
            assert parabolic_levels(d)[1] == {w: 1 for w in expect}, d


def test_s_values_by_sequence():
    # the Levi part of delta has S-value S(delta) - d_{l+1}
    for l in range(1, 4):
        for d in small_weights(l + 1, 4):
            for i, level in enumerate(parabolic_levels(d)):
                expect = sorted(s_value(d) - d[-1] - a[0] + a[-1] for a in level_sequences(d, i))
                got = sorted(s_value(w) for w, m in level.items() for _ in range(m))
                assert got == expect, (d, i)
                assert max(got) <= s_value(d) + i


def test_first_end_is_dual_of_last():
    for d in small_weights(3, 3):
        first = parabolic_levels(d, "first")
        last = parabolic_levels(tuple(reversed(d)), "last")
        assert [{tuple(reversed(w)): m for w, m in x.items()} for x in first] == last
    with pytest.raises(ValueError):
        parabolic_levels((1, 0), "middle")
