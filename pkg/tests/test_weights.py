"""Tests for gl_homotopy.algebra.weights."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gl_homotopy.algebra.weights import Weight
from gl_homotopy.algebra.weights import atypicality
from gl_homotopy.algebra.weights import ber
from gl_homotopy.algebra.weights import ber_twist
from gl_homotopy.algebra.weights import block_invariant
from gl_homotopy.algebra.weights import deg_bidegree
from gl_homotopy.algebra.weights import is_typical
from gl_homotopy.algebra.weights import label_sets
from gl_homotopy.algebra.weights import parse_weight
from gl_homotopy.algebra.weights import radical_layer_weights
from gl_homotopy.errors import InvalidWeight
from gl_homotopy.errors import ParseError

# ---------------------------------------------------------------------------
# Strategies
# ---------------------------------------------------------------------------


def _decreasing(size):
    return st.lists(
        st.integers(-6, 6), min_size=size, max_size=size
    ).map(lambda xs: tuple(sorted(xs, reverse=True)))


@st.composite
def dominant_weights(draw, max_rank=4):
    m = draw(st.integers(1, max_rank))
    n = draw(st.integers(1, max_rank))
    return Weight.from_parts(draw(_decreasing(m)), draw(_decreasing(n)))


# ---------------------------------------------------------------------------
# Tests
# ---------------------------------------------------------------------------


def test_ber_bidegree():
    """Ber of GL(n|n) has d = n, d' = -n."""
    for n in (1, 2, 3):
        assert tuple(deg_bidegree(ber(n, n))) == (n, -n, n)


@pytest.mark.parametrize("a", [-3, 0, 4])
def test_gl11_degree_is_a(a):
    assert deg_bidegree(Weight(1, 1, (a, -a))).deg == a


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_radical_layer_degrees(n):
    """The i-th layer weight has degree -i²."""
    layers = radical_layer_weights(n)
    assert len(layers) == n + 1
    assert [deg_bidegree(w).deg for w in layers] == [-i * i for i in range(n + 1)]
    assert layers[0] == Weight(n, n, (0,) * 2 * n)


def test_label_sets_examples():
    assert label_sets(Weight(1, 1, (5, -5))) == (frozenset({5}), frozenset({5}))
    assert label_sets(parse_weight("0,0|0")) == (
        frozenset({0, -1}),
        frozenset({-1}),
    )
    sets = label_sets(parse_weight("0,0|0,0"))
    assert sets.vee == sets.wedge == frozenset({0, -1})


def test_atypicality_examples():
    assert atypicality(Weight(1, 1, (2, -2))) == 1
    assert atypicality(Weight(1, 1, (2, -1))) == 0
    assert is_typical(Weight(1, 1, (2, -1)))
    for n in (1, 2, 3):
        assert atypicality(Weight(n, n, (0,) * 2 * n)) == n
        assert atypicality(ber(n, n)) == n


def test_ber_twist_examples():
    assert ber_twist(parse_weight("0,0|0,0"), 1) == parse_weight("1,1|-1,-1")
    assert ber_twist(Weight(1, 1, (3, -3)), 2) == Weight(1, 1, (5, -5))
    assert ber_twist(parse_weight("1,1|-2"), -1) == parse_weight("0,0|-1")


@given(dominant_weights(), st.integers(-5, 5))
def test_ber_twist_keeps_atypicality_and_shifts_degree(w, k):
    twisted = ber_twist(w, k)
    assert atypicality(twisted) == atypicality(w)
    assert deg_bidegree(twisted).deg == deg_bidegree(w).deg + k * w.m


@given(dominant_weights())
def test_atypicality_bounded(w):
    sets = label_sets(w)
    assert len(sets.vee) == w.m
    assert len(sets.wedge) == w.n
    assert atypicality(w) <= min(w.m, w.n)


def test_block_invariant_is_sum_of_entries():
    assert block_invariant(parse_weight("1,1|-2")) == 0
    assert block_invariant(Weight(1, 1, (7, -7))) == 0


def test_weight_text_and_json():
    w = parse_weight("1, 0,-1|2,0")
    assert str(w) == "1,0,-1|2,0"
    assert (w.m, w.n) == (3, 2)
    assert Weight.from_dict(w.to_dict()) == w


def test_non_dominant_weight_rejected():
    with pytest.raises(InvalidWeight, match="not dominant"):
        parse_weight("0,1|0")


def test_wrong_length_rejected():
    with pytest.raises(InvalidWeight, match="entries"):
        Weight(2, 1, (0, 0))


@pytest.mark.parametrize("text", ["0,0", "1|", "|1", "a|0", "0|0|0"])
def test_bad_weight_text(text):
    with pytest.raises(ParseError):
        parse_weight(text)
