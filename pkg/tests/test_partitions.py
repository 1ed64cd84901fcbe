"""Tests for gl_homotopy.algebra.partitions."""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from gl_homotopy.algebra.partitions import box_partitions
from gl_homotopy.algebra.partitions import cauchy_check
from gl_homotopy.algebra.partitions import count_box_partitions
from gl_homotopy.algebra.partitions import count_self_conjugate
from gl_homotopy.algebra.partitions import count_self_conjugate_closed_form
from gl_homotopy.algebra.partitions import gl_dim
from gl_homotopy.algebra.partitions import is_self_conjugate
from gl_homotopy.algebra.partitions import iter_self_conjugate
from gl_homotopy.algebra.partitions import lr_mult
from gl_homotopy.algebra.partitions import lr_product
from gl_homotopy.algebra.partitions import lr_product_oracle
from gl_homotopy.algebra.partitions import partition
from gl_homotopy.algebra.partitions import schur_polynomial
from gl_homotopy.algebra.partitions import transpose
from gl_homotopy.algebra.partitions import vv_star_flag
from gl_homotopy.algebra.partitions import weight_estimate
from gl_homotopy.errors import InvalidPartition
from gl_homotopy.errors import TooManyRows

small_partitions = st.lists(st.integers(1, 3), max_size=3).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)

# ---------------------------------------------------------------------------
# basics
# ---------------------------------------------------------------------------


def test_partition_validation():
    assert partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(InvalidPartition, match="weakly decreasing"):
        partition([1, 2])
    with pytest.raises(InvalidPartition, match="negative"):
        partition([2, -1])


def test_transpose_examples():
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose(()) == ()
    assert is_self_conjugate((2, 1))
    assert not is_self_conjugate((2,))


@given(small_partitions)
def test_transpose_is_involution(alpha):
    assert transpose(transpose(alpha)) == alpha
    assert sum(transpose(alpha)) == sum(alpha)


def test_box_partitions_order():
    assert box_partitions(2) == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_box_partition_count(n):
    assert len(box_partitions(n)) == math.comb(2 * n, n)
    assert count_box_partitions(n) == math.comb(2 * n, n)


def test_box_count_without_enumerating():
    assert count_box_partitions(12) == math.comb(24, 12)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_self_conjugate_count(n):
    assert count_self_conjugate(n) == count_self_conjugate_closed_form(n) == 2**n


def test_self_conjugate_in_3_box():
    assert count_self_conjugate(3) == 8


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hooks_give_every_self_conjugate_partition(n):
    from_hooks = list(iter_self_conjugate(n))
    filtered = [a for a in box_partitions(n) if is_self_conjugate(a)]
    assert len(from_hooks) == len(set(from_hooks))
    assert sorted(from_hooks) == sorted(filtered)


def test_self_conjugate_count_at_twelve():
    assert count_self_conjugate(12) == 4096


def test_box_size_must_be_positive():
    with pytest.raises(InvalidPartition):
        box_partitions(0)
    with pytest.raises(InvalidPartition):
        count_self_conjugate(0)


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "alpha, n, expected",
    [((), 3, 1), ((1,), 3, 3), ((2,), 2, 3), ((1, 1), 3, 3), ((2, 1), 3, 8)],
)
def test_gl_dim_examples(alpha, n, expected):
    assert gl_dim(alpha, n) == expected


def test_gl_dim_too_many_rows():
    with pytest.raises(TooManyRows, match="at most 2"):
        gl_dim((1, 1, 1), 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cauchy_identity(n):
    pairs, total = cauchy_check(n)
    assert len(pairs) == math.comb(2 * n, n)
    assert total == 2 ** (n * n)


# ---------------------------------------------------------------------------
# Littlewood-Richardson
# ---------------------------------------------------------------------------


def test_lr_product_small():
    assert lr_product((1,), (1,)) == {(1, 1): 1, (2,): 1}
    assert lr_product((1,), (1,), max_rows=1) == {(2,): 1}
    assert lr_product((), (2, 1)) == {(2, 1): 1}


def test_lr_product_21_squared():
    expected = {
        (2, 2, 1, 1): 1,
        (2, 2, 2): 1,
        (3, 1, 1, 1): 1,
        (3, 2, 1): 2,
        (3, 3): 1,
        (4, 1, 1): 1,
        (4, 2): 1,
    }
    assert lr_product((2, 1), (2, 1)) == expected
    assert lr_mult((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_mult((2, 1), (2, 1), (3, 2)) == 0


@given(small_partitions, small_partitions)
def test_lr_product_is_symmetric(lam, mu):
    assert lr_product(lam, mu) == lr_product(mu, lam)


@given(small_partitions, small_partitions)
def test_lr_product_matches_dimensions(lam, mu):
    """dim ρ_λ · dim ρ_μ = Σ c^ν_{λμ} dim ρ_ν over GL(3)."""
    product = lr_product(lam, mu, max_rows=3)
    assert all(sum(nu) == sum(lam) + sum(mu) for nu in product)
    total = sum(c * gl_dim(nu, 3) for nu, c in product.items())
    assert total == gl_dim(lam, 3) * gl_dim(mu, 3)


def test_schur_polynomial():
    s1 = schur_polynomial((1,), 2)
    x0, x1 = s1.gens
    assert s1.as_expr() == x0 + x1
    assert schur_polynomial((1, 1, 1), 2).is_zero
    assert schur_polynomial((1, 1), 2).as_expr() == x0 * x1


@pytest.mark.parametrize(
    "lam, mu", [((1,), (1,)), ((2, 1), (1,)), ((2, 1), (2, 1)), ((2,), (1, 1))]
)
def test_lr_product_agrees_with_oracle(lam, mu):
    assert lr_product_oracle(lam, mu, 3) == lr_product(lam, mu, max_rows=3)


@pytest.mark.slow
@settings(max_examples=20, deadline=None)
@given(small_partitions, small_partitions)
def test_lr_product_agrees_with_oracle_randomly(lam, mu):
    assert lr_product_oracle(lam, mu, 3) == lr_product(lam, mu, max_rows=3)


# ---------------------------------------------------------------------------
# V ⊗ V*
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
def test_vv_star_flag(n):
    flag = vv_star_flag(n)
    assert len(flag) == math.comb(2 * n, n)
    assert sum(entry.is_max_atypical for entry in flag) == 2**n
    assert flag[0].alpha == ()
    assert flag[0].degree == -n * n
    assert min(entry.degree for entry in flag) == -2 * n * n


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_weight_estimate(n):
    bounds = weight_estimate(n)
    assert bounds["I⊗I*"] == (-2 * n * n, -2)
    assert bounds["V⊗I⊗I*"] == (-3 * n * n, -2)


def test_weight_estimate_rejects_empty_box():
    with pytest.raises(InvalidPartition):
        weight_estimate(0)
