"""Tests for gl_homotopy.algebra.gl1block."""

from __future__ import annotations

import pytest
from apsbits.utils.config_loaders import update_config
from hypothesis import given
from hypothesis import strategies as st

from gl_homotopy.algebra.gl1block import BlockKey
from gl_homotopy.algebra.gl1block import BlockPoint
from gl_homotopy.algebra.gl1block import block_deg
from gl_homotopy.algebra.gl1block import block_key
from gl_homotopy.algebra.gl1block import default_block
from gl_homotopy.algebra.gl1block import neighbors
from gl_homotopy.algebra.gl1block import step
from gl_homotopy.algebra.gl1block import trivial_block
from gl_homotopy.algebra.gl1block import weight_at
from gl_homotopy.algebra.weights import Weight
from gl_homotopy.algebra.weights import block_invariant
from gl_homotopy.algebra.weights import parse_weight
from gl_homotopy.errors import InvalidBlockKey
from gl_homotopy.errors import TypicalWeight
from gl_homotopy.errors import WrongShape


@st.composite
def block_keys(draw, max_rank=4):
    m = draw(st.integers(1, max_rank))
    labels = draw(
        st.lists(st.integers(-8, 8), min_size=m, max_size=m, unique=True)
    )
    return BlockKey(m, frozenset(labels[:-1]), labels[-1])


# ---------------------------------------------------------------------------
# block_key / weight_at
# ---------------------------------------------------------------------------


def test_block_key_examples(gl21):
    assert block_key(parse_weight("0,0|0")) == (gl21, 0)
    assert block_key(Weight(1, 1, (4, -4))) == (BlockKey(1, frozenset(), 4), 0)


def test_block_key_errors():
    with pytest.raises(TypicalWeight):
        block_key(Weight(1, 1, (2, 1)))
    with pytest.raises(WrongShape, match="GL\\(m\\|1\\)"):
        block_key(parse_weight("0,0|0,0"))


@pytest.mark.parametrize(
    "i, position, weight",
    [(0, -1, "0,0|0"), (-1, -2, "0,-1|1"), (1, 1, "1,1|-2"), (-2, -3, "0,-2|2")],
)
def test_weight_at_trivial_gl21_block(gl21, i, position, weight):
    assert gl21.position(i) == position
    assert weight_at(gl21, i) == parse_weight(weight)
    assert BlockPoint(gl21, i).weight == parse_weight(weight)
    assert gl21.index_of(position) == i


def test_trivial_block_has_pi_below(gl21):
    key, index = trivial_block(2)
    assert (key, index) == (gl21, 0)
    assert weight_at(key, -1) == parse_weight("0,-1|1")
    assert weight_at(trivial_block(3)[0], -1) == parse_weight("0,0,-1|1")


@given(block_keys(), st.integers(-10, 10))
def test_weight_at_round_trip(key, i):
    w = weight_at(key, i)
    found, index = block_key(w)
    assert found.core == key.core
    assert weight_at(found, index) == w
    assert found.position(0) == key.position(i)


# ---------------------------------------------------------------------------
# positions and degrees
# ---------------------------------------------------------------------------


def test_step_examples(gl21, gl11):
    assert step(gl21, 0, -1) == -2
    assert step(gl21, 0, 1) == 1
    assert step(BlockKey(1, frozenset(), 7), 0, 2) == 9
    assert step(gl11, 3, -5) == -2


@given(block_keys())
def test_positions_avoid_core_and_are_increasing(key):
    positions = [key.position(i) for i in range(-12, 13)]
    assert not set(positions) & key.core
    assert all(a < b for a, b in zip(positions, positions[1:], strict=False))
    assert key.position(0) == key.base
    for i, p in zip(range(-12, 13), positions, strict=False):
        assert key.index_of(p) == i


def test_index_of_core_label(gl21):
    with pytest.raises(InvalidBlockKey, match="core label"):
        gl21.index_of(0)


def test_block_deg_examples(gl21):
    assert block_deg(BlockKey(1, frozenset(), -3), 0) == -3
    assert block_deg(gl21, 0) == 0
    assert block_deg(gl21, -2) == -2
    assert block_deg(gl21, 1) == 2


@given(block_keys())
def test_block_deg_increasing_and_invariant_constant(key):
    degrees = [block_deg(key, i) for i in range(-10, 11)]
    assert all(a < b for a, b in zip(degrees, degrees[1:], strict=False))
    assert len({block_invariant(weight_at(key, i)) for i in range(-10, 11)}) == 1


def test_neighbors(gl21):
    nb = neighbors(gl21, 0)
    assert nb["socle"] == (-1, parse_weight("0,-1|1"))
    assert nb["top"] == (1, parse_weight("1,1|-2"))


# ---------------------------------------------------------------------------
# BlockKey validation and codec
# ---------------------------------------------------------------------------


def test_block_key_validation():
    with pytest.raises(InvalidBlockKey, match="core of 1"):
        BlockKey(2, frozenset(), 0)
    with pytest.raises(InvalidBlockKey, match="lies in the core"):
        BlockKey(2, frozenset({0}), 0)


def test_block_key_json(gl31):
    assert gl31.to_dict() == {"core": [-2, 3], "base": 0}
    assert BlockKey.from_dict(gl31.to_dict()) == gl31
    assert str(gl31) == "core={-2,3} base=0"


def test_default_block_from_config(fresh_config, gl11):
    assert default_block() == (gl11, 0)
    update_config({"DEFAULT_BLOCK": {"WEIGHT": "0,0|0"}})
    assert default_block()[0].m == 2
