"""Shared fixtures for gl_homotopy unit tests.

Block fixtures cover the three shapes used throughout: the principal
GL(1|1) block, the trivial GL(2|1) block (core ``{0}``, base ``-1``, whose
degrees skip over the core label) and a GL(3|1) block with two core
labels.  ``fresh_config`` isolates tests that change the active iconfig.
"""

from __future__ import annotations

import pytest
from apsbits.utils.config_loaders import get_config

from gl_homotopy.algebra.gl1block import BlockKey
from gl_homotopy.utils import iconfig


@pytest.fixture
def gl11() -> BlockKey:
    """GL(1|1) block of ``(0|0)``: empty core, base 0."""
    return BlockKey(1, frozenset(), 0)


@pytest.fixture
def gl21() -> BlockKey:
    """GL(2|1) block of the trivial weight: core ``{0}``, base ``-1``."""
    return BlockKey(2, frozenset({0}), -1)


@pytest.fixture
def gl31() -> BlockKey:
    """GL(3|1) block with core ``{-2, 3}`` and base 0."""
    return BlockKey(3, frozenset({-2, 3}), 0)


@pytest.fixture
def fresh_config(monkeypatch):
    """Start from the packaged iconfig and restore the previous one afterwards.

    ``GL_HOMOTOPY_ICONFIG`` is cleared so a developer's environment does
    not leak into the tests.
    """
    monkeypatch.delenv(iconfig.ENV_ICONFIG, raising=False)
    saved = dict(get_config())
    iconfig.load_iconfig()
    yield iconfig
    active = get_config()
    active.clear()
    active.update(saved)
