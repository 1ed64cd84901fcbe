"""Tests for gl_homotopy.utils.logging_helper."""

from __future__ import annotations

import logging
import pathlib

import pytest

from gl_homotopy.utils import logging_helper


@pytest.fixture
def package_logger():
    """The package logger, restored to the default setup afterwards."""
    logger = logging.getLogger("gl_homotopy")
    yield logger
    logging_helper.setup_logging(force=True)


def _root_file_handlers():
    return [
        h
        for h in logging.getLogger().handlers
        if isinstance(h, logging.FileHandler)
    ]


# ---------------------------------------------------------------------------
# apsbits overrides
# ---------------------------------------------------------------------------


def test_overrides_without_log_path():
    overrides = logging_helper._build_overrides(None, {"MAX_BYTES": 10})
    assert overrides == {"file_logs": {"log_filename_base": "gl_homotopy.log"}}


def test_overrides_with_log_path():
    cfg = {"MAX_BYTES": "1000", "NUMBER_OF_PREVIOUS_BACKUPS": 3}
    overrides = logging_helper._build_overrides("/var/log/glh", cfg)
    assert overrides == {
        "file_logs": {
            "log_filename_base": "gl_homotopy.log",
            "log_directory": "/var/log/glh",
            "maxBytes": 1000,
            "backupCount": 3,
        }
    }


# ---------------------------------------------------------------------------
# setup_logging
# ---------------------------------------------------------------------------


def test_setup_is_idempotent(package_logger):
    logging_helper.setup_logging({"LEVEL": "DEBUG"}, force=True)
    logging_helper.setup_logging({"LEVEL": "ERROR"})
    assert package_logger.level == logging.DEBUG


def test_console_only_without_log_path(package_logger):
    logging_helper.setup_logging({"LEVEL": "INFO"}, force=True)
    assert package_logger.level == logging.INFO
    assert _root_file_handlers() == []


def test_file_handler(package_logger, tmp_path):
    cfg = {"LOG_PATH": str(tmp_path / "logs"), "MAX_BYTES": 1000}
    logging_helper.setup_logging(cfg, force=True)
    files = _root_file_handlers()
    assert files
    assert all(
        pathlib.Path(h.baseFilename).parent == tmp_path / "logs" for h in files
    )


def test_unwritable_log_path_falls_back_to_console(package_logger, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    logging_helper.setup_logging({"LOG_PATH": str(blocker / "sub")}, force=True)
    assert _root_file_handlers() == []


def test_set_level(package_logger):
    logging_helper.set_level("info")
    assert package_logger.level == logging.INFO
    logging_helper.set_level(logging.ERROR)
    assert package_logger.level == logging.ERROR
    with pytest.raises(ValueError, match="Unknown logging level"):
        logging_helper.set_level("LOUD")
