"""Centralized logging configuration for the gl_homotopy package."""

import contextlib
import io
import logging
import os
import pathlib
import tempfile

import yaml

# Importing `apsbits.utils.logging_setup` runs `apsbits/__init__.py`, which
# calls `configure_logging()` once at import time and prints its settings.
# Silence that output; `setup_logging()` replaces what it installed.
_silenced_init = io.StringIO()
with (
    contextlib.redirect_stdout(_silenced_init),
    contextlib.redirect_stderr(_silenced_init),
):
    from apsbits.utils.logging_setup import configure_logging

logger = logging.getLogger(__name__)

# iconfig.yml is the single source of truth, including the LOGGING block.
_ICONFIG = (
    pathlib.Path(__file__).resolve().parent.parent / "configs" / "iconfig.yml"
)

# Translation from iconfig-friendly keys (uppercase, in iconfig.yml's
# LOGGING block) to the apsbits `file_logs` schema.
_FILE_LOGS_KEY_MAP = {
    "MAX_BYTES": "maxBytes",
    "NUMBER_OF_PREVIOUS_BACKUPS": "backupCount",
}

_LOG_FILENAME = "gl_homotopy.log"
_PACKAGE_LOGGER = "gl_homotopy"

# Idempotency guard: the package `__init__.py` calls `setup_logging()` and
# the CLI calls it again after reading `--config`.
_setup_done = False


def setup_logging(cfg=None, force=False):
    """
    Configure logging from the LOGGING block of iconfig.yml.

    The block is translated to the apsbits ``file_logs`` schema on the fly
    (via a temporary YAML file passed to apsbits'
    ``configure_logging(extra_logging_configs_path=...)``) so the package
    keeps a single config file.

    File logs are written only when ``LOG_PATH`` is set.  Without it, or
    when that directory cannot be created, the file handlers apsbits
    installs are removed and records go to the console only.

    Idempotent: subsequent calls are no-ops unless ``force`` is true (the
    CLI forces a re-run when ``--config`` points at another iconfig).
    """
    global _setup_done
    if _setup_done and not force:
        return

    if cfg is None:
        cfg = _read_iconfig_logging_block()
    _drop_apsbits_file_handlers()

    log_path = cfg.get("LOG_PATH")
    if log_path:
        log_path = str(pathlib.Path(log_path).expanduser())
        try:
            _apply_overrides(log_path=log_path, cfg=cfg)
        except (PermissionError, OSError) as exc:
            _drop_apsbits_file_handlers()
            logger.warning(
                "Log directory %s unavailable (%s); logging to console only.",
                log_path,
                exc,
            )
    else:
        _apply_overrides(log_path=None, cfg=cfg)
        _drop_apsbits_file_handlers()

    set_level(cfg.get("LEVEL", "WARNING"))
    _setup_done = True


def set_level(level):
    """Change the level of the package logger (CLI ``-v`` / ``-q``).

    Console handlers on the root logger are lowered as needed so the
    records reach the terminal.
    """
    value = _level(level)
    logging.getLogger(_PACKAGE_LOGGER).setLevel(value)
    for handler in logging.getLogger().handlers:
        if isinstance(handler, logging.FileHandler):
            continue
        if handler.level > value:
            handler.setLevel(value)


def _apply_overrides(log_path, cfg):
    """Run apsbits' configure_logging with the package overrides applied."""
    overrides = _build_overrides(log_path=log_path, cfg=cfg)

    with tempfile.NamedTemporaryFile(
        mode="w", suffix=".yml", delete=False
    ) as fh:
        yaml.safe_dump(overrides, fh)
        tmp_path = fh.name

    try:
        configure_logging(extra_logging_configs_path=tmp_path)
    finally:
        os.unlink(tmp_path)


def _build_overrides(log_path, cfg):
    """Build the apsbits-shape override dict for one configure_logging run.

    The file name override is always applied.  The directory and the
    rotation knobs (max bytes, backup count) only when ``log_path`` is set.
    """
    file_logs = {"log_filename_base": _LOG_FILENAME}
    if log_path:
        file_logs["log_directory"] = log_path
        for src_key, dst_key in _FILE_LOGS_KEY_MAP.items():
            if src_key in cfg:
                file_logs[dst_key] = int(cfg[src_key])
    return {"file_logs": file_logs}


def _level(level):
    """Accept level names ("INFO") as well as numeric levels."""
    if isinstance(level, int):
        return level
    value = logging.getLevelName(str(level).upper())
    if not isinstance(value, int):
        raise ValueError(f"Unknown logging level {level!r} in LOGGING block.")
    return value


def _read_iconfig_logging_block():
    """Return iconfig.yml's LOGGING block as a dict (empty if missing)."""
    if not _ICONFIG.exists():
        return {}
    with open(_ICONFIG) as f:
        iconfig = yaml.safe_load(f) or {}
    return iconfig.get("LOGGING") or {}


def _drop_apsbits_file_handlers():
    """Remove FileHandlers a previous configure_logging run added to root."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if isinstance(handler, logging.FileHandler):
            root.removeHandler(handler)
            handler.close()
