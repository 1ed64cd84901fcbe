"""
Locate and activate the iconfig.yml configuration.

The configuration itself lives in ``apsbits.utils.config_loaders``; this
module only decides which file to load and hands out copies of its blocks.

.. autosummary::
    ~iconfig_path
    ~load_iconfig
    ~config_section
"""

from __future__ import annotations

import copy
import logging
import os
import pathlib
from typing import Any

from apsbits.utils.config_loaders import get_config
from apsbits.utils.config_loaders import load_config
from apsbits.utils.config_loaders import load_config_yaml
from apsbits.utils.config_loaders import update_config

from ..errors import ConfigError

logger = logging.getLogger(__name__)

__all__ = """
    iconfig_path
    load_iconfig
    config_section
""".split()

ENV_ICONFIG = "GL_HOMOTOPY_ICONFIG"

DEFAULT_ICONFIG = (
    pathlib.Path(__file__).resolve().parent.parent / "configs" / "iconfig.yml"
)


def iconfig_path(path: str | os.PathLike | None = None) -> pathlib.Path:
    """``path``, else ``$GL_HOMOTOPY_ICONFIG``, else the packaged iconfig."""
    if path is None:
        path = os.environ.get(ENV_ICONFIG) or DEFAULT_ICONFIG
    return pathlib.Path(path).expanduser()


def load_iconfig(path: str | os.PathLike | None = None) -> dict[str, Any]:
    """Make the file chosen by :func:`iconfig_path` the active configuration.

    Keys of a previously loaded file do not survive.  Returns
    ``apsbits.utils.config_loaders.get_config()``.
    """
    path = iconfig_path(path)
    if not path.exists():
        raise ConfigError(f"Configuration file {path} does not exist.")
    loaded = load_config_yaml(path)
    if loaded is not None and not isinstance(loaded, dict):
        raise ConfigError(
            f"Configuration file {path} must hold a mapping, "
            f"found {type(loaded).__name__}."
        )

    get_config().clear()
    load_config(path)
    update_config({"ICONFIG_PATH": str(path)})
    logger.debug("Loaded iconfig from %s", path)
    return get_config()


def config_section(name: str) -> dict[str, Any]:
    """Return a copy of one top-level block (empty dict when absent).

    The packaged iconfig is loaded on first use.
    """
    if not get_config():
        load_iconfig()
    return copy.deepcopy(get_config().get(name) or {})
