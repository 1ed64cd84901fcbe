"""
Weights, blocks, interval modules, homotopy homs, partitions and series.
"""

from .gl1block import BlockKey  # noqa: F401
from .gl1block import block_key  # noqa: F401
from .gl1block import default_block  # noqa: F401
from .homotopy import HoObject  # noqa: F401
from .homotopy import ho_reduce  # noqa: F401
from .homotopy import hom_dim  # noqa: F401
from .intervalcat import BlockObject  # noqa: F401
from .intervalcat import parse_object  # noqa: F401
from .kzero import KSeries  # noqa: F401
from .kzero import minimal_model_series  # noqa: F401
from .weights import Weight  # noqa: F401
from .weights import parse_weight  # noqa: F401
