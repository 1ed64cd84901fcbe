"""
Exact combinatorics of the homotopy category of GL(m|n) representations.

This package provides weight and block bookkeeping for the general linear
supergroup, the GL(m|1) interval-module and homotopy-hom calculus, power
series in the Grothendieck ring and the partition identities behind
V(1) tensor V(1)*.
"""

from gl_homotopy.utils.logging_helper import setup_logging

setup_logging()
