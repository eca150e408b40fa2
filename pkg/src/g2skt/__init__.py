"""Exact computation of the left-invariant SKT metrics on the compact Lie group G2.

Arithmetic is exact over Q(sqrt3, i); floating point appears only in the
randomized cross-checks of :mod:`g2skt.numeric`.
"""

from .hermitian import MetricParams3, solve_skt, skt_lambdas, skt_metric, torsion_c, torsion_dc
from .scalars import FieldElement

__version__ = "0.1.0"

__all__ = ["FieldElement", "MetricParams3", "solve_skt", "skt_lambdas", "skt_metric", "torsion_c", "torsion_dc"]
