"""Exact q,t-computations with modified Macdonald polynomials, the nabla
operator, its closed-form expansions on e_n and p_n, and the Hilbert-scheme
fixed-point localization that recovers the same symmetric functions."""

from .partitions import Partition, partitions_of
from .qt_coeff import QTFraction, QTLaurent
from .symfun import SymFun

__all__ = ["Partition", "partitions_of", "QTFraction", "QTLaurent", "SymFun"]

__version__ = "0.1.0"
