"""Exact enumeration and moments of simultaneous core partitions with distinct parts."""

from .exact import ExactRational, Poly, QuadraticNumber, TruncatedSeries
from .exceptions import (
    BudgetExceededError,
    CorepartError,
    InfiniteFamilyError,
    NonInvertibleSeriesError,
    SingularCaseError,
)
from .moments import GKey, GTable, g, m_seq, moment, n_seq, power_sum
from .nice import NiceSubset, psi, psi_inverse
from .partitions import Partition, enumerate_core

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError", "CorepartError", "ExactRational", "GKey", "GTable",
    "InfiniteFamilyError", "NiceSubset", "NonInvertibleSeriesError", "Partition",
    "Poly", "QuadraticNumber", "SingularCaseError", "TruncatedSeries",
    "enumerate_core", "g", "m_seq", "moment", "n_seq", "power_sum", "psi",
    "psi_inverse",
]
