"""Finite-model workbench for bilocales.

Builds finite frames, enumerates their sublocales, assembles bilocales,
classifies (i, j)-nowhere dense and (i, j)-remote sublocales, and runs
every registered structural law against exhaustively generated desk-scale
structures, reporting counterexamples when a law fails.
"""

from .kernel import BACKEND
from .lattice import FiniteLattice, build_lattice, check_frame, heyting, \
    is_complemented, pseudocomplement
from .sublocales import Sublocale, enumerate_sublocales, is_sublocale
from .bilocales import Bilocale, Subframe, classify_bilocale, rmt, \
    validate_bilocale

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "FiniteLattice", "Sublocale", "Subframe", "Bilocale",
    "build_lattice", "check_frame", "heyting", "pseudocomplement",
    "is_complemented", "is_sublocale", "enumerate_sublocales",
    "validate_bilocale", "classify_bilocale", "rmt", "__version__",
]
