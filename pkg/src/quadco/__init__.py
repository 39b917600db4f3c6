"""Exact computations with admissible quadratic coalgebras over F2."""

from quadco.quadratic import AdmissibleSpec, CheckResult, Window
from quadco.singer import IndexPair, gamma_plus_spec, gamma_spec
from quadco.steenrod import QElement, adem_expand, normalize

__all__ = [
    "AdmissibleSpec",
    "CheckResult",
    "IndexPair",
    "QElement",
    "Window",
    "adem_expand",
    "gamma_plus_spec",
    "gamma_spec",
    "normalize",
]

__version__ = "0.1.0"
