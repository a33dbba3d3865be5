"""Exact S_n-equivariant Poincare polynomials of generalized Hessenberg
varieties over Z[q], with three independent evaluators and a brute-force
chromatic quasi-symmetric function oracle."""

from .engine import (
    Engine,
    PoincarePoly,
    compute,
    permutohedral_q,
    poincare_admissible,
    poincare_alg1,
    poincare_alg2,
    poincare_general,
)
from .hessfn import GenHessFn, parse
from .qpoly import QPoly, q_binomial, q_factorial, q_int
from .symfunc import SymFunc

__version__ = "0.1.0"

__all__ = [
    "Engine",
    "GenHessFn",
    "PoincarePoly",
    "QPoly",
    "SymFunc",
    "compute",
    "parse",
    "permutohedral_q",
    "poincare_admissible",
    "poincare_alg1",
    "poincare_alg2",
    "poincare_general",
    "q_binomial",
    "q_factorial",
    "q_int",
    "__version__",
]
