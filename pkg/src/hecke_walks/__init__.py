"""Exact affine Hecke algebra arithmetic via alcove walks."""

from .alcove import STANDARD, Apartment, Hyperplane, Orientation, apartment
from .bernstein import Theta, Theta_minus, t_elem, theta, verify_bernstein
from .hecke import BudgetExceeded, HeckeAlgebra, HeckeElement, ParameterError
from .laurent import LaurentPoly
from .rootdata import RootDatum, RootDatumError, build_root_datum
from .walks import Step, WalkAlgebra, WalkWord, parse_steps
from .weyl import AffineElement, AffineWeylGroup, Word, weyl_group

__version__ = "0.1.0"

__all__ = [
    "STANDARD", "AffineElement", "AffineWeylGroup", "Apartment", "BudgetExceeded", "HeckeAlgebra",
    "HeckeElement", "Hyperplane", "LaurentPoly", "Orientation", "ParameterError", "RootDatum",
    "RootDatumError", "Step", "Theta", "Theta_minus", "WalkAlgebra", "WalkWord", "Word", "apartment",
    "build_root_datum", "parse_steps", "t_elem", "theta", "verify_bernstein", "weyl_group",
]
