"""Exact algebra of solvable pairs of derivations and their star products."""
from .exactalg import Poly, parse
from .derivation import Derivation
from .pair import SolvablePair, validate, pair_from_json, jordan_pair

__all__ = ["Poly", "parse", "Derivation", "SolvablePair", "validate", "pair_from_json", "jordan_pair"]
