"""Seeded random polynomials and rationals."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import Poly, monomials_up_to

COEFFICIENTS = (-3, -2, -1, 1, 2, 3)


@dataclass(frozen=True)
class RandomPolyConfig:
    max_degree: int = 3
    max_terms: int = 4
    min_degree: int = 0


def random_poly(rng: random.Random, nvars: int, cfg: RandomPolyConfig = RandomPolyConfig()) -> Poly:
    monos = [m for m in monomials_up_to(nvars, cfg.max_degree) if sum(m) >= cfg.min_degree]
    k = rng.randint(1, cfg.max_terms)
    terms = {}
    for m in rng.sample(monos, min(k, len(monos))):
        terms[m] = Fraction(rng.choice(COEFFICIENTS))
    return Poly(nvars, terms)


def random_rational(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
