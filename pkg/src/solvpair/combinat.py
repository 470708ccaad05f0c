"""Generalized binomial coefficients and the binomial matrix."""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from .exactalg import to_rat
from .linalg import RatMatrix, solve


def gbinom(a, k: int) -> Fraction:
    """binom(a, k) = a(a-1)...(a-k+1)/k! for rational a; zero when k < 0."""
    if k < 0:
        return Fraction(0)
    a = to_rat(a)
    num = Fraction(1)
    for i in range(k):
        num *= a - i
    return num / factorial(k)


class GBinomTable:
    """Memoized gbinom values keyed by (a, k)."""

    def __init__(self):
        self._rows: Dict[Fraction, List[Fraction]] = {}

    def __call__(self, a, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        a = to_rat(a)
        row = self._rows.setdefault(a, [Fraction(1)])
        while len(row) <= k:
            j = len(row)
            row.append(row[-1] * (a - j + 1) / j)
        return row[k]

    def __len__(self):
        return sum(len(r) for r in self._rows.values())


def binom_matrix(n: int, a) -> RatMatrix:
    """M(a) with entry (k, l) = binom(k*a, l) for 0 <= k, l <= n."""
    a = to_rat(a)
    return RatMatrix([[gbinom(k * a, l) for l in range(n + 1)] for k in range(n + 1)])


def binom_det_formula(n: int, a) -> Fraction:
    return to_rat(a) ** (n * (n + 1) // 2)


def binom_solve(n: int, a) -> Tuple[Fraction, ...]:
    """Coefficients alpha_k with sum_k alpha_k binom(k*a, l) = [l == 1] for l <= n.

    These express the derivation as a combination of the automorphisms
    phi_{k*a} on elements killed by its (n+1)-st power.
    """
    a = to_rat(a)
    if a == 0:
        raise ValueError("binom_solve needs a != 0: the binomial matrix is singular")
    m = binom_matrix(n, a).transpose()
    rhs = [Fraction(int(l == 1)) for l in range(n + 1)]
    sol = solve(m.rows, rhs)
    if sol is None:
        raise ArithmeticError("binomial system unexpectedly inconsistent")
    return tuple(sol)
