"""Exact checks of the algebraic identities satisfied by a solvable pair.

Each function returns True when the identity holds on the given inputs.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .combinat import binom_solve
from .derivation import Derivation
from .exactalg import Poly
from .pair import SolvablePair


def leibniz(d: Derivation, f: Poly, g: Poly) -> bool:
    return d(f * g) == d(f) * g + f * d(g)


def associativity(p: SolvablePair, f: Poly, g: Poly, h: Poly) -> bool:
    return p.star(p.star(f, g), h) == p.star(f, p.star(g, h))


def jacobi(p: SolvablePair, f: Poly, g: Poly, h: Poly) -> bool:
    b = p.bracket
    return not (b(f, b(g, h)) + b(g, b(h, f)) + b(h, b(f, g)))


def t_coefficient(f: Poly, k: int) -> Poly:
    """Coefficient of t^k, t being the last variable."""
    n = f.nvars - 1
    return Poly(n, {m[:n]: c for m, c in f.terms.items() if m[n] == k})


def semiclassical_limit(p: SolvablePair, f: Poly, g: Poly) -> bool:
    """First-order term of the deformed commutator is the bracket; zeroth order vanishes."""
    comm = p.star_t(f, g) - p.star_t(g, f)
    return not t_coefficient(comm, 0) and t_coefficient(comm, 1) == p.bracket(f, g)


def semiclassical_bound(p: SolvablePair, f: Poly, g: Poly) -> bool:
    """epsilon(f*g - g*f - {f,g}) <= epsilon(f) + epsilon(g) - 2."""
    rest = p.star(f, g) - p.star(g, f) - p.bracket(f, g)
    return p.epsilon(rest) <= p.epsilon(f) + p.epsilon(g) - 2


def id_plus_delta(p: SolvablePair, f: Poly, g: Poly) -> bool:
    fg = p.star(f, g)
    return p.star(p.id_plus_delta(f), p.id_plus_delta(g)) == fg + p.delta(fg)


def log_delta_leibniz(p: SolvablePair, f: Poly, g: Poly) -> bool:
    ld = p.log_delta
    return ld(p.star(f, g)) == p.star(ld(f), g) + p.star(f, ld(g))


def phi_automorphism(p: SolvablePair, a, f: Poly, g: Poly) -> bool:
    return p.phi(a, p.star(f, g)) == p.star(p.phi(a, f), p.phi(a, g))


def phi_group(p: SolvablePair, a, b, f: Poly) -> bool:
    return p.phi(a, p.phi(b, f)) == p.phi(Fraction(a) + Fraction(b), f)


def delta_from_phis(p: SolvablePair, a, f: Poly) -> bool:
    """delta(f) = sum_k alpha_k phi_{k a}(f) whenever delta^(n+1)(f) = 0, n = epsilon(f)."""
    n = max(p.epsilon(f), 1)
    alphas = binom_solve(n, a)
    rebuilt = Poly.zero(p.nvars)
    for k, alpha in enumerate(alphas):
        rebuilt = rebuilt + p.phi(k * Fraction(a), f).scale(alpha)
    return rebuilt == p.delta(f)


def operator_identities(p: SolvablePair, f: Poly, top: int = 3) -> bool:
    """Commutation rules between powers of delta and the binomials binom(gamma, k), on f."""
    d, g = p.delta, p.gamma
    for i in range(top + 1):
        # delta^i gamma = gamma delta^i + i delta^i
        if d.power(i, g(f)) != g(d.power(i, f)) + d.power(i, f).scale(i):
            return False
    for i in range(top):
        for k in range(top):
            lhs = d.power(i, g.binom_apply(k, f))
            rhs = Poly.zero(p.nvars)
            di = d.power(i, f)
            for l in range(min(i, k) + 1):
                rhs = rhs + g.binom_apply(k - l, di).scale(comb(i, l))
            if lhs != rhs:
                return False
    return True
