import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from solvpair.derivation import Derivation
from solvpair.exactalg import parse
from solvpair.fixtures import maximal, two_blocks
from solvpair.pair import validate
from solvpair.randpoly import random_poly
from solvpair.slicing import LaurentPoly, dixmier_pi, kernel_generators, localize, ore_check

from strategies import polys


def test_slice_element():
    p = maximal(2, 1)
    ctx = localize(p, p.var(1))
    assert ctx.u == 0 and ctx.scale == 1
    assert str(ctx.s) == "X0^-1*X1"
    assert ctx.delta(ctx.s) == 1


def test_slice_with_scaled_or_shifted_r():
    p = maximal(2, 1)
    ctx = localize(p, parse("X1 + X0", 3))
    assert ctx.delta(ctx.s) == 1
    ctx = localize(p, parse("3*X1", 3))
    assert ctx.scale == 3 and ctx.delta(ctx.s) == 1


def test_slice_rejects_bad_r():
    p = maximal(2, 1)
    with pytest.raises(ValueError, match="delta\\(r\\) != 0"):
        localize(p, p.var(0))
    with pytest.raises(ValueError, match="delta\\^2\\(r\\) = 0"):
        localize(p, p.var(2))


def test_slice_needs_reduced_coordinates():
    p = validate(Derivation.from_strings(["0", "X0 + X2", "0"]), Derivation.from_strings(["0", "X1", "0"]))
    with pytest.raises(ValueError, match="reduce the pair"):
        localize(p, p.var(1))


def test_pi_of_top_variable():
    p = maximal(2, 1)
    ctx = localize(p, p.var(1))
    y = dixmier_pi(ctx, p.var(2))
    x0inv = ctx.inverse_u()
    assert y == ctx.lift(p.var(2)) - ctx.lift(p.var(1) ** 2) * x0inv * Fraction(1, 2)
    assert ctx.delta(y) == 0
    assert ctx.gamma(y) == y.scale(3)
    gens = kernel_generators(ctx)
    assert [(i, lam) for i, _, lam in gens] == [(0, 1), (2, 3)]


def test_pi_projects():
    p = maximal(3, 0)
    ctx = localize(p, p.var(1))
    assert not ctx.pi(ctx.s)
    for x in p.variables():
        y = ctx.pi(x)
        assert ctx.pi(y) == y


@settings(max_examples=30, deadline=None)
@given(polys(3), polys(3))
def test_pi_is_multiplicative_and_commutes_with_gamma(f, g):
    p = maximal(2, 1)
    ctx = localize(p, p.var(1))
    assert ctx.pi(f * g) == ctx.pi(f) * ctx.pi(g)
    assert not ctx.delta(ctx.pi(f))
    # gamma(s) = s here, so pi intertwines gamma
    assert ctx.gamma(ctx.s) == ctx.s
    assert ctx.pi(p.gamma(f)) == ctx.gamma(ctx.pi(f))


@settings(max_examples=30, deadline=None)
@given(polys(3))
def test_s_expansion_reconstructs(f):
    ctx = localize(maximal(2, 1), parse("X1", 3))
    coeffs = ctx.s_coefficients(f)
    rebuilt = LaurentPoly(3, 0)
    for j, c in enumerate(coeffs):
        assert not ctx.delta(c)
        rebuilt = rebuilt + c * ctx.s ** j
    assert rebuilt == ctx.lift(f)


def test_localized_star_extends_star():
    p = two_blocks(1, 3)
    ctx = localize(p, p.var(1))
    rng = random.Random(2)
    for _ in range(15):
        f, g = random_poly(rng, 4), random_poly(rng, 4)
        assert ctx.star(f, g) == ctx.lift(p.star(f, g))


@pytest.mark.parametrize("pair,r", [
    (maximal(2, 1), "X1"), (maximal(3, Fraction(-5, 4)), "X1"), (two_blocks(1, 3), "X3"),
    (two_blocks(Fraction(1, 2), 2), "X1"),
])
def test_ore_check(pair, r):
    res = ore_check(localize(pair, pair.parse(r)), 3)
    assert res.delta_s_is_one and res.left_multiplication and res.commutation
    assert res.s_powers and res.s_square and res.ok
    assert res.kernel_elements > 0


def test_s_square():
    ctx = localize(maximal(2, 1), parse("X1", 3))
    s = ctx.s
    assert ctx.star(s, s) == s * s + ctx.gamma(s)
