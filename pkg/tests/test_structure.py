import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from solvpair.derivation import Derivation
from solvpair.exactalg import Poly, parse
from solvpair.fixtures import (acceptance_fixtures, block21, commutative_plane, enveloping,
                               jordan_plane, maximal, non_diagonalizable21, two_blocks,
                               unimodular_offset, zero_delta)
from solvpair.linalg import RatMatrix
from solvpair.pair import jordan_pair, validate
from solvpair.randpoly import random_poly
from solvpair import structure as st_

from strategies import small_rats


def test_jordan_reduce_identity_on_canonical_input():
    b = st_.jordan_reduce(two_blocks(1, 3))
    assert b.M == RatMatrix.identity(4)
    assert b.jordan_type == (2, 2) and b.offsets == (1, 3)
    assert b.eigenvalues == (1, 2, 3, 4)


def test_jordan_reduce_orders_blocks_by_size():
    b = st_.jordan_reduce(jordan_pair([1, 3], [5, 0]))
    assert b.jordan_type == (3, 1)
    assert b.offsets == (0, 5)


def test_jordan_reduce_shifted_eigenvector():
    b = st_.jordan_reduce(block21(1, 0, 5, 0, 2))
    assert b.jordan_type == (2, 1) and b.offsets == (1, 2)
    assert b.new_variables()[2] == parse("X2 + 5*X0", 3)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.data())
def test_jordan_reduce_undoes_random_conjugation(blocks, data):
    blocks = sorted(blocks, reverse=True)
    offsets = [data.draw(small_rats) for _ in blocks]
    canon = jordan_pair(blocks, offsets)
    n = canon.nvars
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    while True:
        m = RatMatrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if m.det():
            break
    dm = m @ canon.delta.linear_matrix @ m.inverse()
    gm = m @ canon.gamma.linear_matrix @ m.inverse()
    p = validate(Derivation.from_matrix(dm), Derivation.from_matrix(gm))
    b = st_.jordan_reduce(p)
    assert b.jordan_type == tuple(blocks)
    assert sorted(b.eigenvalues) == sorted(canon.gamma.linear_matrix[i][i] for i in range(n))
    minv = b.M.inverse()
    assert minv @ dm @ b.M == b.canonical_pair().delta.linear_matrix
    assert minv @ gm @ b.M == b.canonical_pair().gamma.linear_matrix


def test_needs_field_extension():
    with pytest.raises(st_.NeedsFieldExtension, match="not diagonalizable"):
        st_.jordan_reduce(non_diagonalizable21(1))
    g = Derivation.from_matrix([[0, 2], [1, 0]])  # eigenvalues +-sqrt(2)
    with pytest.raises(st_.NeedsFieldExtension, match="irrational"):
        st_.jordan_reduce(validate(Derivation.zero(2), g))


def test_jordan_type_from_ranks():
    assert st_.jordan_type(jordan_pair([3, 1, 2], [0, 0, 0]).delta.linear_matrix) == (3, 2, 1)
    assert st_.jordan_type(RatMatrix.zeros(3)) == (1, 1, 1)


def test_poisson_matrix_entry():
    a = Fraction(2, 7)
    p = two_blocks(a, 3)
    assert st_.poisson_matrix(p)[0][1] == parse("X0^2", 4).scale(-a)


@pytest.mark.parametrize("pair", [maximal(2, 1), two_blocks(1, 3), jordan_plane(2), enveloping([1, 2])])
def test_generic_rank_is_two(pair):
    assert st_.generic_rank(pair, samples=6, seed=3) == 2


def test_generic_rank_zero_for_commutative():
    assert st_.generic_rank(commutative_plane()) == 0


def test_diagonal_bracket_formula():
    p = jordan_pair([2, 1, 2], [Fraction(1, 3), 2, -1])
    lam = [p.gamma.linear_matrix[i][i] for i in range(p.nvars)]
    xs = p.variables()
    for i in range(p.nvars):
        for j in range(p.nvars):
            expected = (p.delta(xs[i]) * xs[j]).scale(lam[j]) - (p.delta(xs[j]) * xs[i]).scale(lam[i])
            assert p.bracket(xs[i], xs[j]) == expected


def test_modular_derivation_vanishes_for_unimodular_single_block():
    assert st_.modular_derivation(maximal(2, Fraction(-2, 3))).is_zero()
    assert not st_.modular_derivation(maximal(2, 0)).is_zero()


@pytest.mark.parametrize("n", range(1, 6))
def test_unimodular_offset(n):
    p = maximal(n, unimodular_offset(n))
    assert st_.gamma_trace(p) == 1
    # trace formula for one block: (n+1)(a + n/2)
    a = Fraction(1, 3)
    assert st_.gamma_trace(maximal(n, a)) == (n + 1) * (a + Fraction(n, 2))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.data())
def test_unimodular_iff_trace_one(blocks, data):
    blocks = sorted(blocks)
    offsets = [data.draw(small_rats) for _ in blocks]
    # force the trace formula sum n_t a_t + C(n_t, 2) = 1 half of the time
    if data.draw(st.booleans()):
        rest = sum(n * a + comb(n, 2) for n, a in zip(blocks[1:], offsets[1:]))
        offsets[0] = (1 - rest - comb(blocks[0], 2)) / Fraction(blocks[0])
    p = jordan_pair(blocks, offsets)
    trace = sum(n * a + comb(n, 2) for n, a in zip(blocks, offsets))
    assert st_.gamma_trace(p) == trace
    if not p.delta.is_zero():
        assert st_.modular_derivation(p).is_zero() == (trace == 1)


@pytest.mark.parametrize("a,b,c,d", [(1, 0, 0, 0), (Fraction(1, 2), 3, 0, 0), (2, 0, 1, 0)])
def test_block21_unimodular_condition(a, b, c, d):
    e = -2 * Fraction(a)
    assert st_.modular_derivation(block21(a, b, c, d, e)).is_zero()
    assert not st_.modular_derivation(block21(a, b, c, d, e + 1)).is_zero()


def test_strongly_normal_space_single_block():
    spaces = dict(st_.strongly_normal_space(maximal(2, 0), 2))
    assert spaces[2] == [parse("2*X0*X2 - X1^2", 3)]
    assert spaces[0] == [parse("X0^2", 3)]


def test_strongly_normal_space_zero_delta():
    spaces = st_.strongly_normal_space(zero_delta([1, 2]), 2)
    assert [(lam, len(v)) for lam, v in spaces] == [(2, 1), (3, 1), (4, 1)]


def test_strongly_normal_behaviour_of_g():
    p = maximal(2, 0)
    g = parse("2*X0*X2 - X1^2", 3)
    assert st_.check_strongly_normal_behavior(p, g, 2, 3)
    with pytest.raises(ValueError, match="not strongly normal"):
        st_.check_strongly_normal_behavior(p, g, 1, 2)


def test_normal_search_finds_no_extra_normal_elements():
    for p in [maximal(2, 0), maximal(2, 1), two_blocks(1, 3)]:
        for d in (1, 2):
            assert st_.normal_falsification(p, d) == []
    assert st_.is_normal(maximal(2, 0), parse("2*X0*X2 - X1^2", 3))
    assert not st_.is_normal(maximal(2, 0), parse("X1", 3))


def test_center_examples():
    assert st_.center(jordan_plane(2), 3) == [Poly.const(1, 2)]
    assert st_.center(enveloping([1, 2]), 3) == [Poly.const(1, 3)]
    assert len(st_.center(commutative_plane(), 2)) == 6


def test_center_contains_kernel_intersection():
    # ker delta cap ker gamma = k[X0^3 X2^... ] with integer weights
    p = jordan_pair([2, 1], [1, -2])
    z = st_.center(p, 3)
    k = st_.kernel_intersection(p, 3)
    assert st_.same_space(z, k)
    assert parse("X0^2*X2", 3) in k


def test_center_poisson_variant():
    p = jordan_pair([2, 1], [1, -2])
    assert st_.same_space(st_.center(p, 3, poisson=True), st_.kernel_intersection(p, 3))


PDER_TABLE = [
    (maximal(2, 1), 2), (maximal(3, 1), 2), (maximal(4, 1), 2), (maximal(1, 1), 2),
    (two_blocks(1, 3), 3),
    (jordan_pair([2, 1], [1, Fraction(1, 3)]), 4),
    (jordan_pair([2, 1, 1], [1, Fraction(1, 3), Fraction(5, 7)]), 6),
    (jordan_pair([2, 1, 1, 1], [1, Fraction(1, 3), Fraction(5, 7), 9]), 8),
    (jordan_pair([3, 2], [1, 7]), 3),
    (jordan_pair([2, 2, 1], [1, 7, 13]), 4),
    (zero_delta([1, 2, 3]), 9),
    (non_diagonalizable21(1), 4), (non_diagonalizable21(0), 6),
]


@pytest.mark.parametrize("pair,dim", PDER_TABLE)
def test_pder_dimensions(pair, dim):
    basis = st_.pder_basis(pair)
    assert len(basis) == dim
    for m in basis:
        assert st_.is_poisson_derivation(pair, Derivation.from_matrix(m))


def test_pder_max_block_is_identity_and_delta():
    p = maximal(3, 1)
    basis = st_.pder_basis(p)
    span = [sum((r for r in m.rows), []) for m in basis]
    for m in (RatMatrix.identity(4), p.delta.linear_matrix):
        from solvpair.linalg import in_span
        assert in_span(sum((r for r in m.rows), []), span)


def test_relations_two_blocks_commutator_identity():
    a, b = Fraction(2, 3), Fraction(-5, 2)
    p = two_blocks(a, b)
    rels = st_.relations(p)
    assert all(r.holds for r in rels) and len(rels) == 6
    x = p.variables()
    s = p.star
    lhs = s(x[1], x[3]) - s(x[3], x[1])
    rhs = s(x[0], x[3]).scale(b + 1) - s(x[1], x[2]).scale(a + 1) + s(x[0], x[2]).scale((a + 1) * b)
    assert lhs == rhs
    assert s(x[0], x[2]) == s(x[2], x[0])
    assert s(x[0], x[1]) - s(x[1], x[0]) == s(x[0], x[0]).scale(-a)


def test_relations_in_twisted_coordinates():
    p = block21(Fraction(1, 2), 0, 5, 0, Fraction(3, 2))
    rels = st_.relations(p)
    assert all(r.holds for r in rels)


def test_relation_text():
    rels = st_.relations(two_blocks(1, 3))
    names = ["X0", "X1", "X2", "X3"]
    assert rels[0].format(names) == "X1*X0 - X0*X0 = X0*X1"
    assert rels[4].format(names) == "X3*X1 - 2*X2*X1 = X1*X3 - 4*X0*X3"


@pytest.mark.parametrize("d,expected", [(1, 4), (2, 10), (3, 20), (4, 35)])
def test_hilbert_two_blocks(d, expected):
    res = st_.hilbert_check(two_blocks(1, 3), d)
    assert res.rank == res.expected == expected


def test_hilbert_small():
    assert st_.hilbert_check(maximal(1, 1), 3).rank == 4


def test_quotient_by_kernel_variable():
    p = two_blocks(1, 3)
    q = st_.quotient_pair(p, 0)
    assert q.nvars == 3
    rng = random.Random(5)
    for _ in range(20):
        f, g = random_poly(rng, 4), random_poly(rng, 4)
        assert st_.reduce_mod(p.star(f, g), 0) == q.star(st_.reduce_mod(f, 0), st_.reduce_mod(g, 0))
    with pytest.raises(ValueError):
        st_.quotient_pair(p, 1)


def test_commutative_classification_agrees():
    cases = [commutative_plane(), maximal(1, 0), zero_delta([1, 5]), maximal(1, 1), maximal(2, 0),
             jordan_pair([2, 1], [0, 1]), jordan_pair([2, 1], [0, 0])]
    for p in cases:
        expected = all(not e for row in st_.poisson_matrix(p) for e in row)
        assert st_.is_commutative(p) == st_.commutative_by_classification(p) == expected


def test_report_unimodular_single_block():
    rep = st_.structure_report(maximal(2, Fraction(-2, 3))).to_json()
    assert rep["trace"] == "1" and rep["nakayama_c"] == "0"
    assert rep["unimodular"] is True and rep["calabi_yau"] is True and rep["generic"] is True
    assert rep["jordan_type"] == [3] and rep["offsets"] == ["-2/3"]
    assert rep["pder_dim"] == 2 and rep["commutative"] is False


def test_report_non_generic_flags_hypotheses():
    rep = st_.structure_report(non_diagonalizable21(1)).to_json()
    assert rep["generic"] is False and rep["calabi_yau"] is None
    assert rep["hypotheses"] == "hypotheses not met"
    assert rep["offsets"] is None and rep["jordan_type"] == [2, 1]


def test_report_commutative():
    rep = st_.structure_report(commutative_plane()).to_json()
    assert rep["commutative"] is True and rep["calabi_yau"] is True
    assert rep["center_dims"] == [1, 3, 6]


@pytest.mark.parametrize("name,p", list(acceptance_fixtures().items()))
def test_nakayama_star_twist_for_generic(name, p):
    # phi_c with c = 1 - trace is a star automorphism; it is the identity exactly when unimodular
    if not st_.is_generic(p):
        return
    c = 1 - st_.gamma_trace(p)
    x = p.variables()
    for f in x:
        for g in x:
            assert p.phi(c, p.star(f, g)) == p.star(p.phi(c, f), p.phi(c, g))
    identity = all(p.phi(c, f) == f for f in x)
    assert identity == st_.modular_derivation(p).is_zero()
