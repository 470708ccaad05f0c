"""Structural invariants of a solvable pair.

Everything here is exact linear algebra over Q on finite-dimensional
graded pieces: Jordan reduction, Poisson matrix, modular derivation,
centers, Poisson derivations, normal elements and the quadratic
presentation of the star algebra.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .derivation import Derivation, divergence
from .exactalg import (Monomial, Poly, coefficient_vector, format_rat, from_vector,
                       monomials_of_degree, monomials_up_to)
from .linalg import (RatMatrix, charpoly, eigenspace, in_span, intersect_kernels,
                     nullspace, rank, rational_roots, rref, solve)
from .pair import AdaptedBasisRef, SolvablePair, check_adapted, jordan_pair, validate
from .combinat import gbinom


class NeedsFieldExtension(ValueError):
    pass


# helpers: linear maps between spans of monomials

def map_matrix(fn: Callable[[Poly], Poly], domain: Sequence[Monomial], nvars: int):
    """Matrix of a linear map on span(domain); rows indexed by the returned codomain."""
    images = [fn(Poly.monomial(m)) for m in domain]
    codomain = sorted({m for img in images for m in img.terms}, key=lambda m: (sum(m), m))
    index = {m: i for i, m in enumerate(codomain)}
    rows = [[Fraction(0)] * len(domain) for _ in codomain]
    for j, img in enumerate(images):
        for m, c in img.terms.items():
            rows[index[m]][j] = c
    return rows, codomain


def kernel_of_maps(fns: Sequence[Callable[[Poly], Poly]], domain: Sequence[Monomial], nvars: int) -> List[Poly]:
    rows = []
    for fn in fns:
        r, _ = map_matrix(fn, domain, nvars)
        rows.extend(r)
    return [primitive(from_vector(v, domain, nvars)) for v in nullspace(rows, len(domain))]


def primitive(f: Poly) -> Poly:
    """Scale to coprime integer coefficients with a positive top term."""
    if not f:
        return f
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in f.terms.values():
        num = gcd(num, int(c * den))
    top = max(f.terms, key=lambda m: (sum(m), m))
    s = Fraction(den, num) * (1 if f.terms[top] > 0 else -1)
    return f.scale(s)


def _linear_form(col: Sequence[Fraction]) -> Poly:
    n = len(col)
    return Poly(n, {tuple(int(r == i) for r in range(n)): c for i, c in enumerate(col)})


def _require_linear(p: SolvablePair, what: str):
    if not p.is_linear:
        raise ValueError(f"{what} needs a linear pair (delta and gamma preserve degree)")


# Jordan reduction

def jordan_type(m: RatMatrix) -> Tuple[int, ...]:
    """Block sizes of a nilpotent matrix, decreasing, from ranks of powers."""
    n = m.nrows
    ranks = [n]
    pw = RatMatrix.identity(n)
    while ranks[-1]:
        pw = pw @ m
        r = pw.rank()
        if r == ranks[-1]:
            raise ValueError("matrix is not nilpotent")
        ranks.append(r)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes = []
    for k in range(len(at_least), 0, -1):
        exact = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        sizes.extend([k] * exact)
    return tuple(sizes)


def _first_nonzero(v: Sequence[Fraction]) -> int:
    return next(i for i, x in enumerate(v) if x)


def _build_chains(dmat: RatMatrix, gmat: RatMatrix | None):
    """Jordan chains of dmat; with gmat, every chain vector is a gmat-eigenvector."""
    n = dmat.nrows
    powers = [RatMatrix.identity(n)]
    while not powers[-1].is_zero():
        powers.append(powers[-1] @ dmat)
    depth = len(powers) - 1
    if gmat is None:
        groups = [None]
    else:
        roots, leftover = rational_roots(charpoly(gmat))
        if leftover:
            raise NeedsFieldExtension("needs field extension: gamma has irrational eigenvalues")
        if sum(len(eigenspace(gmat, lam)) for lam, _ in roots) != n:
            raise NeedsFieldExtension("needs field extension: gamma is not diagonalizable")
        groups = [lam for lam, _ in roots]
    ident = RatMatrix.identity(n)

    def level_space(i, lam):
        mats = [powers[i]]
        if lam is not None:
            mats.append(gmat - ident.scale(lam))
        return intersect_kernels(*mats) if i else []

    tops = []  # (vector, chain length, eigenvalue of the top)
    for i in range(depth, 0, -1):
        for lam in groups:
            current = list(level_space(i - 1, lam))
            for v, t, mu in tops:
                if lam is None or mu - (t - i) == lam:
                    current.append(powers[t - i] @ v)
            for cand in level_space(i, lam):
                if not in_span(cand, current):
                    tops.append((cand, i, lam))
                    current.append(cand)
    order = sorted(range(len(tops)), key=lambda k: (-tops[k][1], _first_nonzero(tops[k][0]), k))
    return [tops[k] for k in order], powers


@dataclass(frozen=True)
class AdaptedBasis:
    """Change of basis putting delta in Jordan form and gamma diagonal.

    Column j of ``M`` holds the old coordinates of the new variable Y_j.
    Blocks come in decreasing size; Y_{j,k} is variable j of block k.
    """
    M: RatMatrix
    jordan_type: Tuple[int, ...]
    offsets: Tuple[Fraction, ...]
    eigenvalues: Tuple[Fraction, ...]

    def labels(self) -> List[Tuple[int, int]]:
        return [(j, k) for k, size in enumerate(self.jordan_type) for j in range(size)]

    def ref(self) -> AdaptedBasisRef:
        return AdaptedBasisRef(self.M, tuple(j for j, _ in self.labels()))

    def new_variables(self) -> List[Poly]:
        return [_linear_form(c) for c in self.M.columns()]

    def canonical_pair(self) -> SolvablePair:
        return jordan_pair(list(self.jordan_type), list(self.offsets))


def jordan_reduce(p: SolvablePair) -> AdaptedBasis:
    """Adapted basis with M^-1 delta M in Jordan form and M^-1 gamma M diagonal."""
    _require_linear(p, "Jordan reduction")
    dmat, gmat = p.delta.linear_matrix, p.gamma.linear_matrix
    chains, powers = _build_chains(dmat, gmat)
    cols, eigs, sizes, offsets = [], [], [], []
    for v, t, lam in chains:
        for j in range(t):
            cols.append(powers[t - 1 - j] @ v)
            eigs.append(lam - (t - 1) + j)
        sizes.append(t)
        offsets.append(lam - (t - 1))
    m = RatMatrix.from_columns(cols)
    out = AdaptedBasis(m, tuple(sizes), tuple(offsets), tuple(eigs))
    minv = m.inverse()
    canon = out.canonical_pair()
    if minv @ dmat @ m != canon.delta.linear_matrix or minv @ gmat @ m != canon.gamma.linear_matrix:
        raise ArithmeticError("Jordan reduction failed its conjugation check")
    return out


def jordan_chain_basis(p: SolvablePair) -> AdaptedBasisRef:
    """A basis adapted to the kernels of delta^i; gamma is not used."""
    if not p.delta.is_linear:
        raise ValueError("the kernel filtration basis needs a linear delta")
    chains, powers = _build_chains(p.delta.linear_matrix, None)
    cols, weights = [], []
    for v, t, _ in chains:
        for j in range(t):
            cols.append(powers[t - 1 - j] @ v)
            weights.append(j)
    ref = AdaptedBasisRef(RatMatrix.from_columns(cols), tuple(weights))
    check_adapted(p, ref)
    return ref


def delta_jordan_type(p: SolvablePair) -> Tuple[int, ...]:
    _require_linear(p, "Jordan type")
    return jordan_type(p.delta.linear_matrix)


# Poisson data

def poisson_matrix(p: SolvablePair) -> List[List[Poly]]:
    xs = p.variables()
    return [[p.bracket(a, b) for b in xs] for a in xs]


def generic_rank(p: SolvablePair, samples: int = 8, seed: int = 0) -> int:
    """Largest rank of the Poisson matrix over seeded random integer points."""
    rng = random.Random(seed)
    pm = poisson_matrix(p)
    best = 0
    for _ in range(samples):
        pt = [Fraction(rng.randint(-9, 9)) for _ in range(p.nvars)]
        best = max(best, rank([[e.evaluate(pt) for e in row] for row in pm]))
    return best


def modular_derivation(p: SolvablePair) -> Derivation:
    """(1 - div gamma) delta, cross-checked against sum_k d/dX_k {X_k, -}."""
    m = p.delta.times(Poly.const(1, p.nvars) - divergence(p.gamma))
    if m != modular_derivation_direct(p):
        raise ArithmeticError("modular derivation formulas disagree")
    return m


def modular_derivation_direct(p: SolvablePair) -> Derivation:
    xs = p.variables()
    imgs = []
    for f in xs:
        acc = Poly.zero(p.nvars)
        for k, xk in enumerate(xs):
            acc = acc + p.bracket(xk, f).diff(k)
        imgs.append(acc)
    return Derivation(imgs)


def gamma_trace(p: SolvablePair) -> Optional[Fraction]:
    return p.gamma.linear_matrix.trace() if p.gamma.is_linear else None


def is_commutative(p: SolvablePair) -> bool:
    """Exact test: the generators star-commute."""
    xs = p.variables()
    return all(p.star(a, b) == p.star(b, a) for i, a in enumerate(xs) for b in xs[i + 1:])


def commutative_by_classification(p: SolvablePair) -> bool:
    """delta = 0, or rank one with ker gamma = ker delta on degree one."""
    _require_linear(p, "the commutativity classification")
    dmat, gmat = p.delta.linear_matrix, p.gamma.linear_matrix
    if dmat.is_zero():
        return True
    if dmat.rank() != 1:
        return False
    kd, kg = dmat.nullspace(), gmat.nullspace()
    return len(kd) == len(kg) and all(in_span(v, kd) for v in kg)


def is_generic(p: SolvablePair) -> bool:
    """Gamma diagonalizable over Q with distinct nonzero eigenvalues."""
    if not p.is_linear:
        return False
    try:
        b = jordan_reduce(p)
    except NeedsFieldExtension:
        return False
    return len(set(b.eigenvalues)) == p.nvars and all(b.eigenvalues)


# centers

def kernel_intersection(p: SolvablePair, d: int) -> List[Poly]:
    """Basis of ker delta intersect ker gamma inside polynomials of degree <= d."""
    return kernel_of_maps([p.delta, p.gamma], monomials_up_to(p.nvars, d), p.nvars)


def center(p: SolvablePair, d: int, poisson: bool = False) -> List[Poly]:
    """Basis of the (Poisson) center inside polynomials of degree <= d."""
    xs = p.variables()
    if poisson:
        fns = [lambda z, x=x: p.bracket(z, x) for x in xs]
    else:
        fns = [lambda z, x=x: p.star(z, x) - p.star(x, z) for x in xs]
    return kernel_of_maps(fns, monomials_up_to(p.nvars, d), p.nvars)


def same_space(a: Sequence[Poly], b: Sequence[Poly]) -> bool:
    monos = sorted({m for f in list(a) + list(b) for m in f.terms})
    va = [coefficient_vector(f, monos) for f in a]
    vb = [coefficient_vector(f, monos) for f in b]
    ra, rb = rank(va) if va else 0, rank(vb) if vb else 0
    return ra == rb == (rank(va + vb) if va or vb else 0)


# Poisson derivations

def _unit_derivation(n: int, row: int, col: int) -> Derivation:
    rows = [[int(i == row and j == col) for j in range(n)] for i in range(n)]
    return Derivation.from_matrix(rows)


def is_poisson_derivation(p: SolvablePair, d: Derivation) -> bool:
    xs = p.variables()
    for i, a in enumerate(xs):
        for b in xs[i + 1:]:
            if d(p.bracket(a, b)) != p.bracket(d(a), b) + p.bracket(a, d(b)):
                return False
    return True


def pder_basis(p: SolvablePair) -> List[RatMatrix]:
    """Basis of the degree-preserving Poisson derivations, as matrices (columns are images)."""
    _require_linear(p, "Poisson derivations")
    n = p.nvars
    xs = p.variables()
    units = [(r, c) for c in range(n) for r in range(n)]
    residuals = []
    for r, c in units:
        e = _unit_derivation(n, r, c)
        per_pair = []
        for i in range(n):
            for j in range(i + 1, n):
                per_pair.append(e(p.bracket(xs[i], xs[j])) - p.bracket(e(xs[i]), xs[j])
                                - p.bracket(xs[i], e(xs[j])))
        residuals.append(per_pair)
    rows = []
    npairs = n * (n - 1) // 2
    for k in range(npairs):
        monos = sorted({m for res in residuals for m in res[k].terms})
        for m in monos:
            rows.append([res[k].coeff(m) for res in residuals])
    out = []
    for v in nullspace(rows, len(units)):
        mat = [[Fraction(0)] * n for _ in range(n)]
        for (r, c), x in zip(units, v):
            mat[r][c] = x
        out.append(RatMatrix(mat))
    return out


# normal elements

def _independent(polys: List[Poly]) -> List[Poly]:
    monos = sorted({m for f in polys for m in f.terms})
    if not monos:
        return []
    red, _ = rref([coefficient_vector(f, monos) for f in polys], len(monos))
    return [from_vector(r, monos, polys[0].nvars) for r in red]


def _restrict_invariant(fn: Callable[[Poly], Poly], basis: List[Poly]) -> List[Poly]:
    """Largest subspace of span(basis) mapped into itself by fn."""
    while basis:
        k = len(basis)
        imgs = [fn(b) for b in basis]
        monos = sorted({m for f in basis + imgs for m in f.terms})
        cols = [coefficient_vector(f, monos) for f in imgs] + \
               [[-x for x in coefficient_vector(f, monos)] for f in basis]
        rows = [[col[i] for col in cols] for i in range(len(monos))]
        new = []
        for sol in nullspace(rows, len(cols)):
            v = Poly.zero(basis[0].nvars)
            for c, b in zip(sol[:k], basis):
                v = v + b.scale(c)
            new.append(v)
        new = _independent(new)
        if len(new) == k:
            return basis
        basis = new
    return []


def _matrix_on(fn: Callable[[Poly], Poly], basis: List[Poly]) -> RatMatrix:
    monos = sorted({m for f in basis for m in f.terms})
    bvecs = [coefficient_vector(f, monos) for f in basis]
    rows = [[v[i] for v in bvecs] for i in range(len(monos))]
    cols = []
    for b in basis:
        x = solve(rows, coefficient_vector(fn(b), monos))
        if x is None:
            raise ArithmeticError("subspace is not invariant")
        cols.append(x)
    return RatMatrix.from_columns(cols)


def gamma_eigenspaces(p: SolvablePair, basis: List[Poly]) -> List[Tuple[Fraction, List[Poly]]]:
    """Rational gamma-eigenspaces inside the largest gamma-stable part of span(basis)."""
    w = _restrict_invariant(p.gamma, basis)
    if not w:
        return []
    mat = _matrix_on(p.gamma, w)
    roots, _ = rational_roots(charpoly(mat))
    out = []
    for lam, _ in roots:
        vecs = []
        for v in eigenspace(mat, lam):
            f = Poly.zero(p.nvars)
            for c, b in zip(v, w):
                f = f + b.scale(c)
            vecs.append(primitive(f))
        out.append((lam, vecs))
    return out


def strongly_normal_space(p: SolvablePair, d: int) -> List[Tuple[Fraction, List[Poly]]]:
    """Gamma-eigenspaces of ker delta in degree d, as (eigenvalue, basis) pairs."""
    kd = kernel_of_maps([p.delta], monomials_of_degree(p.nvars, d), p.nvars)
    return gamma_eigenspaces(p, kd)


def check_strongly_normal_behavior(p: SolvablePair, n: Poly, alpha, d: int) -> bool:
    """g * N = N phi_alpha(g) and {g, N} = alpha delta(g) N for all monomials g of degree <= d."""
    alpha = Fraction(alpha)
    if p.delta(n) or p.gamma(n) != n.scale(alpha):
        raise ValueError("element is not strongly normal for the given eigenvalue")
    for m in monomials_up_to(p.nvars, d):
        g = Poly.monomial(m)
        if p.star(g, n) != n * p.phi(alpha, g):
            return False
        if p.bracket(g, n) != (p.delta(g) * n).scale(alpha):
            return False
    return True


def is_normal(p: SolvablePair, n: Poly) -> bool:
    """For homogeneous N in a linear pair: N * R_1 = R_1 * N."""
    _require_linear(p, "the normality test")
    if not n.is_homogeneous():
        raise ValueError("normality test needs a homogeneous element")
    xs = p.variables()
    left = [p.star(x, n) for x in xs]
    right = [p.star(n, x) for x in xs]
    monos = sorted({m for f in left + right for m in f.terms})
    lv = [coefficient_vector(f, monos) for f in left]
    rv = [coefficient_vector(f, monos) for f in right]
    return rank(lv) == rank(rv) == rank(lv + rv)


def normal_falsification(p: SolvablePair, d: int) -> List[Poly]:
    """Gamma-eigenvectors of degree d outside ker delta that are nonetheless normal.

    Candidates are complements of the strongly normal part in each
    eigenspace; an empty result means no counterexample was found.
    """
    _require_linear(p, "the normality search")
    found = []
    for lam, vecs in gamma_eigenspaces(p, monomial_basis_polys(p.nvars, d)):
        kern = [v for v in kernel_of_maps([p.delta], monomials_of_degree(p.nvars, d), p.nvars)
                if p.gamma(v) == v.scale(lam)]
        monos = sorted({m for f in vecs + kern for m in f.terms})
        span = [coefficient_vector(f, monos) for f in kern]
        for v in vecs:
            vec = coefficient_vector(v, monos)
            if span and in_span(vec, span):
                continue
            if is_normal(p, v):
                found.append(v)
            span.append(vec)
    return found


def monomial_basis_polys(nvars: int, d: int) -> List[Poly]:
    return [Poly.monomial(m) for m in monomials_of_degree(nvars, d)]


# presentation

@dataclass(frozen=True)
class Relation:
    """sum c * Y_a * Y_b (lhs) = sum c * Y_a * Y_b (rhs), indices into the adapted basis."""
    pair: Tuple[int, int]
    lhs: Tuple[Tuple[Fraction, int, int], ...]
    rhs: Tuple[Tuple[Fraction, int, int], ...]
    holds: bool = False

    def format(self, names: Sequence[str]) -> str:
        def side(terms):
            parts = []
            for c, a, b in terms:
                word = f"{names[a]}*{names[b]}"
                mag = abs(c)
                body = word if mag == 1 else f"{format_rat(mag)}*{word}"
                if not parts:
                    parts.append(body if c > 0 else f"-{body}")
                else:
                    parts.append(f" + {body}" if c > 0 else f" - {body}")
            return "".join(parts) or "0"
        return f"{side(self.lhs)} = {side(self.rhs)}"


def evaluate_relation(p: SolvablePair, ys: Sequence[Poly], rel: Relation) -> Tuple[Poly, Poly]:
    def side(terms):
        out = Poly.zero(p.nvars)
        for c, a, b in terms:
            out = out + p.star(ys[a], ys[b]).scale(c)
        return out
    return side(rel.lhs), side(rel.rhs)


def relation_for(b: AdaptedBasis, g: int, h: int) -> Relation:
    labels = b.labels()
    flat = {lab: i for i, lab in enumerate(labels)}
    (j, k), (j2, k2) = labels[g], labels[h]
    lam_g, lam_h = b.eigenvalues[g], b.eigenvalues[h]
    lhs = tuple((gbinom(-lam_g, l), flat[(j2 - l, k2)], g) for l in range(j2 + 1) if gbinom(-lam_g, l))
    rhs = tuple((gbinom(-lam_h, l), flat[(j - l, k)], h) for l in range(j + 1) if gbinom(-lam_h, l))
    return Relation((g, h), lhs, rhs)


def relations(p: SolvablePair, b: AdaptedBasis | None = None) -> List[Relation]:
    """Quadratic relations between the adapted generators, each checked under the star product."""
    if b is None:
        b = jordan_reduce(p)
    ys = b.new_variables()
    out = []
    for g in range(p.nvars):
        for h in range(g + 1, p.nvars):
            rel = relation_for(b, g, h)
            lhs, rhs = evaluate_relation(p, ys, rel)
            out.append(Relation(rel.pair, rel.lhs, rel.rhs, lhs == rhs))
    return out


@dataclass(frozen=True)
class HilbertResult:
    degree: int
    rank: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.rank == self.expected


def ordered_star_monomials(p: SolvablePair, d: int) -> Dict[Tuple[int, ...], Poly]:
    cache: Dict[Tuple[int, ...], Poly] = {(): Poly.const(1, p.nvars)}
    xs = p.variables()
    for word in combinations_with_replacement(range(p.nvars), d):
        for k in range(1, len(word) + 1):
            if word[:k] not in cache:
                cache[word[:k]] = p.star(cache[word[:k - 1]], xs[word[k - 1]])
    return {w: cache[w] for w in combinations_with_replacement(range(p.nvars), d)}


def hilbert_check(p: SolvablePair, d: int) -> HilbertResult:
    """Rank of the ordered star monomials of degree d against binom(n + d, n)."""
    words = ordered_star_monomials(p, d)
    polys = list(words.values())
    monos = sorted({m for f in polys for m in f.terms})
    r = rank([coefficient_vector(f, monos) for f in polys]) if monos else 0
    return HilbertResult(d, r, comb(p.nvars - 1 + d, d))


# quotient by a strongly normal variable

def quotient_pair(p: SolvablePair, u: int) -> SolvablePair:
    """The pair induced on the quotient by X_u, with X_u strongly normal."""
    xu = p.var(u)
    alpha = p.gamma(xu).coeff(next(iter(xu.terms)))
    if p.delta(xu) or p.gamma(xu) != xu.scale(alpha):
        raise ValueError(f"X{u} must satisfy delta(X{u}) = 0 and be a gamma-eigenvector")
    dimgs = [reduce_mod(p.delta.images[j], u) for j in range(p.nvars) if j != u]
    gimgs = [reduce_mod(p.gamma.images[j], u) for j in range(p.nvars) if j != u]
    return validate(Derivation(dimgs), Derivation(gimgs))


def reduce_mod(f: Poly, u: int) -> Poly:
    """Image of f modulo X_u, in the remaining variables."""
    return Poly(f.nvars - 1, {m[:u] + m[u + 1:]: c for m, c in f.terms.items() if not m[u]})


# report

@dataclass
class StructureReport:
    jordan_type: Optional[List[int]]
    offsets: Optional[List[str]]
    trace: Optional[str]
    nakayama_c: Optional[str]
    unimodular: bool
    calabi_yau: Optional[bool]
    generic: bool
    commutative: bool
    pder_dim: Optional[int]
    center_dims: List[int]
    hypotheses: str = "met"

    def to_json(self) -> dict:
        return {
            "jordan_type": self.jordan_type,
            "offsets": self.offsets,
            "trace": self.trace,
            "nakayama_c": self.nakayama_c,
            "unimodular": self.unimodular,
            "calabi_yau": self.calabi_yau,
            "generic": self.generic,
            "commutative": self.commutative,
            "pder_dim": self.pder_dim,
            "center_dims": self.center_dims,
            "hypotheses": self.hypotheses,
        }


def structure_report(p: SolvablePair, center_degree: int = 2) -> StructureReport:
    """Trace, Nakayama exponent, unimodularity and related invariants.

    The Calabi-Yau flag is only decided when the star algebra is
    commutative (a polynomial ring) or the pair is generic; otherwise it is
    left undecided and the hypotheses field says so.
    """
    tr = gamma_trace(p)
    jt = list(delta_jordan_type(p)) if p.delta.is_linear else None
    offsets = None
    if p.is_linear:
        try:
            offsets = [format_rat(a) for a in jordan_reduce(p).offsets]
        except NeedsFieldExtension:
            pass
    generic = is_generic(p)
    commutative = is_commutative(p)
    unimodular = modular_derivation(p).is_zero()
    if commutative:
        cy, hyp = True, "met"
    elif generic:
        cy, hyp = tr == 1, "met"
    else:
        cy, hyp = None, "hypotheses not met"
    return StructureReport(
        jordan_type=jt,
        offsets=offsets,
        trace=format_rat(tr) if tr is not None else None,
        nakayama_c=format_rat(1 - tr) if tr is not None else None,
        unimodular=unimodular,
        calabi_yau=cy,
        generic=generic,
        commutative=commutative,
        pder_dim=len(pder_basis(p)) if p.is_linear else None,
        center_dims=[len(center(p, d)) for d in range(center_degree + 1)],
        hypotheses=hyp,
    )
