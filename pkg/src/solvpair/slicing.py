"""Localization at a kernel variable and the Dixmier projection.

Given r with delta(r) = c X_u and delta^2(r) = 0, invert X_u and put
s = r / (c X_u), so delta(s) = 1.  Then pi(a) = sum_p (-s)^p/p! delta^p(a)
projects onto the delta-kernel, and the localized star algebra is an Ore
extension of that kernel in s.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Dict, List, Tuple

from .exactalg import Monomial, Poly, format_rat
from .pair import SolvablePair
from .structure import is_generic


class LaurentPoly:
    """Polynomial in X0..Xn with negative exponents allowed on one variable."""

    __slots__ = ("nvars", "u", "terms")

    def __init__(self, nvars: int, u: int, terms: Dict[Monomial, Fraction] | None = None):
        self.nvars = nvars
        self.u = u
        self.terms = {}
        for m, c in (terms or {}).items():
            if any(e < 0 for i, e in enumerate(m) if i != u):
                raise ValueError("only the inverted variable may carry negative exponents")
            if c:
                self.terms[tuple(m)] = Fraction(c)

    @classmethod
    def _raw(cls, nvars, u, terms):
        out = cls.__new__(cls)
        out.nvars, out.u, out.terms = nvars, u, terms
        return out

    @classmethod
    def from_poly(cls, f: Poly, u: int) -> "LaurentPoly":
        return cls._raw(f.nvars, u, dict(f.terms))

    def to_poly(self) -> Poly:
        if any(m[self.u] < 0 for m in self.terms):
            raise ValueError("element has negative powers of the inverted variable")
        return Poly(self.nvars, self.terms)

    def is_poly(self) -> bool:
        return all(m[self.u] >= 0 for m in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Poly):
            return LaurentPoly.from_poly(other, self.u)
        return LaurentPoly(self.nvars, self.u, {(0,) * self.nvars: Fraction(other)})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return LaurentPoly._raw(self.nvars, self.u, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, self.u, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if not c:
            return LaurentPoly._raw(self.nvars, self.u, {})
        return LaurentPoly._raw(self.nvars, self.u, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, (LaurentPoly, Poly)):
            return self.scale(other)
        other = self._lift(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly._raw(self.nvars, self.u, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self._lift(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (LaurentPoly, Poly, int, Fraction)):
            return self.terms == self._lift(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0])):
            mono = "*".join(f"X{i}" if e == 1 else f"X{i}^{e}" for i, e in enumerate(m) if e)
            mag = abs(c)
            body = format_rat(mag) if not mono else (mono if mag == 1 else f"{format_rat(mag)}*{mono}")
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        head = ("-" if out[0][0] == "-" else "") + out[0][1]
        return head + "".join(f" {s} {b}" for s, b in out[1:])

    __repr__ = __str__


class _LaurentDerivation:
    """A polynomial derivation extended to the localization by the quotient rule."""

    def __init__(self, images: Tuple[Poly, ...], u: int):
        self.images = [LaurentPoly.from_poly(p, u) for p in images]
        self.u = u
        self.nvars = len(images)
        self._cache: Dict[Monomial, LaurentPoly] = {}

    def on_monomial(self, m: Monomial) -> LaurentPoly:
        out = self._cache.get(m)
        if out is None:
            out = LaurentPoly._raw(self.nvars, self.u, {})
            for i, e in enumerate(m):
                if e and self.images[i]:
                    rest = list(m)
                    rest[i] -= 1
                    out = out + LaurentPoly._raw(self.nvars, self.u, {tuple(rest): Fraction(e)}) * self.images[i]
            self._cache[m] = out
        return out

    def __call__(self, f: LaurentPoly) -> LaurentPoly:
        acc: Dict[Monomial, Fraction] = {}
        for m, c in f.terms.items():
            for mm, cc in self.on_monomial(m).terms.items():
                acc[mm] = acc.get(mm, 0) + c * cc
        return LaurentPoly._raw(self.nvars, self.u, {m: c for m, c in acc.items() if c})


@dataclass
class SliceContext:
    pair: SolvablePair
    r: Poly
    u: int
    scale: Fraction
    s: LaurentPoly
    u_eigenvalue: Fraction

    def __post_init__(self):
        self._delta = _LaurentDerivation(self.pair.delta.images, self.u)
        self._gamma = _LaurentDerivation(self.pair.gamma.images, self.u)

    def lift(self, f) -> LaurentPoly:
        return f if isinstance(f, LaurentPoly) else LaurentPoly.from_poly(f, self.u)

    def inverse_u(self) -> LaurentPoly:
        e = [0] * self.pair.nvars
        e[self.u] = -1
        return LaurentPoly._raw(self.pair.nvars, self.u, {tuple(e): Fraction(1)})

    def delta(self, f) -> LaurentPoly:
        return self._delta(self.lift(f))

    def gamma(self, f) -> LaurentPoly:
        return self._gamma(self.lift(f))

    def delta_powers(self, f) -> List[LaurentPoly]:
        out = []
        f = self.lift(f)
        while f:
            out.append(f)
            f = self._delta(f)
        return out

    def gamma_binom(self, k: int, f) -> LaurentPoly:
        g = self.lift(f)
        for j in range(1, k + 1):
            g = (self._gamma(g) - g.scale(j - 1)).scale(Fraction(1, j))
        return g

    def star(self, f, g) -> LaurentPoly:
        out = LaurentPoly._raw(self.pair.nvars, self.u, {})
        g = self.lift(g)
        bin_g = g
        for i, di in enumerate(self.delta_powers(f)):
            if i:
                bin_g = (self._gamma(bin_g) - bin_g.scale(i - 1)).scale(Fraction(1, i))
            out = out + di * bin_g
        return out

    def star_power(self, f, k: int) -> LaurentPoly:
        out = self.lift(Poly.const(1, self.pair.nvars))
        for _ in range(k):
            out = self.star(out, f)
        return out

    def pi(self, f) -> LaurentPoly:
        """sum_p (-s)^p / p! delta^p(f): projection onto the delta-kernel."""
        out = LaurentPoly._raw(self.pair.nvars, self.u, {})
        neg_s = -self.s
        spow = self.lift(Poly.const(1, self.pair.nvars))
        for p, dp in enumerate(self.delta_powers(f)):
            out = out + (spow * dp).scale(Fraction(1, factorial(p)))
            spow = spow * neg_s
        return out

    def s_coefficients(self, f) -> List[LaurentPoly]:
        """Kernel coefficients c_j with f = sum_j c_j s^j."""
        return [self.pi(dj).scale(Fraction(1, factorial(j))) for j, dj in enumerate(self.delta_powers(f))]

    def s_degree(self, f):
        return len(self.delta_powers(f)) - 1 if self.lift(f) else float("-inf")


def localize(p: SolvablePair, r: Poly) -> SliceContext:
    """Set up the slice s = r / delta(r); delta(r) must be a multiple of one variable."""
    if p.epsilon(r) != 1:
        raise ValueError("slice element needs delta(r) != 0 and delta^2(r) = 0")
    dr = p.delta(r)
    if len(dr.terms) != 1:
        raise ValueError("delta(r) must be a single kernel variable; reduce the pair first")
    (m, c), = dr.terms.items()
    if sum(m) != 1:
        raise ValueError("delta(r) must be a single kernel variable; reduce the pair first")
    u = m.index(1)
    xu = p.var(u)
    gxu = p.gamma(xu)
    lam = gxu.coeff(m)
    if gxu != xu.scale(lam):
        raise ValueError(f"X{u} must be a gamma-eigenvector to be inverted")
    ctx = SliceContext(p, r, u, c, LaurentPoly._raw(p.nvars, u, {}), lam)
    ctx.s = (ctx.lift(r) * ctx.inverse_u()).scale(1 / c)
    return ctx


def dixmier_pi(ctx: SliceContext, f) -> LaurentPoly:
    return ctx.pi(f)


@dataclass(frozen=True)
class OreCheck:
    delta_s_is_one: bool
    left_multiplication: bool
    commutation: bool
    s_powers: bool
    s_square: bool
    kernel_elements: int

    @property
    def ok(self) -> bool:
        return all((self.delta_s_is_one, self.left_multiplication, self.commutation,
                    self.s_powers, self.s_square))


def kernel_monomials(ctx: SliceContext, d: int) -> List[LaurentPoly]:
    """Products of the projected variables of total degree <= d, also divided by X_u."""
    gens = [y for y in (ctx.pi(x) for x in ctx.pair.variables()) if y]
    one = ctx.lift(Poly.const(1, ctx.pair.nvars))
    out = []
    for k in range(d + 1):
        for word in combinations_with_replacement(range(len(gens)), k):
            a = one
            for w in word:
                a = a * gens[w]
            out.append(a)
            out.append(a * ctx.inverse_u())
    return out


def ore_check(ctx: SliceContext, d: int) -> OreCheck:
    """a * s = a s and s * a = s a + gamma(a) on kernel elements; s-degree of star powers."""
    s = ctx.s
    ks = kernel_monomials(ctx, d)
    if any(ctx.delta(a) for a in ks):
        raise ArithmeticError("projected element left the kernel")
    left = all(ctx.star(a, s) == a * s for a in ks)
    comm = all(ctx.star(s, a) == s * a + ctx.gamma(a) for a in ks)
    powers = True
    for i in range(1, d + 1):
        si = ctx.star_power(s, i)
        if ctx.s_degree(si - s ** i) >= i:
            powers = False
        coeffs = ctx.s_coefficients(si)
        rebuilt = LaurentPoly._raw(ctx.pair.nvars, ctx.u, {})
        for j, c in enumerate(coeffs):
            if ctx.delta(c):
                powers = False
            rebuilt = rebuilt + c * s ** j
        if rebuilt != si:
            powers = False
    gs = ctx.gamma(s)
    square = ctx.star(s, s) == s * s + gs and not ctx.delta(gs - s)
    return OreCheck(ctx.delta(s) == 1, left, comm, powers, square, len(ks))


def kernel_generators(ctx: SliceContext) -> List[Tuple[int, LaurentPoly, Fraction]]:
    """(i, pi(X_i), eigenvalue) for every variable with nonzero projection."""
    p = ctx.pair
    gm = p.gamma.linear_matrix if p.gamma.is_linear else None
    if gm is None or not is_generic(p) or any(gm[i][j] for i in range(p.nvars) for j in range(p.nvars) if i != j):
        raise ValueError("kernel generators need a generic pair with diagonal gamma")
    out = []
    for i, x in enumerate(p.variables()):
        y = ctx.pi(x)
        if not y:
            continue
        lam = gm[i][i]
        if ctx.delta(y) or ctx.gamma(y) != y.scale(lam):
            raise ArithmeticError(f"projection of X{i} is not a kernel eigenvector")
        out.append((i, y, lam))
    return out
