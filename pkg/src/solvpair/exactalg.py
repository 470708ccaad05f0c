"""Exact multivariate polynomials over the rationals.

A polynomial is a sparse map from exponent tuples to nonzero ``Fraction``
coefficients.  Terms print in graded-lex order, lowest degree first.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, Sequence, Tuple

Rat = Fraction
Monomial = Tuple[int, ...]

MINUS_INFINITY = -math.inf


def to_rat(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("refusing to coerce a bool to a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


def format_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def monomial_key(m: Monomial):
    return (sum(m), m)


class Poly:
    """Sparse polynomial in ``nvars`` commuting variables X0..X{nvars-1}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Monomial, Fraction] | None = None):
        self.nvars = nvars
        self.terms: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ValueError(f"monomial {m} has wrong arity for {nvars} variables")
                c = to_rat(c)
                if c:
                    self.terms[tuple(m)] = c

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Monomial, Fraction]) -> "Poly":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c, nvars: int) -> "Poly":
        c = to_rat(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, i: int, nvars: int) -> "Poly":
        if not 0 <= i < nvars:
            raise IndexError(f"variable X{i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "Poly":
        return cls(len(m), {tuple(m): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda t: monomial_key(t[0])))

    def coeff(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def degree(self):
        """Total degree; minus infinity for the zero polynomial."""
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def graded_component(self, d: int) -> "Poly":
        return Poly._raw(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d})

    def _check(self, other: "Poly"):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(other, self.nvars)

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def scale(self, c) -> "Poly":
        c = to_rat(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.const(other, self.nvars).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def diff(self, i: int) -> "Poly":
        out: Dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * e
        return Poly._raw(self.nvars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        pt = [to_rat(x) for x in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v *= x ** e
            total += v
        return total

    def extend(self, extra: int) -> "Poly":
        """Same polynomial viewed in ``extra`` more trailing variables."""
        pad = (0,) * extra
        return Poly._raw(self.nvars + extra, {m + pad: c for m, c in self.terms.items()})

    def __repr__(self):
        return f"Poly({self.nvars}, {str(self)!r})"

    def __str__(self):
        return format_poly(self)


def multiply(f: Poly, g: Poly) -> Poly:
    f._check(g)
    out: Dict[Monomial, Fraction] = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return Poly._raw(f.nvars, {m: c for m, c in out.items() if c})


def graded_component(f: Poly, d: int) -> Poly:
    return f.graded_component(d)


def format_monomial(m: Monomial, names: Sequence[str] | None = None) -> str:
    parts = []
    for i, e in enumerate(m):
        if e:
            name = names[i] if names else f"X{i}"
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Poly, names: Sequence[str] | None = None) -> str:
    if not f.terms:
        return "0"
    out = []
    for m, c in f:
        mono = format_monomial(m, names)
        mag = abs(c)
        if not mono:
            body = format_rat(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rat(mag)}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out)


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>X(?P<idx>\d+))|(?P<op>[-+*^]))")


def _tokens(text: str):
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            return
        mt = _TOKEN.match(text, pos)
        if not mt:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        if mt.group("num") is not None:
            yield ("num", mt.group("num"), mt.start("num"))
        elif mt.group("var") is not None:
            yield ("var", int(mt.group("idx")), mt.start("var"))
        else:
            yield ("op", mt.group("op"), mt.start("op"))
        pos = mt.end()


def parse(text: str, nvars: int) -> Poly:
    """Parse ``p/q*X0^2*X1 - X2 + 3``-style input into a Poly."""
    toks = list(_tokens(text))
    toks.append(("end", None, len(text)))
    i = 0
    out = Poly.zero(nvars)

    def peek():
        return toks[i]

    def expect_exponent():
        nonlocal i
        kind, val, pos = peek()
        if kind != "num" or "/" in val:
            raise ParseError("expected a nonnegative integer exponent", text, pos)
        i += 1
        return int(val)

    first = True
    while True:
        kind, val, pos = peek()
        if kind == "end":
            if first:
                raise ParseError("empty polynomial", text, pos)
            break
        sign = 1
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            kind, val, pos = peek()
        elif not first:
            raise ParseError("expected '+' or '-'", text, pos)
        first = False
        coef = Fraction(1)
        expo = [0] * nvars
        need_factor = True
        if kind == "num":
            num, _, den = val.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", text, pos)
            coef = Fraction(int(num), int(den) if den else 1)
            i += 1
            need_factor = False
            kind, val, pos = peek()
            if kind == "op" and val == "*":
                i += 1
                need_factor = True
            else:
                out = out + Poly.const(sign * coef, nvars)
                continue
        while need_factor:
            kind, val, pos = peek()
            if kind != "var":
                raise ParseError("expected a variable", text, pos)
            if val >= nvars:
                raise ParseError(f"variable X{val} out of range for {nvars} variables", text, pos)
            i += 1
            e = 1
            if peek()[:2] == ("op", "^"):
                i += 1
                e = expect_exponent()
            expo[val] += e
            if peek()[:2] == ("op", "*"):
                i += 1
            else:
                need_factor = False
        out = out + Poly(nvars, {tuple(expo): sign * coef})
    return out


def monomials_of_degree(nvars: int, d: int) -> list:
    """Exponent tuples of total degree ``d`` in graded-lex order."""
    if d < 0:
        return []
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort()
    return out


def monomial_basis(nvars: int, d: int) -> list:
    return [Poly.monomial(m) for m in monomials_of_degree(nvars, d)]


def monomials_up_to(nvars: int, d: int) -> list:
    out = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(nvars, k))
    return out


def change_vars(f: Poly, M) -> Poly:
    """Substitute each X_j by the linear form in column j of ``M``."""
    from .linalg import RatMatrix

    M = M if isinstance(M, RatMatrix) else RatMatrix(M)
    n = f.nvars
    if M.nrows != n or M.ncols != n:
        raise ValueError(f"change of variables needs a {n}x{n} matrix")
    if M.det() == 0:
        raise ValueError("singular change of variables")
    forms = [Poly(n, {tuple(int(r == i) for r in range(n)): M[i][j] for i in range(n)})
             for j in range(n)]
    powers = [[Poly.const(1, n)] for _ in range(n)]
    out = Poly.zero(n)
    for m, c in f.terms.items():
        term = Poly.const(c, n)
        for j, e in enumerate(m):
            while len(powers[j]) <= e:
                powers[j].append(powers[j][-1] * forms[j])
            if e:
                term = term * powers[j][e]
        out = out + term
    return out


def coefficient_vector(f: Poly, basis: Sequence[Monomial]) -> list:
    """Coordinates of ``f`` on a list of monomials; raises if ``f`` leaves the span."""
    index = {m: k for k, m in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for m, c in f.terms.items():
        if m not in index:
            raise ValueError(f"monomial {format_monomial(m) or '1'} outside the basis")
        vec[index[m]] = c
    return vec


def from_vector(vec: Iterable, basis: Sequence[Monomial], nvars: int) -> Poly:
    return Poly(nvars, {m: c for m, c in zip(basis, vec) if c})
