"""Derivations of the polynomial ring, given by their images on the variables."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .exactalg import Monomial, Poly, parse, to_rat
from .linalg import RatMatrix

DEFAULT_NILPOTENCY_BOUND = 64


class NotNilpotentError(ValueError):
    pass


class Derivation:
    """D(X_i) = images[i], extended by the Leibniz rule.

    Monomial images are memoized, so reuse one instance across many calls.
    """

    def __init__(self, images: Sequence[Poly], linear_matrix: RatMatrix | None = None):
        if not images:
            raise ValueError("a derivation needs at least one variable")
        self.nvars = images[0].nvars
        for p in images:
            if p.nvars != self.nvars:
                raise ValueError("images live in rings with different variable counts")
        if len(images) != self.nvars:
            raise ValueError(f"expected {self.nvars} images, got {len(images)}")
        self.images: Tuple[Poly, ...] = tuple(images)
        self._mono: Dict[Monomial, Poly] = {}
        self._binom: Dict[Monomial, List[Poly]] = {}
        computed = self._compute_matrix()
        if linear_matrix is not None and linear_matrix != computed:
            raise ValueError("linear_matrix does not match the images")
        self.linear_matrix: RatMatrix | None = computed

    @classmethod
    def from_strings(cls, texts: Sequence[str], nvars: int | None = None) -> "Derivation":
        n = len(texts) if nvars is None else nvars
        return cls([parse(t, n) for t in texts])

    @classmethod
    def from_matrix(cls, m) -> "Derivation":
        m = m if isinstance(m, RatMatrix) else RatMatrix(m)
        n = m.nrows
        imgs = []
        for j in range(n):
            terms = {}
            for i in range(n):
                if m[i][j]:
                    e = [0] * n
                    e[i] = 1
                    terms[tuple(e)] = m[i][j]
            imgs.append(Poly(n, terms))
        return cls(imgs)

    @classmethod
    def zero(cls, nvars: int) -> "Derivation":
        return cls([Poly.zero(nvars)] * nvars)

    def _compute_matrix(self) -> RatMatrix | None:
        n = self.nvars
        rows = [[Fraction(0)] * n for _ in range(n)]
        for j, img in enumerate(self.images):
            for m, c in img.terms.items():
                if sum(m) != 1:
                    return None
                rows[m.index(1)][j] = c
        return RatMatrix(rows)

    @property
    def is_linear(self) -> bool:
        return self.linear_matrix is not None

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.images)

    def on_monomial(self, m: Monomial) -> Poly:
        out = self._mono.get(m)
        if out is None:
            out = Poly.zero(self.nvars)
            for i, e in enumerate(m):
                if e and self.images[i]:
                    rest = list(m)
                    rest[i] -= 1
                    out = out + Poly.monomial(tuple(rest), e) * self.images[i]
            self._mono[m] = out
        return out

    def __call__(self, f: Poly) -> Poly:
        if f.nvars != self.nvars:
            raise ValueError(f"derivation on {self.nvars} variables applied to a {f.nvars}-variable polynomial")
        acc: Dict[Monomial, Fraction] = {}
        for m, c in f.terms.items():
            for mm, cc in self.on_monomial(m).terms.items():
                acc[mm] = acc.get(mm, 0) + c * cc
        return Poly._raw(self.nvars, {m: c for m, c in acc.items() if c})

    apply = __call__

    def power(self, k: int, f: Poly) -> Poly:
        for _ in range(k):
            if f.is_zero():
                break
            f = self(f)
        return f

    def binom_table(self, m: Monomial, k: int) -> List[Poly]:
        """[binom(D, 0)(m), ..., binom(D, k)(m)] for a monomial m."""
        row = self._binom.get(m)
        if row is None:
            row = [Poly.monomial(m)]
            self._binom[m] = row
        while len(row) <= k:
            j = len(row)
            prev = row[-1]
            row.append((self(prev) - prev.scale(j - 1)).scale(Fraction(1, j)))
        return row

    def binom_apply(self, k: int, f: Poly) -> Poly:
        out: Dict[Monomial, Fraction] = {}
        for m, c in f.terms.items():
            for mm, cc in self.binom_table(m, k)[k].terms.items():
                out[mm] = out.get(mm, 0) + c * cc
        return Poly._raw(self.nvars, {m: c for m, c in out.items() if c})

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation([a + b for a, b in zip(self.images, other.images)])

    def __sub__(self, other: "Derivation") -> "Derivation":
        return Derivation([a - b for a, b in zip(self.images, other.images)])

    def scale(self, c) -> "Derivation":
        return Derivation([p.scale(to_rat(c)) for p in self.images])

    def times(self, p: Poly) -> "Derivation":
        """The derivation f -> p * D(f)."""
        return Derivation([p * q for q in self.images])

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def to_json(self) -> dict:
        return {"images": [str(p) for p in self.images]}

    @classmethod
    def from_json(cls, obj: dict, nvars: int) -> "Derivation":
        if "images" in obj:
            imgs = obj["images"]
            if len(imgs) != nvars:
                raise ValueError(f"expected {nvars} images, got {len(imgs)}")
            return cls([parse(str(t), nvars) for t in imgs])
        if "matrix" in obj:
            return cls.from_matrix(RatMatrix([[to_rat(str(x)) for x in r] for r in obj["matrix"]]))
        raise ValueError("derivation JSON needs 'images' or 'matrix'")

    def __repr__(self):
        return f"Derivation({[str(p) for p in self.images]})"


def apply(d: Derivation, f: Poly) -> Poly:
    return d(f)


def power_apply(d: Derivation, k: int, f: Poly) -> Poly:
    return d.power(k, f)


def gamma_binom_apply(g: Derivation, k: int, f: Poly) -> Poly:
    """binom(G, k)(f) = G(G-1)...(G-k+1)(f) / k!."""
    if k < 0:
        return Poly.zero(f.nvars)
    return g.binom_apply(k, f)


def commutator(d: Derivation, e: Derivation) -> Derivation:
    return Derivation([d(e.images[i]) - e(d.images[i]) for i in range(d.nvars)])


def divergence(d: Derivation) -> Poly:
    out = Poly.zero(d.nvars)
    for i, img in enumerate(d.images):
        out = out + img.diff(i)
    return out


@dataclass(frozen=True)
class NilpotencyCert:
    exponents: Tuple[int, ...]
    N: int
    method: str


def nilpotency_cert(d: Derivation, bound: int = DEFAULT_NILPOTENCY_BOUND) -> NilpotencyCert:
    """Exponents N_i with D^{N_i}(X_i) = 0.

    Linear derivations are decided exactly from the matrix.  Otherwise the
    search gives up after ``bound`` applications per variable.
    """
    n = d.nvars
    if d.is_linear:
        if not (d.linear_matrix ** n).is_zero():
            raise NotNilpotentError("derivation is not locally nilpotent: its matrix is not nilpotent")
        limit, method = n, "matrix"
    else:
        limit, method = bound, "search"
    exps = []
    for i in range(n):
        f = Poly.var(i, n)
        k = 0
        while f and k < limit:
            f = d(f)
            k += 1
        if f:
            raise NotNilpotentError(f"not certified nilpotent within bound {bound} (stuck at X{i})")
        exps.append(k)
    return NilpotencyCert(tuple(exps), max(exps), method)
