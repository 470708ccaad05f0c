"""Solvable pairs and the star product they define.

A solvable pair is (delta, gamma) with [delta, gamma] = delta and delta
locally nilpotent.  The star product

    f * g = sum_i delta^i(f) binom(gamma, i)(g)

is associative, and its commutator starts with the bracket
{f, g} = delta(f) gamma(g) - delta(g) gamma(f).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .combinat import GBinomTable, gbinom
from .derivation import (DEFAULT_NILPOTENCY_BOUND, Derivation, NilpotencyCert,
                         commutator, nilpotency_cert)
from .exactalg import MINUS_INFINITY, Monomial, Poly, change_vars, parse, to_rat
from .linalg import RatMatrix

_BINOM = GBinomTable()


class NotSolvableError(ValueError):
    pass


class SolvablePair:
    """A validated pair; build with :func:`validate`."""

    def __init__(self, delta: Derivation, gamma: Derivation, cert: NilpotencyCert):
        self.delta = delta
        self.gamma = gamma
        self.cert = cert
        self.nvars = delta.nvars
        self._chains: Dict[Monomial, List[Poly]] = {}

    @property
    def is_linear(self) -> bool:
        return self.delta.is_linear and self.gamma.is_linear

    def var(self, i: int) -> Poly:
        return Poly.var(i, self.nvars)

    def variables(self) -> List[Poly]:
        return [self.var(i) for i in range(self.nvars)]

    def parse(self, text: str) -> Poly:
        return parse(text, self.nvars)

    def _chain(self, m: Monomial) -> List[Poly]:
        ch = self._chains.get(m)
        if ch is None:
            ch = []
            f = Poly.monomial(m)
            while f:
                ch.append(f)
                f = self.delta(f)
            self._chains[m] = ch
        return ch

    def delta_powers(self, f: Poly) -> List[Poly]:
        """[f, delta(f), delta^2(f), ...] up to the last nonzero term."""
        chains = [(c, self._chain(m)) for m, c in f.terms.items()]
        depth = max((len(ch) for _, ch in chains), default=0)
        out = []
        for i in range(depth):
            acc: Dict[Monomial, Fraction] = {}
            for c, ch in chains:
                if i < len(ch):
                    for mm, cc in ch[i].terms.items():
                        acc[mm] = acc.get(mm, 0) + c * cc
            p = Poly._raw(self.nvars, {m: v for m, v in acc.items() if v})
            if not p:
                break
            out.append(p)
        return out

    def star(self, f: Poly, g: Poly) -> Poly:
        out = Poly.zero(self.nvars)
        for i, di in enumerate(self.delta_powers(f)):
            out = out + di * self.gamma.binom_apply(i, g)
        return out

    def star_t(self, f: Poly, g: Poly) -> Poly:
        """The deformation sum_i t^i delta^i(f) binom(gamma, i)(g); t is the last variable."""
        n = self.nvars
        out = Poly.zero(n + 1)
        for i, di in enumerate(self.delta_powers(f)):
            term = (di * self.gamma.binom_apply(i, g)).extend(1)
            tpow = (0,) * n + (i,)
            out = out + term * Poly.monomial(tpow)
        return out

    def bracket(self, f: Poly, g: Poly) -> Poly:
        d, gm = self.delta, self.gamma
        return d(f) * gm(g) - d(g) * gm(f)

    def phi(self, a, f: Poly) -> Poly:
        """sum_k binom(a, k) delta^k(f); an automorphism of the star product."""
        a = to_rat(a)
        out = Poly.zero(self.nvars)
        for k, dk in enumerate(self.delta_powers(f)):
            out = out + dk.scale(_BINOM(a, k))
        return out

    def log_delta(self, f: Poly) -> Poly:
        """sum_{r >= 1} (-1)^(r-1)/r delta^r(f); a derivation of the star product."""
        out = Poly.zero(self.nvars)
        for r, dr in enumerate(self.delta_powers(f)):
            if r:
                out = out + dr.scale(Fraction((-1) ** (r - 1), r))
        return out

    def id_plus_delta(self, f: Poly) -> Poly:
        return f + self.delta(f)

    def epsilon(self, f: Poly):
        """min{i : delta^(i+1)(f) = 0}, minus infinity for f = 0."""
        if not f:
            return MINUS_INFINITY
        return len(self.delta_powers(f)) - 1

    def star_power(self, f: Poly, k: int) -> Poly:
        out = Poly.const(1, self.nvars)
        for _ in range(k):
            out = self.star(out, f)
        return out

    def star_product(self, factors: Sequence[Poly]) -> Poly:
        out = Poly.const(1, self.nvars)
        for f in factors:
            out = self.star(out, f)
        return out

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "delta": self.delta.to_json(), "gamma": self.gamma.to_json()}

    def __repr__(self):
        return f"SolvablePair(delta={self.delta!r}, gamma={self.gamma!r})"


def validate(delta: Derivation, gamma: Derivation, bound: int = DEFAULT_NILPOTENCY_BOUND) -> SolvablePair:
    """Check [delta, gamma] = delta on generators and certify nilpotency of delta."""
    if delta.nvars != gamma.nvars:
        raise NotSolvableError("delta and gamma act on different variable counts")
    comm = commutator(delta, gamma)
    for i, (lhs, rhs) in enumerate(zip(comm.images, delta.images)):
        if lhs != rhs:
            raise NotSolvableError(f"[delta, gamma] != delta on X{i}: got {lhs}, expected {rhs}")
    try:
        cert = nilpotency_cert(delta, bound)
    except ValueError as exc:
        raise NotSolvableError(str(exc)) from exc
    return SolvablePair(delta, gamma, cert)


def bracket(p: SolvablePair, f: Poly, g: Poly) -> Poly:
    return p.bracket(f, g)


def star(p: SolvablePair, f: Poly, g: Poly) -> Poly:
    return p.star(f, g)


def star_t(p: SolvablePair, f: Poly, g: Poly) -> Poly:
    return p.star_t(f, g)


def phi(p: SolvablePair, a, f: Poly) -> Poly:
    return p.phi(a, f)


def log_delta(p: SolvablePair, f: Poly) -> Poly:
    return p.log_delta(f)


def epsilon(p: SolvablePair, f: Poly):
    return p.epsilon(f)


@dataclass(frozen=True)
class AdaptedBasisRef:
    """Basis of the degree-one part adapted to the kernels of delta^i.

    Column j of ``M`` holds the old coordinates of the new variable Y_j and
    ``eps1[j]`` is its weight, the level of Y_j in the kernel filtration.
    """
    M: RatMatrix
    eps1: Tuple[int, ...]


def _linear_form(col: Sequence[Fraction]) -> Poly:
    n = len(col)
    return Poly(n, {tuple(int(r == i) for r in range(n)): c for i, c in enumerate(col)})


def check_adapted(p: SolvablePair, b: AdaptedBasisRef) -> None:
    if not p.delta.is_linear:
        raise ValueError("the adapted filtration needs a linear delta")
    n = p.nvars
    if b.M.nrows != n or b.M.ncols != n or len(b.eps1) != n:
        raise ValueError("basis has the wrong size")
    if b.M.det() == 0:
        raise ValueError("basis is not adapted: matrix is singular")
    dmat = p.delta.linear_matrix
    for j, col in enumerate(b.M.columns()):
        if p.epsilon(_linear_form(col)) != b.eps1[j]:
            raise ValueError(f"basis is not adapted: column {j} has the wrong weight")
    for level in range(1, max(b.eps1) + 2):
        kdim = n - (dmat ** level).rank()
        if sum(1 for e in b.eps1 if e < level) != kdim:
            raise ValueError("basis is not adapted to the kernel filtration")


def to_adapted_coordinates(b: AdaptedBasisRef, f: Poly) -> Poly:
    return change_vars(f, b.M.inverse())


def epsilon_tilde(p: SolvablePair, b: AdaptedBasisRef, f: Poly):
    """Weighted degree of f written in the adapted variables."""
    check_adapted(p, b)
    g = to_adapted_coordinates(b, f)
    if not g:
        return MINUS_INFINITY
    return max(sum(e * w for e, w in zip(m, b.eps1)) for m in g.terms)


def epsilon_tilde_top(p: SolvablePair, b: AdaptedBasisRef, f: Poly) -> Poly:
    """Top weighted component of f, in adapted coordinates."""
    g = to_adapted_coordinates(b, f)
    top = epsilon_tilde(p, b, f)
    return Poly(g.nvars, {m: c for m, c in g.terms.items()
                          if sum(e * w for e, w in zip(m, b.eps1)) == top})


def jordan_matrices(blocks: Sequence[int], offsets: Sequence) -> Tuple[RatMatrix, RatMatrix]:
    """Canonical Jordan delta and diagonal gamma for given block sizes and offsets."""
    if len(blocks) != len(offsets):
        raise ValueError("need one offset per Jordan block")
    n = sum(blocks)
    d = [[0] * n for _ in range(n)]
    g = [[Fraction(0)] * n for _ in range(n)]
    start = 0
    for size, a in zip(blocks, offsets):
        if size < 1:
            raise ValueError("Jordan blocks must have positive size")
        a = to_rat(a)
        for j in range(size):
            g[start + j][start + j] = a + j
            if j:
                d[start + j - 1][start + j] = 1
        start += size
    return RatMatrix(d), RatMatrix(g)


def jordan_pair(blocks: Sequence[int], offsets: Sequence) -> SolvablePair:
    dm, gm = jordan_matrices(blocks, offsets)
    return validate(Derivation.from_matrix(dm), Derivation.from_matrix(gm))


def pair_from_json(obj: dict, bound: int = DEFAULT_NILPOTENCY_BOUND) -> SolvablePair:
    if "jordan" in obj:
        jd = obj["jordan"]
        blocks = [int(b) for b in jd["blocks"]]
        offsets = [to_rat(str(a)) for a in jd["offsets"]]
        if "nvars" in obj and int(obj["nvars"]) != sum(blocks):
            raise ValueError("nvars does not match the Jordan block sizes")
        return jordan_pair(blocks, offsets)
    try:
        n = int(obj["nvars"])
        delta = Derivation.from_json(obj["delta"], n)
        gamma = Derivation.from_json(obj["gamma"], n)
    except KeyError as exc:
        raise ValueError(f"pair JSON is missing field {exc}") from exc
    return validate(delta, gamma, bound)
