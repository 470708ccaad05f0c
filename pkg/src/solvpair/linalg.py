"""Exact linear algebra over Q: Gaussian elimination, kernels, eigenvalues."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import List, Sequence

from .exactalg import format_rat, to_rat

Vector = List[Fraction]


class RatMatrix:
    """Dense rational matrix.  ``M[i][j]`` is row i, column j."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        self.rows = [[to_rat(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "RatMatrix":
        return cls([[0] * (n if m is None else m) for _ in range(n)], ncols=n if m is None else m)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "RatMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "RatMatrix":
        n = len(cols[0])
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def __getitem__(self, i):
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return [r[j] for r in self.rows]

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(map(tuple, self.rows)))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "RatMatrix":
        c = to_rat(c)
        return RatMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = other.columns()
            return RatMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                              for r in self.rows], ncols=other.ncols)
        return [sum((a * b for a, b in zip(r, other)), Fraction(0)) for r in self.rows]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.columns(), ncols=self.nrows)

    def __pow__(self, k: int) -> "RatMatrix":
        out = RatMatrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def rank(self) -> int:
        return rank(self.rows)

    def det(self) -> Fraction:
        return det(self.rows)

    def inverse(self) -> "RatMatrix":
        return RatMatrix(inverse(self.rows))

    def nullspace(self) -> List[Vector]:
        return nullspace(self.rows, self.ncols)

    def __repr__(self):
        body = "; ".join(" ".join(format_rat(x) for x in r) for r in self.rows)
        return f"RatMatrix([{body}])"

    def to_strings(self) -> List[List[str]]:
        return [[format_rat(x) for x in r] for r in self.rows]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = [list(r) for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        pr = a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[Vector]:
    """Basis of {x : rows @ x = 0}, one vector per free column, in column order."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    a = [list(map(to_rat, r)) for r in rows]
    n = len(a)
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            out = -out
        out *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


def inverse(rows: Sequence[Sequence[Fraction]]) -> List[Vector]:
    n = len(rows)
    aug = [list(map(to_rat, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug, n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [r[n:] for r in red]


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """One solution of rows @ x = rhs, or None if inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [to_rat(b)] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def span_rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    return rank([list(v) for v in vectors]) if vectors else 0


def same_span(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> bool:
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank(list(a) + list(b))


def in_span(v: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]]) -> bool:
    return span_rank(vectors) == span_rank(list(vectors) + [list(v)])


def intersect_kernels(*mats: RatMatrix) -> List[Vector]:
    rows = [r for m in mats for r in m.rows]
    return nullspace(rows, mats[0].ncols)


# univariate polynomials as coefficient lists, lowest degree first

def charpoly(m: RatMatrix) -> List[Fraction]:
    """Coefficients of det(x*I - M), lowest degree first (Faddeev-LeVerrier)."""
    n = m.nrows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = RatMatrix.zeros(n)
    ident = RatMatrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ (mk + ident.scale(coeffs[n - k + 1]))
        coeffs[n - k] = -mk.trace() / k
    return coeffs


def upoly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def upoly_deflate(coeffs: Sequence[Fraction], root: Fraction) -> List[Fraction]:
    """Divide by (x - root), assuming it divides exactly."""
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    carry = Fraction(0)
    for i in range(n, 0, -1):
        carry = coeffs[i] + carry * root
        out[i - 1] = carry
    return out


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(coeffs: Sequence[Fraction]):
    """Rational roots with multiplicity as a sorted list of (root, mult).

    Also returns the degree of the leftover factor with no rational roots.
    """
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    roots = {}
    while len(c) > 1 and c[0] == 0:
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
        c = c[1:]
    changed = True
    while len(c) > 1 and changed:
        changed = False
        den = 1
        for x in c:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in c]
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if upoly_eval(c, cand) == 0:
                        roots[cand] = roots.get(cand, 0) + 1
                        c = upoly_deflate(c, cand)
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    return sorted(roots.items()), len(c) - 1


def eigenspace(m: RatMatrix, lam: Fraction) -> List[Vector]:
    return (m - RatMatrix.identity(m.nrows).scale(lam)).nullspace()
