"""Named solvable pairs used throughout the tests and scripts."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Sequence

from .derivation import Derivation
from .exactalg import to_rat
from .linalg import RatMatrix
from .pair import SolvablePair, jordan_pair, validate


def maximal(n: int, a) -> SolvablePair:
    """One Jordan block on X0..Xn: delta(X_i) = X_{i-1}, gamma(X_i) = (a+i) X_i."""
    return jordan_pair([n + 1], [a])


def unimodular_offset(n: int) -> Fraction:
    """The offset a making the single-block pair on n+1 variables unimodular."""
    return Fraction(-(n + 2) * (n - 1), 2 * (n + 1))


def two_blocks(a, b) -> SolvablePair:
    return jordan_pair([2, 2], [a, b])


def jordan_plane(i: int) -> SolvablePair:
    """delta = d/dX0, gamma = X0 d/dX0 + X1^i d/dX1, so {X0, X1} = X1^i."""
    return validate(Derivation.from_strings(["1", "0"]),
                    Derivation.from_strings(["X0", f"X1^{i}" if i != 1 else "X1"]))


def enveloping(lams: Sequence) -> SolvablePair:
    """delta = d/dX0, gamma = X0 d/dX0 + sum lam_i X_i d/dX_i (i >= 1)."""
    n = len(lams) + 1
    delta = ["1"] + ["0"] * (n - 1)
    gamma = ["X0"] + [f"{to_rat(l)}*X{i + 1}" for i, l in enumerate(lams)]
    return validate(Derivation.from_strings(delta), Derivation.from_strings(gamma))


def commutative_plane() -> SolvablePair:
    """(X0 d/dX1, X1 d/dX1): the star product is the ordinary product."""
    return validate(Derivation.from_strings(["0", "X0"]), Derivation.from_strings(["0", "X1"]))


def zero_delta(eigenvalues: Sequence) -> SolvablePair:
    n = len(eigenvalues)
    return validate(Derivation.zero(n), Derivation.from_matrix(RatMatrix.diagonal(list(eigenvalues))))


def block21(a, b, c, d, e) -> SolvablePair:
    """Jordan type (2, 1) with gamma = [[a, b, c], [0, a+1, 0], [0, d, e]] (columns are images)."""
    delta = Derivation.from_matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    a = to_rat(a)
    gamma = Derivation.from_matrix([[a, b, c], [0, a + 1, 0], [0, d, e]])
    return validate(delta, gamma)


def non_diagonalizable21(a, c=1) -> SolvablePair:
    """Type (2, 1) with gamma = [[a, 0, c], [0, a+1, 0], [0, 0, a]], not diagonalizable for c != 0."""
    return block21(a, 0, c, 0, a)


def filtration_example(gamma_diag: Sequence = (0, 1, 2)) -> SolvablePair:
    """delta = X0 d/dX1 + X1 d/dX2 on three variables."""
    return maximal(2, gamma_diag[0])


def acceptance_fixtures() -> Dict[str, SolvablePair]:
    """The five pairs used for the associativity and Jacobi sweeps."""
    return {
        "A(1,1)": maximal(1, 1),
        "A(2,-2/3)": maximal(2, Fraction(-2, 3)),
        "blocks(2,2;1,3)": two_blocks(1, 3),
        "jordan_plane(2)": jordan_plane(2),
        "enveloping(1,2)": enveloping([1, 2]),
    }
