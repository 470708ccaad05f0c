"""Print dim P.Der_gr for single blocks, (2,1,...,1) shapes and a few special pairs."""
import argparse
from dataclasses import dataclass
from fractions import Fraction

from solvpair.fixtures import maximal, non_diagonalizable21, two_blocks, zero_delta
from solvpair.pair import jordan_pair
from solvpair.structure import pder_basis


@dataclass(frozen=True)
class TableConfig:
    max_block: int = 4
    max_tail: int = 4
    offset: Fraction = Fraction(1)


def rows(cfg: TableConfig):
    for n in range(1, cfg.max_block + 1):
        yield f"block [{n + 1}], a={cfg.offset}", maximal(n, cfg.offset)
    for k in range(1, cfg.max_tail + 1):
        # distinct nonzero eigenvalues: 1, 2 on the block, then 1/3, 4/3, 7/3, ...
        offsets = [cfg.offset] + [Fraction(1 + 3 * j, 3) for j in range(k)]
        yield f"blocks [2{', 1' * k}]", jordan_pair([2] + [1] * k, offsets)
    yield "blocks [2, 2], a=1, b=3", two_blocks(1, 3)
    yield "delta = 0 on 3 variables", zero_delta([1, 2, 3])
    yield "non-diagonalizable (2,1), a=1", non_diagonalizable21(1)
    yield "non-diagonalizable (2,1), a=0", non_diagonalizable21(0)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-block", type=int, default=TableConfig.max_block)
    ap.add_argument("--max-tail", type=int, default=TableConfig.max_tail)
    ap.add_argument("--offset", type=Fraction, default=TableConfig.offset)
    a = ap.parse_args()
    cfg = TableConfig(a.max_block, a.max_tail, a.offset)
    for label, p in rows(cfg):
        print(f"{label:34s} nvars={p.nvars}  dim={len(pder_basis(p))}")


if __name__ == "__main__":
    main()
