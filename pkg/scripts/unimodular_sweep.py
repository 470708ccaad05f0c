"""Sweep the offset of a single Jordan block and report trace, unimodularity and CY."""
import argparse
from dataclasses import dataclass
from fractions import Fraction

from solvpair.exactalg import format_rat
from solvpair.fixtures import maximal, unimodular_offset
from solvpair.structure import structure_report


@dataclass(frozen=True)
class SweepConfig:
    n: int = 2
    lo: Fraction = Fraction(-2)
    hi: Fraction = Fraction(1)
    steps: int = 9


def offsets(cfg: SweepConfig):
    out = {cfg.lo + (cfg.hi - cfg.lo) * k / (cfg.steps - 1) for k in range(cfg.steps)}
    out.add(unimodular_offset(cfg.n))
    return sorted(out)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=SweepConfig.n)
    ap.add_argument("--lo", type=Fraction, default=SweepConfig.lo)
    ap.add_argument("--hi", type=Fraction, default=SweepConfig.hi)
    ap.add_argument("--steps", type=int, default=SweepConfig.steps)
    a = ap.parse_args()
    cfg = SweepConfig(a.n, a.lo, a.hi, max(a.steps, 2))
    print(f"block of size {cfg.n + 1}; unimodular offset {format_rat(unimodular_offset(cfg.n))}")
    for off in offsets(cfg):
        rep = structure_report(maximal(cfg.n, off), center_degree=0)
        cy = "?" if rep.calabi_yau is None else ("yes" if rep.calabi_yau else "no")
        print(f"a={format_rat(off):>8}  trace={rep.trace:>6}  unimodular={'yes' if rep.unimodular else 'no':3}"
              f"  cy={cy:3}  generic={'yes' if rep.generic else 'no'}")


if __name__ == "__main__":
    main()
