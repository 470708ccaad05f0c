"""Ranks of ordered star monomials by degree for a pair file, against C(n+d, d)."""
import argparse
import json
import time
from dataclasses import dataclass

from solvpair.pair import pair_from_json
from solvpair.structure import hilbert_check


@dataclass(frozen=True)
class HilbertConfig:
    pair: str = "pairs/blocks22.json"
    max_degree: int = 4


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("pair", nargs="?", default=HilbertConfig.pair)
    ap.add_argument("--max-degree", type=int, default=HilbertConfig.max_degree)
    a = ap.parse_args()
    cfg = HilbertConfig(a.pair, a.max_degree)
    with open(cfg.pair) as fh:
        p = pair_from_json(json.load(fh))
    for d in range(cfg.max_degree + 1):
        t0 = time.perf_counter()
        r = hilbert_check(p, d)
        print(f"d={d}  rank={r.rank:4d}  expected={r.expected:4d}  {'ok' if r.ok else 'MISMATCH'}"
              f"  ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    main()
