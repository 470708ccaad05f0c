"""Seeded property sweep behind ``solvpair selftest``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from . import properties as props
from .combinat import binom_det_formula, binom_matrix
from .fixtures import acceptance_fixtures
from .pair import SolvablePair
from .randpoly import RandomPolyConfig, random_poly, random_rational


@dataclass(frozen=True)
class SelftestConfig:
    seed: int = 0
    samples: int = 20
    poly: RandomPolyConfig = RandomPolyConfig(max_degree=2, max_terms=3)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name} ({self.passed}/{self.total})"


def _sweep(name: str, trials: int, check: Callable[[], bool]) -> SuiteResult:
    return SuiteResult(name, sum(1 for _ in range(trials) if check()), trials)


def pair_suites(label: str, p: SolvablePair, cfg: SelftestConfig) -> List[SuiteResult]:
    rng = random.Random(f"{cfg.seed}:{label}")

    def rp():
        return random_poly(rng, p.nvars, cfg.poly)

    n = cfg.samples
    out = [
        _sweep(f"{label} delta-leibniz", n, lambda: props.leibniz(p.delta, rp(), rp())),
        _sweep(f"{label} gamma-leibniz", n, lambda: props.leibniz(p.gamma, rp(), rp())),
        _sweep(f"{label} associativity", n, lambda: props.associativity(p, rp(), rp(), rp())),
        _sweep(f"{label} jacobi", n, lambda: props.jacobi(p, rp(), rp(), rp())),
        _sweep(f"{label} semiclassical-limit", n, lambda: props.semiclassical_limit(p, rp(), rp())),
        _sweep(f"{label} semiclassical-bound", n, lambda: props.semiclassical_bound(p, rp(), rp())),
        _sweep(f"{label} id-plus-delta", n, lambda: props.id_plus_delta(p, rp(), rp())),
        _sweep(f"{label} log-delta-leibniz", n, lambda: props.log_delta_leibniz(p, rp(), rp())),
        _sweep(f"{label} operator-identities", n, lambda: props.operator_identities(p, rp())),
        _sweep(f"{label} phi-automorphism", n,
               lambda: props.phi_automorphism(p, random_rational(rng), rp(), rp())),
        _sweep(f"{label} phi-group", n,
               lambda: props.phi_group(p, random_rational(rng), random_rational(rng), rp())),
    ]
    return out


def binomial_suite(max_n: int = 6) -> SuiteResult:
    cases = [(n, a) for n in range(1, max_n + 1) for a in (1, -1, 3, "2/5")]
    good = sum(1 for n, a in cases if binom_matrix(n, a).det() == binom_det_formula(n, a))
    return SuiteResult("binomial-determinant", good, len(cases))


def run_selftest(cfg: SelftestConfig = SelftestConfig(),
                 pairs: Optional[Dict[str, SolvablePair]] = None) -> List[SuiteResult]:
    pairs = acceptance_fixtures() if pairs is None else pairs
    out = []
    for label, p in pairs.items():
        out.extend(pair_suites(label, p, cfg))
    out.append(binomial_suite())
    return out
