"""Availability of a split: exact threshold probability plus Monte-Carlo checks."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .layout import build_table
from .scheme import SchemeParams, derive_characteristics


@dataclass(frozen=True)
class ReliabilityReport:
    """Exact and simulated probabilities that a split can be recovered.

    exact_threshold is the probability of reaching at least m modules
    when each is independently available with probability p. The
    Monte-Carlo pair estimates the same event plus the weaker coverage
    event (the available modules jointly hold every element), which can
    succeed below the m threshold.
    """

    params: SchemeParams
    p: float
    exact_threshold: float
    mc_threshold: float
    mc_threshold_stderr: float
    mc_coverage: float
    mc_coverage_stderr: float
    trials: int
    seed: int

    def as_dict(self) -> dict:
        """JSON-ready representation; keys are part of the CLI contract."""
        return {
            "n": self.params.n,
            "m": self.params.m,
            "p": self.p,
            "exact_threshold": self.exact_threshold,
            "mc_threshold": self.mc_threshold,
            "mc_threshold_stderr": self.mc_threshold_stderr,
            "mc_coverage": self.mc_coverage,
            "mc_coverage_stderr": self.mc_coverage_stderr,
            "trials": self.trials,
            "seed": self.seed,
        }


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")


def exact_reliability(params: SchemeParams, p: float) -> float:
    """Probability that at least m of n independently available modules show up.

    Sum over i = m..n of C(n, i) p^i (1-p)^(n-i); binomials are exact
    integers and the terms are fsum-ed for stability.
    """
    _check_probability(p)
    n, m = params.n, params.m
    q = 1.0 - p
    return math.fsum(math.comb(n, i) * p**i * q ** (n - i) for i in range(m, n + 1))


def _stderr(estimate: float, trials: int) -> float:
    return math.sqrt(estimate * (1.0 - estimate) / trials)


def simulate(params: SchemeParams, p: float, trials: int, seed: int) -> ReliabilityReport:
    """Monte-Carlo estimate of the threshold and coverage probabilities.

    Each trial draws per-module availability independently; deterministic
    for a given seed. The threshold event (>= m modules) implies the
    coverage event, so the coverage estimate is never below the
    threshold estimate within one run.
    """
    _check_probability(p)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    n, m = params.n, params.m
    big_r = derive_characteristics(params).big_r
    masks = [
        sum(1 << (e - 1) for e in set(row)) for row in build_table(params).rows
    ]
    full = (1 << big_r) - 1

    rng = random.Random(seed)
    threshold_hits = 0
    coverage_hits = 0
    for _ in range(trials):
        available = 0
        union = 0
        for mask in masks:
            if rng.random() < p:
                available += 1
                union |= mask
        if available >= m:
            threshold_hits += 1
        if union == full:
            coverage_hits += 1

    mc_threshold = threshold_hits / trials
    mc_coverage = coverage_hits / trials
    return ReliabilityReport(
        params=params,
        p=p,
        exact_threshold=exact_reliability(params, p),
        mc_threshold=mc_threshold,
        mc_threshold_stderr=_stderr(mc_threshold, trials),
        mc_coverage=mc_coverage,
        mc_coverage_stderr=_stderr(mc_coverage, trials),
        trials=trials,
        seed=seed,
    )
