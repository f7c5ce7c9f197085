"""Reproducible logical error rates under independent X/Z code-capacity noise."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.stats import binomtest

from ldpc_products.codes import CssCode
from ldpc_products.decoders import DECODERS, decode
from ldpc_products.f2core import F2Vector

CSV_HEADER = ("code", "decoder", "px", "pz", "trials", "failures", "rate", "ci_lo", "ci_hi", "seed")


@dataclass(frozen=True)
class NoiseModel:
    """Independent X errors with probability ``px`` and Z errors with probability ``pz`` per qubit."""

    px: float
    pz: float

    def __post_init__(self) -> None:
        for name, p in (("px", self.px), ("pz", self.pz)):
            if not 0 <= p < 0.5:
                raise ValueError(f"{name} must lie in [0, 0.5), got {p}")


@dataclass(frozen=True)
class TrialReport:
    trials: int
    failures: int
    rate: float
    ci_lo: float
    ci_hi: float
    seed: int
    decoder: str
    px: float
    pz: float
    code: str = ""

    def csv_row(self) -> list[str]:
        return [
            self.code, self.decoder, repr(self.px), repr(self.pz), str(self.trials), str(self.failures),
            f"{self.rate:.6g}", f"{self.ci_lo:.6g}", f"{self.ci_hi:.6g}", str(self.seed),
        ]

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if header:
            writer.writerow(CSV_HEADER)
        writer.writerow(self.csv_row())
        return buf.getvalue()


def wilson_interval(failures: int, trials: int) -> tuple[float, float]:
    """95% Wilson score interval; ``(0, 1)`` when there are no trials."""
    if trials == 0:
        return 0.0, 1.0
    ci = binomtest(failures, trials).proportion_ci(confidence_level=0.95, method="wilson")
    return float(ci.low), float(ci.high)


def sample_error(rng: np.random.Generator, n: int, p: float) -> F2Vector:
    return F2Vector.from_array(rng.random(n) < p)


def _side_fails(code: CssCode, side: str, error: F2Vector, decoder: str, p: float) -> bool:
    """Decode one error type; failure iff ``correction + error`` is not a stabilizer."""
    if error.is_zero():
        return False
    syn = code.checks(side) @ error
    outcome = decode(code, side, syn, decoder, p)
    return not code.is_stabilizer(side, (outcome.correction ^ error).bits)


def trial_fails(code: CssCode, decoder: str, noise: NoiseModel, seed: int, index: int) -> bool:
    """One trial drawn from the stream ``(seed, index)``; fails if either error type is misdecoded."""
    rng = np.random.default_rng([seed, index])
    x_err = sample_error(rng, code.n, noise.px)
    z_err = sample_error(rng, code.n, noise.pz)
    x_fail = _side_fails(code, "X", x_err, decoder, noise.px)
    z_fail = _side_fails(code, "Z", z_err, decoder, noise.pz)
    return x_fail or z_fail


def _count(code: CssCode, decoder: str, noise: NoiseModel, seed: int, start: int, stop: int) -> int:
    return sum(trial_fails(code, decoder, noise, seed, i) for i in range(start, stop))


def run_trials(
    code: CssCode, decoder: str, noise: NoiseModel, trials: int, seed: int, workers: int = 1
) -> TrialReport:
    """Estimate the logical failure rate; results are identical for any ``workers``."""
    if decoder not in DECODERS:
        raise ValueError(f"unknown decoder {decoder!r}; expected one of {', '.join(DECODERS)}")
    if trials < 0:
        raise ValueError("trials must be non-negative")
    if workers <= 1 or trials < 2 * workers:
        failures = _count(code, decoder, noise, seed, 0, trials)
    else:
        bounds = np.linspace(0, trials, workers + 1).astype(int)
        with ProcessPoolExecutor(workers) as pool:
            futures = [
                pool.submit(_count, code, decoder, noise, seed, int(a), int(b))
                for a, b in zip(bounds[:-1], bounds[1:])
            ]
            failures = sum(f.result() for f in futures)
    lo, hi = wilson_interval(failures, trials)
    rate = failures / trials if trials else 0.0
    return TrialReport(trials, failures, rate, lo, hi, seed, decoder, noise.px, noise.pz, code.name)
