"""Kernel-period detection and the finite search over ``f^7`` of a cover word.

A factor ``v`` has *kernel period* ``q`` when ``v`` has period ``q`` and every
letter occurs a multiple of 4 times in its length-``q`` prefix.  The scan
looks at every such ``(start, q)`` pair in a test word, extends the factor to
the right as far as the period allows, and flags it when

* ``R1``: ``(n-1)(|v|+1) >= n*q - 3`` with ``q <= q_max``,
* ``R2``: ``|v|/q >= r2_threshold`` with ``q <= q_max``,
* ``EQ1``: ``|v|/q >= r2_threshold + eq1_constant`` with ``q > q_max``.

Both rules only get easier to satisfy as ``|v|`` grows, so the right-maximal
extension at each ``(start, q)`` witnesses every violation there.  All
comparisons are done on integers.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple

import numpy as np

from .index import WordIndex
from .powers import format_fraction, has_period
from .words import F, U1, DomainError, Morphism, Word, format_word, iterate

KERNEL_MODULUS = 4
THREADS_ENV = "DEJEAN_CHECK_THREADS"

DEFAULT_Q_MAX = 1966
R2_THRESHOLD = Fraction(35, 34)
EQ1_CONSTANT = Fraction(9, 2 * 1967)
#: The constant in the limit of the inductive bound uses 1966 rather than 1967.
EQ1_CONSTANT_1966 = Fraction(9, 2 * 1966)

RULES = ("R1", "R2", "EQ1")


@dataclass(frozen=True)
class VerifierConfig:
    n: int = 32
    q_max: int = DEFAULT_Q_MAX
    r2_threshold: Fraction = R2_THRESHOLD
    eq1_constant: Fraction = EQ1_CONSTANT
    cover: Word = U1
    depth: int = 7
    cover_name: str = "u1"
    scan_eq1: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "r2_threshold", Fraction(self.r2_threshold))
        object.__setattr__(self, "eq1_constant", Fraction(self.eq1_constant))
        object.__setattr__(self, "cover", tuple(self.cover))
        if self.n < 30:
            raise DomainError(f"n must be at least 30, got {self.n}")
        if self.q_max < 1:
            raise DomainError("q_max must be positive")
        if self.r2_threshold <= 1 or self.r2_threshold + self.eq1_constant <= 1:
            raise DomainError("thresholds must exceed 1")
        if self.depth < 0:
            raise DomainError("depth must be non-negative")

    @property
    def eq1_threshold(self) -> Fraction:
        return self.r2_threshold + self.eq1_constant

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "qMax": self.q_max,
            "r2Threshold": format_fraction(self.r2_threshold),
            "eq1Constant": format_fraction(self.eq1_constant),
            "eq1Scan": self.scan_eq1,
            "cover": format_word(self.cover),
            "coverName": self.cover_name,
            "depth": self.depth,
        }


class Violation(NamedTuple):
    start: int
    q: int
    length: int
    rule: str

    def sort_key(self) -> tuple[int, int, int]:
        return self.start, self.q, RULES.index(self.rule)

    def to_dict(self) -> dict[str, Any]:
        return {"start": self.start, "q": self.q, "length": self.length, "rule": self.rule}


@dataclass
class VerificationReport:
    config: VerifierConfig
    text_length: int
    kernel_window_count: int
    violations: list[Violation]
    derived_bounds: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def count(self, rule: str) -> int:
        return sum(v.rule == rule for v in self.violations)

    def to_dict(self) -> dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "textLength": self.text_length,
            "kernelWindowCount": self.kernel_window_count,
            "violations": [v.to_dict() for v in self.violations],
            "derivedBounds": dict(self.derived_bounds),
        }


def is_kernel_repetition(v: Word, q: int, n: int) -> bool:
    """Whether ``v`` has kernel period ``q`` and ``(n-1)(|v|+1) >= n*q - 3``."""
    if not 1 <= q <= len(v):
        raise DomainError(f"period {q} out of range for a word of length {len(v)}")
    if not has_period(v, q):
        return False
    counts: dict[int, int] = {}
    for a in v[:q]:
        counts[a] = counts.get(a, 0) + 1
    if any(c % KERNEL_MODULUS for c in counts.values()):
        return False
    return (n - 1) * (len(v) + 1) >= n * q - 3


def _scan_period(idx: WordIndex, q: int, cfg: VerifierConfig) -> tuple[int, list[Violation]]:
    starts = idx.kernel_starts(q)
    if starts.size == 0:
        return 0, []
    lengths = idx.period_extensions(starts, q)
    found: list[Violation] = []
    if q <= cfg.q_max:
        n = cfg.n
        hits = {
            "R1": (n - 1) * (lengths + 1) >= n * q - 3,
            "R2": lengths * cfg.r2_threshold.denominator >= cfg.r2_threshold.numerator * q,
        }
    else:
        thr = cfg.eq1_threshold
        hits = {"EQ1": lengths * thr.denominator >= thr.numerator * q}
    for rule, mask in hits.items():
        for k in np.flatnonzero(mask):
            found.append(Violation(int(starts[k]), q, int(lengths[k]), rule))
    return int(starts.size), found


def scan_periods(idx: WordIndex, cfg: VerifierConfig) -> list[int]:
    """Candidate periods: multiples of the modulus up to ``q_max``, then the EQ1 range."""
    step = idx.modulus
    n = len(idx)
    periods = list(range(step, min(cfg.q_max, n) + 1, step))
    if cfg.scan_eq1:
        thr = cfg.eq1_threshold
        # L <= n and L/q >= thr force q <= n/thr
        top = n * thr.denominator // thr.numerator
        first = (cfg.q_max // step + 1) * step
        periods.extend(range(first, top + 1, step))
    return periods


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def scan(idx: WordIndex, cfg: VerifierConfig, workers: int | None = None) -> VerificationReport:
    if idx.modulus != KERNEL_MODULUS:
        raise DomainError(f"scan needs an index built with modulus {KERNEL_MODULUS}")
    periods = scan_periods(idx, cfg)
    workers = default_workers() if workers is None else workers
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda q: _scan_period(idx, q, cfg), periods))
    else:
        results = [_scan_period(idx, q, cfg) for q in periods]
    count = 0
    violations: list[Violation] = []
    for q, (c, found) in zip(periods, results):
        if q <= cfg.q_max:
            count += c
        violations.extend(found)
    violations.sort(key=Violation.sort_key)
    return VerificationReport(
        config=cfg,
        text_length=len(idx),
        kernel_window_count=count,
        violations=violations,
        derived_bounds=derived_bounds(cfg, len(idx)),
    )


def period_profile(idx: WordIndex, periods) -> dict[int, tuple[int, int]]:
    """For each period with a kernel window, the longest extension and where it starts."""
    out = {}
    for q in periods:
        starts = idx.kernel_starts(q)
        if starts.size:
            lengths = idx.period_extensions(starts, q)
            k = int(np.argmax(lengths))
            out[q] = (int(lengths[k]), int(starts[k]))
    return out


def search_length_bound(n: int, q_max: int) -> int:
    """``ceil((n*q_max - 3)/(n - 1) - 1)``: the longest factor a minimal violation can have."""
    if n < 2 or q_max < 1:
        raise DomainError("need n >= 2 and q_max >= 1")
    return math.ceil(Fraction(n * q_max - 3, n - 1) - 1)


def shrink(r: int) -> int:
    """Preimage length bound: a factor of length ``r`` sits in ``f(u)`` with ``|u| <= (r+4)/3``."""
    return (r + 4) // 3


def preimage_depth(bound: int) -> int:
    """Least ``s`` with ``shrink`` iterated ``s`` times on ``bound`` below 3."""
    if bound < 0:
        raise DomainError("bound must be non-negative")
    s = 0
    while bound >= 3:
        bound = shrink(bound)
        s += 1
    return s


def build_test_word(m: Morphism, cover: Word, depth: int) -> Word:
    return iterate(m, cover, depth)


def lemma_bound(s: int) -> Fraction:
    """``35/34 + (3/1966) * sum_{j<s} 3^-j``, exactly."""
    if s < 0:
        raise DomainError("s must be non-negative")
    return R2_THRESHOLD + Fraction(3, 1966) * sum((Fraction(1, 3**j) for j in range(s)), Fraction(0))


def lemma_bound_supremum() -> Fraction:
    return R2_THRESHOLD + EQ1_CONSTANT_1966


def threshold_gap(q: int, n: int = 32) -> Fraction:
    """``n/(n-1) - (n+2)/((n-1)q)`` minus ``35/34 + 9/(2*1967)``; non-negative for ``q >= 1967``."""
    return Fraction(n, n - 1) - Fraction(n + 2, (n - 1) * q) - (R2_THRESHOLD + EQ1_CONSTANT)


def derived_bounds(cfg: VerifierConfig, text_length: int) -> dict[str, int]:
    bound = search_length_bound(cfg.n, cfg.q_max)
    return {"lengthBound": bound, "depth": preimage_depth(bound), "testWordLength": text_length}


def verify_word(text: Word, cfg: VerifierConfig, workers: int | None = None) -> VerificationReport:
    return scan(WordIndex(text, KERNEL_MODULUS), cfg, workers)


def verify(cfg: VerifierConfig, morphism: Morphism = F, workers: int | None = None) -> VerificationReport:
    return verify_word(build_test_word(morphism, cfg.cover, cfg.depth), cfg, workers)
