"""Slow, obviously-correct reference computations used as test oracles.

Nothing here goes through WordIndex or the vectorized scan.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from dejean_check.verifier import VerifierConfig, is_kernel_repetition

F_STR = {"1": "121", "2": "123", "3": "141", "4": "142"}


def f_str(s: str) -> str:
    return "".join(F_STR[c] for c in s)


def f_power_str(s: str, k: int) -> str:
    for _ in range(k):
        s = f_str(s)
    return s


def naive_period(v, q: int) -> bool:
    return all(v[i] == v[i + q] for i in range(len(v) - q))


def brute_force_violations(text, cfg: VerifierConfig) -> set[tuple[int, int, int, str]]:
    """Every (start, q, length, rule) with ``text[start:start+length]`` right-maximal for period q.

    For each start and each q the kernel condition is tested from scratch with
    letter counts.  The extension is grown one letter at a time, comparing each
    new letter with the one q positions earlier; the predicates are evaluated
    on the right-maximal word only.
    """
    text = tuple(text)
    N = len(text)
    n = cfg.n
    found = set()
    for i in range(N):
        counts: Counter = Counter()
        for q in range(1, N - i + 1):
            counts[text[i + q - 1]] += 1
            if any(c % 4 for c in counts.values()):
                continue
            length = q
            while i + length < N and text[i + length] == text[i + length - q]:
                length += 1
            v = text[i : i + length]
            ratio = Fraction(length, q)
            if q <= cfg.q_max:
                if is_kernel_repetition(v, q, n):
                    found.add((i, q, length, "R1"))
                if ratio >= cfg.r2_threshold:
                    found.add((i, q, length, "R2"))
            elif cfg.scan_eq1 and ratio >= cfg.r2_threshold + cfg.eq1_constant:
                found.add((i, q, length, "EQ1"))
    return found


def brute_force_kernel_periods(text) -> set[int]:
    """All q for which some window of length q has every letter count divisible by 4."""
    text = tuple(text)
    out = set()
    for i in range(len(text)):
        counts: Counter = Counter()
        for q in range(1, len(text) - i + 1):
            counts[text[i + q - 1]] += 1
            if all(c % 4 == 0 for c in counts.values()):
                out.add(q)
    return out
