"""Immutable index over a finite word.

The index keeps prefix letter counts reduced modulo ``modulus``; the counts of
any window are then a difference of two rows.  Each distinct residue row is
also given a small integer class id, so "is this window's Parikh vector zero
mod mu" becomes one integer comparison and can be evaluated for every start
position at once with numpy.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import NamedTuple

import numpy as np

from .words import DomainError, Word, as_word


class BoundsError(IndexError):
    """A window or position falls outside the indexed text."""


class Window(NamedTuple):
    start: int
    length: int


class WordIndex:
    """Read-only queries over ``text``; nothing is mutated after construction."""

    def __init__(self, text: str | Iterable[int], modulus: int = 4, alphabet_size: int = 4):
        if modulus < 2:
            raise DomainError("modulus must be at least 2")
        self.text: Word = as_word(text)
        self.modulus = modulus
        self.alphabet_size = alphabet_size
        arr = np.asarray(self.text, dtype=np.int16)
        if arr.size and (arr.min() < 1 or arr.max() > alphabet_size):
            raise DomainError(f"letters must lie in 1..{alphabet_size}")
        self.array = arr
        prefix = np.zeros((arr.size + 1, alphabet_size), dtype=np.int64)
        for a in range(alphabet_size):
            prefix[1:, a] = np.cumsum(arr == a + 1)
        prefix %= modulus
        prefix.flags.writeable = False
        self.prefix_parikh = prefix
        _, classes = np.unique(prefix, axis=0, return_inverse=True)
        classes = np.asarray(classes, dtype=np.int64).reshape(-1)
        classes.flags.writeable = False
        self.residue_class = classes
        arr.flags.writeable = False

    def __len__(self) -> int:
        return len(self.text)

    def __repr__(self) -> str:
        return f"WordIndex(len={len(self)}, modulus={self.modulus})"

    def _check_window(self, win: Window) -> None:
        start, length = win
        if start < 0 or length < 0 or start + length > len(self):
            raise BoundsError(f"window {tuple(win)} outside text of length {len(self)}")

    def parikh_window(self, win: Window) -> tuple[int, ...]:
        self._check_window(win)
        start, length = win
        diff = (self.prefix_parikh[start + length] - self.prefix_parikh[start]) % self.modulus
        return tuple(int(x) for x in diff)

    def is_kernel_window(self, win: Window) -> bool:
        self._check_window(win)
        start, length = win
        return bool(self.residue_class[start] == self.residue_class[start + length])

    def kernel_starts(self, q: int) -> np.ndarray:
        """All starts ``i`` such that the window ``(i, q)`` is a kernel window."""
        n = len(self)
        if q < 0 or q > n:
            return np.empty(0, dtype=np.int64)
        cls = self.residue_class
        return np.flatnonzero(cls[q:] == cls[: n + 1 - q])

    def max_period_extension(self, start: int, q: int) -> int:
        n = len(self)
        if q < 1 or start < 0 or start + q > n:
            raise BoundsError(f"start {start} with period {q} outside text of length {n}")
        text = self.text
        j = start + q
        while j < n and text[j] == text[j - q]:
            j += 1
        return j - start

    def period_extensions(self, starts: np.ndarray, q: int) -> np.ndarray:
        """Vectorized ``max_period_extension`` for many starts sharing one period."""
        starts = np.asarray(starts, dtype=np.int64)
        n = len(self)
        if starts.size == 0:
            return starts.copy()
        if q < 1 or starts.min() < 0 or starts.max() + q > n:
            raise BoundsError(f"period {q} windows fall outside text of length {n}")
        arr = self.array
        # mismatch[k] is True when text[k] != text[k + q]
        breaks = np.flatnonzero(arr[q:] != arr[: n - q])
        pos = np.searchsorted(breaks, starts)
        sentinel = np.append(breaks, n - q)
        return sentinel[pos] - starts + q

    def distinct_factors(self, length: int) -> set[Word]:
        if length < 0:
            raise DomainError("factor length must be non-negative")
        text = self.text
        return {text[i : i + length] for i in range(len(text) - length + 1)}

    def occurrences(self, t: Iterable[int]) -> list[int]:
        t = tuple(t)
        k = len(t)
        if k == 0:
            raise DomainError("pattern must be non-empty")
        n = len(self)
        if k > n:
            return []
        arr = self.array
        hits = np.ones(n - k + 1, dtype=bool)
        for offset, a in enumerate(t):
            hits &= arr[offset : n - k + 1 + offset] == a
        return np.flatnonzero(hits).tolist()

    def occurrence_residues(self, t: Iterable[int], phase_modulus: int) -> set[int]:
        return {p % phase_modulus for p in self.occurrences(t)}


def build_index(text: str | Iterable[int], modulus: int = 4, alphabet_size: int = 4) -> WordIndex:
    return WordIndex(text, modulus, alphabet_size)
