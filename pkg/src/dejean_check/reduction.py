"""Structural facts behind pulling a kernel repetition back through ``f``.

A factor of ``f(t)`` splits as ``s . f(u) . p`` with ``s`` the tail of one
image, ``u`` a factor of ``t`` and ``p`` the head of another image.  The
checks here test, on concrete words, the properties that make that split
useful:

* every length-3 factor occurs at a single position class mod 3,
* a factor starting one letter into an image always has the same letter
  before it,
* an aligned window with all letter counts divisible by 4 has a preimage
  with the same property.

The alignment of the text is always supplied by the caller; it is never
guessed from the letters.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from typing import Any

import numpy as np

from .index import BoundsError, Window, WordIndex
from .verifier import KERNEL_MODULUS
from .words import DomainError, Morphism, Word, apply


class AlignmentError(ValueError):
    """A window does not start and end on image boundaries."""


@dataclass(frozen=True)
class Decomposition:
    s: Word
    u_start: int
    u_length: int
    p: Word


class AlignedText:
    """The word ``morphism(preimage)`` together with its image grid."""

    def __init__(self, morphism: Morphism, preimage: Word):
        if morphism.uniform_width is None:
            raise DomainError("alignment needs a morphism with uniform image length")
        self.morphism = morphism
        self.width = morphism.uniform_width
        self.preimage = tuple(preimage)
        self.image = apply(morphism, self.preimage)
        self.image_index = WordIndex(self.image, KERNEL_MODULUS, len(morphism.alphabet))
        self.preimage_index = WordIndex(self.preimage, KERNEL_MODULUS, len(morphism.alphabet))

    def __len__(self) -> int:
        return len(self.image)

    def decompose(self, position: int, length: int) -> Decomposition:
        if position < 0 or length < 0 or position + length > len(self.image):
            raise BoundsError(f"factor ({position}, {length}) outside text of length {len(self.image)}")
        w = self.width
        end = position + length
        head = position if position % w == 0 else min(end, (position // w + 1) * w)
        tail = max(head, end - end % w)
        return Decomposition(
            s=self.image[position:head],
            u_start=head // w,
            u_length=(tail - head) // w,
            p=self.image[tail:end],
        )

    def reconstruct(self, dec: Decomposition) -> Word:
        u = self.preimage[dec.u_start : dec.u_start + dec.u_length]
        return dec.s + apply(self.morphism, u) + dec.p

    def _preimage_window(self, win: Window) -> Window:
        start, length = win
        if start % self.width or length % self.width:
            raise AlignmentError(f"window {tuple(win)} is not aligned to width {self.width}")
        return Window(start // self.width, length // self.width)

    def kernel_preimage_check(self, win: Window) -> bool:
        """Kernel image window implies kernel preimage window; both sides are tested."""
        pre = self._preimage_window(win)
        if not self.image_index.is_kernel_window(win):
            return True
        return self.preimage_index.is_kernel_window(pre)

    def kernel_preimage_counterexamples(self, limit: int | None = None) -> list[Window]:
        """Every aligned window whose image side is kernel but preimage side is not."""
        w = self.width
        img = self.image_index.residue_class
        pre = self.preimage_index.residue_class
        m = len(self.preimage)
        bad: list[Window] = []
        for blocks in range(m + 1):
            starts = np.arange(m - blocks + 1)
            image_kernel = img[starts * w] == img[(starts + blocks) * w]
            pre_kernel = pre[starts] == pre[starts + blocks]
            for i in np.flatnonzero(image_kernel & ~pre_kernel):
                bad.append(Window(int(i) * w, blocks * w))
                if limit is not None and len(bad) >= limit:
                    return bad
        return bad


def decompose(aligned: AlignedText, position: int, length: int) -> Decomposition:
    return aligned.decompose(position, length)


def kernel_preimage_check(aligned: AlignedText, win: Window) -> bool:
    return aligned.kernel_preimage_check(win)


def sampled_kernel_preimage_check(aligned: AlignedText, samples: int, seed: int = 0) -> bool:
    rng = random.Random(seed)
    blocks = len(aligned.preimage)
    w = aligned.width
    for _ in range(samples):
        i = rng.randrange(blocks + 1)
        k = rng.randrange(blocks - i + 1)
        if not aligned.kernel_preimage_check(Window(i * w, k * w)):
            return False
    return True


def _factor_positions(idx: WordIndex, factor_length: int) -> dict[Word, list[int]]:
    text = idx.text
    where: dict[Word, list[int]] = defaultdict(list)
    for i in range(len(text) - factor_length + 1):
        where[text[i : i + factor_length]].append(i)
    return where


def predecessor_sets(idx: WordIndex, factor_length: int = 3) -> dict[Word, set[int]]:
    """Letters seen immediately before each factor; an occurrence at position 0 has none."""
    text = idx.text
    return {
        t: {text[i - 1] for i in positions if i > 0}
        for t, positions in _factor_positions(idx, factor_length).items()
    }


def phase_map(idx: WordIndex, factor_length: int = 3, phase_modulus: int = 3) -> dict[Word, set[int]]:
    return {
        t: {i % phase_modulus for i in positions}
        for t, positions in _factor_positions(idx, factor_length).items()
    }


def phase_rigidity_check(idx: WordIndex, factor_length: int = 3, phase_modulus: int = 3) -> bool:
    return all(len(r) == 1 for r in phase_map(idx, factor_length, phase_modulus).values())


def predecessor_uniqueness_check(idx: WordIndex, factor_length: int = 3, phase: int = 1) -> bool:
    """Every factor that only occurs at ``phase`` mod 3 has a single preceding letter."""
    phases = phase_map(idx, factor_length)
    preds = predecessor_sets(idx, factor_length)
    return all(len(preds[t]) <= 1 for t, r in phases.items() if r == {phase})


def desubstitute(text: Word, morphism: Morphism) -> Word | None:
    """The word ``t`` with ``morphism(t) == text``, reading images from position 0, or ``None``."""
    w = morphism.uniform_width
    if w is None:
        raise DomainError("desubstitution needs a morphism with uniform image length")
    if len(text) % w:
        return None
    inverse = {img: a for a, img in morphism.images.items()}
    if len(inverse) != len(morphism.images):
        raise DomainError("morphism is not injective on letters")
    out = []
    for i in range(0, len(text), w):
        a = inverse.get(tuple(text[i : i + w]))
        if a is None:
            return None
        out.append(a)
    return tuple(out)


def desubstitute_levels(text: Word, morphism: Morphism, depth: int) -> Word | None:
    for _ in range(depth):
        text = desubstitute(text, morphism)
        if text is None:
            return None
    return text


def analyze(
    text: Word,
    morphism: Morphism,
    depth: int,
    cover: Word | None = None,
) -> dict[str, Any]:
    """Structural checks on a test word that should equal ``morphism^depth(cover)``.

    ``reconstruction`` is true when ``depth`` rounds of desubstitution succeed
    (and land on ``cover`` when one is given).  Checks that need the image
    grid are ``None`` for ``depth == 0``, where the word is not an image.
    """
    idx = WordIndex(text, KERNEL_MODULUS, len(morphism.alphabet))
    result: dict[str, Any] = {
        "phaseRigidity": None,
        "predecessorUniqueness": None,
        "kernelPreimage": None,
        "reconstruction": None,
        "factorCount3": len(idx.distinct_factors(3)),
    }
    if depth == 0:
        return result
    result["phaseRigidity"] = phase_rigidity_check(idx)
    result["predecessorUniqueness"] = predecessor_uniqueness_check(idx)
    root = desubstitute_levels(text, morphism, depth)
    result["reconstruction"] = root is not None and (cover is None or root == tuple(cover))
    preimage = desubstitute(text, morphism)
    if preimage is None:
        result["kernelPreimage"] = False
    else:
        aligned = AlignedText(morphism, preimage)
        result["kernelPreimage"] = not aligned.kernel_preimage_counterexamples(limit=1)
    return result


def analyze_fixed_point_prefix(text: Word, morphism: Morphism) -> dict[str, Any]:
    """Structural checks on a prefix of the fixed point; the prefix is its own image, up to a tail."""
    w = morphism.uniform_width
    if w is None:
        raise DomainError("prefix analysis needs a morphism with uniform image length")
    idx = WordIndex(text, KERNEL_MODULUS, len(morphism.alphabet))
    aligned_len = len(text) - len(text) % w
    pre = desubstitute(text[:aligned_len], morphism)
    result: dict[str, Any] = {
        "phaseRigidity": phase_rigidity_check(idx),
        "predecessorUniqueness": predecessor_uniqueness_check(idx),
        "kernelPreimage": False,
        "reconstruction": pre is not None and pre == text[: len(pre)],
        "factorCount3": len(idx.distinct_factors(3)),
    }
    if pre is not None:
        aligned = AlignedText(morphism, pre)
        result["kernelPreimage"] = not aligned.kernel_preimage_counterexamples(limit=1)
    return result


def analysis_passed(result: dict[str, Any]) -> bool:
    return all(v is not False for k, v in result.items() if isinstance(v, bool) or v is None)
