"""Words over small integer alphabets, morphisms, and frequency matrices mod an integer.

Letters are the integers ``1..m``.  A word is a plain tuple of letters, which
keeps words hashable and cheap to slice.  The text format writes a word as a
run of ASCII digits, one word per line.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import permutations
from types import MappingProxyType

Word = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ConstructionError(ValueError):
    """A fixed point cannot be generated from the requested seed."""


def parse_word(text: str) -> Word:
    """Parse one word in the digit format (``"121"`` -> ``(1, 2, 1)``)."""
    text = text.strip()
    letters = []
    for ch in text:
        if not ("1" <= ch <= "9"):
            raise DomainError(f"invalid letter {ch!r} in word {text[:40]!r}")
        letters.append(ord(ch) - 48)
    return tuple(letters)


def format_word(word: Iterable[int]) -> str:
    out = []
    for a in word:
        if not 1 <= a <= 9:
            raise DomainError(f"letter {a} cannot be written in the digit format")
        out.append(chr(48 + a))
    return "".join(out)


def as_word(value: str | Iterable[int]) -> Word:
    if isinstance(value, str):
        return parse_word(value)
    return tuple(int(a) for a in value)


@dataclass(frozen=True)
class Morphism:
    """A morphism given by the images of its letters.

    ``images`` maps each letter of the domain to a non-empty word.
    ``uniform_width`` is derived: the common image length, or ``None``.
    """

    images: Mapping[int, Word]
    uniform_width: int | None = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not self.images:
            raise DomainError("a morphism needs at least one letter")
        images = {}
        for a, img in sorted(self.images.items()):
            img = as_word(img)
            if not img:
                raise DomainError(f"image of letter {a} is empty")
            images[int(a)] = img
        object.__setattr__(self, "images", MappingProxyType(images))
        widths = {len(img) for img in images.values()}
        object.__setattr__(self, "uniform_width", widths.pop() if len(widths) == 1 else None)

    @property
    def alphabet(self) -> tuple[int, ...]:
        return tuple(self.images)

    def __call__(self, word: Iterable[int]) -> Word:
        return apply(self, word)

    def __hash__(self) -> int:
        return hash(tuple(self.images.items()))

    @classmethod
    def identity(cls, size: int) -> Morphism:
        return cls({a: (a,) for a in range(1, size + 1)})


#: f(1)=121, f(2)=123, f(3)=141, f(4)=142
F = Morphism({1: (1, 2, 1), 2: (1, 2, 3), 3: (1, 4, 1), 4: (1, 4, 2)})

#: Contains every length-2 factor of the fixed point of ``F``.
U0: Word = parse_word("23141121142")
#: Contains every length-3 factor of the fixed point of ``F``.
U1: Word = parse_word("11421231211231411")

COVERS = {"u0": U0, "u1": U1}


def parse_morphism(text: str) -> Morphism:
    """Parse lines of the form ``i:image``; blank lines and ``#`` comments are skipped."""
    images = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        letter, sep, image = line.partition(":")
        if not sep:
            raise DomainError(f"line {lineno}: expected 'letter:image', got {line!r}")
        key = parse_word(letter)
        if len(key) != 1 or key[0] in images:
            raise DomainError(f"line {lineno}: bad or repeated letter {letter!r}")
        images[key[0]] = parse_word(image)
    return Morphism(images)


def format_morphism(m: Morphism) -> str:
    return "".join(f"{format_word((a,))}:{format_word(img)}\n" for a, img in m.images.items())


def apply(m: Morphism, word: Iterable[int]) -> Word:
    images = m.images
    out: list[int] = []
    for a in word:
        try:
            out.extend(images[a])
        except KeyError:
            raise DomainError(f"letter {a} is not in the morphism's domain {m.alphabet}") from None
    return tuple(out)


def iterate(m: Morphism, word: Iterable[int], times: int) -> Word:
    if times < 0:
        raise DomainError("iteration count must be non-negative")
    word = tuple(word)
    for _ in range(times):
        word = apply(m, word)
    return word


def fixed_point_prefix(m: Morphism, seed: int, n: int) -> Word:
    """The length-``n`` prefix of the fixed point of ``m`` starting with ``seed``."""
    if n < 0:
        raise DomainError("prefix length must be non-negative")
    image = m.images.get(seed)
    if image is None or len(image) < 2 or image[0] != seed:
        raise ConstructionError(f"morphism is not prolongable on letter {seed}")
    word: Word = (seed,)
    while len(word) < n:
        # Only the first ceil(n / min width) letters influence the length-n prefix.
        word = apply(m, word[:n])
    return word[:n]


def parikh_vector(word: Iterable[int], alphabet: Sequence[int]) -> tuple[int, ...]:
    pos = {a: i for i, a in enumerate(alphabet)}
    counts = [0] * len(alphabet)
    for a in word:
        counts[pos[a]] += 1
    return tuple(counts)


def frequency_matrix(m: Morphism) -> Matrix:
    """Entry ``(i, j)`` is the number of occurrences of letter ``j`` in the image of ``i``."""
    return tuple(parikh_vector(img, m.alphabet) for img in m.images.values())


def identity_matrix(size: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


def _check_square(M: Sequence[Sequence[int]]) -> int:
    size = len(M)
    if size == 0 or any(len(row) != size for row in M):
        raise DomainError("matrix must be square and non-empty")
    return size


def mat_mul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], modulus: int | None = None) -> Matrix:
    cols = list(zip(*B))
    rows = []
    for row in A:
        vals = [sum(x * y for x, y in zip(row, col)) for col in cols]
        if modulus is not None:
            vals = [v % modulus for v in vals]
        rows.append(tuple(vals))
    return tuple(rows)


def vec_mat_mul(v: Sequence[int], M: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Row vector times matrix."""
    return tuple(sum(x * y for x, y in zip(v, col)) for col in zip(*M))


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, cycle = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by the Leibniz expansion (fine for m <= 8)."""
    size = _check_square(M)
    total = 0
    for perm in permutations(range(size)):
        prod = _perm_sign(perm)
        for i, j in enumerate(perm):
            prod *= M[i][j]
            if not prod:
                break
        total += prod
    return total


def adjugate(M: Sequence[Sequence[int]]) -> Matrix:
    size = _check_square(M)
    if size == 1:
        return ((1,),)
    cof = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(map(tuple, M)) if k != i]
            cof[i][j] = (-1) ** (i + j) * determinant(minor)
    return tuple(tuple(cof[j][i] for j in range(size)) for i in range(size))


def inverse_mod(M: Sequence[Sequence[int]], modulus: int) -> Matrix | None:
    """Inverse of ``M`` modulo ``modulus``, or ``None`` when the determinant is not a unit."""
    if modulus < 2:
        raise DomainError("modulus must be at least 2")
    _check_square(M)
    det = determinant(M) % modulus
    det_inv = next((x for x in range(1, modulus) if det * x % modulus == 1), None)
    if det_inv is None:
        return None
    return tuple(tuple(det_inv * x % modulus for x in row) for row in adjugate(M))
