"""
Braid words, their permutations, and elementary integer invariants.

A word in B_n is an immutable tuple of nonzero integers: the letter k stands for
σ_|k| raised to sign(k). The strand count is stored explicitly and never inferred
after construction, so the same letters can live in B3 and B4 side by side.

Permutation convention: letters act left to right in word order. ``images[i]`` is the
final position (1-based) of the strand that starts at position ``i + 1``.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Iterator, NamedTuple


class BraidWordError(ValueError):
    """Malformed braid word text or an invalid word construction."""


class BraidLetter(NamedTuple):
    generator_index: int
    sign: int

    def __int__(self) -> int:
        return self.generator_index * self.sign


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise BraidWordError(f"strand count must be an integer >= 2, got {self.strands!r}")
        letters = tuple(self.letters)
        for k in letters:
            if not isinstance(k, int) or k == 0 or abs(k) >= self.strands:
                raise BraidWordError(f"letter {k!r} out of range for B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_syllables(cls, strands: int, syllables: Iterable[tuple[int, int]]) -> BraidWord:
        """Build σ_{i1}^{k1} σ_{i2}^{k2} ... from (i, k) pairs; k = 0 contributes nothing."""
        letters: list[int] = []
        for i, k in syllables:
            letters.extend([i if k > 0 else -i] * abs(k))
        return cls(strands, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BraidLetter]:
        for k in self.letters:
            yield BraidLetter(abs(k), 1 if k > 0 else -1)

    def syllables(self) -> list[tuple[int, int]]:
        """Maximal runs of equal letters as (index, exponent)."""
        out: list[tuple[int, int]] = []
        for k in self.letters:
            i, s = abs(k), (1 if k > 0 else -1)
            if out and out[-1][0] == i and (out[-1][1] > 0) == (s > 0):
                out[-1] = (i, out[-1][1] + s)
            else:
                out.append((i, s))
        return out

    def __str__(self) -> str:
        return " ".join(f"s{i}^{k}" for i, k in self.syllables())

    def compact(self) -> str:
        return " ".join(str(k) for k in self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)


_SYLLABLE = re.compile(r"s(\d+)\^([+-]?\d+)\Z")
_INTEGER = re.compile(r"[+-]?\d+\Z")


def parse_word(text: str, strands_override: int | None = None) -> BraidWord:
    """
    Parse ``"s1^3 s2^-2"`` (syllable form) or ``"1 1 1 -2"`` (compact form).

    The strand count is one more than the largest generator index (at least 2) unless
    ``strands_override`` is given.
    """
    tokens = text.split()
    letters: list[int] = []
    if tokens and all(_INTEGER.match(tok) for tok in tokens):
        for tok in tokens:
            k = int(tok)
            if k == 0:
                raise BraidWordError("compact form letters must be nonzero")
            letters.append(k)
    else:
        for tok in tokens:
            m = _SYLLABLE.match(tok)
            if not m:
                raise BraidWordError(f"malformed token {tok!r}")
            i, k = int(m.group(1)), int(m.group(2))
            if i < 1:
                raise BraidWordError(f"generator index must be >= 1 in {tok!r}")
            if k == 0:
                raise BraidWordError(f"zero exponent in {tok!r}")
            letters.extend([i if k > 0 else -i] * abs(k))
    needed = max([abs(k) for k in letters], default=1) + 1
    if strands_override is not None:
        if strands_override < needed:
            raise BraidWordError(f"strand override {strands_override} too small, need >= {needed}")
        return BraidWord(strands_override, tuple(letters))
    return BraidWord(needed, tuple(letters))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for k in w.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(w.strands, tuple(stack))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-k for k in reversed(w.letters)))


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise BraidWordError("concat needs at least one word")
    n = words[0].strands
    if any(w.strands != n for w in words):
        raise BraidWordError("cannot concatenate words with different strand counts")
    return BraidWord(n, tuple(k for w in words for k in w.letters))


def cyclic_rotate(w: BraidWord, k: int) -> BraidWord:
    """Move the first k letters to the end (a conjugation by that prefix)."""
    if not w.letters:
        return w
    k %= len(w.letters)
    return BraidWord(w.strands, w.letters[k:] + w.letters[:k])


def stabilize(w: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilization: w·σ_n^{±1} in B_{n+1}."""
    return BraidWord(w.strands + 1, w.letters + (sign * w.strands,))


@dataclasses.dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.images)

    def then(self, other: Permutation) -> Permutation:
        """Apply self, then other."""
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start - 1]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"


def permutation(w: BraidWord) -> Permutation:
    where = list(range(w.strands))  # where[s] = current position of strand s
    at = list(range(w.strands))  # at[p] = strand currently at position p
    for k in w.letters:
        i = abs(k) - 1
        a, b = at[i], at[i + 1]
        at[i], at[i + 1] = b, a
        where[a], where[b] = i + 1, i
    return Permutation(tuple(p + 1 for p in where))


def component_count(w: BraidWord) -> int:
    return len(permutation(w).cycles())


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if k > 0 else -1 for k in w.letters)


def self_linking(w: BraidWord) -> int:
    """Self-linking number of the transversal closure: exponent sum minus strand count."""
    return exponent_sum(w) - w.strands
