"""
Independent oracles for B3, sharing no code with the Garside engine.

* ``sl2_conjugacy_key``: B3 -> SL(2,Z), σ1 ↦ [[1,1],[0,1]], σ2 ↦ [[1,0],[-1,1]], has central
  kernel <Δ^4>, so x ~ y in B3 iff the exponent sums agree and the images are conjugate in
  SL(2,Z). SL(2,Z) classes are classified by trace type: elliptic by (trace, sign of c),
  parabolic by (sign, signed translation length), hyperbolic by (sign, cyclic R/L word).
* ``rewriting_classes``: connected components of freely reduced words under substitution
  of relator pieces, i.e. word equality straight from the presentation.
* ``brute_force_conjugacy_classes``: union-find over conjugation by single letters,
  explored to a fixed depth from every start word.
"""

from __future__ import annotations

import heapq
import itertools
from math import gcd
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, int], tuple[int, int]]

I2: Matrix = ((1, 0), (0, 1))
R: Matrix = ((1, 1), (0, 1))
R_INV: Matrix = ((1, -1), (0, 1))
L: Matrix = ((1, 0), (1, 1))
L_INV: Matrix = ((1, 0), (-1, 1))
_RHO = {1: R, -1: R_INV, 2: L_INV, -2: L}


def mul(x: Matrix, y: Matrix) -> Matrix:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def rho(letters: Iterable[int]) -> Matrix:
    m = I2
    for k in letters:
        m = mul(m, _RHO[k])
    return m


def _neg(m: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in m)  # type: ignore[return-value]


def _size(m: Matrix) -> int:
    return sum(abs(x) for row in m for x in row)


def _nonnegative_conjugate(m: Matrix) -> Matrix:
    # best-first search over conjugation by R^±1, L^±1 (which generate SL(2,Z))
    gens = ((R, R_INV), (R_INV, R), (L, L_INV), (L_INV, L))
    seen = {m}
    heap = [(_size(m), m)]
    while heap:
        _, x = heapq.heappop(heap)
        if all(v >= 0 for row in x for v in row):
            return x
        for g, gi in gens:
            y = mul(mul(gi, x), g)
            if y not in seen:
                seen.add(y)
                heapq.heappush(heap, (_size(y), y))
    raise AssertionError("unreachable: every hyperbolic class has a nonnegative member")


def _rl_word(m: Matrix) -> str:
    out = []
    while m != I2:
        (a, b), (c, d) = m
        if a >= c and b >= d:
            out.append("R")
            m = mul(R_INV, m)
        else:
            out.append("L")
            m = mul(L_INV, m)
    return "".join(out)


def sl2_class(m: Matrix) -> tuple:
    (a, b), (c, d) = m
    tr = a + d
    if abs(tr) < 2:
        return ("elliptic", tr, c > 0)
    sign = 1 if tr > 0 else -1
    if sign < 0:
        m = _neg(m)
    if abs(tr) == 2:
        (a, b), (c, d) = m
        n12, n21 = b, c
        k = gcd(gcd(a - 1, b), gcd(c, d - 1))
        if k:
            k *= 1 if (n12 > 0 or (n12 == 0 and n21 < 0)) else -1
        return ("parabolic", sign, k)
    word = _rl_word(_nonnegative_conjugate(m))
    return ("hyperbolic", sign, min(word[i:] + word[:i] for i in range(len(word))))


def sl2_conjugacy_key(letters: Sequence[int]) -> tuple:
    return (sum(1 if k > 0 else -1 for k in letters), sl2_class(rho(letters)))


# ---- free words --------------------------------------------------------------------

LETTERS = (1, -1, 2, -2)


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for k in letters:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


def freely_reduced_words(max_length: int) -> list[tuple[int, ...]]:
    words: list[tuple[int, ...]] = [()]
    layer: list[tuple[int, ...]] = [()]
    for _ in range(max_length):
        layer = [w + (k,) for w in layer for k in LETTERS if not w or w[-1] != -k]
        words.extend(layer)
    return words


def _relator_pieces() -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """For every cyclic rotation r = p·q of the braid relator or its inverse: p -> q^-1."""
    base = (1, 2, 1, -2, -1, -2)
    relators = []
    for r in (base, tuple(-k for k in reversed(base))):
        relators.extend(r[i:] + r[:i] for i in range(len(r)))
    rules: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for r in relators:
        for cut in range(1, len(r)):
            p, q = r[:cut], r[cut:]
            rules.setdefault(p, []).append(tuple(-k for k in reversed(q)))
    return rules


def rewriting_classes(max_length: int) -> dict[tuple[int, ...], int]:
    """Class label for each freely reduced word of length <= max_length."""
    rules = _relator_pieces()
    words = freely_reduced_words(max_length)
    index = {w: i for i, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for w in words:
        for start in range(len(w)):
            for end in range(start + 1, min(len(w), start + 5) + 1):
                for replacement in rules.get(w[start:end], ()):
                    v = free_reduce(w[:start] + replacement + w[end:])
                    j = index.get(v)
                    if j is not None:
                        parent[find(index[w])] = find(j)
    return {w: find(i) for w, i in index.items()}


# ---- brute-force conjugation ------------------------------------------------------


def brute_force_conjugacy_classes(starts, conjugate_by_letter, depth: int) -> dict:
    """
    Union-find over elements reached from ``starts`` by up to ``depth`` single-letter
    conjugations (so every conjugator of length <= depth is tried from each start).
    ``conjugate_by_letter(x, k)`` returns the element σ_k^-1 x σ_k in a canonical form.
    """
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    frontier = set(starts)
    seen = set(frontier)
    for x in frontier:
        find(x)
    for _ in range(depth):
        nxt = set()
        for x in frontier:
            for k in LETTERS:
                y = conjugate_by_letter(x, k)
                parent[find(x)] = find(y)
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        frontier = nxt
    return {x: find(x) for x in starts}


def same_partition(labels_a: dict, labels_b: dict) -> list[tuple]:
    """Pairs of keys on which two labelings disagree (first few only)."""
    keys = sorted(labels_a)
    bad = []
    for x, y in itertools.combinations(keys, 2):
        if (labels_a[x] == labels_a[y]) != (labels_b[x] == labels_b[y]):
            bad.append((x, y))
            if len(bad) >= 10:
                break
    return bad
