"""
Left normal forms, cycling, decycling and super summit sets in the Artin braid group B_n.

Simple elements (divisors of the half twist Δ) are positive permutation braids. A simple
element is stored as a 0-based image tuple ``p`` where ``p[i]`` is the final position of
the strand starting at position ``i``, the same convention as ``words.permutation``.
With this convention:

- σ_i left-divides ``p`` iff ``p[i] > p[i+1]`` (the starting set),
- σ_i right-divides ``p`` iff ``p^-1[i] > p^-1[i+1]`` (the finishing set),
- conjugation by Δ acts as τ(p)[k] = n-1-p[n-1-k], sending σ_i to σ_{n-i}.

A normal form Δ^inf A_1 ... A_k is left-weighted: S(A_{j+1}) ⊆ F(A_j) for every j.
Super summit sets follow El-Rifai and Morton: cycle to maximal inf, decycle to minimal
sup, then close under conjugation by simple elements.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import random
from collections import deque
from typing import Iterable

from .words import BraidWord, BraidWordError, exponent_sum, permutation

SimpleFactor = tuple[int, ...]


class _Tables:
    """Per-n lookup data for simple elements."""

    def __init__(self, n: int):
        self.n = n
        self.identity: SimpleFactor = tuple(range(n))
        self.delta: SimpleFactor = tuple(range(n - 1, -1, -1))
        self.simples: list[SimpleFactor] = sorted(itertools.permutations(range(n)))
        self.gens: list[SimpleFactor] = []
        for i in range(n - 1):
            p = list(range(n))
            p[i], p[i + 1] = p[i + 1], p[i]
            self.gens.append(tuple(p))
        self.starting = {p: _descents(p) for p in self.simples}
        self.finishing = {p: _descents(_inverse(p)) for p in self.simples}
        self.tau = {p: tuple(n - 1 - p[n - 1 - k] for k in range(n)) for p in self.simples}
        # left complement: lc(s)·s = Δ
        self.left_complement = {p: tuple(_inverse(p)[n - 1 - k] for k in range(n)) for p in self.simples}
        self.length = {p: sum(1 for i, j in itertools.combinations(range(n), 2) if p[i] > p[j])
                       for p in self.simples}
        self._lw: dict[tuple[SimpleFactor, SimpleFactor], tuple[SimpleFactor, SimpleFactor]] = {}

    def left_weight(self, a: SimpleFactor, b: SimpleFactor) -> tuple[SimpleFactor, SimpleFactor]:
        """Rewrite the product a·b as a left-weighted pair."""
        key = (a, b)
        hit = self._lw.get(key)
        if hit is not None:
            return hit
        while True:
            movable = self.starting[b] & ~self.finishing[a]
            if not movable:
                break
            i = (movable & -movable).bit_length() - 1
            a = _swap_values(a, i)
            b = _swap_positions(b, i)
        self._lw[key] = (a, b)
        return a, b

    def tau_power(self, p: SimpleFactor, k: int) -> SimpleFactor:
        return self.tau[p] if k % 2 else p

    def word(self, p: SimpleFactor) -> list[int]:
        """Canonical positive word for a simple element: always peel the lowest σ_i."""
        out = []
        while p != self.identity:
            s = self.starting[p]
            i = (s & -s).bit_length() - 1
            out.append(i + 1)
            p = _swap_positions(p, i)
        return out


def _descents(p: SimpleFactor) -> int:
    mask = 0
    for i in range(len(p) - 1):
        if p[i] > p[i + 1]:
            mask |= 1 << i
    return mask


def _inverse(p: SimpleFactor) -> SimpleFactor:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _swap_values(p: SimpleFactor, i: int) -> SimpleFactor:
    # p·σ_i
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in p)


def _swap_positions(p: SimpleFactor, i: int) -> SimpleFactor:
    # σ_i^-1·p, valid when σ_i left-divides p
    q = list(p)
    q[i], q[i + 1] = q[i + 1], q[i]
    return tuple(q)


@functools.cache
def tables(n: int) -> _Tables:
    if n < 2:
        raise ValueError("braid groups need at least 2 strands")
    return _Tables(n)


@dataclasses.dataclass(frozen=True, order=True)
class GarsideNormalForm:
    strands: int
    inf: int
    factors: tuple[SimpleFactor, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def __str__(self) -> str:
        parts = [f"D^{self.inf}"]
        parts += ["[" + " ".join(str(x + 1) for x in f) + "]" for f in self.factors]
        return " . ".join(parts)


def _normalize(n: int, inf: int, factors: Iterable[SimpleFactor]) -> GarsideNormalForm:
    tab = tables(n)
    fs = list(factors)
    changed = True
    while changed:
        changed = False
        for j in range(len(fs) - 1):
            a, b = tab.left_weight(fs[j], fs[j + 1])
            if a != fs[j]:
                fs[j], fs[j + 1] = a, b
                changed = True
    lead = 0
    while lead < len(fs) and fs[lead] == tab.delta:
        lead += 1
    end = len(fs)
    while end > lead and fs[end - 1] == tab.identity:
        end -= 1
    return GarsideNormalForm(n, inf + lead, tuple(fs[lead:end]))


def normal_form(w: BraidWord) -> GarsideNormalForm:
    n = w.strands
    tab = tables(n)
    factors: list[SimpleFactor] = []
    negatives_after = 0
    # walk right to left so each factor knows how many Δ^-1 pass over it
    for k in reversed(w.letters):
        i = abs(k) - 1
        f = tab.gens[i] if k > 0 else tab.left_complement[tab.gens[i]]
        factors.append(tab.tau_power(f, negatives_after))
        if k < 0:
            negatives_after += 1
    factors.reverse()
    return _normalize(n, -negatives_after, factors)


def to_word(nf: GarsideNormalForm) -> BraidWord:
    tab = tables(nf.strands)
    delta = tab.word(tab.delta)
    if nf.inf >= 0:
        letters = delta * nf.inf
    else:
        letters = [-k for k in reversed(delta)] * -nf.inf
    for f in nf.factors:
        letters += tab.word(f)
    return BraidWord(nf.strands, tuple(letters))


def _check_strands(w1: BraidWord, w2: BraidWord) -> None:
    if w1.strands != w2.strands:
        raise BraidWordError(f"strand mismatch: B_{w1.strands} vs B_{w2.strands}")


def words_equal(w1: BraidWord, w2: BraidWord) -> bool:
    _check_strands(w1, w2)
    return normal_form(w1) == normal_form(w2)


def multiply(x: GarsideNormalForm, y: GarsideNormalForm) -> GarsideNormalForm:
    if x.strands != y.strands:
        raise BraidWordError("strand mismatch")
    tab = tables(x.strands)
    moved = [tab.tau_power(f, y.inf) for f in x.factors]
    return _normalize(x.strands, x.inf + y.inf, moved + list(y.factors))


def conjugate_by_simple(x: GarsideNormalForm, s: SimpleFactor) -> GarsideNormalForm:
    """s^-1 · x · s."""
    tab = tables(x.strands)
    head = tab.tau_power(tab.left_complement[s], x.inf)
    return _normalize(x.strands, x.inf - 1, [head, *x.factors, s])


def cycling(x: GarsideNormalForm) -> GarsideNormalForm:
    """Conjugate Δ^p A_1 ... A_k to Δ^p A_2 ... A_k τ^p(A_1); length-0 input is returned as is."""
    if not x.factors:
        return x
    tab = tables(x.strands)
    return _normalize(x.strands, x.inf, [*x.factors[1:], tab.tau_power(x.factors[0], x.inf)])


def decycling(x: GarsideNormalForm) -> GarsideNormalForm:
    """Conjugate Δ^p A_1 ... A_k to Δ^p τ^p(A_k) A_1 ... A_{k-1}."""
    if not x.factors:
        return x
    tab = tables(x.strands)
    return _normalize(x.strands, x.inf, [tab.tau_power(x.factors[-1], x.inf), *x.factors[:-1]])


@functools.lru_cache(maxsize=200_000)
def summit(x: GarsideNormalForm) -> GarsideNormalForm:
    """Some element of the super summit set of x, reached by iterated cycling then decycling."""
    n = x.strands
    span = n * (n - 1) // 2
    x = _climb(x, cycling, lambda a, b: a.inf > b.inf, span)
    y = _climb(x, decycling, lambda a, b: a.sup < b.sup, span)
    assert y.inf == x.inf, "decycling lowered inf"
    return y


def _climb(x, move, better, span):
    while True:
        y = x
        for _ in range(span):
            if not y.factors:
                break
            y = move(y)
            if better(y, x):
                break
        if better(y, x):
            x = y
        else:
            return x


def _sss_from_summit(x: GarsideNormalForm, seed: int | None = None) -> frozenset[GarsideNormalForm]:
    tab = tables(x.strands)
    conjugators = [s for s in tab.simples if s != tab.identity]
    rng = random.Random(seed) if seed is not None else None
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        if rng is not None:
            rng.shuffle(conjugators)
        for s in conjugators:
            z = conjugate_by_simple(y, s)
            if z.inf == x.inf and z.sup == x.sup and z not in seen:
                seen.add(z)
                if rng is not None and rng.random() < 0.5:
                    queue.appendleft(z)
                else:
                    queue.append(z)
    return frozenset(seen)


@functools.lru_cache(maxsize=20_000)
def _sss_cached(x: GarsideNormalForm) -> frozenset[GarsideNormalForm]:
    return _sss_from_summit(summit(x))


def super_summit_set(w: BraidWord | GarsideNormalForm, seed: int | None = None) -> frozenset[GarsideNormalForm]:
    """
    All conjugates of w with maximal inf and, among those, minimal sup.

    ``seed`` randomizes the traversal order; the result does not depend on it.
    """
    x = w if isinstance(w, GarsideNormalForm) else normal_form(w)
    if seed is None:
        return _sss_cached(x)
    return _sss_from_summit(summit(x), seed)


def conjugacy_key(w: BraidWord) -> GarsideNormalForm:
    """The least element of the super summit set: a complete conjugacy invariant."""
    return min(super_summit_set(w))


def conjugate_test(w1: BraidWord, w2: BraidWord) -> bool:
    _check_strands(w1, w2)
    if exponent_sum(w1) != exponent_sum(w2):
        return False
    if permutation(w1).cycle_type() != permutation(w2).cycle_type():
        return False
    x = summit(normal_form(w1))
    target = super_summit_set(w2)
    probe = next(iter(target))
    if (x.inf, x.sup) != (probe.inf, probe.sup):
        return False
    return x in target
