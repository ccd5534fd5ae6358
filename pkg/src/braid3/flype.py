"""
3-braids in flype position σ1^u σ2^v σ1^w σ2^ε, their conjugate triples, flype partners,
admissibility for transversal non-simplicity, and classification of arbitrary 3-braid words.

The shorthand (u, v, w) always means ε = -1.
"""

from __future__ import annotations

import dataclasses
import enum
import re
from typing import Iterator, Optional, Union

from .garside import conjugate_test, normal_form, summit, super_summit_set
from .words import BraidWord, BraidWordError, exponent_sum, permutation


@dataclasses.dataclass(frozen=True, order=True)
class FlypeTriple:
    u: int
    v: int
    w: int
    epsilon: int = -1

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.u, self.v, self.w)

    def __str__(self) -> str:
        body = f"{self.u},{self.v},{self.w}"
        return f"({body})" if self.epsilon == -1 else f"({body};+)"

    @classmethod
    def parse(cls, text: str) -> FlypeTriple:
        m = re.fullmatch(r"\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*(;\s*([+-]))?\s*\)\s*", text)
        if not m:
            raise ValueError(f"malformed triple {text!r}")
        eps = 1 if m.group(5) == "+" else -1
        return cls(int(m.group(1)), int(m.group(2)), int(m.group(3)), eps)


def flype_word(t: FlypeTriple) -> BraidWord:
    return BraidWord.from_syllables(3, [(1, t.u), (2, t.v), (1, t.w), (2, t.epsilon)])


def flype_partner_word(t: FlypeTriple) -> BraidWord:
    """σ1^u σ2^ε σ1^w σ2^v, the other side of the flype."""
    return BraidWord.from_syllables(3, [(1, t.u), (2, t.epsilon), (1, t.w), (2, t.v)])


def step(t: FlypeTriple) -> FlypeTriple:
    """(u, v, w, ε) ↦ (v+ε, w-ε, u, ε), a conjugate braid in the same flype position."""
    return FlypeTriple(t.v + t.epsilon, t.w - t.epsilon, t.u, t.epsilon)


def lemma1_orbit(t: FlypeTriple) -> tuple[FlypeTriple, FlypeTriple, FlypeTriple]:
    s = step(t)
    return (t, s, step(s))


def flype_partner(t: FlypeTriple) -> FlypeTriple:
    # σ1^u σ2^ε σ1^w σ2^v is a cyclic rotation of σ1^w σ2^v σ1^u σ2^ε
    return FlypeTriple(t.w, t.v, t.u, t.epsilon)


def braid_crossing_number(t: FlypeTriple) -> int:
    return abs(t.u) + abs(t.v) + abs(t.w) + 1


def bennequin(t: FlypeTriple) -> int:
    if t.epsilon != -1:
        raise ValueError("bennequin(triple) is defined for negative flypes; use self_linking on the word")
    return t.u + t.v + t.w - 4


def canonical_rep(t: FlypeTriple) -> FlypeTriple:
    """Orbit member with the fewest crossings, ties broken lexicographically on (u, v, w)."""
    return min(lemma1_orbit(t), key=lambda s: (braid_crossing_number(s), s.as_tuple()))


class Admissibility(enum.Enum):
    ADMISSIBLE = "admissible"
    POSITIVE_EPSILON = "positive-epsilon"
    NOT_DISTINCT = "u, v-1, w not distinct"
    TOO_SMALL = "some |entry| < 2"
    FORBIDDEN_VALUE = "u or w = -2, or v = +2"
    NOT_A_KNOT = "parity: closure is not a knot"

    def __bool__(self) -> bool:
        return self is Admissibility.ADMISSIBLE


def admissibility(t: FlypeTriple) -> Admissibility:
    """Check the conditions for (u, v, w) to give a transversally non-simple pair, in order."""
    if t.epsilon != -1:
        return Admissibility.POSITIVE_EPSILON
    u, v, w = t.as_tuple()
    if len({u, v - 1, w}) != 3:
        return Admissibility.NOT_DISTINCT
    if min(abs(u), abs(v), abs(w)) < 2:
        return Admissibility.TOO_SMALL
    if u == -2 or w == -2 or v == 2:
        return Admissibility.FORBIDDEN_VALUE
    odd_u, odd_v, odd_w = u % 2, v % 2, w % 2
    if not ((odd_u and not odd_v and not odd_w)
            or (odd_w and not odd_u and not odd_v)
            or (odd_u and odd_v and odd_w)):
        return Admissibility.NOT_A_KNOT
    return Admissibility.ADMISSIBLE


def is_admissible(t: FlypeTriple) -> bool:
    return admissibility(t) is Admissibility.ADMISSIBLE


def is_admissible_alternate(t: FlypeTriple) -> bool:
    """Variant reading with u, w != 1 and v != 2 as the positive-flype exclusion."""
    if t.epsilon != -1:
        return False
    u, v, w = t.as_tuple()
    if len({u, v - 1, w}) != 3 or min(abs(u), abs(v), abs(w)) < 2:
        return False
    if u == 1 or w == 1 or v == 2:
        return False
    return admissibility(FlypeTriple(u, v, w)) is not Admissibility.NOT_A_KNOT


def readings_disagree(t: FlypeTriple) -> bool:
    return is_admissible(t) != is_admissible_alternate(t)


def two_class_conditions(t: FlypeTriple) -> bool:
    """
    Conditions under which σ1^u σ2^v σ1^w σ2^ε and its flype represent two distinct
    conjugacy classes: u, v+ε, w distinct, |v| >= 2, and u, w not in {0, ε, 2ε}.
    """
    eps = t.epsilon
    if len({t.u, t.v + eps, t.w}) != 3 or abs(t.v) < 2:
        return False
    forbidden = {0, eps, 2 * eps}
    return t.u not in forbidden and t.w not in forbidden


# ---- recognition -------------------------------------------------------------------


def _triples_with_sum(total: int, bound: int, epsilon: int) -> list[FlypeTriple]:
    """Nonzero (u, v, w) with u + v + w = total and |u|+|v|+|w| <= bound."""
    found = []
    for u in range(-bound, bound + 1):
        for v in range(-(bound - abs(u)), bound - abs(u) + 1):
            w = total - u - v
            if u and v and w and abs(u) + abs(v) + abs(w) <= bound:
                found.append(FlypeTriple(u, v, w, epsilon))
    return found


def _preference(t: FlypeTriple):
    return (braid_crossing_number(t), t.u, t.v, t.w, t.epsilon)


def flype_candidates(w: BraidWord, bound: int, epsilons: tuple[int, ...] = (-1, 1)) -> Iterator[FlypeTriple]:
    """
    Every flype triple with nonzero u, v, w and |u|+|v|+|w| <= bound whose word is conjugate
    to w, in order of preference (fewest crossings, then lexicographic). Zero exponents are
    skipped: with them any σ1^a σ2^b would count as being in flype position.
    """
    if w.strands != 3:
        raise BraidWordError("flype recognition needs a 3-strand word")
    if bound < 0:
        raise ValueError("bound must be non-negative")
    e = exponent_sum(w)
    cycle_type = permutation(w).cycle_type()
    target = super_summit_set(w)
    probe = next(iter(target))
    candidates = sorted((t for eps in epsilons for t in _triples_with_sum(e - eps, bound, eps)),
                        key=_preference)
    for t in candidates:
        word = flype_word(t)
        if permutation(word).cycle_type() != cycle_type:
            continue
        x = summit(normal_form(word))
        if (x.inf, x.sup) == (probe.inf, probe.sup) and x in target:
            yield t


def detect_flype(w: BraidWord, bound: int, epsilon: Optional[int] = None) -> Optional[FlypeTriple]:
    """
    Preferred flype triple conjugate to w within the crossing bound, or None.

    A flype triple for the inverse word maps back through (u, v, w, ε) ↦ (-w, -v, -u, -ε),
    since w^-1 of a flype word is conjugate to that flype word; the inverse therefore never
    adds a candidate and is not searched separately.
    """
    epsilons = (-1, 1) if epsilon is None else (epsilon,)
    return next(flype_candidates(w, bound, epsilons), None)


def inverse_triple(t: FlypeTriple) -> FlypeTriple:
    """Flype triple of a word conjugate to the inverse of flype_word(t)."""
    return FlypeTriple(-t.w, -t.v, -t.u, -t.epsilon)


# ---- classification ----------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class BelowIndex3:
    """Conjugate to σ1^k σ2^sign: unknot, 2-component unlink, or a (2, k) torus link."""

    k: int
    sign: int

    def describe(self) -> str:
        word = f"s1^{self.k} s2^{self.sign}" if self.k else f"s2^{self.sign}"
        if self.k == 0:
            kind = "2-component unlink"
        elif abs(self.k) == 1:
            kind = "unknot"
        else:
            kind = f"torus {'knot' if self.k % 2 else 'link'} T(2,{self.k})"
        return f"case (1): conjugate to {word}; {kind}"


@dataclasses.dataclass(frozen=True)
class UniqueClassWithinBound:
    bound: int

    def describe(self) -> str:
        return f"case (2): no two-class flype representative with |u|+|v|+|w| <= {self.bound}"


@dataclasses.dataclass(frozen=True)
class FlypePair:
    triple: FlypeTriple
    partner: FlypeTriple
    transversally_nonsimple: bool

    def describe(self) -> str:
        verdict = "transversally non-simple pair" if self.transversally_nonsimple else "transversally simple"
        return f"case (3): flype pair {self.triple} / {self.partner}; {verdict}"


ClassificationCase = Union[BelowIndex3, UniqueClassWithinBound, FlypePair]


def classify(w: BraidWord, bound: int) -> ClassificationCase:
    if w.strands != 3:
        raise BraidWordError("classification is for 3-strand words")
    e = exponent_sum(w)
    for k, sign in ((e - 1, 1), (e + 1, -1)):
        if conjugate_test(w, BraidWord.from_syllables(3, [(1, k), (2, sign)])):
            return BelowIndex3(k, sign)
    pairs = [t for t in flype_candidates(w, bound) if two_class_conditions(t)]
    if not pairs:
        return UniqueClassWithinBound(bound)
    # negative flypes carry the transversal information, so prefer them
    t = min(pairs, key=lambda s: (s.epsilon != -1, _preference(s)))
    return FlypePair(t, flype_partner(t), is_admissible(t))
