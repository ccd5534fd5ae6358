"""
Exact polynomial invariants of closed braids.

Two independent routes to the Kauffman bracket are kept side by side: a direct 2^c state
sum over the closed-braid diagram, and a Temperley-Lieb transfer computation that is
linear in word length. Jones is derived from the bracket with t = A^-4 and reported in
q = t^(1/2) = A^-2. Alexander comes from the reduced Burau matrix of a 3-braid:
Δ(t) ∝ det(ψ(w) - I) / (1 + t + t^2).
"""

from __future__ import annotations

import dataclasses
import hashlib
from collections import Counter
from typing import Optional

from .laurent import LaurentPolynomial
from .temperley_lieb import LOOP, TLElement
from .words import BraidWord, component_count, exponent_sum

STATE_SUM_LIMIT = 24
TL_MAX_STRANDS = 4
BURAU_STRANDS = (2, 3, 4)

T = LaurentPolynomial.monomial(1, var="t")
ONE_T = LaurentPolynomial.constant(1, "t")
ZERO_T = LaurentPolynomial((), "t")


class InvariantError(ValueError):
    pass


def kauffman_bracket(w: BraidWord) -> LaurentPolynomial:
    """State sum over all smoothings of the closed-braid diagram, unknot normalized to 1."""
    if len(w) > STATE_SUM_LIMIT:
        raise InvariantError(f"state sum limited to {STATE_SUM_LIMIT} crossings, got {len(w)}")
    n, c = w.strands, len(w)
    if c == 0:
        return LOOP ** (n - 1)

    def node(level: int, strand: int) -> int:
        return (level % c) * n + strand

    fixed: list[tuple[int, int]] = []
    crossings = []
    for level, k in enumerate(w.letters):
        i = abs(k) - 1
        for j in range(n):
            if j not in (i, i + 1):
                fixed.append((node(level, j), node(level + 1, j)))
        vertical = ((node(level, i), node(level + 1, i)), (node(level, i + 1), node(level + 1, i + 1)))
        horizontal = ((node(level, i), node(level, i + 1)), (node(level + 1, i), node(level + 1, i + 1)))
        crossings.append((k > 0, vertical, horizontal))

    size = n * c
    tally: Counter[tuple[int, int]] = Counter()
    for state in range(1 << c):
        parent = list(range(size))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merges = 0
        a_exp = 0
        edges = list(fixed)
        for bit, (positive, vertical, horizontal) in enumerate(crossings):
            # bit clear: vertical smoothing, weight A for a positive crossing
            if (state >> bit) & 1:
                edges.extend(horizontal)
                a_exp += -1 if positive else 1
            else:
                edges.extend(vertical)
                a_exp += 1 if positive else -1
        for x, y in edges:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
                merges += 1
        tally[(a_exp, size - merges)] += 1

    total = LaurentPolynomial((), "A")
    for (a_exp, loops), count in tally.items():
        total = total + LaurentPolynomial.monomial(a_exp, count, "A") * LOOP ** (loops - 1)
    return total


def tl_bracket(w: BraidWord) -> LaurentPolynomial:
    if w.strands > TL_MAX_STRANDS:
        raise InvariantError(f"Temperley-Lieb bracket supports at most {TL_MAX_STRANDS} strands")
    element = TLElement.identity(w.strands)
    for k in w.letters:
        element = element.times_letter(k)
    return element.trace()


def jones(w: BraidWord) -> LaurentPolynomial:
    """Jones polynomial of the closure in q = t^(1/2); the unknot gives 1."""
    e = exponent_sum(w)
    writhe_fix = LaurentPolynomial.monomial(-3 * e, (-1) ** (e % 2), "A")
    v = writhe_fix * tl_bracket(w)
    return v.divide_exponents(-2, var="q")


def jones_in_t(w: BraidWord) -> LaurentPolynomial:
    """Jones polynomial in t; only defined when every q exponent is even (odd component count)."""
    return jones(w).divide_exponents(2, var="t")


# ---- Burau / Alexander -------------------------------------------------------------

Matrix = tuple[tuple[LaurentPolynomial, ...], ...]


def _identity(m: int) -> Matrix:
    return tuple(tuple(ONE_T if i == j else ZERO_T for j in range(m)) for i in range(m))


def _matmul(x: Matrix, y: Matrix) -> Matrix:
    m = len(x)
    return tuple(
        tuple(sum((x[i][k] * y[k][j] for k in range(m)), ZERO_T) for j in range(m))
        for i in range(m)
    )


def _generator(n: int, i: int, inverse: bool) -> Matrix:
    # row i-1 of σ_i: t at column i-2, -t at i-1, 1 at i (when in range); identity elsewhere
    m = n - 1
    rows = [list(r) for r in _identity(m)]
    r = i - 1
    t_inv = LaurentPolynomial.monomial(-1, var="t")
    if not inverse:
        if r - 1 >= 0:
            rows[r][r - 1] = T
        rows[r][r] = -T
        if r + 1 < m:
            rows[r][r + 1] = ONE_T
    else:
        # inverse row: t^-1 ... solved from the generator row, identity rows unchanged
        if r - 1 >= 0:
            rows[r][r - 1] = ONE_T
        rows[r][r] = -t_inv
        if r + 1 < m:
            rows[r][r + 1] = t_inv
    return tuple(tuple(row) for row in rows)


def reduced_burau(w: BraidWord) -> Matrix:
    """σ1 ↦ [[-t, 1], [0, 1]], σ2 ↦ [[1, 0], [t, -t]] for B3; same row pattern for B2 and B4."""
    if w.strands not in BURAU_STRANDS:
        raise InvariantError(f"reduced Burau implemented for {BURAU_STRANDS} strands only")
    result = _identity(w.strands - 1)
    for k in w.letters:
        result = _matmul(result, _generator(w.strands, abs(k), k < 0))
    return result


def determinant(x: Matrix) -> LaurentPolynomial:
    m = len(x)
    if m == 1:
        return x[0][0]
    total = ZERO_T
    for j in range(m):
        minor = tuple(tuple(row[c] for c in range(m) if c != j) for row in x[1:])
        term = x[0][j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def alexander_numerator(w: BraidWord) -> LaurentPolynomial:
    psi = reduced_burau(w)
    m = len(psi)
    shifted = tuple(tuple(psi[i][j] - (1 if i == j else 0) for j in range(m)) for i in range(m))
    return determinant(shifted)


def alexander(w: BraidWord) -> LaurentPolynomial:
    """Normalized Alexander polynomial (lowest degree 0, positive lowest coefficient) of a knot closure."""
    if component_count(w) != 1:
        raise InvariantError("Alexander fingerprint requires a knot closure")
    divisor = LaurentPolynomial({e: 1 for e in range(w.strands)}, "t")
    numerator = alexander_numerator(w)
    try:
        quotient = numerator.divmod_exact(divisor)
    except ArithmeticError as exc:
        raise AssertionError(f"Burau determinant of {w} not divisible by {divisor}") from exc
    return quotient.normalized()


@dataclasses.dataclass(frozen=True)
class Fingerprint:
    components: int
    jones: LaurentPolynomial
    alexander: Optional[LaurentPolynomial] = None
    determinant: Optional[int] = None

    def key(self) -> tuple[int, str, str, str]:
        return (
            self.components,
            str(self.jones),
            "" if self.alexander is None else str(self.alexander),
            "" if self.determinant is None else str(self.determinant),
        )

    @property
    def id(self) -> str:
        return hashlib.sha256("|".join(map(str, self.key())).encode()).hexdigest()[:12]

    def to_dict(self) -> dict:
        return {
            "components": self.components,
            "jones": str(self.jones),
            "alexander": None if self.alexander is None else str(self.alexander),
            "determinant": self.determinant,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Fingerprint:
        alex = data.get("alexander")
        return cls(
            components=int(data["components"]),
            jones=LaurentPolynomial.parse(data["jones"], "q"),
            alexander=None if alex is None else LaurentPolynomial.parse(alex, "t"),
            determinant=data.get("determinant"),
        )


def fingerprint(w: BraidWord) -> Fingerprint:
    components = component_count(w)
    v = jones(w)
    if components != 1 or w.strands not in BURAU_STRANDS:
        return Fingerprint(components, v)
    alex = alexander(w)
    return Fingerprint(components, v, alex, abs(alex(-1)))
