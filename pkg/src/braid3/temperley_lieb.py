"""
Temperley-Lieb diagrams and the bracket transfer computation.

A diagram on n strands is a fixed-point-free involution on 2n points: bottom points are
0..n-1 and top points n..2n-1, both numbered left to right. Products stack diagrams
bottom to top in word order, so ``compose(lower, upper)`` reads "lower, then upper".
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Mapping

from .laurent import LaurentPolynomial

Diagram = tuple[int, ...]

A = LaurentPolynomial.monomial(1, var="A")
A_INV = LaurentPolynomial.monomial(-1, var="A")
LOOP = LaurentPolynomial({2: -1, -2: -1}, var="A")  # d = -A^2 - A^-2


def identity_diagram(n: int) -> Diagram:
    return tuple([n + i for i in range(n)] + list(range(n)))


def cup_cap(n: int, i: int) -> Diagram:
    """The generator e_{i+1}: points i, i+1 joined at the bottom and at the top."""
    m = list(identity_diagram(n))
    m[i], m[i + 1] = i + 1, i
    m[n + i], m[n + i + 1] = n + i + 1, n + i
    return tuple(m)


def is_planar(d: Diagram) -> bool:
    n2 = len(d)
    if any(not (0 <= d[p] < n2) or d[p] == p or d[d[p]] != p for p in range(n2)):
        return False
    # read boundary counter-clockwise: bottom left to right, then top right to left
    order = list(range(n2 // 2)) + list(range(n2 - 1, n2 // 2 - 1, -1))
    rank = {p: r for r, p in enumerate(order)}
    stack = []
    for p in order:
        if rank[d[p]] > rank[p]:
            stack.append(d[p])
        elif not stack or stack.pop() != p:
            return False
    return True


@functools.lru_cache(maxsize=None)
def compose(lower: Diagram, upper: Diagram) -> tuple[Diagram, int]:
    """Stack upper on top of lower. Returns the product diagram and the closed loops removed."""
    n = len(lower) // 2
    result = [-1] * (2 * n)
    seen_mid = [False] * n

    def trace(in_lower: bool, p: int) -> int:
        while True:
            if in_lower:
                q = lower[p]
                if q < n:
                    return q
                seen_mid[q - n] = True
                in_lower, p = False, q - n
            else:
                q = upper[p]
                if q >= n:
                    return q
                seen_mid[q] = True
                in_lower, p = True, n + q

    for start, in_lower, p in [(i, True, i) for i in range(n)] + [(n + j, False, n + j) for j in range(n)]:
        if result[start] == -1:
            end = trace(in_lower, p)
            result[start], result[end] = end, start

    loops = 0
    for j in range(n):
        if seen_mid[j]:
            continue
        loops += 1
        # follow the loop through the middle row, alternating upper and lower arcs
        p = j
        while True:
            seen_mid[p] = True
            q = upper[p]            # q is a middle point of upper (bottom index)
            seen_mid[q] = True
            r = lower[n + q] - n    # back into the middle row via lower
            if r == j:
                break
            p = r
    return tuple(result), loops


def closure_loops(d: Diagram) -> int:
    """Loops formed by joining top point j to bottom point j (the Markov trace closure)."""
    n = len(d) // 2
    seen = [False] * n
    loops = 0
    for j in range(n):
        if seen[j]:
            continue
        loops += 1
        seen[j] = True
        x = n + j  # leave closure strand j from its top end
        while True:
            y = d[x]
            k = y % n
            if k == j:
                break
            seen[k] = True
            x = y + n if y < n else y - n
    return loops


@dataclasses.dataclass(frozen=True)
class TLElement:
    strands: int
    terms: Mapping[Diagram, LaurentPolynomial]

    @classmethod
    def identity(cls, n: int) -> TLElement:
        return cls(n, {identity_diagram(n): LaurentPolynomial.constant(1, "A")})

    def times_letter(self, letter: int) -> TLElement:
        """Right-multiply by the bracket image of σ_|letter|^±1: A·1 + A^-1·e (inverse swaps A)."""
        n = self.strands
        e = cup_cap(n, abs(letter) - 1)
        keep, smooth = (A, A_INV) if letter > 0 else (A_INV, A)
        acc: dict[Diagram, LaurentPolynomial] = {}
        for d, c in self.terms.items():
            acc[d] = acc.get(d, 0) + c * keep
            prod, loops = compose(d, e)
            acc[prod] = acc.get(prod, 0) + c * smooth * LOOP ** loops
        return TLElement(n, {d: c for d, c in acc.items() if c})

    def trace(self) -> LaurentPolynomial:
        """Closure with the unknot normalized to 1: each diagram contributes d^(loops - 1)."""
        total = LaurentPolynomial((), "A")
        for d, c in self.terms.items():
            total = total + c * LOOP ** (closure_loops(d) - 1)
        return total
