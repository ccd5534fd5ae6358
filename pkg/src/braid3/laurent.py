"""
Exact Laurent polynomials in one variable with integer coefficients.

A polynomial is stored as a sorted tuple of (exponent, coefficient) pairs with no zero
coefficients, so equality and hashing are structural. The variable name only affects
printing and parsing.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

Number = int


class LaurentPolynomial:
    __slots__ = ("_terms", "var")

    def __init__(self, coefficients: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "t"):
        acc: dict[int, int] = {}
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be integers")
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self.var = var

    @classmethod
    def constant(cls, c: int, var: str = "t") -> LaurentPolynomial:
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, var: str = "t") -> LaurentPolynomial:
        return cls({exponent: coefficient}, var)

    # ---- inspection -------------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """Ascending (exponent, coefficient) pairs."""
        return self._terms

    def coefficients(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, exponent: int) -> int:
        for e, c in self._terms:
            if e == exponent:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[0][0]

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    # ---- arithmetic -------------------------------------------------------------

    def _coerce(self, other: Union[LaurentPolynomial, int]) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPolynomial(self._terms + other._terms, self.var)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial([(e, -c) for e, c in self._terms], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            (e, c), = self._terms
            return LaurentPolynomial({-e * -k: c ** -k}, self.var)
        result = LaurentPolynomial.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by var**k."""
        return LaurentPolynomial([(e + k, c) for e, c in self._terms], self.var)

    def substitute_power(self, k: int, var: str | None = None) -> LaurentPolynomial:
        """Replace the variable x by x**k (k may be negative)."""
        return LaurentPolynomial([(e * k, c) for e, c in self._terms], var or self.var)

    def divide_exponents(self, k: int, var: str | None = None) -> LaurentPolynomial:
        """Inverse of substitute_power; every exponent must be divisible by k."""
        if any(e % k for e, _ in self._terms):
            raise ValueError(f"exponents of {self} are not all divisible by {k}")
        return LaurentPolynomial([(e // k, c) for e, c in self._terms], var or self.var)

    def divmod_exact(self, divisor: LaurentPolynomial) -> LaurentPolynomial:
        """
        Exact division. Raises ArithmeticError when divisor does not divide self over
        Z[x, x^-1]; the divisor's extreme coefficients must be units for the long
        division to stay integral.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_e, lead_c = divisor._terms[-1]
        if abs(lead_c) != 1:
            raise ArithmeticError("divisor must have unit leading coefficient")
        remainder = dict(self._terms)
        quotient: dict[int, int] = {}
        if not remainder:
            return LaurentPolynomial((), self.var)
        # quotient exponents are confined to [floor, max(self) - lead_e]
        floor = self._terms[0][0] - divisor._terms[0][0]
        while remainder:
            top = max(remainder)
            if top - lead_e < floor:
                break
            c = remainder[top]
            q_e, q_c = top - lead_e, c * lead_c
            quotient[q_e] = quotient.get(q_e, 0) + q_c
            for e, dc in divisor._terms:
                k = e + q_e
                v = remainder.get(k, 0) - q_c * dc
                if v:
                    remainder[k] = v
                else:
                    remainder.pop(k, None)
        if remainder:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return LaurentPolynomial(quotient, self.var)

    def __call__(self, x):
        """Evaluate at an integer/Fraction (negative exponents need an invertible x)."""
        total = 0
        for e, c in self._terms:
            total += c * (x ** e)
        return total

    def normalized(self) -> LaurentPolynomial:
        """Shift to lowest degree 0 and make the lowest coefficient positive."""
        if not self._terms:
            return self
        p = self.shift(-self.min_degree)
        return -p if p._terms[0][1] < 0 else p

    # ---- text ---------------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + f"{self.var}^{e}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r}, var={self.var!r})"

    @classmethod
    def parse(cls, text: str, var: str = "t") -> LaurentPolynomial:
        """Parse the text produced by ``str``, e.g. ``-q^-8 + 2*q^-6 + 1``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls((), var)
        v = re.escape(var)
        term = re.compile(rf"([+-]?)(?:(\d+)\*)?(?:({v})\^(-?\d+)|(\d+))")
        pos, acc = 0, []
        while pos < len(s):
            m = term.match(s, pos)
            if not m or m.end() == pos or (pos > 0 and not m.group(1)):
                raise ValueError(f"malformed polynomial {text!r} at offset {pos}")
            sign = -1 if m.group(1) == "-" else 1
            if m.group(3):
                coeff = int(m.group(2)) if m.group(2) else 1
                acc.append((int(m.group(4)), sign * coeff))
            else:
                if m.group(2):
                    raise ValueError(f"malformed polynomial {text!r} at offset {pos}")
                acc.append((0, sign * int(m.group(5))))
            pos = m.end()
        return cls(acc, var)
