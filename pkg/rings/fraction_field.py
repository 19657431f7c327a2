# File: rings/fraction_field.py
"""Field of fractions K of a Euclidean domain, kept in reduced form"""
from typing import Any, List, Sequence, Tuple

from core.exceptions import DivisionByZero
from rings.base import Domain


class Fraction:
    """Reduced fraction num/den over ``domain``.

    The denominator is the canonical associate (positive integer,
    monic polynomial) and gcd(num, den) is a unit, so equality is a
    structural comparison.
    """

    __slots__ = ("domain", "numerator", "denominator")

    def __init__(self, domain: Domain, numerator: Any, denominator: Any = None):
        if denominator is None:
            denominator = domain.one
        if domain.is_zero(denominator):
            raise DivisionByZero("fraction with zero denominator")

        if domain.is_zero(numerator):
            numerator, denominator = domain.zero, domain.one
        else:
            g = domain.gcd(numerator, denominator)
            if g != domain.one:
                numerator = domain.exact_div(numerator, g)
                denominator = domain.exact_div(denominator, g)
            unit = domain.normal_unit(denominator)
            numerator, denominator = numerator * unit, denominator * unit

        self.domain = domain
        self.numerator = numerator
        self.denominator = denominator

    def _coerce(self, other: Any) -> "Fraction":
        if isinstance(other, Fraction):
            return other
        return Fraction(self.domain, other)

    def __add__(self, other):
        other = self._coerce(other)
        return Fraction(
            self.domain,
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return Fraction(self.domain, -self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        return Fraction(
            self.domain,
            self.numerator * other.numerator,
            self.denominator * other.denominator,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if self.domain.is_zero(other.numerator):
            raise DivisionByZero("division by the zero fraction")
        return Fraction(
            self.domain,
            self.numerator * other.denominator,
            self.denominator * other.numerator,
        )

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def is_zero(self) -> bool:
        return self.domain.is_zero(self.numerator)

    def is_integral(self) -> bool:
        return self.denominator == self.domain.one

    def __eq__(self, other):
        if not isinstance(other, Fraction):
            if not isinstance(other, (int, type(self.domain.zero))):
                return NotImplemented
            other = self._coerce(other)
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return f"Fraction({self})"

    def __str__(self):
        return format_fraction(self)


def _wrap(domain: Domain, elem: Any) -> str:
    text = domain.format(elem)
    if "+" in text.lstrip("-") or "*" in text:
        return f"({text})"
    return text


def format_fraction(frac: Fraction) -> str:
    """Render ``num/den`` with ``/1`` omitted"""
    domain = frac.domain
    if frac.is_integral():
        return domain.format(frac.numerator)
    return f"{_wrap(domain, frac.numerator)}/{_wrap(domain, frac.denominator)}"


class FractionField:
    """The quotient field K of a domain R"""

    def __init__(self, domain: Domain):
        self.domain = domain
        self.name = f"Frac({domain.name})"

    @property
    def zero(self) -> Fraction:
        return Fraction(self.domain, self.domain.zero)

    @property
    def one(self) -> Fraction:
        return Fraction(self.domain, self.domain.one)

    def __call__(self, numerator: Any, denominator: Any = None) -> Fraction:
        return Fraction(self.domain, numerator, denominator)

    def common_denominator(self, vector: Sequence[Fraction]) -> Tuple[List[Any], Any]:
        """Write a fraction vector as x̄ / χ with χ the lcm of the denominators"""
        domain = self.domain
        if not vector:
            return [], domain.one
        chi = domain.lcm_many([entry.denominator for entry in vector])
        numerators = [entry.numerator * domain.exact_div(chi, entry.denominator) for entry in vector]
        return numerators, chi
