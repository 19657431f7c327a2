# File: rings/residues.py
"""Residues modulo a prime: the field GF(p)"""
from random import Random
from typing import Any, Iterable, Optional, Tuple

from sympy import isprime

from core.exceptions import ConfigurationError, DivisionByZero, InvalidParameter, ParseError
from rings.base import Domain


class PrimeResidue:
    """Element of GF(p); ``value`` is always reduced into [0, p)"""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other: Any) -> "PrimeResidue":
        if isinstance(other, PrimeResidue):
            if other.modulus != self.modulus:
                raise ValueError(f"mixed moduli {self.modulus} and {other.modulus}")
            return other
        if isinstance(other, int):
            return PrimeResidue(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PrimeResidue(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PrimeResidue(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PrimeResidue(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PrimeResidue(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeResidue(-self.value, self.modulus)

    def inverse(self) -> "PrimeResidue":
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse modulo {self.modulus}")
        return PrimeResidue(pow(self.value, -1, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, PrimeResidue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"PrimeResidue({self.value}, {self.modulus})"


class PrimeField(Domain):
    """GF(p); also the residue field used by p-adic lifting"""

    is_field = True

    def __init__(self, modulus: int):
        if not isprime(modulus):
            raise ConfigurationError(f"modulus must be a prime, got {modulus}")
        self.modulus = modulus
        self.name = f"GF({modulus})"
        self._zero = PrimeResidue(0, modulus)
        self._one = PrimeResidue(1, modulus)

    @property
    def zero(self) -> PrimeResidue:
        return self._zero

    @property
    def one(self) -> PrimeResidue:
        return self._one

    def from_int(self, n: int) -> PrimeResidue:
        return PrimeResidue(n, self.modulus)

    def is_zero(self, a: PrimeResidue) -> bool:
        return a.value == 0

    def inverse(self, a: PrimeResidue) -> PrimeResidue:
        return a.inverse()

    def divmod(self, a: PrimeResidue, b: PrimeResidue) -> Tuple[PrimeResidue, PrimeResidue]:
        return a * b.inverse(), self._zero

    def normal_unit(self, a: PrimeResidue) -> PrimeResidue:
        if a.value == 0:
            return self._one
        return a.inverse()

    def size(self, a: PrimeResidue) -> int:
        return 0 if a.value else -1

    def parse(self, text: str) -> PrimeResidue:
        token = text.strip()
        try:
            return PrimeResidue(int(token), self.modulus)
        except ValueError:
            raise ParseError(f"not a residue: {text!r}")

    def format(self, a: PrimeResidue) -> str:
        return str(a.value)

    def random_element(self, rng: Random, bound: int = 0) -> PrimeResidue:
        return PrimeResidue(rng.randrange(self.modulus), self.modulus)

    def random_prime(self, rng: Random, size: Optional[int] = None, exclude: Iterable[Any] = ()):
        raise InvalidParameter(f"{self.name} is a field and has no prime elements")

    def reconstruction_bound(self, modulus: Any) -> int:
        raise InvalidParameter(f"rational reconstruction is not defined over {self.name}")
