# File: rings/polynomials.py
"""Univariate polynomials over a prime field F_p"""
import re
from random import Random
from typing import Any, Iterable, Optional, Sequence, Tuple

from sympy import isprime

from core.exceptions import (
    ConfigurationError,
    DivisionByZero,
    ExhaustedCandidates,
    ParseError,
)
from rings.base import Domain
from utils.logger import get_logger

logger = get_logger(__name__)

_TERM_SPLIT = re.compile(r"([+-]?)([^+-]+)")
_CONSTANT = re.compile(r"^[0-9]+$")
_MONOMIAL = re.compile(r"^(?:([0-9]+)\*)?x(?:\^([0-9]+))?$")


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class Polynomial:
    """Element of F_p[x]; coefficients lowest degree first, no trailing zeros"""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Sequence[int], modulus: int):
        self.coeffs = _trim([c % modulus for c in coeffs])
        self.modulus = modulus

    @classmethod
    def _raw(cls, coeffs: Tuple[int, ...], modulus: int) -> "Polynomial":
        # coeffs already reduced and trimmed
        poly = cls.__new__(cls)
        poly.coeffs = coeffs
        poly.modulus = modulus
        return poly

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, point: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * point + c) % self.modulus
        return acc

    def _coerce(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.modulus != self.modulus:
                raise ValueError(f"mixed moduli {self.modulus} and {other.modulus}")
            return other
        if isinstance(other, int):
            return Polynomial((other,), self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        p = self.modulus
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return Polynomial._raw(_trim(out), p)

    __radd__ = __add__

    def __neg__(self):
        p = self.modulus
        return Polynomial._raw(tuple((-c) % p for c in self.coeffs), p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        p = self.modulus
        if not a or not b:
            return Polynomial._raw((), p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        # leading product is nonzero over a field
        return Polynomial._raw(tuple(c % p for c in out), p)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other % self.modulus])
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.modulus))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)}, {self.modulus})"


class PolynomialRing(Domain):
    """F_p[x] with monic canonical associates and degree as norm"""

    def __init__(self, modulus: int):
        if not isprime(modulus):
            raise ConfigurationError(f"polynomial coefficients need a prime modulus, got {modulus}")
        self.modulus = modulus
        self.name = f"F{modulus}[x]"
        self._zero = Polynomial._raw((), modulus)
        self._one = Polynomial._raw((1,), modulus)
        self._x = Polynomial._raw((0, 1), modulus)

    @property
    def zero(self) -> Polynomial:
        return self._zero

    @property
    def one(self) -> Polynomial:
        return self._one

    @property
    def gen(self) -> Polynomial:
        return self._x

    def from_int(self, n: int) -> Polynomial:
        return Polynomial((n,), self.modulus)

    def constant(self, value: int) -> Polynomial:
        return Polynomial((value,), self.modulus)

    def is_zero(self, a: Polynomial) -> bool:
        return not a.coeffs

    def divmod(self, a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial]:
        if not b.coeffs:
            raise DivisionByZero(f"polynomial division by zero in {self.name}")
        p = self.modulus
        rem = list(a.coeffs)
        db = len(b.coeffs) - 1
        if len(rem) - 1 < db:
            return self._zero, a
        inv_lead = pow(b.coeffs[-1], -1, p)
        quot = [0] * (len(rem) - db)
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = rem[shift + db] * inv_lead % p
            quot[shift] = c
            if c:
                for i, cb in enumerate(b.coeffs):
                    rem[shift + i] = (rem[shift + i] - c * cb) % p
        return Polynomial._raw(_trim(quot), p), Polynomial._raw(_trim(rem[:db]), p)

    def normal_unit(self, a: Polynomial) -> Polynomial:
        if not a.coeffs:
            return self._one
        return Polynomial._raw((pow(a.leading, -1, self.modulus),), self.modulus)

    def size(self, a: Polynomial) -> int:
        return a.degree

    def parse(self, text: str) -> Polynomial:
        """Parse ``c0+c1*x+c2*x^2``; coefficients are reduced modulo p"""
        body = text.replace(" ", "")
        if not body:
            raise ParseError("empty polynomial")

        matches = list(_TERM_SPLIT.finditer(body))
        if "".join(m.group(0) for m in matches) != body:
            raise ParseError(f"not a polynomial: {text!r}")

        coeffs = {}
        for match in matches:
            sign = -1 if match.group(1) == "-" else 1
            term = match.group(2)
            if _CONSTANT.match(term):
                coef, exp = int(term), 0
            else:
                mono = _MONOMIAL.match(term)
                if not mono:
                    raise ParseError(f"bad polynomial term {term!r} in {text!r}")
                coef = int(mono.group(1)) if mono.group(1) else 1
                exp = int(mono.group(2)) if mono.group(2) else 1
            coeffs[exp] = coeffs.get(exp, 0) + sign * coef

        dense = [0] * (max(coeffs) + 1)
        for exp, coef in coeffs.items():
            dense[exp] = coef
        return Polynomial(dense, self.modulus)

    def format(self, a: Polynomial) -> str:
        if not a.coeffs:
            return "0"
        terms = []
        for exp, coef in enumerate(a.coeffs):
            if coef == 0:
                continue
            if exp == 0:
                terms.append(str(coef))
                continue
            mono = "x" if exp == 1 else f"x^{exp}"
            terms.append(mono if coef == 1 else f"{coef}*{mono}")
        return "+".join(terms)

    def random_element(self, rng: Random, bound: int) -> Polynomial:
        """Random polynomial of degree at most ``bound``"""
        p = self.modulus
        return Polynomial([rng.randrange(p) for _ in range(bound + 1)], p)

    def random_prime(self, rng: Random, size: Optional[int] = None, exclude: Iterable[Any] = ()) -> Polynomial:
        """Monic linear prime x - a for a random evaluation point a.

        ``exclude`` holds evaluation points (ints) already rejected.
        """
        p = self.modulus
        rejected = {int(a) % p for a in exclude}
        if len(rejected) >= p:
            raise ExhaustedCandidates(f"every evaluation point of F_{p} was rejected")
        candidates = [a for a in range(p) if a not in rejected] if len(rejected) > p // 2 else None
        while True:
            point = rng.choice(candidates) if candidates else rng.randrange(p)
            if point not in rejected:
                break
        logger.debug(f"Drew evaluation point {point} in F_{p}")
        return self.linear_prime(point)

    def linear_prime(self, point: int) -> Polynomial:
        return self.gen - point

    def evaluation_point(self, prime: Polynomial) -> int:
        """The a of a monic linear prime x - a"""
        return (-prime.coeffs[0]) % self.modulus

    def reconstruction_bound(self, modulus: Polynomial) -> int:
        return (modulus.degree - 1) // 2
