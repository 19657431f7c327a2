# File: rings/base.py
"""Commutative domain contract shared by every concrete ring"""
from abc import ABC, abstractmethod
from random import Random
from typing import Any, Iterable, List, Optional, Tuple

from core.exceptions import (
    BothZero,
    DivisionByZero,
    EmptyInput,
    NotDivisible,
    ZeroElement,
)
from utils.logger import get_logger

logger = get_logger(__name__)


class Domain(ABC):
    """A commutative domain with identity and exact division.

    Elements are plain Python values supporting ``+``, ``-``, ``*``,
    unary minus and ``==``; everything else (division, gcd, canonical
    forms, text syntax) goes through the domain object.  All concrete
    domains here are Euclidean, so the generic extended Euclid below
    only needs ``divmod``.
    """

    name: str = "domain"
    is_field: bool = False
    is_euclidean: bool = True

    @property
    @abstractmethod
    def zero(self) -> Any:
        pass

    @property
    @abstractmethod
    def one(self) -> Any:
        pass

    @abstractmethod
    def from_int(self, n: int) -> Any:
        pass

    @abstractmethod
    def divmod(self, a: Any, b: Any) -> Tuple[Any, Any]:
        """Euclidean division a = q*b + r with size(r) < size(b)"""
        pass

    @abstractmethod
    def normal_unit(self, a: Any) -> Any:
        """Unit u such that a*u is the canonical associate of a"""
        pass

    @abstractmethod
    def size(self, a: Any) -> int:
        """The norm ||a||: |a| for integers, deg a for polynomials"""
        pass

    @abstractmethod
    def parse(self, text: str) -> Any:
        pass

    @abstractmethod
    def format(self, a: Any) -> str:
        pass

    @abstractmethod
    def random_element(self, rng: Random, bound: int) -> Any:
        pass

    @abstractmethod
    def random_prime(self, rng: Random, size: Optional[int] = None, exclude: Iterable[Any] = ()) -> Any:
        pass

    @abstractmethod
    def reconstruction_bound(self, modulus: Any) -> int:
        """Largest size allowed for numerator and denominator when
        reconstructing a fraction from a residue modulo ``modulus``"""
        pass

    def is_zero(self, a: Any) -> bool:
        return a == self.zero

    def is_unit(self, a: Any) -> bool:
        if self.is_zero(a):
            return False
        return self.canonical(a) == self.one

    def canonical(self, a: Any) -> Any:
        if self.is_zero(a):
            return a
        return a * self.normal_unit(a)

    def exact_div(self, a: Any, b: Any) -> Any:
        """Return c with a = b*c, failing loudly if b does not divide a"""
        if self.is_zero(b):
            raise DivisionByZero(f"exact division of {self.format(a)} by zero in {self.name}")
        q, r = self.divmod(a, b)
        if not self.is_zero(r):
            raise NotDivisible(f"{self.format(b)} does not divide {self.format(a)} in {self.name}")
        return q

    def gcd_ext(self, a: Any, b: Any) -> Tuple[Any, Any, Any]:
        """Extended Euclid: (g, u, v) with u*a + v*b = g, g canonical"""
        if self.is_zero(a) and self.is_zero(b):
            raise BothZero("gcd of two zero elements is undefined")

        old_r, r = a, b
        old_s, s = self.one, self.zero
        old_t, t = self.zero, self.one
        while not self.is_zero(r):
            q, rem = self.divmod(old_r, r)
            old_r, r = r, rem
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t

        unit = self.normal_unit(old_r)
        return old_r * unit, old_s * unit, old_t * unit

    def gcd(self, a: Any, b: Any) -> Any:
        if self.is_zero(a) and self.is_zero(b):
            return self.zero
        g, _, _ = self.gcd_ext(a, b)
        return g

    def lcm_many(self, elems: List[Any]) -> Any:
        """Canonical generator of the intersection of the principal ideals"""
        if not elems:
            raise EmptyInput("lcm of an empty list")

        result = self.one
        for elem in elems:
            if self.is_zero(elem):
                raise ZeroElement("lcm is only defined for nonzero elements")
            g = self.gcd(result, elem)
            result = self.exact_div(result * elem, g)
        return self.canonical(result)

    def __repr__(self) -> str:
        return self.name
