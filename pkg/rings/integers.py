# File: rings/integers.py
"""Arbitrary-precision integers as a Euclidean domain"""
import math
import re
from random import Random
from typing import Iterable, Optional, Tuple

from sympy import isprime

from core.exceptions import DivisionByZero, ExhaustedCandidates, InvalidParameter, ParseError
from rings.base import Domain
from utils.logger import get_logger

logger = get_logger(__name__)

# draws per requested bit before giving up on finding a prime
PRIME_DRAWS_PER_BIT = 200

_INTEGER = re.compile(r"-?[0-9]+")


class IntegerRing(Domain):
    """The ring Z; elements are Python ints (canonical by construction)"""

    name = "Z"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return int(n)

    def is_zero(self, a: int) -> bool:
        return a == 0

    def divmod(self, a: int, b: int) -> Tuple[int, int]:
        if b == 0:
            raise DivisionByZero("integer division by zero")
        return divmod(a, b)

    def normal_unit(self, a: int) -> int:
        return -1 if a < 0 else 1

    def size(self, a: int) -> int:
        return abs(a)

    def parse(self, text: str) -> int:
        token = text.strip()
        if not _INTEGER.fullmatch(token):
            raise ParseError(f"not an integer: {text!r}")
        return int(token)

    def format(self, a: int) -> str:
        return str(a)

    def random_element(self, rng: Random, bound: int) -> int:
        return rng.randint(-bound, bound)

    def random_prime(self, rng: Random, size: Optional[int] = None, exclude: Iterable[int] = ()) -> int:
        """Random prime of exactly ``size`` bits (probabilistic test, BPSW)"""
        bits = 62 if size is None else size
        if bits < 2:
            raise InvalidParameter(f"a prime needs at least 2 bits, got {bits}")

        excluded = set(exclude)
        low, high = 1 << (bits - 1), (1 << bits) - 1
        for _ in range(PRIME_DRAWS_PER_BIT * bits):
            candidate = rng.randint(low, high)
            if candidate in excluded:
                continue
            if isprime(candidate):
                logger.debug(f"Drew {bits}-bit prime {candidate}")
                return candidate
        raise ExhaustedCandidates(f"no {bits}-bit prime found")

    def reconstruction_bound(self, modulus: int) -> int:
        return math.isqrt(modulus // 2)
