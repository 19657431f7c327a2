# File: solvers/padic_lift.py
"""Determined systems by linear p-adic lifting and rational reconstruction"""
import math
from abc import ABC, abstractmethod
from random import Random
from typing import Any, List, Optional, Sequence

from core.exceptions import (
    ExhaustedCandidates,
    InvalidParameter,
    NoReconstruction,
    RetryLimit,
    SingularMatrix,
)
from core.models import OpCounter
from elimination.bareiss import determinant, field_inverse
from matrix.dense import ExactMatrix, mat_mul
from rings.base import Domain
from rings.fraction_field import Fraction, FractionField
from rings.integers import IntegerRing
from rings.polynomials import PolynomialRing
from rings.residues import PrimeField, PrimeResidue
from utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_MAX_PRIMES = 8


def _ceil_sqrt(value: int) -> int:
    return 0 if value == 0 else math.isqrt(value - 1) + 1


def _row_degree(domain: PolynomialRing, row: Sequence[Any]) -> int:
    return max([domain.size(e) for e in row] + [0])


def hadamard_bound(a: ExactMatrix, rhs: Optional[ExactMatrix] = None) -> int:
    """Bound on |det a| (integers) or deg det a (polynomials).

    With ``rhs`` the bound also covers every determinant obtained by
    replacing one column of ``a`` with a column of ``rhs``.
    """
    a.require_square()
    domain = a.domain
    extra = [rhs.row(i) for i in range(a.rows)] if rhs is not None else [[] for _ in range(a.rows)]
    if isinstance(domain, IntegerRing):
        bound = 1
        for i in range(a.rows):
            largest_c = max((c * c for c in extra[i]), default=0)
            bound *= _ceil_sqrt(sum(e * e for e in a.row(i)) + largest_c)
        return bound
    if isinstance(domain, PolynomialRing):
        return sum(_row_degree(domain, a.row(i) + extra[i]) for i in range(a.rows))
    raise InvalidParameter(f"no determinant bound over {domain.name}")


def rational_reconstruct(domain: Domain, residue: Any, modulus: Any, bound: Optional[int] = None) -> Fraction:
    """Fraction n/d with n ≡ residue·d mod modulus and both sizes within bound"""
    if bound is None:
        bound = domain.reconstruction_bound(modulus)

    r0, r1 = modulus, domain.divmod(residue, modulus)[1]
    t0, t1 = domain.zero, domain.one
    while domain.size(r1) > bound:
        q, rem = domain.divmod(r0, r1)
        r0, r1 = r1, rem
        t0, t1 = t1, t0 - q * t1

    if domain.is_zero(t1) or domain.size(t1) > bound or not domain.is_unit(domain.gcd(t1, modulus)):
        raise NoReconstruction(f"residue {domain.format(residue)} has no fraction within size {bound}")
    return Fraction(domain, r1, t1)


class LiftingScheme(ABC):
    """A prime element of the domain with its residue field"""

    def __init__(self, domain: Domain, prime: Any, residue_field: PrimeField):
        self.domain = domain
        self.prime = prime
        self.residue_field = residue_field

    @abstractmethod
    def reduce(self, element: Any) -> PrimeResidue:
        pass

    @abstractmethod
    def lift(self, residue: PrimeResidue) -> Any:
        pass

    @abstractmethod
    def lifting_steps(self, a0: ExactMatrix, rhs: ExactMatrix) -> int:
        """Number of steps after which every solution entry can be reconstructed"""
        pass

    @property
    @abstractmethod
    def rejection_key(self) -> Any:
        """Value excluded from the next prime draw if this one fails"""
        pass

    def reduce_matrix(self, a: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(self.residue_field, a.rows, a.cols, (self.reduce(e) for e in a.entries))

    def lift_matrix(self, a: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(self.domain, a.rows, a.cols, (self.lift(e) for e in a.entries))


class IntegerLifting(LiftingScheme):
    """p-adic lifting over Z with a random word-sized prime"""

    def __init__(self, domain: IntegerRing, prime: int):
        super().__init__(domain, prime, PrimeField(prime))

    def reduce(self, element: int) -> PrimeResidue:
        return PrimeResidue(element, self.prime)

    def lift(self, residue: PrimeResidue) -> int:
        return residue.value

    def lifting_steps(self, a0: ExactMatrix, rhs: ExactMatrix) -> int:
        bound = hadamard_bound(a0, rhs)
        target = 2 * bound * bound
        steps, power = 0, 1
        while power <= target:
            power *= self.prime
            steps += 1
        return steps + 1

    @property
    def rejection_key(self) -> int:
        return self.prime


class PolynomialLifting(LiftingScheme):
    """(x - a)-adic lifting over F_p[x]: Taylor expansion at a"""

    def __init__(self, domain: PolynomialRing, prime: Any):
        super().__init__(domain, prime, PrimeField(domain.modulus))
        self.point = domain.evaluation_point(prime)

    def reduce(self, element: Any) -> PrimeResidue:
        return PrimeResidue(element.evaluate(self.point), self.domain.modulus)

    def lift(self, residue: PrimeResidue) -> Any:
        return self.domain.constant(residue.value)

    def lifting_steps(self, a0: ExactMatrix, rhs: ExactMatrix) -> int:
        return 2 * hadamard_bound(a0, rhs) + 2

    @property
    def rejection_key(self) -> int:
        return self.point


def create_scheme(domain: Domain, rng: Random, prime_bits: Optional[int], rejected: Sequence[Any]) -> LiftingScheme:
    """Draw a fresh prime element for ``domain``"""
    if isinstance(domain, IntegerRing):
        return IntegerLifting(domain, domain.random_prime(rng, prime_bits, exclude=rejected))
    if isinstance(domain, PolynomialRing):
        return PolynomialLifting(domain, domain.random_prime(rng, exclude=rejected))
    raise InvalidParameter(f"p-adic lifting is not available over {domain.name}")


def _verify(a0: ExactMatrix, rhs: ExactMatrix, solutions: List[List[Fraction]]) -> bool:
    field = FractionField(a0.domain)
    for j, solution in enumerate(solutions):
        numerators, chi = field.common_denominator(solution)
        lhs = mat_mul(a0, ExactMatrix.column_vector(a0.domain, numerators))
        if lhs.column(0) != [c * chi for c in rhs.column(j)]:
            return False
    return True


def dixon_solve_many(a0: ExactMatrix, rhs: ExactMatrix, rng: Optional[Random] = None,
                     counter: Optional[OpCounter] = None, prime_bits: Optional[int] = None,
                     max_primes: int = DEFAULT_MAX_PRIMES) -> List[List[Fraction]]:
    """Solve A0·x = c for every column c of ``rhs``, sharing one inverse"""
    n = a0.require_square()
    if rhs.rows != n:
        raise InvalidParameter(f"right-hand side has {rhs.rows} rows, expected {n}")
    if max_primes < 1:
        raise InvalidParameter("max_primes must be positive")
    domain = a0.domain
    rng = rng if rng is not None else Random()
    rejected = []

    for attempt in range(1, max_primes + 1):
        try:
            scheme = create_scheme(domain, rng, prime_bits, rejected)
        except ExhaustedCandidates:
            logger.warning(f"Every prime candidate of {domain.name} was rejected")
            break
        try:
            inverse = field_inverse(scheme.reduce_matrix(a0))
        except SingularMatrix:
            logger.warning(f"Prime {domain.format(scheme.prime)} divides the determinant, drawing another",
                           extra={'prime': domain.format(scheme.prime), 'iteration': attempt})
            rejected.append(scheme.rejection_key)
            continue

        steps = scheme.lifting_steps(a0, rhs)
        logger.debug(f"Lifting order {n} system modulo {domain.format(scheme.prime)} for {steps} steps",
                     extra={'order': n, 'prime': domain.format(scheme.prime)})

        residual = rhs
        accumulated = ExactMatrix.zeros(domain, n, rhs.cols)
        power = domain.one
        for _ in range(steps):
            x = scheme.lift_matrix(mat_mul(inverse, scheme.reduce_matrix(residual)))
            accumulated = accumulated.add(x.scale(power))
            residual = residual.sub(mat_mul(a0, x, counter)).exact_div(scheme.prime)
            power = power * scheme.prime

        try:
            solutions = [
                [rational_reconstruct(domain, accumulated[i, j], power) for i in range(n)]
                for j in range(rhs.cols)
            ]
        except NoReconstruction as e:
            logger.warning(f"Reconstruction failed ({e}), drawing another prime", extra={'iteration': attempt})
            rejected.append(scheme.rejection_key)
            continue

        if _verify(a0, rhs, solutions):
            return solutions
        logger.warning("Lifted solution failed verification, drawing another prime", extra={'iteration': attempt})
        rejected.append(scheme.rejection_key)

    if domain.is_zero(determinant(a0)):
        raise SingularMatrix(f"system matrix of order {n} is singular")
    raise RetryLimit(f"no usable prime after {max_primes} attempts")


def dixon_solve(a0: ExactMatrix, rhs: Sequence[Any], rng: Optional[Random] = None,
                counter: Optional[OpCounter] = None, prime_bits: Optional[int] = None,
                max_primes: int = DEFAULT_MAX_PRIMES) -> List[Fraction]:
    """Solve A0·x = c for a single right-hand side"""
    column = ExactMatrix.column_vector(a0.domain, list(rhs))
    return dixon_solve_many(a0, column, rng, counter, prime_bits, max_primes)[0]
