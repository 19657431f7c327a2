# File: solvers/backends.py
"""Pluggable solvers for determined systems A0·X = C"""
from abc import ABC, abstractmethod
from random import Random
from typing import List, Optional

from adjoint.factorization import adjoint
from core.models import Method, OpCounter, ScaledSolution, SolverOptions
from elimination.bareiss import bareiss_solve
from matrix.dense import ExactMatrix, mat_mul
from rings.fraction_field import Fraction
from rings.integers import IntegerRing
from solvers.padic_lift import dixon_solve_many
from utils.logger import get_logger

logger = get_logger(__name__)


class DeterminedSolver(ABC):
    """Solves A0·X = C for a nonsingular A0, one solution per column of C.

    Results stay in R: numerators N with a shared denominator δ, X = N / δ.
    """

    method: Method

    def __init__(self, options: SolverOptions, rng: Optional[Random] = None,
                 counter: Optional[OpCounter] = None):
        self.options = options
        self.rng = rng
        self.counter = counter

    def solve(self, a0: ExactMatrix, rhs: ExactMatrix) -> ScaledSolution:
        if a0.rows == 0:
            return ScaledSolution(ExactMatrix.zeros(a0.domain, 0, rhs.cols), a0.domain.one)
        return self._solve(a0, rhs)

    @abstractmethod
    def _solve(self, a0: ExactMatrix, rhs: ExactMatrix) -> ScaledSolution:
        pass


def _over_common_denominator(domain, n: int, columns: List[List[Fraction]]) -> ScaledSolution:
    denominators = [entry.denominator for column in columns for entry in column]
    delta = domain.lcm_many(denominators) if denominators else domain.one
    entries = [
        columns[j][i].numerator * domain.exact_div(delta, columns[j][i].denominator)
        for i in range(n) for j in range(len(columns))
    ]
    return ScaledSolution(ExactMatrix(domain, n, len(columns), entries), delta)


class AdjointSolver(DeterminedSolver):
    """Cramer's rule with the factorized adjugate"""

    method = Method.ADJOINT

    def _solve(self, a0: ExactMatrix, rhs: ExactMatrix) -> ScaledSolution:
        result = adjoint(a0, self.counter, verify_frames=self.options.verify_frames)
        return ScaledSolution(mat_mul(result.adjugate, rhs, self.counter), result.determinant)


class BareissSolver(DeterminedSolver):
    """Fraction-free Gauss-Jordan elimination"""

    method = Method.BAREISS

    def _solve(self, a0: ExactMatrix, rhs: ExactMatrix) -> ScaledSolution:
        numerators, denominator = bareiss_solve(a0, rhs, self.counter)
        return ScaledSolution(numerators, denominator)


class DixonSolver(DeterminedSolver):
    """Linear p-adic lifting; the reconstructed fractions share their lcm denominator"""

    method = Method.DIXON

    def _solve(self, a0: ExactMatrix, rhs: ExactMatrix) -> ScaledSolution:
        columns = dixon_solve_many(a0, rhs, self.rng, self.counter,
                                   prime_bits=self.options.prime_bits,
                                   max_primes=self.options.max_primes)
        return _over_common_denominator(a0.domain, a0.rows, columns)


class SolverFactory:
    """Factory choosing a determined-system backend"""

    _registry = {
        Method.ADJOINT: AdjointSolver,
        Method.BAREISS: BareissSolver,
        Method.DIXON: DixonSolver,
    }

    def __init__(self, options: Optional[SolverOptions] = None, rng: Optional[Random] = None,
                 counter: Optional[OpCounter] = None):
        self.options = options or SolverOptions()
        self.rng = rng
        self.counter = counter

    def resolve_method(self, domain, order: int) -> Method:
        """Concrete backend for ``auto``: lifting for large integer systems"""
        method = self.options.method
        if method is not Method.AUTO:
            return method
        if isinstance(domain, IntegerRing) and order > self.options.lifting_threshold:
            return Method.DIXON
        return Method.ADJOINT

    def create_solver(self, domain, order: int) -> DeterminedSolver:
        method = self.resolve_method(domain, order)
        logger.debug(f"Using {method.value} backend for order {order} over {domain.name}")
        return self._registry[method](self.options, self.rng, self.counter)

    @classmethod
    def get_available_methods(cls) -> List[str]:
        """Get list of accepted method names"""
        return [m.value for m in Method]
