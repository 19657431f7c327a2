# File: solvers/diophantine.py
"""Solutions of A·x = c lying wholly in the domain, by randomized re-permutation"""
import math
from random import Random
from typing import Any, List, Optional, Sequence, Tuple, Union

from core.exceptions import (
    EmptyInput,
    InconsistentSystem,
    NotEuclidean,
    PreconditionViolated,
    WitnessInvalid,
)
from core.models import (
    BasisVector,
    DiophantineBasis,
    DiophantineResult,
    DiophantineStatus,
    NotUnit,
    OpCounter,
    RationalBasis,
    SolverOptions,
    SystemInstance,
    SystemKind,
    UnitWitness,
)
from matrix.dense import PermutationMap
from rings.base import Domain
from rings.fraction_field import Fraction, FractionField
from solvers.rational_basis import basis_homogeneous, basis_nonhomogeneous, consistency_check
from utils.logger import get_logger

logger = get_logger(__name__)


def denominator(domain: Domain, x: Sequence[Fraction]) -> Tuple[List[Any], Any]:
    """(x̄, χ) with χ the lcm of the entry denominators and x = x̄/χ"""
    return FractionField(domain).common_denominator(x)


def unit_ideal_witness(domain: Domain, chis: Sequence[Any]) -> Union[UnitWitness, NotUnit]:
    """Chained extended gcd over the denominators"""
    if not domain.is_euclidean:
        raise NotEuclidean(f"unit ideal test needs a Euclidean domain, got {domain.name}")
    if not chis:
        raise EmptyInput("no denominators to combine")

    g = domain.canonical(chis[0])
    q = [domain.normal_unit(chis[0])]
    for chi in chis[1:]:
        g, u, v = domain.gcd_ext(g, chi)
        q = [u * qk for qk in q] + [v]

    if not domain.is_unit(g):
        return NotUnit(gcd=g)
    return UnitWitness(q=tuple(q))


def diophantine_solution(basis: RationalBasis, witness: UnitWitness) -> Tuple[Any, ...]:
    """⟨x̄, q⟩ = Σ q_i·x̄_i, a solution with every entry in the domain"""
    domain = basis.domain
    if len(witness.q) != len(basis.vectors):
        raise WitnessInvalid(f"witness has {len(witness.q)} entries for {len(basis.vectors)} vectors")
    pairing = sum((q * chi for q, chi in zip(witness.q, basis.denominators)), domain.zero)
    if pairing != domain.one:
        raise WitnessInvalid(f"<chi, q> = {domain.format(pairing)}, expected 1")

    width = len(basis.vectors[0].numerators)
    total = [domain.zero] * width
    for q, vector in zip(witness.q, basis.vectors):
        if domain.is_zero(q):
            continue
        total = [t + q * x for t, x in zip(total, vector.numerators)]
    return tuple(total)


def substitute_solution(basis: RationalBasis, witness: UnitWitness, solution: Sequence[Any]) -> RationalBasis:
    """Replace the first vector with q_s ≠ 0 by ``solution`` and move it to the front"""
    domain = basis.domain
    s = next(i for i, q in enumerate(witness.q) if not domain.is_zero(q))
    rest = [v for i, v in enumerate(basis.vectors) if i != s]
    front = BasisVector(numerators=tuple(solution), denominator=domain.one)
    return RationalBasis(
        kind=basis.kind,
        vectors=(front, *rest),
        rank=basis.rank,
        row_perm=basis.row_perm,
        col_perm=basis.col_perm,
        domain=domain,
    )


def diophantine_basis(basis: RationalBasis) -> DiophantineBasis:
    """x̄_1 and x̄_i − x̄_1·(χ_i − 1) for a basis whose first denominator is 1"""
    domain = basis.domain
    if basis.kind is SystemKind.HOMOGENEOUS:
        return DiophantineBasis(kind=basis.kind, vectors=tuple(v.numerators for v in basis.vectors))

    first = basis.vectors[0]
    if first.denominator != domain.one:
        raise PreconditionViolated("first basis vector must have denominator 1")

    vectors = [tuple(first.numerators)]
    for vector in basis.vectors[1:]:
        shift = vector.denominator - domain.one
        vectors.append(tuple(x - x1 * shift for x, x1 in zip(vector.numerators, first.numerators)))
    return DiophantineBasis(kind=basis.kind, vectors=tuple(vectors))


def _norm(system: SystemInstance) -> int:
    domain = system.domain
    sizes = [domain.size(e) for e in system.matrix.entries] + [domain.size(c) for c in system.rhs]
    return max(sizes + [0])


def default_max_iters(system: SystemInstance, rank: int) -> int:
    """Iteration budget growing with log n + log log ||(A, c)||"""
    n = max(system.rows, 1)
    spread = system.cols - rank + 1
    estimate = 4 * (math.log(n) + math.log(math.log(_norm(system) + 16))) / spread
    return max(4, math.ceil(estimate) + 4)


def solve_diophantine(system: SystemInstance, rng: Optional[Random] = None,
                      max_iters: Optional[int] = None, options: Optional[SolverOptions] = None,
                      counter: Optional[OpCounter] = None) -> DiophantineResult:
    """Diophantine basis, NO_SOLUTION, or INCONCLUSIVE after max_iters draws"""
    verdict = consistency_check(system)
    if not verdict.consistent:
        raise InconsistentSystem(f"rank(A) = {verdict.rank} but rank(A|c) = {verdict.augmented_rank}")
    domain = system.domain
    rng = rng if rng is not None else Random()

    if system.is_homogeneous:
        basis = basis_homogeneous(system, options, rng, counter)
        return DiophantineResult(DiophantineStatus.SOLVED, diophantine_basis(basis), iterations=1)

    if verdict.rank == system.cols:
        basis = basis_nonhomogeneous(system, options, rng, counter)
        if basis.vectors[0].denominator != domain.one:
            logger.info("Unique solution is not integral")
            return DiophantineResult(DiophantineStatus.NO_SOLUTION, iterations=1)
        return DiophantineResult(DiophantineStatus.SOLVED, diophantine_basis(basis), iterations=1)

    budget = max_iters if max_iters is not None else default_max_iters(system, verdict.rank)
    for iteration in range(1, budget + 1):
        pre_row = PermutationMap.random(system.rows, rng)
        pre_col = PermutationMap.random(system.cols, rng)
        logger.debug(f"Iteration {iteration}: pre-permutations {pre_row.image} / {pre_col.image}",
                     extra={'iteration': iteration})

        basis = basis_nonhomogeneous(system, options, rng, counter, pre_row, pre_col)
        witness = unit_ideal_witness(domain, basis.denominators)
        if isinstance(witness, NotUnit):
            logger.warning(f"Denominators generate ({domain.format(witness.gcd)}), re-permuting",
                           extra={'iteration': iteration})
            continue

        solution = diophantine_solution(basis, witness)
        result = diophantine_basis(substitute_solution(basis, witness, solution))
        logger.info(f"Diophantine basis found after {iteration} iteration(s)", extra={'iteration': iteration})
        return DiophantineResult(DiophantineStatus.SOLVED, result, iterations=iteration)

    logger.warning(f"No unit witness within {budget} iterations")
    return DiophantineResult(DiophantineStatus.INCONCLUSIVE, iterations=budget)
