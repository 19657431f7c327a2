# File: solvers/rational_basis.py
"""Basis sets of solutions of A·x = c in the field of fractions"""
from random import Random
from typing import Any, List, Optional, Sequence, Tuple, Union

from core.exceptions import InconsistentSystem, SolverError, ZeroRHS
from core.models import (
    BasisVector,
    ConsistencyVerdict,
    DiophantineBasis,
    OpCounter,
    RationalBasis,
    SolverOptions,
    SystemInstance,
    SystemKind,
)
from elimination.bareiss import rank, rank_profile
from matrix.dense import ExactMatrix, PermutationMap, apply_col_perm, apply_row_perm, mat_mul
from rings.base import Domain
from solvers.backends import SolverFactory
from utils.logger import get_logger

logger = get_logger(__name__)


def consistency_check(system: SystemInstance) -> ConsistencyVerdict:
    """Compare rank(A) with the rank of the augmented matrix (A|c)"""
    domain = system.domain
    r = rank(system.matrix)
    augmented = system.matrix.hstack(ExactMatrix.column_vector(domain, list(system.rhs)))
    r_aug = rank(augmented)
    return ConsistencyVerdict(consistent=(r == r_aug), rank=r, augmented_rank=r_aug)


class _PermutedSystem:
    """S·A·T split as (A0, A1) with c0 = first r entries of S·c"""

    def __init__(self, system: SystemInstance, pre_row: Optional[PermutationMap],
                 pre_col: Optional[PermutationMap]):
        a = system.matrix
        pre_row = pre_row or PermutationMap.identity(a.rows)
        pre_col = pre_col or PermutationMap.identity(a.cols)
        shuffled = apply_col_perm(pre_col, apply_row_perm(pre_row, a))

        r, row_perm, col_perm = rank_profile(shuffled)
        self.rank = r
        self.row_perm = pre_row.then(row_perm)
        self.col_perm = pre_col.then(col_perm)

        permuted = apply_col_perm(self.col_perm, apply_row_perm(self.row_perm, a))
        self.domain = system.domain
        self.cols = a.cols
        self.a0 = permuted.submatrix(0, r, 0, r)
        self.a1 = permuted.submatrix(0, r, r, a.cols)
        self.c0 = self.row_perm.apply(list(system.rhs))[:r]

    def unpermute(self, y: Sequence[Any]) -> List[Any]:
        """x with x[T(j)] = y[j]"""
        x = [None] * self.cols
        for j, k in enumerate(self.col_perm.image):
            x[k] = y[j]
        return x


def _emit(domain: Domain, numerators: Sequence[Any], denominator: Any) -> BasisVector:
    """Reduce x̄ / χ so that χ is canonical and shares no factor with every entry"""
    g = denominator
    for num in numerators:
        if domain.is_unit(g):
            break
        g = domain.gcd(g, num)
    if not domain.is_unit(g):
        numerators = [domain.exact_div(num, g) for num in numerators]
        denominator = domain.exact_div(denominator, g)
    unit = domain.normal_unit(denominator)
    return BasisVector(numerators=tuple(num * unit for num in numerators), denominator=denominator * unit)


def _basis(kind: SystemKind, vectors: List[BasisVector], permuted: _PermutedSystem) -> RationalBasis:
    return RationalBasis(
        kind=kind,
        vectors=tuple(vectors),
        rank=permuted.rank,
        row_perm=permuted.row_perm,
        col_perm=permuted.col_perm,
        domain=permuted.domain,
    )


def basis_homogeneous(system: SystemInstance, options: Optional[SolverOptions] = None,
                      rng: Optional[Random] = None, counter: Optional[OpCounter] = None,
                      pre_row: Optional[PermutationMap] = None,
                      pre_col: Optional[PermutationMap] = None) -> RationalBasis:
    """The m - r vectors T·(x_j; e_j) with A0·x_j = -a_j.

    An empty basis means the only solution is zero.
    """
    permuted = _PermutedSystem(system, pre_row, pre_col)
    domain = permuted.domain
    r, m = permuted.rank, permuted.cols
    free = m - r
    if free == 0:
        return _basis(SystemKind.HOMOGENEOUS, [], permuted)

    solver = SolverFactory(options, rng, counter).create_solver(domain, r)
    solution = solver.solve(permuted.a0, permuted.a1.neg())
    delta = solution.denominator

    vectors = []
    for j in range(free):
        tail = [delta if i == j else domain.zero for i in range(free)]
        vectors.append(_emit(domain, permuted.unpermute(solution.column(j) + tail), delta))
    logger.debug(f"Homogeneous basis: {len(vectors)} vectors, rank {r}")
    return _basis(SystemKind.HOMOGENEOUS, vectors, permuted)


def _last_nonzero(domain: Domain, vector: Sequence[Any]) -> int:
    for i in range(len(vector) - 1, -1, -1):
        if not domain.is_zero(vector[i]):
            return i
    raise SolverError("particular solution vanishes on a consistent nonhomogeneous system")


def basis_nonhomogeneous(system: SystemInstance, options: Optional[SolverOptions] = None,
                         rng: Optional[Random] = None, counter: Optional[OpCounter] = None,
                         pre_row: Optional[PermutationMap] = None,
                         pre_col: Optional[PermutationMap] = None) -> RationalBasis:
    """The m - r + 1 vectors T·Q·(b; 0) and T·Q·(b - ξ_j·b_j; ξ_j·f_j).

    b = n / δ and b_j = n_j / δ arrive as R-valued numerators over the
    shared δ; every vector is assembled in R and reduced only on emission.
    """
    if system.is_homogeneous:
        raise ZeroRHS("right-hand side is zero; use the homogeneous basis")
    verdict = consistency_check(system)
    if not verdict.consistent:
        raise InconsistentSystem(f"rank(A) = {verdict.rank} but rank(A|c) = {verdict.augmented_rank}")

    permuted = _PermutedSystem(system, pre_row, pre_col)
    domain = permuted.domain
    r, m = permuted.rank, permuted.cols
    free = m - r

    rhs = ExactMatrix.column_vector(domain, permuted.c0).hstack(permuted.a1)
    solver = SolverFactory(options, rng, counter).create_solver(domain, r)
    solution = solver.solve(permuted.a0, rhs)
    delta = solution.denominator

    # P moves the last nonzero entry of b to the bottom
    swap = PermutationMap.transposition(r, _last_nonzero(domain, solution.column(0)), r - 1)
    n = swap.apply(solution.column(0))
    nu = n[r - 1]

    scaled = [(list(n) + [domain.zero] * free, delta)]
    for j in range(free):
        n_j = swap.apply(solution.column(j + 1))
        nu_j = n_j[r - 1]
        if domain.is_zero(nu_j):
            # ξ = β: (δ·n - ν·n_j; ν·δ·e_j) / δ²
            head = [delta * a - nu * b for a, b in zip(n, n_j)]
            denominator = delta * delta
        else:
            # ξ = β / β_j: (ν_j·n - ν·n_j; ν·δ·e_j) / (δ·ν_j)
            head = [nu_j * a - nu * b for a, b in zip(n, n_j)]
            denominator = delta * nu_j
        tail = [nu * delta if i == j else domain.zero for i in range(free)]
        scaled.append((head + tail, denominator))

    vectors = []
    for z, denominator in scaled:
        y = swap.apply(z[:r]) + z[r:]
        vectors.append(_emit(domain, permuted.unpermute(y), denominator))

    logger.debug(f"Nonhomogeneous basis: {len(vectors)} vectors, rank {r}")
    return _basis(SystemKind.NONHOMOGENEOUS, vectors, permuted)


def compute_basis(system: SystemInstance, options: Optional[SolverOptions] = None,
                  rng: Optional[Random] = None, counter: Optional[OpCounter] = None,
                  pre_row: Optional[PermutationMap] = None,
                  pre_col: Optional[PermutationMap] = None) -> RationalBasis:
    """Homogeneous or nonhomogeneous basis depending on c"""
    if system.is_homogeneous:
        return basis_homogeneous(system, options, rng, counter, pre_row, pre_col)
    return basis_nonhomogeneous(system, options, rng, counter, pre_row, pre_col)


def _pairs(basis: Union[RationalBasis, DiophantineBasis]) -> List[Tuple[Sequence[Any], Any]]:
    if isinstance(basis, DiophantineBasis):
        return [(vector, None) for vector in basis.vectors]
    return [(v.numerators, v.denominator) for v in basis.vectors]


def verify_basis(system: SystemInstance, basis: Union[RationalBasis, DiophantineBasis]) -> bool:
    """Every vector solves the system and the set has the right size and rank"""
    domain = system.domain
    verdict = consistency_check(system)
    if not verdict.consistent:
        return False

    pairs = _pairs(basis)
    expected = system.cols - verdict.rank + (0 if system.is_homogeneous else 1)
    if len(pairs) != expected:
        return False

    for numerators, chi in pairs:
        chi = domain.one if chi is None else chi
        if domain.is_zero(chi) or len(numerators) != system.cols:
            return False
        product = mat_mul(system.matrix, ExactMatrix.column_vector(domain, list(numerators)))
        if product.column(0) != [c * chi for c in system.rhs]:
            return False

    if not pairs:
        return True
    stacked = ExactMatrix.from_rows(domain, [list(numerators) for numerators, _ in pairs])
    return rank(stacked) == len(pairs)
