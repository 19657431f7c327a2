# File: elimination/bareiss.py
"""Fraction-free Gaussian elimination with exact divisions"""
from typing import Any, List, Optional, Tuple

from core.exceptions import InvalidParameter, SingularMatrix
from core.models import EliminationResult, OpCounter
from matrix.dense import ExactMatrix, PermutationMap
from utils.logger import get_logger

logger = get_logger(__name__)


def _find_pivot(work: List[List[Any]], k: int, domain) -> Optional[Tuple[int, int]]:
    # first nonzero in a row-major scan of the trailing block
    for i in range(k, len(work)):
        row = work[i]
        for j in range(k, len(row)):
            if not domain.is_zero(row[j]):
                return i, j
    return None


def bareiss_eliminate(a: ExactMatrix, counter: Optional[OpCounter] = None) -> EliminationResult:
    """One-step fraction-free elimination with full pivoting.

    After step k every trailing entry (i, j) holds the bordered minor of
    order k + 1 of the permuted input, so the final ``reduced`` matrix
    carries the corner minors on its diagonal.
    """
    domain = a.domain
    work = a.to_rows()
    row_image = list(range(a.rows))
    col_image = list(range(a.cols))
    minors = []
    prev = domain.one

    for k in range(min(a.rows, a.cols)):
        pivot = _find_pivot(work, k, domain)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != k:
            work[k], work[pi] = work[pi], work[k]
            row_image[k], row_image[pi] = row_image[pi], row_image[k]
        if pj != k:
            for row in work:
                row[k], row[pj] = row[pj], row[k]
            col_image[k], col_image[pj] = col_image[pj], col_image[k]

        pivot_row = work[k]
        akk = pivot_row[k]
        divide = prev != domain.one
        updates = 0
        for i in range(k + 1, a.rows):
            row = work[i]
            aik = row[k]
            for j in range(k + 1, a.cols):
                value = akk * row[j] - aik * pivot_row[j]
                row[j] = domain.exact_div(value, prev) if divide else value
                updates += 1
            row[k] = domain.zero

        if counter is not None:
            counter.add_multiplications(2 * updates)
            if divide:
                counter.add_divisions(updates)
        minors.append(akk)
        prev = akk

    rank = len(minors)
    logger.debug(f"Eliminated {a.rows}x{a.cols} matrix over {domain.name}: rank {rank}")
    return EliminationResult(
        rank=rank,
        row_perm=PermutationMap(row_image),
        col_perm=PermutationMap(col_image),
        corner_minors=tuple(minors),
        reduced=ExactMatrix.from_rows(domain, work, cols=a.cols),
    )


def determinant(a: ExactMatrix, counter: Optional[OpCounter] = None) -> Any:
    """Exact determinant from the last corner minor, sign corrected"""
    n = a.require_square()
    domain = a.domain
    if n == 0:
        return domain.one
    result = bareiss_eliminate(a, counter)
    if result.rank < n:
        return domain.zero
    det = result.last_minor
    return -det if result.sign < 0 else det


def rank_profile(a: ExactMatrix) -> Tuple[int, PermutationMap, PermutationMap]:
    """(r, S, T) with every leading minor of S·A·T up to order r nonzero"""
    result = bareiss_eliminate(a, OpCounter())
    return result.rank, result.row_perm, result.col_perm


def rank(a: ExactMatrix) -> int:
    return bareiss_eliminate(a).rank


def bareiss_solve(a0: ExactMatrix, rhs: ExactMatrix,
                  counter: Optional[OpCounter] = None) -> Tuple[ExactMatrix, Any]:
    """Solve A0·X = rhs by fraction-free Gauss-Jordan elimination.

    Returns (numerators, denominator) with X = numerators / denominator,
    the denominator being the determinant of A0 up to sign.
    """
    n = a0.require_square()
    if rhs.rows != n:
        raise InvalidParameter(f"right-hand side has {rhs.rows} rows, expected {n}")
    domain = a0.domain
    work = a0.hstack(rhs).to_rows() if n else []
    width = n + rhs.cols
    prev = domain.one

    for k in range(n):
        pi = next((i for i in range(k, n) if not domain.is_zero(work[i][k])), None)
        if pi is None:
            raise SingularMatrix(f"{n}x{n} system matrix is singular")
        if pi != k:
            work[k], work[pi] = work[pi], work[k]

        pivot_row = work[k]
        akk = pivot_row[k]
        divide = prev != domain.one
        updates = 0
        for i in range(n):
            if i == k:
                continue
            row = work[i]
            aik = row[k]
            for j in range(width):
                if j == k:
                    continue
                value = akk * row[j] - aik * pivot_row[j]
                row[j] = domain.exact_div(value, prev) if divide else value
                updates += 1
            row[k] = domain.zero

        if counter is not None:
            counter.add_multiplications(2 * updates)
            if divide:
                counter.add_divisions(updates)
        prev = akk

    numerators = ExactMatrix.from_rows(domain, [row[n:] for row in work], cols=rhs.cols)
    return numerators, prev


def field_inverse(a: ExactMatrix) -> ExactMatrix:
    """Gauss-Jordan inverse over a field domain"""
    n = a.require_square()
    domain = a.domain
    if not domain.is_field:
        raise InvalidParameter(f"matrix inverse needs a field, got {domain.name}")

    work = a.hstack(ExactMatrix.identity(domain, n)).to_rows() if n else []
    for k in range(n):
        pi = next((i for i in range(k, n) if not domain.is_zero(work[i][k])), None)
        if pi is None:
            raise SingularMatrix(f"{n}x{n} matrix is singular over {domain.name}")
        work[k], work[pi] = work[pi], work[k]

        inv = domain.exact_div(domain.one, work[k][k])
        work[k] = [inv * e for e in work[k]]
        pivot_row = work[k]
        for i in range(n):
            factor = work[i][k]
            if i == k or domain.is_zero(factor):
                continue
            work[i] = [e - factor * p for e, p in zip(work[i], pivot_row)]

    return ExactMatrix.from_rows(domain, [row[n:] for row in work], cols=n)
