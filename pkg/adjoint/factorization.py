# File: adjoint/factorization.py
"""Adjugate and determinant by recursive binary block factorization"""
from dataclasses import dataclass
from typing import Any, Optional, Tuple

from core.exceptions import AlgebraError, InvalidParameter, SingularMatrix
from core.models import AdjointResult, OpCounter
from elimination.bareiss import rank_profile
from matrix.dense import (
    ExactMatrix,
    apply_col_perm,
    apply_row_perm,
    join_blocks,
    mat_mul,
    pad_to_pow2,
    split_blocks,
)
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class RecursionFrame:
    """Upper-left half of one recursion level.

    ``f`` is the scaled adjugate of ``top_left`` returned by the recursion,
    so ``f · top_left == delta_s · delta_t · I``.
    """
    order: int
    delta_s: Any
    delta_t: Any
    top_left: ExactMatrix
    f: ExactMatrix

    def check(self) -> None:
        domain = self.top_left.domain
        expected = ExactMatrix.identity(domain, self.top_left.rows).scale(self.delta_s * self.delta_t)
        if mat_mul(self.f, self.top_left) != expected:
            raise AlgebraError(f"frame check failed at order {self.order}")


def schur_update(delta_s: Any, delta_prev: Any, b: ExactMatrix, f: ExactMatrix,
                 c: ExactMatrix, d: ExactMatrix, counter: Optional[OpCounter] = None,
                 fc: Optional[ExactMatrix] = None) -> ExactMatrix:
    """Bordered minors of the next order: (δ_s·D − B·(F·C)/δ_prev) / δ_prev.

    ``f`` is the scaled adjugate of the upper-left block (its plain
    adjugate when ``delta_prev`` is one). Pass ``fc`` when (F·C)/δ_prev is
    already known.
    """
    if fc is None:
        fc = mat_mul(f, c, counter).exact_div(delta_prev, counter)
    update = d.scale(delta_s, counter).sub(mat_mul(b, fc, counter))
    return update.exact_div(delta_prev, counter)


def assemble_factors(f: ExactMatrix, g: ExactMatrix, b: ExactMatrix, c: ExactMatrix,
                     delta_s: Any, delta_t: Any, delta_n: Any,
                     counter: Optional[OpCounter] = None,
                     fc: Optional[ExactMatrix] = None) -> ExactMatrix:
    """Multiply out the block factor chain into the scaled adjugate.

    Every division is applied to a combined block, never to a single
    factor; pass ``fc`` when (F·C)/δ_s is already known.
    """
    if fc is None:
        fc = mat_mul(f, c, counter).exact_div(delta_s, counter)
    bf = mat_mul(b, f, counter).exact_div(delta_s, counter)
    lower = mat_mul(g, bf, counter).exact_div(delta_t, counter)

    top_left = f.scale(delta_n, counter).add(mat_mul(fc, lower, counter)).exact_div(delta_t, counter)
    top_right = mat_mul(fc, g, counter).exact_div(delta_t, counter).neg()
    return join_blocks(top_left, top_right, lower.neg(), g)


def _base_case(m: ExactMatrix, delta_s: Any, counter: OpCounter) -> Tuple[ExactMatrix, Any]:
    domain = m.domain
    if m.rows == 1:
        return ExactMatrix(domain, 1, 1, [delta_s]), m[0, 0]

    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    counter.add_scalings(2)
    minor = a * d - b * c
    if delta_s != domain.one:
        counter.add_divisions(1)
        minor = domain.exact_div(minor, delta_s)
    return ExactMatrix(domain, 2, 2, [d, -b, -c, a]), minor


def _factorize(m: ExactMatrix, delta_s: Any, counter: OpCounter, verify: bool) -> Tuple[ExactMatrix, Any]:
    """Return (δ_s^{-(order-2)}·adj(m), last corner minor) for a power-of-two order"""
    if m.rows <= 2:
        return _base_case(m, delta_s, counter)

    half = m.rows // 2
    top_left, top_right, bottom_left, bottom_right = split_blocks(m, half, half)

    f, delta_t = _factorize(top_left, delta_s, counter, verify)
    if verify:
        RecursionFrame(m.rows, delta_s, delta_t, top_left, f).check()

    fc = mat_mul(f, top_right, counter).exact_div(delta_s, counter)
    schur = schur_update(delta_t, delta_s, bottom_left, f, top_right, bottom_right, counter, fc=fc)
    g, delta_n = _factorize(schur, delta_t, counter, verify)

    phi = assemble_factors(f, g, bottom_left, top_right, delta_s, delta_t, delta_n, counter, fc=fc)
    return phi, delta_n


def adjoint(a: ExactMatrix, counter: Optional[OpCounter] = None, verify_frames: bool = False) -> AdjointResult:
    """Adjugate and determinant of a nonsingular square matrix"""
    n = a.require_square()
    if n == 0:
        raise InvalidParameter("adjoint needs order at least 1")
    counter = counter if counter is not None else OpCounter()

    rank, row_perm, col_perm = rank_profile(a)
    if rank < n:
        raise SingularMatrix(f"matrix of order {n} has rank {rank}")

    permuted = apply_col_perm(col_perm, apply_row_perm(row_perm, a))
    padded = pad_to_pow2(permuted)
    logger.debug(f"Factorizing order {n} (padded to {padded.rows}) over {a.domain.name}")

    phi, delta_n = _factorize(padded, a.domain.one, counter, verify_frames)

    # adj(A) = sign · T · adj(S·A·T) · S
    adj_permuted = phi.submatrix(0, n, 0, n) if padded.rows != n else phi
    adjugate = apply_col_perm(row_perm.inverse(), apply_row_perm(col_perm.inverse(), adj_permuted))
    sign = row_perm.sign() * col_perm.sign()
    det = delta_n
    if sign < 0:
        adjugate = adjugate.neg()
        det = -det

    return AdjointResult(adjugate=adjugate, determinant=det, counter=counter.snapshot())
