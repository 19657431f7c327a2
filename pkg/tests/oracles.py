# File: tests/oracles.py
"""Brute-force reference computations used as test oracles"""
import fractions
from random import Random
from typing import Any, List, Sequence

from matrix.dense import ExactMatrix
from rings.base import Domain


def laplace_det(domain: Domain, rows: Sequence[Sequence[Any]]) -> Any:
    """Cofactor expansion along the first row"""
    n = len(rows)
    if n == 0:
        return domain.one
    if n == 1:
        return rows[0][0]
    total = domain.zero
    for j, entry in enumerate(rows[0]):
        if domain.is_zero(entry):
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * laplace_det(domain, minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def cofactor_adjugate(domain: Domain, rows: Sequence[Sequence[Any]]) -> List[List[Any]]:
    """Transpose of the cofactor matrix"""
    rows = [list(row) for row in rows]
    n = len(rows)
    if n == 1:
        return [[domain.one]]
    adj = [[domain.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(rows) if k != i]
            cof = laplace_det(domain, minor)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


def bordered_minor(domain: Domain, rows: Sequence[Sequence[Any]], k: int, i: int, j: int) -> Any:
    """det of the leading k×k block bordered by row i and column j"""
    picked_rows = list(range(k)) + [i]
    picked_cols = list(range(k)) + [j]
    return laplace_det(domain, [[rows[r][c] for c in picked_cols] for r in picked_rows])


def random_int_rows(rng: Random, n: int, m: int, bound: int = 9) -> List[List[int]]:
    return [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)]


def random_matrix(domain: Domain, rng: Random, n: int, m: int, bound: int = 9) -> ExactMatrix:
    return ExactMatrix(domain, n, m, [domain.random_element(rng, bound) for _ in range(n * m)])


def random_nonsingular(domain: Domain, rng: Random, n: int, bound: int = 9) -> ExactMatrix:
    while True:
        a = random_matrix(domain, rng, n, n, bound)
        if not domain.is_zero(laplace_det(domain, a.to_rows()) if n <= 6 else _elim_det(a)):
            return a


def _elim_det(a: ExactMatrix) -> Any:
    from elimination.bareiss import determinant
    return determinant(a)


def random_rank_matrix(zz: Domain, rng: Random, n: int, m: int, r: int, bound: int = 4) -> ExactMatrix:
    """Sum of r random outer products, so the rank is at most r"""
    rows = [[0] * m for _ in range(n)]
    for _ in range(r):
        u = [rng.randint(-bound, bound) for _ in range(n)]
        v = [rng.randint(-bound, bound) for _ in range(m)]
        for i in range(n):
            for j in range(m):
                rows[i][j] += u[i] * v[j]
    return ExactMatrix.from_rows(zz, rows)


def schoolbook_product(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> List[List[int]]:
    """Independent triple-loop product on plain lists"""
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            acc = 0
            for t in range(k):
                acc += a[i][t] * b[t][j]
            out[i][j] = acc
    return out


def fraction_rank(rows):
    """Rank over Q by plain Gaussian elimination on Python fractions"""
    work = [[fractions.Fraction(v) for v in row] for row in rows]
    r = 0
    cols = len(work[0]) if work else 0
    for j in range(cols):
        pivot = next((i for i in range(r, len(work)) if work[i][j] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(r + 1, len(work)):
            factor = work[i][j] / work[r][j]
            work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        r += 1
    return r
