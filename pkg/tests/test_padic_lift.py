# File: tests/test_padic_lift.py
"""Linear lifting, determinant bounds and rational reconstruction"""
from random import Random

import pytest

from adjoint.factorization import adjoint
from core.exceptions import InvalidParameter, NoReconstruction, SingularMatrix
from elimination.bareiss import determinant
from matrix.dense import ExactMatrix, mat_mul
from rings.fraction_field import Fraction
from solvers.padic_lift import (
    IntegerLifting,
    create_scheme,
    dixon_solve,
    dixon_solve_many,
    hadamard_bound,
    rational_reconstruct,
)
from oracles import cofactor_adjugate, random_matrix, random_nonsingular


def _cramer(a0, rhs):
    """x = adj(A0)·c / det(A0)"""
    result = adjoint(a0)
    column = mat_mul(result.adjugate, ExactMatrix.column_vector(a0.domain, list(rhs))).column(0)
    return [Fraction(a0.domain, v, result.determinant) for v in column]


def test_hadamard_examples(zz):
    assert hadamard_bound(ExactMatrix.identity(zz, 2)) == 1
    assert hadamard_bound(ExactMatrix.from_rows(zz, [[3, 4], [0, 5]])) == 25


def test_hadamard_bounds_determinant(zz, f5x, rng):
    for n in range(1, 6):
        a = random_matrix(zz, rng, n, n, 20)
        assert abs(determinant(a)) <= hadamard_bound(a)
        p = random_matrix(f5x, rng, n, n, 3)
        det = determinant(p)
        assert f5x.is_zero(det) or det.degree <= hadamard_bound(p)


def test_hadamard_needs_integers_or_polynomials(gf11):
    with pytest.raises(InvalidParameter):
        hadamard_bound(ExactMatrix.identity(gf11, 2))


def test_reconstruct_examples(zz):
    assert rational_reconstruct(zz, 6, 11) == Fraction(zz, 1, 2)
    assert rational_reconstruct(zz, 2, 11) == Fraction(zz, 2)


def test_reconstruct_round_trip(zz, rng):
    modulus = 1000003 ** 2
    bound = zz.reconstruction_bound(modulus)
    for _ in range(10_000):
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        residue = num * pow(den, -1, modulus) % modulus
        assert rational_reconstruct(zz, residue, modulus) == Fraction(zz, num, den)


def test_reconstruct_polynomial_series(f7x):
    # 1 + x + ... + x^4 is the truncated expansion of 1/(1 - x)
    residue = f7x.parse("1+x+x^2+x^3+x^4")
    modulus = f7x.parse("x^5")
    assert rational_reconstruct(f7x, residue, modulus) == Fraction(f7x, f7x.one, f7x.parse("1-x"))


def test_reconstruct_fails_outside_bounds(zz):
    with pytest.raises(NoReconstruction):
        rational_reconstruct(zz, 5, 11, bound=1)


def test_identity_system(zz, rng):
    assert dixon_solve(ExactMatrix.identity(zz, 2), [7, -2], rng) == [Fraction(zz, 7), Fraction(zz, -2)]


def test_diagonal_system(zz, rng):
    x = dixon_solve(ExactMatrix.from_rows(zz, [[2, 0], [0, 3]]), [1, 1], rng)
    assert x == [Fraction(zz, 1, 2), Fraction(zz, 1, 3)]


@pytest.mark.parametrize("prime_bits", [None, 8])
def test_matches_cramer(zz, rng, prime_bits):
    for n in range(1, 7):
        a0 = random_nonsingular(zz, rng, n)
        rhs = [rng.randint(-20, 20) for _ in range(n)]
        assert dixon_solve(a0, rhs, rng, prime_bits=prime_bits, max_primes=20) == _cramer(a0, rhs)


def test_matches_cramer_on_large_entries(zz):
    rng = Random(912)
    for _ in range(200):
        n = rng.randint(1, 12)
        a0 = random_nonsingular(zz, rng, n, 10 ** 6)
        rhs = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(n)]
        x = dixon_solve(a0, rhs, rng)
        assert x == _cramer(a0, rhs)
        for i in range(n):
            assert sum((a0[i, j] * x[j] for j in range(n)), Fraction(zz, 0)) == rhs[i]


def test_hadamard_bound_covers_cramer_numerators(zz, rng):
    for _ in range(50):
        n = rng.randint(1, 6)
        a0 = random_matrix(zz, rng, n, n, 30)
        rhs = random_matrix(zz, rng, n, 2, 30)
        bound = hadamard_bound(a0, rhs)
        assert bound >= hadamard_bound(a0)
        numerators = mat_mul(ExactMatrix.from_rows(zz, cofactor_adjugate(zz, a0.to_rows())), rhs)
        assert all(abs(v) <= bound for v in numerators.entries)


def test_many_right_hand_sides(zz, rng):
    a0 = random_nonsingular(zz, rng, 4)
    rhs = random_matrix(zz, rng, 4, 3)
    solutions = dixon_solve_many(a0, rhs, rng)
    assert len(solutions) == 3
    for j, solution in enumerate(solutions):
        assert solution == _cramer(a0, rhs.column(j))


def test_polynomial_system(f7x, rng):
    for n in range(1, 4):
        a0 = random_nonsingular(f7x, rng, n, 1)
        rhs = [f7x.random_element(rng, 1) for _ in range(n)]
        assert dixon_solve(a0, rhs, rng) == _cramer(a0, rhs)


def test_seeded_runs_agree(zz):
    a0 = ExactMatrix.from_rows(zz, [[4, 1, 0], [2, 5, 3], [1, 0, 7]])
    first = dixon_solve(a0, [1, 2, 3], Random(5))
    assert dixon_solve(a0, [1, 2, 3], Random(5)) == first


def test_singular_system_raises(zz, rng):
    with pytest.raises(SingularMatrix):
        dixon_solve(ExactMatrix.from_rows(zz, [[1, 2], [2, 4]]), [1, 2], rng, max_primes=3)


def test_argument_validation(zz, gf11, rng):
    with pytest.raises(InvalidParameter):
        dixon_solve_many(ExactMatrix.identity(zz, 2), ExactMatrix.column_vector(zz, [1, 2, 3]), rng)
    with pytest.raises(InvalidParameter):
        dixon_solve(ExactMatrix.identity(zz, 2), [1, 2], rng, max_primes=0)
    with pytest.raises(InvalidParameter):
        dixon_solve(ExactMatrix.identity(gf11, 2), [gf11.one, gf11.one], rng)


def test_integer_lifting_steps_cover_solution_size(zz):
    scheme = IntegerLifting(zz, 101)
    a0 = ExactMatrix.from_rows(zz, [[3, 4], [0, 5]])
    steps = scheme.lifting_steps(a0, ExactMatrix.column_vector(zz, [1, 1]))
    assert 101 ** (steps - 1) > 2 * 25 ** 2


def test_create_scheme_respects_rejections(f7x, rng):
    scheme = create_scheme(f7x, rng, None, rejected=[0, 1, 2, 3, 4, 5])
    assert scheme.rejection_key == 6
    assert scheme.reduce(f7x.parse("x+1")).value == 0
