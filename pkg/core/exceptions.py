# File: core/exceptions.py
"""Custom exceptions for the exact linear algebra library"""


class ExactLAError(Exception):
    """Base exception for library errors"""
    pass


class ConfigurationError(ExactLAError):
    """Configuration-related errors"""
    pass


class ParseError(ExactLAError):
    """Malformed element or matrix text"""
    pass


class DimensionMismatch(ExactLAError):
    """Operand shapes do not conform"""
    pass


class NotSquare(DimensionMismatch):
    """Operation requires a square matrix"""
    pass


class BadCut(DimensionMismatch):
    """Block split indices out of range"""
    pass


class InvalidParameter(ExactLAError):
    """Parameter outside its admissible range"""
    pass


class AlgebraError(ExactLAError):
    """Base class for ring arithmetic errors"""
    pass


class DivisionByZero(AlgebraError):
    pass


class NotDivisible(AlgebraError):
    """Exact division requested where the divisor does not divide.

    Every division performed by the algorithms is exact by construction,
    so this always points at a bug upstream.
    """
    pass


class BothZero(AlgebraError):
    pass


class EmptyInput(AlgebraError):
    pass


class ZeroElement(AlgebraError):
    pass


class NotEuclidean(AlgebraError):
    """Operation needs a Euclidean domain"""
    pass


class ExhaustedCandidates(AlgebraError):
    """No admissible prime element remains"""
    pass


class SolverError(ExactLAError):
    """Base class for solver failures"""
    pass


class SingularMatrix(SolverError):
    pass


class RetryLimit(SolverError):
    """Lifting gave up after too many primes"""
    pass


class NoReconstruction(SolverError):
    """Residue has no fraction within the reconstruction bounds"""
    pass


class InconsistentSystem(SolverError):
    pass


class ZeroRHS(SolverError):
    """Nonhomogeneous path called with c = 0"""
    pass


class WitnessInvalid(SolverError):
    pass


class PreconditionViolated(SolverError):
    pass
