# File: core/models.py
"""Data models shared by the solvers, the coordinator and the CLI"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple

from core.exceptions import DimensionMismatch, ConfigurationError

if TYPE_CHECKING:
    from matrix.dense import ExactMatrix, PermutationMap
    from rings.base import Domain


@dataclass
class OpCounter:
    """Ring-operation tallies for one computation.

    ``multiplications`` counts products inside matrix multiplication and
    elimination steps; ``scalings`` counts scalar-by-matrix products and
    closed-form base cases (the O(n^2) terms complexity estimates neglect).
    Never share one counter between concurrent computations.
    """
    multiplications: int = 0
    scalings: int = 0
    exact_divisions: int = 0

    def add_multiplications(self, count: int) -> None:
        self.multiplications += count

    def add_scalings(self, count: int) -> None:
        self.scalings += count

    def add_divisions(self, count: int) -> None:
        self.exact_divisions += count

    def snapshot(self) -> OpCounter:
        return replace(self)

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


class SystemKind(Enum):
    HOMOGENEOUS = "homogeneous"
    NONHOMOGENEOUS = "nonhomogeneous"


@dataclass(frozen=True)
class EliminationResult:
    """Outcome of fraction-free elimination with full pivoting.

    ``reduced`` holds, on and above the diagonal of its first ``rank``
    rows, the bordered minors of S·A·T: entry (i, j), j >= i, is the
    determinant of the leading i×i block bordered by row i and column j.
    """
    rank: int
    row_perm: PermutationMap
    col_perm: PermutationMap
    corner_minors: Tuple[Any, ...]
    reduced: ExactMatrix

    @property
    def last_minor(self) -> Any:
        if not self.corner_minors:
            return self.reduced.domain.one
        return self.corner_minors[-1]

    @property
    def sign(self) -> int:
        return self.row_perm.sign() * self.col_perm.sign()


@dataclass(frozen=True)
class AdjointResult:
    """Adjugate and determinant: A·adjugate = adjugate·A = determinant·I"""
    adjugate: ExactMatrix
    determinant: Any
    counter: OpCounter


@dataclass(frozen=True)
class SystemInstance:
    """Linear system A·x = c over a domain"""
    matrix: ExactMatrix
    rhs: Tuple[Any, ...]

    def __post_init__(self):
        if len(self.rhs) != self.matrix.rows:
            raise DimensionMismatch(
                f"right-hand side has {len(self.rhs)} entries, matrix has {self.matrix.rows} rows"
            )

    @property
    def domain(self) -> Domain:
        return self.matrix.domain

    @property
    def rows(self) -> int:
        return self.matrix.rows

    @property
    def cols(self) -> int:
        return self.matrix.cols

    @property
    def is_homogeneous(self) -> bool:
        return all(self.domain.is_zero(c) for c in self.rhs)


@dataclass(frozen=True)
class ConsistencyVerdict:
    consistent: bool
    rank: int
    augmented_rank: int


@dataclass(frozen=True)
class ScaledSolution:
    """Solutions X = N / δ of A0·X = C kept as R-valued numerators N over one δ"""
    numerators: ExactMatrix
    denominator: Any

    def column(self, j: int) -> List[Any]:
        return self.numerators.column(j)

    @property
    def cols(self) -> int:
        return self.numerators.cols


@dataclass(frozen=True)
class BasisVector:
    """Solution x = x̄ / χ with χ the reduced denominator of x"""
    numerators: Tuple[Any, ...]
    denominator: Any


@dataclass(frozen=True)
class RationalBasis:
    """Basis set of solutions in the fraction field.

    Holds m - r vectors for homogeneous systems and m - r + 1 otherwise.
    An empty homogeneous basis means the solution set is {0}.
    """
    kind: SystemKind
    vectors: Tuple[BasisVector, ...]
    rank: int
    row_perm: PermutationMap
    col_perm: PermutationMap
    domain: Domain

    @property
    def denominators(self) -> List[Any]:
        return [v.denominator for v in self.vectors]

    def __len__(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class UnitWitness:
    """Coefficients q with <χ, q> = 1"""
    q: Tuple[Any, ...]


@dataclass(frozen=True)
class NotUnit:
    """The denominators generate the proper ideal (gcd)"""
    gcd: Any


class DiophantineStatus(Enum):
    SOLVED = "solved"
    NO_SOLUTION = "no_solution"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class DiophantineBasis:
    """Basis set of solutions lying wholly in R^m"""
    kind: SystemKind
    vectors: Tuple[Tuple[Any, ...], ...]

    def __len__(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class DiophantineResult:
    status: DiophantineStatus
    basis: Optional[DiophantineBasis] = None
    iterations: int = 0


class CommandType(Enum):
    DET = "det"
    ADJ = "adj"
    RANK = "rank"
    SOLVE = "solve"
    BENCH = "bench"


class SolveMode(Enum):
    RATIONAL = "rational"
    DIOPHANTINE = "diophantine"


class Method(Enum):
    BAREISS = "bareiss"
    ADJOINT = "adjoint"
    DIXON = "dixon"
    AUTO = "auto"


@dataclass(frozen=True)
class SolverOptions:
    """Knobs for determined-system backends"""
    method: Method = Method.AUTO
    lifting_threshold: int = 8
    prime_bits: Optional[int] = None
    max_primes: int = 8
    verify_frames: bool = False


@dataclass
class JobConfig:
    """One CLI invocation"""
    command: CommandType
    ring: str = "z"
    mode: SolveMode = SolveMode.RATIONAL
    method: Optional[Method] = None
    seed: Optional[int] = None
    max_iters: Optional[int] = None
    matrix_path: Optional[str] = None
    rhs_path: Optional[str] = None
    output_path: Optional[str] = None
    sizes: List[int] = field(default_factory=list)
    non_powers: bool = False

    def __post_init__(self):
        """Validate field combinations after initialization"""
        ring = self.ring.strip().lower()
        if ring.startswith("polymod") and "=" not in ring:
            raise ConfigurationError("polymod ring requires a prime: polymod=<p>")
        if self.command is CommandType.SOLVE and (not self.matrix_path or not self.rhs_path):
            raise ConfigurationError("solve needs both an A file and a c file")
        if self.command in (CommandType.DET, CommandType.ADJ, CommandType.RANK) and not self.matrix_path:
            raise ConfigurationError(f"{self.command.value} needs an A file")
        if self.max_iters is not None and self.max_iters < 1:
            raise ConfigurationError("max_iters must be positive")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> JobConfig:
        """Create instance from dictionary, converting enum strings"""
        data = dict(data)
        if isinstance(data.get('command'), str):
            data['command'] = CommandType(data['command'])
        if isinstance(data.get('mode'), str):
            data['mode'] = SolveMode(data['mode'])
        if isinstance(data.get('method'), str):
            data['method'] = Method(data['method'])
        return cls(**data)


@dataclass(frozen=True)
class BenchRecord:
    n: int
    mults: int
    divs: int
    scalings: int
    predicted: int
    seconds: float

    @property
    def ratio(self) -> float:
        return self.mults / self.predicted if self.predicted else 1.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'mults': self.mults,
            'divs': self.divs,
            'scalings': self.scalings,
            'predicted': self.predicted,
            'ratio': self.ratio,
            'per_n3': self.mults / self.n ** 3,
            'seconds': round(self.seconds, 6),
        }


@dataclass(frozen=True)
class BenchReport:
    ring: str
    seed: Optional[int]
    records: Tuple[BenchRecord, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ring': self.ring,
            'seed': self.seed,
            'records': [record.to_dict() for record in self.records],
        }
