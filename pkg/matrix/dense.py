# File: matrix/dense.py
"""Dense row-major matrices over a domain, permutations and block plumbing"""
from random import Random
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

from core.exceptions import BadCut, DimensionMismatch, NotSquare
from core.models import OpCounter
from rings.base import Domain


class ExactMatrix:
    """Immutable dense matrix; ``entries`` is the row-major tuple"""

    __slots__ = ("domain", "rows", "cols", "entries")

    def __init__(self, domain: Domain, rows: int, cols: int, entries: Iterable[Any]):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.domain = domain
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, domain: Domain, rows: Sequence[Sequence[Any]], cols: Optional[int] = None) -> "ExactMatrix":
        width = len(rows[0]) if rows else (cols or 0)
        for row in rows:
            if len(row) != width:
                raise DimensionMismatch("ragged rows")
        return cls(domain, len(rows), width, (e for row in rows for e in row))

    @classmethod
    def identity(cls, domain: Domain, n: int) -> "ExactMatrix":
        zero, one = domain.zero, domain.one
        return cls(domain, n, n, (one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, domain: Domain, rows: int, cols: int) -> "ExactMatrix":
        return cls(domain, rows, cols, [domain.zero] * (rows * cols))

    @classmethod
    def column_vector(cls, domain: Domain, values: Sequence[Any]) -> "ExactMatrix":
        return cls(domain, len(values), 1, values)

    def __getitem__(self, key: Tuple[int, int]) -> Any:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Any]:
        start = i * self.cols
        return list(self.entries[start:start + self.cols])

    def column(self, j: int) -> List[Any]:
        return list(self.entries[j::self.cols]) if self.cols else []

    def to_rows(self) -> List[List[Any]]:
        return [self.row(i) for i in range(self.rows)]

    def require_square(self) -> int:
        if self.rows != self.cols:
            raise NotSquare(f"expected a square matrix, got {self.rows}x{self.cols}")
        return self.rows

    def map_entries(self, func: Callable[[Any], Any]) -> "ExactMatrix":
        return ExactMatrix(self.domain, self.rows, self.cols, (func(e) for e in self.entries))

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def add(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(self.domain, self.rows, self.cols,
                           (a + b for a, b in zip(self.entries, other.entries)))

    def sub(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(self.domain, self.rows, self.cols,
                           (a - b for a, b in zip(self.entries, other.entries)))

    def neg(self) -> "ExactMatrix":
        return self.map_entries(lambda e: -e)

    def scale(self, scalar: Any, counter: Optional[OpCounter] = None) -> "ExactMatrix":
        """scalar·M, counted as rows·cols scalings"""
        if counter is not None:
            counter.add_scalings(self.rows * self.cols)
        return self.map_entries(lambda e: scalar * e)

    def exact_div(self, divisor: Any, counter: Optional[OpCounter] = None) -> "ExactMatrix":
        """Entrywise exact division by a ring element"""
        if divisor == self.domain.one:
            return self
        if counter is not None:
            counter.add_divisions(self.rows * self.cols)
        div = self.domain.exact_div
        return self.map_entries(lambda e: div(e, divisor))

    def submatrix(self, row_start: int, row_end: int, col_start: int, col_end: int) -> "ExactMatrix":
        return ExactMatrix(
            self.domain, row_end - row_start, col_end - col_start,
            (self[i, j] for i in range(row_start, row_end) for j in range(col_start, col_end)),
        )

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch(f"cannot stack {self.rows} rows beside {other.rows} rows")
        return ExactMatrix.from_rows(self.domain, [self.row(i) + other.row(i) for i in range(self.rows)],
                                     cols=self.cols + other.cols)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        fmt = self.domain.format
        body = "; ".join(" ".join(fmt(e) for e in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols} over {self.domain.name}: [{body}])"


def mat_mul(a: ExactMatrix, b: ExactMatrix, counter: Optional[OpCounter] = None) -> ExactMatrix:
    """Classical product; adds exactly a.rows·a.cols·b.cols multiplications"""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if counter is not None:
        counter.add_multiplications(a.rows * a.cols * b.cols)

    zero = a.domain.zero
    b_cols = [b.column(j) for j in range(b.cols)]
    entries = []
    for i in range(a.rows):
        row = a.row(i)
        for col in b_cols:
            entries.append(sum((x * y for x, y in zip(row, col)), zero))
    return ExactMatrix(a.domain, a.rows, b.cols, entries)


def split_blocks(a: ExactMatrix, row_cut: int, col_cut: int) -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix, ExactMatrix]:
    """Split into (A, C, B, D) laid out as [[A, C], [B, D]]"""
    if not (0 < row_cut < a.rows and 0 < col_cut < a.cols):
        raise BadCut(f"cuts ({row_cut}, {col_cut}) invalid for a {a.rows}x{a.cols} matrix")
    top_left = a.submatrix(0, row_cut, 0, col_cut)
    top_right = a.submatrix(0, row_cut, col_cut, a.cols)
    bottom_left = a.submatrix(row_cut, a.rows, 0, col_cut)
    bottom_right = a.submatrix(row_cut, a.rows, col_cut, a.cols)
    return top_left, top_right, bottom_left, bottom_right


def join_blocks(top_left: ExactMatrix, top_right: ExactMatrix,
                bottom_left: ExactMatrix, bottom_right: ExactMatrix) -> ExactMatrix:
    """Inverse of split_blocks"""
    if (top_left.rows != top_right.rows or bottom_left.rows != bottom_right.rows
            or top_left.cols != bottom_left.cols or top_right.cols != bottom_right.cols):
        raise DimensionMismatch("blocks do not tile a matrix")
    rows = [top_left.row(i) + top_right.row(i) for i in range(top_left.rows)]
    rows += [bottom_left.row(i) + bottom_right.row(i) for i in range(bottom_left.rows)]
    return ExactMatrix.from_rows(top_left.domain, rows, cols=top_left.cols + top_right.cols)


class PermutationMap:
    """Bijection of 0..n-1.

    As a row permutation it sends row ``image[i]`` of A to row i of S·A;
    as a column permutation column ``image[j]`` of A becomes column j of A·T.
    """

    __slots__ = ("image",)

    def __init__(self, image: Sequence[int]):
        image = tuple(image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {image}")
        self.image = image

    @classmethod
    def identity(cls, n: int) -> "PermutationMap":
        return cls(range(n))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "PermutationMap":
        image = list(range(n))
        image[i], image[j] = image[j], image[i]
        return cls(image)

    @classmethod
    def random(cls, n: int, rng: Random) -> "PermutationMap":
        image = list(range(n))
        rng.shuffle(image)
        return cls(image)

    def __len__(self) -> int:
        return len(self.image)

    def inverse(self) -> "PermutationMap":
        inv = [0] * len(self.image)
        for i, target in enumerate(self.image):
            inv[target] = i
        return PermutationMap(inv)

    def then(self, other: "PermutationMap") -> "PermutationMap":
        """Permutation equal to applying ``self`` and then ``other``"""
        return PermutationMap(self.image[k] for k in other.image)

    def apply(self, values: Sequence[Any]) -> List[Any]:
        return [values[k] for k in self.image]

    def sign(self) -> int:
        seen = [False] * len(self.image)
        sign = 1
        for start in range(len(self.image)):
            if seen[start]:
                continue
            length = 0
            k = start
            while not seen[k]:
                seen[k] = True
                k = self.image[k]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def is_identity(self) -> bool:
        return all(i == k for i, k in enumerate(self.image))

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, PermutationMap) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self) -> str:
        return f"PermutationMap({list(self.image)})"


def apply_row_perm(p: PermutationMap, a: ExactMatrix) -> ExactMatrix:
    """S·A without counted multiplications"""
    if len(p) != a.rows:
        raise DimensionMismatch(f"permutation of size {len(p)} for {a.rows} rows")
    if p.is_identity():
        return a
    return ExactMatrix.from_rows(a.domain, [a.row(k) for k in p.image], cols=a.cols)


def apply_col_perm(p: PermutationMap, a: ExactMatrix) -> ExactMatrix:
    """A·T without counted multiplications"""
    if len(p) != a.cols:
        raise DimensionMismatch(f"permutation of size {len(p)} for {a.cols} columns")
    if p.is_identity():
        return a
    return ExactMatrix(a.domain, a.rows, a.cols,
                       (a[i, k] for i in range(a.rows) for k in p.image))


def permutation_matrix(p: PermutationMap, domain: Domain) -> ExactMatrix:
    """The matrix S with S·A == apply_row_perm(p, A)"""
    n = len(p)
    zero, one = domain.zero, domain.one
    return ExactMatrix(domain, n, n, (one if j == p.image[i] else zero for i in range(n) for j in range(n)))


def next_power_of_two(n: int) -> int:
    size = 1
    while size < n:
        size *= 2
    return size


def pad_to_pow2(a: ExactMatrix) -> ExactMatrix:
    """diag(A, I_k) of order 2^ceil(log2 n); determinant is unchanged"""
    n = a.require_square()
    size = next_power_of_two(max(n, 1))
    if size == n:
        return a
    zero, one = a.domain.zero, a.domain.one
    rows = [a.row(i) + [zero] * (size - n) for i in range(n)]
    rows += [[zero] * i + [one] + [zero] * (size - i - 1) for i in range(n, size)]
    return ExactMatrix.from_rows(a.domain, rows)
