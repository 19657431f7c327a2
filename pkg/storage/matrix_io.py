# File: storage/matrix_io.py
"""Matrix text format, result rendering and YAML trees"""
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import yaml

from core.exceptions import DimensionMismatch, ParseError
from core.models import DiophantineBasis, RationalBasis
from matrix.dense import ExactMatrix
from rings.base import Domain
from utils.logger import get_logger

logger = get_logger(__name__)

_DIMENSION = re.compile(r"[0-9]+")


def parse_matrix(text: str, domain: Domain) -> ExactMatrix:
    """Parse ``<rows> <cols>`` followed by one whitespace-separated row per line"""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise ParseError("empty matrix file")

    header = lines[0].split()
    if len(header) != 2 or not all(_DIMENSION.fullmatch(token) for token in header):
        raise ParseError(f"bad matrix header {lines[0]!r}, expected '<rows> <cols>'")
    rows, cols = int(header[0]), int(header[1])

    body = lines[1:]
    if len(body) != rows:
        raise DimensionMismatch(f"header announces {rows} rows, found {len(body)}")
    entries = []
    for number, line in enumerate(body, start=1):
        tokens = line.split()
        if len(tokens) != cols:
            raise DimensionMismatch(f"row {number} has {len(tokens)} entries, expected {cols}")
        entries.extend(domain.parse(token) for token in tokens)
    return ExactMatrix(domain, rows, cols, entries)


def format_matrix(a: ExactMatrix) -> str:
    fmt = a.domain.format
    lines = [f"{a.rows} {a.cols}"]
    lines += [" ".join(fmt(e) for e in a.row(i)) for i in range(a.rows)]
    return "\n".join(lines) + "\n"


def parse_vector(text: str, domain: Domain) -> List[Any]:
    """A right-hand side stored as an n×1 (or 1×n) matrix file"""
    return _as_vector(parse_matrix(text, domain))


def _as_vector(a: ExactMatrix) -> List[Any]:
    if a.cols == 1:
        return a.column(0)
    if a.rows == 1:
        return a.row(0)
    raise DimensionMismatch(f"right-hand side must be a single row or column, got {a.rows}x{a.cols}")


def matrix_to_tree(a: ExactMatrix) -> Dict[str, Any]:
    """Structured form with fields rows, cols and entries (row-major strings)"""
    return {
        'rows': a.rows,
        'cols': a.cols,
        'entries': [a.domain.format(e) for e in a.entries],
    }


def matrix_from_tree(tree: Dict[str, Any], domain: Domain) -> ExactMatrix:
    try:
        rows, cols, entries = int(tree['rows']), int(tree['cols']), tree['entries']
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad matrix tree: {e}")
    if not isinstance(entries, list):
        raise ParseError("bad matrix tree: entries must be a list")
    return ExactMatrix(domain, rows, cols, (domain.parse(str(e)) for e in entries))


def dump_tree(data: Dict[str, Any]) -> str:
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=False)


def format_rational_basis(basis: RationalBasis) -> str:
    """One row ``x̄_1 ... x̄_m / χ`` per basis vector"""
    fmt = basis.domain.format
    lines = [
        f"{' '.join(fmt(x) for x in vector.numerators)} / {fmt(vector.denominator)}"
        for vector in basis.vectors
    ]
    return "".join(line + "\n" for line in lines)


def format_integer_rows(domain: Domain, vectors: Sequence[Sequence[Any]]) -> str:
    return "".join(" ".join(domain.format(x) for x in vector) + "\n" for vector in vectors)


def format_diophantine_basis(domain: Domain, basis: DiophantineBasis) -> str:
    return format_integer_rows(domain, basis.vectors)


class MatrixStore:
    """Reads inputs and writes results for one ring.

    Paths ending in .yaml or .yml hold the structured tree form; anything
    else uses the plain matrix text format.
    """

    def __init__(self, domain: Domain, output_path: Optional[str] = None):
        self.domain = domain
        self.output_path = output_path

    def load_matrix(self, path: str) -> ExactMatrix:
        text = self._read(path)
        if _is_tree_path(path):
            try:
                tree = yaml.safe_load(text)
            except yaml.YAMLError as e:
                raise ParseError(f"invalid YAML in {path}: {e}")
            if not isinstance(tree, dict):
                raise ParseError(f"{path} does not hold a matrix tree")
            matrix = matrix_from_tree(tree, self.domain)
        else:
            matrix = parse_matrix(text, self.domain)
        logger.debug(f"Loaded {matrix.rows}x{matrix.cols} matrix from {path}")
        return matrix

    def load_vector(self, path: str) -> List[Any]:
        return _as_vector(self.load_matrix(path))

    def render_matrix(self, a: ExactMatrix) -> str:
        """Matrix result text in the form the output path asks for"""
        if self.output_path and _is_tree_path(self.output_path):
            return dump_tree(matrix_to_tree(a))
        return format_matrix(a)

    def emit(self, text: str) -> None:
        """Write a result to the output file, or stdout when none is set"""
        if self.output_path:
            Path(self.output_path).write_text(text, encoding="utf-8")
            logger.info(f"Wrote result to {self.output_path}")
        else:
            sys.stdout.write(text)
            sys.stdout.flush()

    @staticmethod
    def _read(path: str) -> str:
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise ParseError(f"cannot read {path}: {e}")


def _is_tree_path(path: str) -> bool:
    return Path(path).suffix.lower() in (".yaml", ".yml")
