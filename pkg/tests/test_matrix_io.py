# File: tests/test_matrix_io.py
"""Matrix files, YAML trees and result rendering"""
import pytest
import yaml

from core.exceptions import DimensionMismatch, ParseError
from core.models import DiophantineBasis, SystemInstance, SystemKind
from matrix.dense import ExactMatrix
from solvers.rational_basis import basis_nonhomogeneous
from storage.matrix_io import (
    MatrixStore,
    dump_tree,
    format_diophantine_basis,
    format_matrix,
    format_rational_basis,
    matrix_from_tree,
    matrix_to_tree,
    parse_matrix,
    parse_vector,
)
from oracles import random_matrix


def test_parse_integer_matrix(zz):
    text = "# two by three\n2 3\n1 -2 3\n\n4 5 -6\n"
    a = parse_matrix(text, zz)
    assert a.to_rows() == [[1, -2, 3], [4, 5, -6]]


def test_parse_polynomial_matrix(f5x):
    a = parse_matrix("2 2\n1+x 0\nx^2 3\n", f5x)
    assert a[0, 0] == f5x.parse("1+x")
    assert a[1, 0] == f5x.parse("x^2")


def test_format_then_parse(zz, f7x, rng):
    for domain, bound in ((zz, 50), (f7x, 3)):
        a = random_matrix(domain, rng, 3, 4, bound)
        assert parse_matrix(format_matrix(a), domain) == a


def test_format_layout(zz):
    assert format_matrix(ExactMatrix.from_rows(zz, [[1, -2], [0, 3]])) == "2 2\n1 -2\n0 3\n"


@pytest.mark.parametrize("text", ["", "# only a comment\n", "2\n1 2\n", "a b\n", "1 1\nz\n",
                                  "1 1\n²\n", "² 1\n4\n", "1 ¹\n4\n"])
def test_parse_errors(zz, text):
    with pytest.raises(ParseError):
        parse_matrix(text, zz)


@pytest.mark.parametrize("text", ["2 2\n1 2\n", "1 2\n1 2 3\n"])
def test_shape_errors(zz, text):
    with pytest.raises(DimensionMismatch):
        parse_matrix(text, zz)


def test_parse_vector_accepts_row_or_column(zz):
    assert parse_vector("3 1\n1\n2\n3\n", zz) == [1, 2, 3]
    assert parse_vector("1 3\n1 2 3\n", zz) == [1, 2, 3]
    with pytest.raises(DimensionMismatch):
        parse_vector("2 2\n1 2\n3 4\n", zz)


def test_tree_round_trip(f5x):
    a = ExactMatrix.from_rows(f5x, [[f5x.parse("1+x"), f5x.zero]])
    tree = matrix_to_tree(a)
    assert tree == {'rows': 1, 'cols': 2, 'entries': ["1+x", "0"]}
    assert matrix_from_tree(yaml.safe_load(dump_tree(tree)), f5x) == a


def test_bad_tree(zz):
    with pytest.raises(ParseError):
        matrix_from_tree({'rows': 1}, zz)


def test_dump_tree_keeps_key_order():
    assert dump_tree({'b': 1, 'a': 2}).splitlines() == ["b: 1", "a: 2"]


def test_rational_basis_rendering(zz):
    system = SystemInstance(ExactMatrix.from_rows(zz, [[1, 2]]), (5,))
    assert format_rational_basis(basis_nonhomogeneous(system)) == "5 0 / 1\n0 5 / 2\n"


def test_diophantine_basis_rendering(zz):
    basis = DiophantineBasis(kind=SystemKind.NONHOMOGENEOUS, vectors=((5, 0), (-5, 5)))
    assert format_diophantine_basis(zz, basis) == "5 0\n-5 5\n"


def test_store_reads_and_writes_files(zz, tmp_path, capsys):
    path = tmp_path / "a.txt"
    path.write_text("2 2\n1 0\n0 1\n", encoding="utf-8")
    store = MatrixStore(zz)
    assert store.load_matrix(str(path)) == ExactMatrix.identity(zz, 2)
    assert store.render_matrix(ExactMatrix.identity(zz, 2)) == "2 2\n1 0\n0 1\n"

    store.emit("1\n")
    assert capsys.readouterr().out == "1\n"

    out = tmp_path / "out.txt"
    MatrixStore(zz, str(out)).emit("2\n")
    assert out.read_text(encoding="utf-8") == "2\n"


def test_store_uses_trees_for_yaml_paths(f5x, tmp_path):
    source = tmp_path / "a.yaml"
    source.write_text("rows: 2\ncols: 1\nentries: ['1+x', '3']\n", encoding="utf-8")
    store = MatrixStore(f5x, str(tmp_path / "out.yml"))
    a = store.load_matrix(str(source))
    assert a == ExactMatrix.from_rows(f5x, [[f5x.parse("1+x")], [f5x.constant(3)]])
    assert store.load_vector(str(source)) == a.column(0)
    assert yaml.safe_load(store.render_matrix(a)) == {'rows': 2, 'cols': 1, 'entries': ["1+x", "3"]}


@pytest.mark.parametrize("text", ["rows: [\n", "- 1\n- 2\n", "rows: 1\ncols: 1\nentries: 4\n"])
def test_store_rejects_bad_tree_files(zz, tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ParseError):
        MatrixStore(zz).load_matrix(str(path))


def test_store_missing_file(zz, tmp_path):
    with pytest.raises(ParseError):
        MatrixStore(zz).load_matrix(str(tmp_path / "missing.txt"))
