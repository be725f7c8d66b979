from hypothesis import given
from hypothesis import strategies as st

import pytest

from conftest import int_matrices
from scrollgraver import matrixio


def test_format_layout():
    assert matrixio.format_matrix([[1, -2], [3, 4]]) == "2 2\n1 -2\n3 4\n"


def test_empty_matrix_needs_width():
    assert matrixio.format_matrix([], 5) == "0 5\n"
    assert matrixio.parse_matrix("0 5\n") == []
    with pytest.raises(ValueError):
        matrixio.format_matrix([])


@pytest.mark.parametrize("text", ["", "2\n1 2\n", "2 2\n1 2\n", "1 3\n1 2\n", "1 1\nx\n"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        matrixio.parse_matrix(text)


@given(int_matrices)
def test_round_trip(m):
    assert matrixio.parse_matrix(matrixio.format_matrix(m)) == m


def test_file_round_trip(tmp_path):
    p = tmp_path / "a.mat"
    matrixio.write_matrix(p, [[1, 2, 3]])
    assert p.read_text() == "1 3\n1 2 3\n"
    assert matrixio.read_matrix(p) == [[1, 2, 3]]
