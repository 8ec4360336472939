"""Matrix file formats: CSV and JSON with exact rational literals."""

import json

import numpy as np
import pytest

from pcii import matio
from pcii.axioms import random_pc_matrix
from pcii.errors import NonSquareError, ReciprocityViolationError
from pcii.matrix import validate


class TestParseCell:
    def test_rational_literal(self):
        assert matio.parse_cell("1/3") == 1 / 3
        assert matio.parse_cell("2/4") == 0.5

    def test_decimal(self):
        assert matio.parse_cell("0.25") == 0.25
        assert matio.parse_cell(" 3 ") == 3.0

    def test_exact_decimal_conversion(self):
        # parsed exactly as a rational, then converted to the nearest double
        assert matio.parse_cell("0.1") == 0.1

    def test_numbers_pass_through(self):
        assert matio.parse_cell(2) == 2.0

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            matio.parse_cell("x/y")


class TestCsv:
    def test_round_trip_bit_exact(self):
        for seed in range(10):
            A = random_pc_matrix(5, 2.0, seed)
            assert matio.loads_csv(matio.dumps_csv(A)) == A

    def test_rational_cells(self):
        A = matio.loads_csv("1,1/2\n2,1\n")
        assert A.entries[0, 1] == 0.5

    def test_ragged_rejected(self):
        with pytest.raises(NonSquareError):
            matio.loads_csv("1,2\n0.5\n")

    def test_strict_validation_reports_coordinates(self):
        with pytest.raises(ReciprocityViolationError) as exc:
            matio.loads_csv("1,2\n3,1\n")
        assert (exc.value.i, exc.value.j) == (1, 2)

    def test_lenient_mode(self):
        A = matio.loads_csv("1,2\n3,1\n", mode="lenient")
        assert A.entries[1, 0] == 3.0


class TestJson:
    def test_round_trip_bit_exact(self):
        for seed in range(10):
            A = random_pc_matrix(4, 2.0, seed)
            assert matio.loads_json(matio.dumps_json(A)) == A

    def test_string_cells_allowed(self):
        A = matio.loads_json('{"n": 2, "rows": [[1, "1/4"], ["4", 1]]}')
        assert A.entries[0, 1] == 0.25

    def test_order_mismatch_rejected(self):
        with pytest.raises(NonSquareError):
            matio.loads_json('{"n": 3, "rows": [[1, 2], [0.5, 1]]}')


class TestFiles:
    def test_csv_file_round_trip(self, tmp_path):
        A = random_pc_matrix(4, 1.5, 7)
        path = tmp_path / "m.csv"
        matio.save_matrix(path, A)
        assert matio.load_matrix(path) == A

    def test_json_file_round_trip(self, tmp_path):
        A = random_pc_matrix(4, 1.5, 8)
        path = tmp_path / "m.json"
        matio.save_matrix(path, A)
        assert matio.load_matrix(path) == A
        doc = json.loads(path.read_text())
        assert doc["n"] == 4
