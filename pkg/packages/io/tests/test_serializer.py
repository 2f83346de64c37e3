"""Tests for the canonical problem-file writer."""

import numpy as np
import pytest

from lpcc_core import AffineExpr, LinearConstraint, MpecProblem, Relation
from lpcc_io.parser import parse_problem, read_problem
from lpcc_io.serializer import format_expr, format_number, serialize_problem, write_problem


@pytest.fixture
def boxed():
    return MpecProblem(
        n_x=1,
        n_y=2,
        objective=AffineExpr([1.0], [-1.0, 0.0], 0.25),
        g=(AffineExpr([0.0], [0.0, 1.0]), AffineExpr([-3.0], [0.0, 0.0], 12.0)),
        omega=(LinearConstraint(AffineExpr([1.0], [1.0, 1.0], -5.0), Relation.LE),),
        lower_x=[-np.inf],
        upper_y=[4.0, 1.0 / 3.0],
        name="boxed",
    )


class TestFormatNumber:
    """Tests for format_number."""

    @pytest.mark.parametrize(
        ("value", "text"),
        [
            (0.0, "0"),
            (-0.0, "0"),
            (3.0, "3"),
            (-2.5, "-2.5"),
            (1e-7, "1e-07"),
            (np.inf, "inf"),
            (-np.inf, "-inf"),
        ],
    )
    def test_short_forms(self, value, text):
        assert format_number(value) == text

    def test_full_precision_when_needed(self):
        text = format_number(1.0 / 3.0)
        assert float(text) == 1.0 / 3.0


class TestFormatExpr:
    """Tests for format_expr."""

    def test_unit_coefficients_omitted(self):
        expr = AffineExpr([1.0, -1.0], [2.0], -4.0)
        assert format_expr(expr, ("a", "b", "c")) == "a - b + 2 c - 4"

    def test_leading_negative(self):
        assert format_expr(AffineExpr([-3.0], []), ("x",)) == "-3 x"

    def test_constant_only(self):
        assert format_expr(AffineExpr([0.0], [], 10.0), ("x",)) == "10"

    def test_zero(self):
        assert format_expr(AffineExpr([0.0], [0.0]), ("x", "y")) == "0"

    def test_constant_dropped_on_request(self):
        assert format_expr(AffineExpr([2.0], [], 7.0), ("x",), constant=False) == "2 x"


class TestSerializeProblem:
    """Tests for serialize_problem and write_problem."""

    def test_layout(self, boxed):
        text = serialize_problem(boxed)
        assert text.splitlines() == [
            "[meta]",
            "name = boxed",
            "",
            "[vars]",
            "x1 x -inf inf",
            "y1 y 0 4",
            f"y2 y 0 {format_number(1.0 / 3.0)}",
            "",
            "[objective]",
            "x1 - y1 + 0.25",
            "",
            "[g]",
            "y1: y2",
            "y2: -3 x1 + 12",
            "",
            "[omega]",
            "r1: x1 + y1 + y2 <= 5",
        ]

    def test_parse_rebuilds_problem(self, boxed):
        p = parse_problem(serialize_problem(boxed))
        assert p.upper_y == pytest.approx(boxed.upper_y, rel=0, abs=0)
        assert p.objective.isclose(boxed.objective)
        assert all(a.isclose(b) for a, b in zip(p.g, boxed.g))
        assert p.omega[0].expr.isclose(boxed.omega[0].expr)
        assert p.omega[0].name == "r1"

    def test_write_creates_directories(self, tmp_path, ex3):
        path = write_problem(ex3, tmp_path / "nested" / "ex3.lpcc")
        assert path.exists()
        assert read_problem(path).objective.isclose(ex3.objective)
