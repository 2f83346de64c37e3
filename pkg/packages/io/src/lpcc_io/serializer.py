"""Canonical `.lpcc` text for an MpecProblem."""

from pathlib import Path

import numpy as np

from lpcc_core.model import AffineExpr, MpecProblem, Relation


def format_number(value: float, digits: int = 9) -> str:
    """
    Shortest exact text for value.

    Uses `digits` significant digits when that round-trips, the full
    repr otherwise; infinities print as inf / -inf and zero never carries
    a sign.
    """
    value = float(value)
    if np.isinf(value):
        return "inf" if value > 0 else "-inf"
    if value == 0.0:
        return "0"
    text = f"{value:.{digits}g}"
    return text if float(text) == value else repr(value)


def _term(coefficient: float, name: str, first: bool) -> str:
    magnitude = abs(coefficient)
    body = name if magnitude == 1.0 else f"{format_number(magnitude)} {name}"
    if first:
        return f"-{body}" if coefficient < 0 else body
    return f" - {body}" if coefficient < 0 else f" + {body}"


def format_expr(expr: AffineExpr, names: tuple[str, ...], constant: bool = True) -> str:
    """
    Terms in stacked variable order, then the constant.

    A coefficient of 1 is omitted; an all-zero expression prints as 0.
    """
    parts: list[str] = []
    for coefficient, name in zip(expr.coeffs, names):
        if coefficient != 0.0:
            parts.append(_term(float(coefficient), name, not parts))
    if constant and expr.constant != 0.0:
        c = expr.constant
        if not parts:
            parts.append(format_number(c))
        else:
            parts.append(f" - {format_number(-c)}" if c < 0 else f" + {format_number(c)}")
    return "".join(parts) or "0"


class ProblemSerializer:
    """Writes the canonical form: fixed section order, x block before y block."""

    @staticmethod
    def serialize(p: MpecProblem) -> str:
        names = p.names
        lines = ["[meta]"]
        if p.name:
            lines.append(f"name = {p.name}")
        lines.extend(f"{key} = {format_number(value)}" for key, value in p.params.items())

        lines += ["", "[vars]"]
        for block, block_names, lower, upper in (
            ("x", p.x_names, p.lower_x, p.upper_x),
            ("y", p.y_names, p.lower_y, p.upper_y),
        ):
            for name, lo, hi in zip(block_names, lower, upper):
                lines.append(f"{name} {block} {format_number(lo)} {format_number(hi)}")

        lines += ["", "[objective]", format_expr(p.objective, names)]

        lines += ["", "[g]"]
        lines.extend(f"{name}: {format_expr(gi, names)}" for name, gi in zip(p.y_names, p.g))

        lines += ["", "[omega]"]
        for k, row in enumerate(p.omega, start=1):
            lhs = format_expr(row.expr, names, constant=False)
            rhs = format_number(-row.expr.constant)
            lines.append(f"{row.name or f'r{k}'}: {lhs} {Relation(row.relation).value} {rhs}")
        return "\n".join(lines) + "\n"


def serialize_problem(p: MpecProblem) -> str:
    """Canonical `.lpcc` text; parse_problem(serialize_problem(p)) rebuilds p."""
    return ProblemSerializer.serialize(p)


def write_problem(p: MpecProblem, path: str | Path) -> Path:
    """Write the canonical text of p to path, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_problem(p), encoding="utf-8")
    return path
