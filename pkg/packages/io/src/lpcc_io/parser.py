"""Problem-file parser - converts `.lpcc` text into an MpecProblem.

File layout (sections in any order, `#` starts a comment):

    [meta]
    name = EX3
    K = 10

    [vars]
    x1 x 0 inf
    y1 y 0 10

    [objective]
    -x3 - y2

    [g]
    y1: 10 - x1 - x2

    [omega]
    cap: x1 + x2 <= 10
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from lpcc_core.exceptions import LPCCError, ParseError
from lpcc_core.model import AffineExpr, LinearConstraint, MpecProblem, Relation

logger = logging.getLogger(__name__)

SECTIONS = ("meta", "vars", "objective", "g", "omega")

_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
    |(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
    |(?P<name>[A-Za-z_][A-Za-z0-9_]*)
    |(?P<rel><=|>=|=)
    |(?P<op>[+\-*])
    """,
    re.VERBOSE,
)
_SECTION = re.compile(r"^\[(?P<name>[A-Za-z_]+)\]$")
_LABEL = re.compile(r"^(?P<label>[A-Za-z_][A-Za-z0-9_]*)\s*:(?!=)")
_RELATIONS = {"<=": Relation.LE, ">=": Relation.GE, "=": Relation.EQ}


@dataclass(frozen=True)
class _Line:
    number: int
    offset: int
    text: str


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    column: int


@dataclass
class _Document:
    sections: dict[str, list[_Line]] = field(default_factory=dict)
    headers: dict[str, int] = field(default_factory=dict)


@dataclass
class _Variable:
    name: str
    block: str
    lower: float
    upper: float
    line: int


class ProblemParser:
    """Parser for the `.lpcc` problem-file format."""

    @staticmethod
    def parse(text: str) -> MpecProblem:
        """
        Parse a problem file.

        Args:
            text: File contents

        Returns:
            Validated MpecProblem

        Raises:
            ParseError: with line and column of the offending token
        """
        doc = ProblemParser._split_sections(text)
        meta = ProblemParser._parse_meta(doc.sections.get("meta", []))
        variables = ProblemParser._parse_vars(doc.sections.get("vars", []))
        x_names = [v.name for v in variables if v.block == "x"]
        y_names = [v.name for v in variables if v.block == "y"]
        index = {name: ("x", k) for k, name in enumerate(x_names)}
        index.update({name: ("y", k) for k, name in enumerate(y_names)})
        dims = (len(x_names), len(y_names))

        objective_lines = doc.sections.get("objective", [])
        if not objective_lines:
            line = doc.headers.get("objective", 1)
            raise ParseError("missing [objective] section", line)
        objective = ProblemParser._parse_objective(objective_lines, index, dims)
        g = ProblemParser._parse_g(
            doc.sections.get("g", []), y_names, index, dims, doc.headers.get("g", 1)
        )
        omega = ProblemParser._parse_omega(doc.sections.get("omega", []), index, dims)

        bounds = {v.name: (v.lower, v.upper) for v in variables}
        name = str(meta.pop("name", ""))
        try:
            problem = MpecProblem(
                n_x=len(x_names),
                n_y=len(y_names),
                objective=objective,
                g=g,
                omega=omega,
                lower_x=np.array([bounds[n][0] for n in x_names]),
                upper_x=np.array([bounds[n][1] for n in x_names]),
                lower_y=np.array([bounds[n][0] for n in y_names]),
                upper_y=np.array([bounds[n][1] for n in y_names]),
                name=name,
                x_names=tuple(x_names),
                y_names=tuple(y_names),
                params={k: float(v) for k, v in meta.items()},
            )
        except LPCCError as e:
            raise ParseError(e.message, doc.headers.get("vars", 1)) from e
        logger.debug(f"parsed {name or 'problem'}: n_x={problem.n_x}, n_y={problem.n_y}")
        return problem

    @staticmethod
    def _split_sections(text: str) -> _Document:
        doc = _Document()
        current: str | None = None
        for number, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.split("#", 1)[0].rstrip()
            body = stripped.lstrip()
            if not body:
                continue
            offset = len(stripped) - len(body)
            match = _SECTION.match(body)
            if match:
                current = match["name"].lower()
                if current not in SECTIONS:
                    raise ParseError(f"unknown section [{match['name']}]", number, offset + 1)
                if current in doc.headers:
                    raise ParseError(f"duplicate section [{current}]", number, offset + 1)
                doc.headers[current] = number
                doc.sections.setdefault(current, [])
                continue
            if current is None:
                raise ParseError("content before the first section header", number, offset + 1)
            doc.sections[current].append(_Line(number, offset, body))
        return doc

    @staticmethod
    def _parse_meta(lines: list[_Line]) -> dict[str, float | str]:
        meta: dict[str, float | str] = {}
        for line in lines:
            key, sep, value = line.text.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or not key:
                raise ParseError("expected `key = value`", line.number, line.offset + 1)
            if key in meta:
                raise ParseError(f"duplicate meta key {key!r}", line.number, line.offset + 1)
            if key == "name":
                meta[key] = value
                continue
            meta[key] = ProblemParser._number(value, line, line.text.index("=") + 1)
        return meta

    @staticmethod
    def _number(text: str, line: _Line, column: int) -> float:
        try:
            value = float(text)
        except ValueError:
            raise ParseError(f"non-numeric literal {text!r}", line.number, line.offset + column)
        if np.isnan(value):
            raise ParseError("NaN is not allowed", line.number, line.offset + column)
        return value

    @staticmethod
    def _parse_vars(lines: list[_Line]) -> list[_Variable]:
        variables: list[_Variable] = []
        seen: dict[str, int] = {}
        for line in lines:
            parts = line.text.split()
            if len(parts) not in (2, 4):
                raise ParseError(
                    "expected `name block [lower upper]`", line.number, line.offset + 1
                )
            name, block = parts[0], parts[1].lower()
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name) or name in ("inf", "nan"):
                raise ParseError(f"invalid variable name {name!r}", line.number, line.offset + 1)
            if name in seen:
                raise ParseError(
                    f"duplicate variable {name!r} (first declared on line {seen[name]})",
                    line.number,
                    line.offset + 1,
                )
            if block not in ("x", "y"):
                column = line.text.index(parts[1], len(name)) + 1
                raise ParseError(
                    f"block must be x or y, got {parts[1]!r}", line.number, line.offset + column
                )
            lower, upper = 0.0, np.inf
            if len(parts) == 4:
                start = line.text.index(parts[1], len(name)) + len(parts[1])
                col_lo = line.text.index(parts[2], start) + 1
                col_hi = line.text.index(parts[3], col_lo + len(parts[2]) - 1) + 1
                lower = ProblemParser._number(parts[2], line, col_lo)
                upper = ProblemParser._number(parts[3], line, col_hi)
            seen[name] = line.number
            variables.append(_Variable(name, block, lower, upper, line.number))
        return variables

    @staticmethod
    def _tokenize(line: _Line, start: int = 0) -> list[_Token]:
        tokens: list[_Token] = []
        position = start
        text = line.text
        while position < len(text):
            match = _TOKEN.match(text, position)
            if match is None:
                raise ParseError(
                    f"unexpected character {text[position]!r}",
                    line.number,
                    line.offset + position + 1,
                )
            kind = match.lastgroup or ""
            if kind != "space":
                tokens.append(_Token(kind, match.group(), line.offset + position + 1))
            position = match.end()
        return tokens

    @staticmethod
    def _parse_expr(
        tokens: list[_Token],
        line: _Line,
        index: dict[str, tuple[str, int]],
        dims: tuple[int, int],
    ) -> AffineExpr:
        """expr := [sign] term (sign term)*, term := number [*] name | number | name."""
        if not tokens:
            raise ParseError("empty expression", line.number, line.offset + len(line.text) + 1)
        cx, cy = np.zeros(dims[0]), np.zeros(dims[1])
        constant = 0.0
        k = 0
        first = True
        while k < len(tokens):
            sign = 1.0
            token = tokens[k]
            if token.kind == "op" and token.text in "+-":
                sign = -1.0 if token.text == "-" else 1.0
                k += 1
            elif not first:
                raise ParseError(f"expected + or -, got {token.text!r}", line.number, token.column)
            first = False
            if k >= len(tokens):
                raise ParseError("expression ends after an operator", line.number, token.column)

            token = tokens[k]
            coefficient: float | None = None
            if token.kind == "number":
                coefficient = float(token.text)
                k += 1
                if k < len(tokens) and tokens[k].kind == "op" and tokens[k].text == "*":
                    k += 1
                    if k >= len(tokens) or tokens[k].kind != "name":
                        raise ParseError("expected a variable after *", line.number, token.column)
            if k < len(tokens) and tokens[k].kind == "name":
                name_token = tokens[k]
                if name_token.text not in index:
                    raise ParseError(
                        f"unknown variable {name_token.text!r}", line.number, name_token.column
                    )
                block, position = index[name_token.text]
                target = cx if block == "x" else cy
                target[position] += sign * (1.0 if coefficient is None else coefficient)
                k += 1
            elif coefficient is not None:
                constant += sign * coefficient
            else:
                raise ParseError(
                    f"expected a number or variable, got {token.text!r}", line.number, token.column
                )
        return AffineExpr(cx, cy, constant)

    @staticmethod
    def _parse_objective(
        lines: list[_Line], index: dict[str, tuple[str, int]], dims: tuple[int, int]
    ) -> AffineExpr:
        if len(lines) > 1:
            raise ParseError("objective must be a single line", lines[1].number, lines[1].offset + 1)
        line = lines[0]
        return ProblemParser._parse_expr(ProblemParser._tokenize(line), line, index, dims)

    @staticmethod
    def _parse_g(
        lines: list[_Line],
        y_names: list[str],
        index: dict[str, tuple[str, int]],
        dims: tuple[int, int],
        header_line: int,
    ) -> tuple[AffineExpr, ...]:
        rows: dict[str, AffineExpr] = {}
        for line in lines:
            match = _LABEL.match(line.text)
            if match is None:
                raise ParseError("expected `y_name: expression`", line.number, line.offset + 1)
            label = match["label"]
            if label not in y_names:
                raise ParseError(
                    f"g row for {label!r}, which is not a y variable", line.number, line.offset + 1
                )
            if label in rows:
                raise ParseError(f"duplicate g row for {label!r}", line.number, line.offset + 1)
            tokens = ProblemParser._tokenize(line, match.end())
            rows[label] = ProblemParser._parse_expr(tokens, line, index, dims)
        for name in y_names:
            if name not in rows:
                raise ParseError(f"missing g row for {name!r}", header_line)
        return tuple(rows[name] for name in y_names)

    @staticmethod
    def _parse_omega(
        lines: list[_Line], index: dict[str, tuple[str, int]], dims: tuple[int, int]
    ) -> tuple[LinearConstraint, ...]:
        rows: list[LinearConstraint] = []
        names: set[str] = set()
        for k, line in enumerate(lines, start=1):
            match = _LABEL.match(line.text)
            name = match["label"] if match else f"r{k}"
            if name in names:
                raise ParseError(f"duplicate row name {name!r}", line.number, line.offset + 1)
            names.add(name)
            tokens = ProblemParser._tokenize(line, match.end() if match else 0)
            rel = [j for j, token in enumerate(tokens) if token.kind == "rel"]
            if len(rel) != 1:
                column = tokens[rel[1]].column if len(rel) > 1 else line.offset + 1
                raise ParseError("row needs exactly one of <=, >=, =", line.number, column)
            j = rel[0]
            lhs = ProblemParser._parse_expr(tokens[:j], line, index, dims)
            rhs = ProblemParser._parse_expr(tokens[j + 1 :], line, index, dims)
            rows.append(LinearConstraint(lhs - rhs, _RELATIONS[tokens[j].text], name))
        return tuple(rows)


def parse_problem(text: str) -> MpecProblem:
    """Parse `.lpcc` text into a validated MpecProblem."""
    return ProblemParser.parse(text)


def read_problem(path: str | Path) -> MpecProblem:
    """Read and parse a `.lpcc` file (UTF-8)."""
    return ProblemParser.parse(Path(path).read_text(encoding="utf-8"))
