"""Reference instances with their documented outcomes."""

from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from lpcc_core.exceptions import ValidationError
from lpcc_core.model import MpecProblem
from lpcc_corpus.examples import build_ex1, build_ex2, build_ex3, build_ex4
from lpcc_oracle.blackbox import BlackBoxProblem


class CorpusId(StrEnum):
    EX1 = "EX1"
    EX2 = "EX2"
    EX3 = "EX3"
    EX4 = "EX4"


class SolverPath(StrEnum):
    """How a ground-truth row is reproduced."""

    PENALTY = "penalty"
    EXACT = "exact"
    ORACLE = "oracle"


@dataclass(frozen=True)
class GroundTruthRow:
    """
    One documented outcome.

    x, y and g are only compared when given; rows whose optimum is not
    unique leave them out and are checked by value. For penalty and oracle
    rows L is the weight replayed; interval is the range of weights the
    row stands for.
    """

    path: SolverPath
    f: float
    fpen: float | None
    complementary: bool
    citation: str
    L: float | None = None
    interval: tuple[float, float] | None = None
    x: tuple[float, ...] | None = None
    y: tuple[float, ...] | None = None
    g: tuple[float, ...] | None = None
    tol: float = 1e-6
    g_tol: float | None = None

    def __post_init__(self) -> None:
        if not self.citation:
            raise ValidationError("citation", "every ground-truth row needs a citation")
        if self.path is not SolverPath.EXACT and self.L is None:
            raise ValidationError("L", f"{self.path.value} rows need a penalty weight")

    @property
    def label(self) -> str:
        if self.path is SolverPath.EXACT:
            return "exact"
        if self.interval is not None:
            lo, hi = self.interval
            return f"L in [{lo:.6g}, {'inf' if np.isinf(hi) else f'{hi:.6g}'})"
        return f"L={self.L:g}"


Builder = Callable[..., MpecProblem | BlackBoxProblem]


@dataclass(frozen=True)
class CorpusEntry:
    """A reference instance, how to build it and what it must reproduce."""

    id: CorpusId
    title: str
    builder: Builder
    rows: tuple[GroundTruthRow, ...]
    provenance: str

    def build(self, **params: float) -> MpecProblem | BlackBoxProblem:
        return self.builder(**params)

    @property
    def is_linear(self) -> bool:
        return self.id is not CorpusId.EX4

    def rows_for(self, path: SolverPath) -> tuple[GroundTruthRow, ...]:
        return tuple(row for row in self.rows if row.path is path)


_EX1_TABLE = "penalty table at K=10"
_EX4_TABLE = "oracle penalty table"

_EX1_ROWS = (
    GroundTruthRow(
        SolverPath.PENALTY,
        f=0.0,
        fpen=17.0,
        complementary=True,
        citation=f"{_EX1_TABLE}, row L in [0, 2/9]",
        L=0.1,
        interval=(0.0, 2.0 / 9.0),
        x=(7.0, 3.0, 0.0, 0.0, 0.0, 0.0, 3.0),
        y=(3.0, 1.0, 0.0),
        g=(0.0, 0.0, 30.0),
    ),
    GroundTruthRow(
        SolverPath.PENALTY,
        f=3.0,
        fpen=3.5,
        complementary=False,
        citation=f"{_EX1_TABLE}, row L in [2/9, 2]; y1 * g1 = 9",
        L=1.0,
        interval=(2.0 / 9.0, 2.0),
        x=(7.0, 0.0, 0.0, 0.0, 0.0, 3.0, 0.0),
        y=(3.0, 1.0, 0.0),
        g=(3.0, 0.0, 0.0),
    ),
    GroundTruthRow(
        SolverPath.PENALTY,
        f=6.0,
        fpen=2.0,
        complementary=True,
        citation=f"{_EX1_TABLE}, row L in [2, inf)",
        L=3.0,
        interval=(2.0, np.inf),
        x=(10.0, 0.0, 3.0, 0.0, 0.0, 3.0, 0.0),
        y=(3.0, 1.0, 0.0),
        g=(0.0, 0.0, 0.0),
    ),
    GroundTruthRow(
        SolverPath.EXACT,
        f=0.0,
        fpen=17.0,
        complementary=True,
        citation="unique complementary optimum for any K > 0, with g = (0, 0, 30)",
        x=(7.0, 3.0, 0.0, 0.0, 0.0, 0.0, 3.0),
        y=(3.0, 1.0, 0.0),
        g=(0.0, 0.0, 30.0),
    ),
)

_EX2_ROWS = tuple(
    GroundTruthRow(
        SolverPath.PENALTY,
        f=-4.0,
        fpen=3.0,
        complementary=False,
        citation="for every L > -2 the penalty optimum is y = 4",
        L=L,
        y=(4.0,),
        g=(2.0,),
    )
    for L in (0.1, 1.0, 10.0, 100.0, 1000.0)
) + (
    GroundTruthRow(
        SolverPath.EXACT,
        f=0.0,
        fpen=None,
        complementary=True,
        citation="g >= 2 on the feasible set, so complementarity forces y = 0",
        y=(0.0,),
        g=(10.0,),
    ),
)

_EX3_ROWS = (
    GroundTruthRow(
        SolverPath.PENALTY,
        f=-30.0,
        fpen=10.0,
        complementary=False,
        citation="penalty optimum for L in [0, 2)",
        L=1.0,
        interval=(0.0, 2.0),
        x=(0.0, 10.0, 20.0),
        y=(0.0, 10.0),
        g=(0.0, 10.0),
    ),
    GroundTruthRow(
        SolverPath.PENALTY,
        f=-10.0,
        fpen=0.0,
        complementary=True,
        citation="for L > 2 the penalty optimum is the pen-first lexicographic minimum",
        L=3.0,
        interval=(2.0, np.inf),
        x=(0.0, 10.0, 10.0),
        y=(0.0, 0.0),
        g=(0.0, 0.0),
    ),
    GroundTruthRow(
        SolverPath.EXACT,
        f=-20.0,
        fpen=None,
        complementary=True,
        citation="complementary optimum; not unique, checked by value",
    ),
)


def _oracle_row(L: float, f: float, fpen: float, x: float, y: float) -> GroundTruthRow:
    return GroundTruthRow(
        SolverPath.ORACLE,
        f=f,
        fpen=fpen,
        complementary=True,
        citation=f"{_EX4_TABLE}, row L={L:g}; all solutions satisfy complementarity",
        L=L,
        x=(x,),
        y=(y, y),
        g=(0.0, 0.0),
        tol=0.05,
        g_tol=0.02,
    )


_EX4_ROWS = (
    _oracle_row(0.0, -12.0, 2.0, 6.0, 2.0),
    _oracle_row(0.0001, -12.0, 2.0, 6.0, 2.0),
    _oracle_row(1.0, -11.92, 1.83, 6.5, 1.83),
    _oracle_row(10.0, -3.67, 0.33, 11.0, 0.33),
    _oracle_row(100.0, 0.0, 0.0, 12.0, 0.0),
)

CORPUS: dict[CorpusId, CorpusEntry] = {
    CorpusId.EX1: CorpusEntry(
        CorpusId.EX1,
        "penalty optimum loses complementarity on a middle range of L",
        build_ex1,
        _EX1_ROWS,
        "seven x, three y with coupling K; frontier (0,17), (3,3.5), (6,2), breakpoints 2/9 and 2",
    ),
    CorpusId.EX2: CorpusEntry(
        CorpusId.EX2,
        "penalty optimum is never complementary",
        build_ex2,
        _EX2_ROWS,
        "one y with y <= 4 and g = 10 - 2y; pen-first face has no complementary point",
    ),
    CorpusId.EX3: CorpusEntry(
        CorpusId.EX3,
        "penalty optimum is complementary above the trade-off bound",
        build_ex3,
        _EX3_ROWS,
        "three x, two y; complementary pen-first lexicographic minimum, trade-off bound 2",
    ),
    CorpusId.EX4: CorpusEntry(
        CorpusId.EX4,
        "bilinear instance, complementary for every L >= 0",
        build_ex4,
        _EX4_ROWS,
        "bilinear f on a box, solved by grid refinement; tabulated values are numerical",
    ),
}


def get_entry(entry_id: str | CorpusId) -> CorpusEntry:
    """
    Look up a corpus entry by id (case-insensitive).

    Raises:
        ValidationError: unknown id
    """
    try:
        return CORPUS[CorpusId(str(entry_id).upper())]
    except ValueError:
        known = ", ".join(c.value for c in CorpusId)
        raise ValidationError("id", f"unknown corpus entry {entry_id!r} (known: {known})")
