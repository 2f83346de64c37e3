"""LPCC Corpus - Reference instances, documented outcomes and random test instances."""

__version__ = "0.1.0"

from lpcc_corpus.entries import (
    CORPUS,
    CorpusEntry,
    CorpusId,
    GroundTruthRow,
    SolverPath,
    get_entry,
)
from lpcc_corpus.examples import build_ex1, build_ex2, build_ex3, build_ex4
from lpcc_corpus.generator import random_lpcc
from lpcc_corpus.golden import golden_ids, golden_name, golden_text
from lpcc_corpus.replay import ReplayReport, RowOutcome, replay, replay_row

__all__ = [
    # Builders
    "build_ex1",
    "build_ex2",
    "build_ex3",
    "build_ex4",
    "random_lpcc",
    # Entries
    "CORPUS",
    "CorpusEntry",
    "CorpusId",
    "GroundTruthRow",
    "SolverPath",
    "get_entry",
    # Golden files
    "golden_ids",
    "golden_name",
    "golden_text",
    # Replay
    "ReplayReport",
    "RowOutcome",
    "replay",
    "replay_row",
]
