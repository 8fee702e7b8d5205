from __future__ import annotations

import json
from pathlib import Path

import pytest

from semilat import (
    Graph,
    boolean_lattice,
    chain_product,
    graphic_flat_lattice,
    partition_lattice,
)
from semilat.cli import run as cli_run

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

TRIANGLE = Graph(3, ((0, 1), (1, 2), (0, 2)))
K4 = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
TWO_TRIANGLES = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
P4 = Graph(4, ((0, 1), (1, 2), (2, 3)))

CHAIN_PRODUCT_SHAPES = (
    [2], [3], [2, 2], [2, 3], [3, 3], [2, 2, 2], [2, 2, 3], [2, 3, 3], [3, 3, 3],
)


def build_corpus():
    """Every semimodular test lattice, from singletons up to 27 elements."""
    lattices = [boolean_lattice(n) for n in range(5)]
    lattices += [chain_product(shape) for shape in CHAIN_PRODUCT_SHAPES]
    lattices += [partition_lattice(n) for n in range(1, 5)]
    lattices += [graphic_flat_lattice(g) for g in (TRIANGLE, K4, TWO_TRIANGLES, P4)]
    return lattices


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Corpus members small enough for exhaustive pair scans."""
    return [p for p in corpus if len(p) <= 30]


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""
    def invoke(*argv):
        code = cli_run(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return invoke


def read_golden(name: str) -> str:
    return (GOLDEN / name).read_text(encoding="utf-8")


def golden_json(name: str):
    return json.loads(read_golden(name))
