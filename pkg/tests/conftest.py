from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from braid3 import BraidWord
from braid3.atlas import load_table1
from braid3.flype import flype_word

b3_letters = st.sampled_from((1, -1, 2, -2))


def b3_words(max_size: int = 12):
    return st.lists(b3_letters, max_size=max_size).map(lambda ls: BraidWord(3, tuple(ls)))


def random_b3_word(rng: random.Random, max_length: int, min_length: int = 0) -> BraidWord:
    return BraidWord(3, tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(min_length, max_length))))


@pytest.fixture(scope="session")
def table_words() -> list[BraidWord]:
    """The 40 flype words of the bundled Table 1 fixture (both columns, 12n234 as printed)."""
    fx = load_table1()
    return [flype_word(t) for row in fx.rows for t in (row.triple1, row.triple2)]


_CRITERIA: dict[int, str] = {}


@pytest.fixture
def report_criterion():
    """Record the one-line PASS/FAIL verdict of an acceptance criterion."""

    def record(number: int, title: str, ok: bool, detail: str) -> None:
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
        _CRITERIA[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[number])
