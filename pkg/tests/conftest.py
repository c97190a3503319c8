import sys
from pathlib import Path

import pytest

from rulehide import Thresholds, TransactionDB, parse_database

sys.path.insert(0, str(Path(__file__).parent))

DB_ABC = "A B C\nA B C\nA B C\nA B\nA\nA C\n"
DB_ABCDE = "A B C\nA B C D\nB C E\nA C D E\nD E\nA B\n"

# expected sanitized outputs, hiding C or B at 33%/70%
ABC_HIDE_C = "A B\nA B C\nA B C\nA B\nA C\nA C\n"
ABC_HIDE_B = "A C\nA B C\nA B C\nA B\nA B\nA C\n"
ABCDE_HIDE_C = "A B C\nA B D\nB C E\nA C D E\nC D E\nA B\n"
ABCDE_HIDE_B = "A B C\nA C D\nB C E\nA C D E\nB D E\nA B\n"


def db(text: str) -> TransactionDB:
    return parse_database(text)


@pytest.fixture
def db_abc():
    return db(DB_ABC)


@pytest.fixture
def db_abcde():
    return db(DB_ABCDE)


@pytest.fixture
def th():
    return Thresholds("33%", "70%")


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
