from pathlib import Path

import pytest

from jacobsthal import SequenceKind

FIXTURES = Path(__file__).parent / "fixtures"

# Tables 1 and 2 of the source, k = 2, 3, 4 and n = 0..10
TABLE_J = {
    2: [0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341],
    3: [0, 1, 2, 7, 20, 61, 182, 547, 1640, 4921, 14762],
    4: [0, 1, 3, 13, 51, 205, 819, 3277, 13107, 52429, 209715],
}
TABLE_LUCAS = {
    2: [2, 2, 6, 10, 22, 42, 86, 170, 342, 682, 1366],
    3: [2, 2, 10, 26, 82, 242, 730, 2186, 6562, 19682, 59050],
    4: [2, 2, 14, 50, 206, 818, 3278, 13106, 52430, 209714, 838862],
}

# OEIS A001045, n = 0..33
A001045 = [
    0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683, 1365, 2731, 5461, 10923,
    21845, 43691, 87381, 174763, 349525, 699051, 1398101, 2796203, 5592405,
    11184811, 22369621, 44739243, 89478485, 178956971, 357913941, 715827883,
    1431655765, 2863311531,
]


def naive_terms(kind, k, count):
    """Independent oracle: grow the list straight from the recurrence."""
    xs = [0, 1] if kind is SequenceKind.JACOBSTHAL else [2, 2]
    while len(xs) < count:
        xs.append((k - 1) * xs[-1] + k * xs[-2])
    return xs[:count]


@pytest.fixture
def fixtures_dir():
    return FIXTURES
