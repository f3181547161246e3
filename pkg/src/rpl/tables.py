"""Reference data for the 30 partitions of 9.

``GRID_9`` groups them by (srank mod 4, stcrank mod 5).  ``ORBITS_9`` lists
the six orbits of the srank-preserving 5-core crank operator.  Cells are in
frequency notation so they are easy to compare by eye.
"""

from __future__ import annotations

from .partitions import Partition, parse_partition

# (srank mod 4, stcrank mod 5) -> members of the cell
_GRID_9 = {
    (0, 0): ["(3^3)", "(1^3,2^1,4^1)", "(1^1,3^1,5^1)", "(4^1,5^1)"],
    (0, 1): ["(1^5,2^2)", "(1^4,5^1)", "(1^2,2^1,5^1)", "(9^1)"],
    (0, 2): ["(1^4,2^1,3^1)", "(1^3,3^2)", "(1^1,4^2)", "(2^2,5^1)"],
    (0, 3): ["(1^1,2^4)", "(1^6,3^1)", "(1^1,2^1,6^1)", "(2^1,7^1)"],
    (0, 4): ["(1^9)", "(1^2,2^2,3^1)", "(2^3,3^1)", "(1^2,7^1)"],
    (2, 0): ["(1^3,2^3)", "(1^3,6^1)"],
    (2, 1): ["(1^1,2^1,3^2)", "(1^2,3^1,4^1)"],
    (2, 2): ["(1^5,4^1)", "(1^1,8^1)"],
    (2, 3): ["(1^7,2^1)", "(1^1,2^2,4^1)"],
    (2, 4): ["(2^1,3^1,4^1)", "(3^1,6^1)"],
}

# one orbit per row, columns ordered by 5-core crank 0..4; first entry is the srank class
_ORBITS_9 = [
    (0, ["(1^4,5^1)", "(1^3,3^2)", "(1^4,2^1,3^1)", "(1^1,2^1,6^1)", "(2^2,5^1)"]),
    (0, ["(1^5,2^2)", "(2^3,3^1)", "(1^2,7^1)", "(4^1,5^1)", "(1^3,2^1,4^1)"]),
    (0, ["(3^3)", "(1^9)", "(1^1,3^1,5^1)", "(1^2,2^2,3^1)", "(9^1)"]),
    (0, ["(2^1,7^1)", "(1^2,2^1,5^1)", "(1^1,2^4)", "(1^6,3^1)", "(1^1,4^2)"]),
    (2, ["(1^3,2^3)", "(1^3,6^1)", "(2^1,3^1,4^1)", "(1^1,8^1)", "(1^2,3^1,4^1)"]),
    (2, ["(3^1,6^1)", "(1^1,2^2,4^1)", "(1^7,2^1)", "(1^1,2^1,3^2)", "(1^5,4^1)"]),
]

GRID_9: dict[tuple[int, int], frozenset[Partition]] = {
    key: frozenset(parse_partition(s) for s in cell) for key, cell in _GRID_9.items()
}

ORBITS_9: list[tuple[int, tuple[Partition, ...]]] = [
    (cls, tuple(parse_partition(s) for s in row)) for cls, row in _ORBITS_9
]
