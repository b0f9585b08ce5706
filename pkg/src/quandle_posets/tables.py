"""Published tables of continuous orders, embedded as golden data.

Edge lists are transcribed exactly as printed, including their order and
any redundant pairs; comparisons are made after transitive closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quandle import Quandle

DATA_VERSION = 1

Pair = tuple[int, int]
EdgeList = tuple[Pair, ...]


# Right-continuous orders on the even dihedral quandles, keyed by quandle order.
DIHEDRAL_TABLE: dict[int, tuple[EdgeList, ...]] = {
    4: (
        ((0, 1), (2, 1), (0, 3), (2, 3)),
    ),
    6: (
        ((0, 1), (0, 5), (2, 1), (2, 3), (4, 3), (4, 5)),
        ((0, 3), (2, 5), (4, 1)),
    ),
    8: (
        ((2, 7), (4, 7), (6, 1), (6, 3), (0, 5), (2, 5), (4, 1), (0, 3)),
        ((0, 1), (6, 7), (4, 5), (0, 7), (2, 1), (2, 3), (4, 3), (6, 5)),
    ),
    10: (
        ((0, 1), (6, 7), (4, 5), (2, 1), (8, 9), (2, 3), (4, 3), (8, 7), (0, 9), (6, 5)),
        ((4, 7), (6, 9), (2, 9), (8, 1), (8, 5), (0, 7), (6, 3), (2, 5), (4, 1), (0, 3)),
        ((2, 7), (8, 3), (0, 5), (4, 9), (6, 1)),
    ),
}


@dataclass(frozen=True)
class PrintedQuandle:
    table: int
    index: int
    rows: tuple[str, ...]
    right: tuple[EdgeList, ...]
    left: tuple[EdgeList, ...]

    @property
    def key(self) -> str:
        return f"table:{self.table}:{self.index}"

    def quandle(self) -> Quandle:
        return Quandle(tuple(tuple(int(c) for c in r) for r in self.rows), name=self.key)


def _q(table, index, rows, right, left=()):
    return PrintedQuandle(table, index, tuple(rows.split()),
                          tuple(tuple(e) for e in right), tuple(tuple(e) for e in left))


PRINTED_QUANDLES: tuple[PrintedQuandle, ...] = (
    # order 3
    _q(2, 1, "001 110 222",
       [[(0, 2), (1, 2)]],
       [[(0, 1)]]),
    # order 4
    _q(3, 1, "0000 1112 2221 3333",
       [[(0, 3)], [(0, 1), (0, 2), (0, 3)], [(0, 1), (0, 3), (1, 2)],
        [(0, 1), (0, 2), (1, 3), (2, 3)], [(2, 3), (1, 3)], [(2, 3), (1, 3), (0, 3)]],
       [[(0, 1), (1, 2)], [(1, 2)]]),
    _q(3, 2, "0001 1112 2220 3333",
       [[(0, 3), (1, 3), (2, 3)]],
       [[(0, 1), (1, 2)], [(1, 2)]]),
    _q(3, 3, "0011 1100 2222 3333",
       [[(0, 2), (1, 2), (0, 3), (1, 3), (2, 3)], [(0, 2), (1, 2), (0, 3), (1, 3)],
        [(0, 2), (1, 2)], [(2, 3)]],
       [[(0, 1), (2, 3)], [(2, 3)]]),
    _q(3, 4, "0000 1132 2321 3213",
       [[(0, 1), (0, 2), (0, 3)]]),
    _q(3, 5, "0011 1100 3322 2233",
       [[(0, 2), (0, 3), (1, 2), (1, 3)]],
       [[(0, 1), (2, 3)]]),
    # order 5, part I
    _q(4, 1, "00000 11111 22223 33332 44444",
       [[(0, 1), (1, 2), (1, 3), (0, 4)], [(0, 2), (0, 3), (1, 2), (1, 3), (4, 2), (4, 3)],
        [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)], [(0, 1), (1, 4), (4, 2), (4, 3)]],
       [[(0, 1), (1, 2), (2, 3)], [(0, 1), (1, 2)], [(1, 2)]]),
    _q(4, 2, "00000 11112 22223 33331 44444",
       [[(0, 1), (0, 2), (0, 3), (2, 4), (3, 4), (1, 4)], [(0, 4)], [(0, 1), (0, 2), (0, 3)],
        [(0, 4), (4, 1), (4, 2), (4, 3)]],
       [[(0, 1), (1, 2), (2, 3)], [(0, 1), (1, 2)], [(2, 3)]]),
    _q(4, 3, "00001 11110 22223 33332 44444",
       [[(1, 2), (0, 3), (2, 4), (3, 4)], [(1, 2), (0, 2), (1, 3), (0, 3), (2, 4), (3, 4)],
        [(1, 4), (0, 4)], [(1, 2), (0, 2), (1, 3), (0, 3)]],
       [[(1, 2), (0, 1), (2, 3)], [(0, 1), (0, 2)], [(0, 2), (1, 2)]]),
    _q(4, 4, "00001 11112 22223 33330 44444",
       [[(0, 4), (1, 4), (2, 4), (3, 4)]],
       [[(1, 2), (0, 1), (2, 3)], [(0, 1), (0, 2)], [(0, 2), (1, 2)]]),
    _q(4, 5, "00000 11111 22243 33432 44324",
       [[(0, 2), (0, 3), (0, 4)], [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], [(0, 1)],
        [(0, 2), (0, 3), (0, 4), (0, 1), (1, 2), (1, 3), (1, 4)]],
       [[(0, 1), (0, 2), (0, 3)], [(0, 1), (0, 2)], [(0, 1)]]),
    _q(4, 6, "00000 11122 22211 33333 44444",
       [[(1, 3), (2, 3)], [(1, 3), (2, 3), (1, 4), (2, 4)], [(0, 4)], [(3, 2), (3, 1)],
        [(1, 3), (2, 3), (4, 1), (4, 2)]],
       [[(0, 1), (1, 2), (3, 4)], [(0, 1), (1, 2)], [(0, 1), (3, 4)], [(0, 1)]]),
    _q(4, 7, "00000 11122 22211 34433 43344",
       [[(0, 1), (0, 2), (0, 3), (0, 4)], [(0, 1), (0, 2)],
        [(0, 1), (0, 2), (2, 3), (2, 4), (1, 3), (1, 4)], [(1, 3), (1, 4), (2, 3), (2, 4)]],
       [[(0, 1), (1, 2), (3, 4)], [(0, 1), (1, 2)], [(0, 1), (3, 4)], [(0, 1)]]),
    # order 5, part II
    _q(5, 1, "00011 11100 22222 33433 44344",
       [[(0, 2), (1, 2), (2, 3), (2, 4)], [(0, 2), (1, 2)], [(2, 3), (2, 4)],
        [(0, 3), (0, 4), (1, 3), (1, 4)]],
       [[(0, 1), (1, 2), (3, 4)], [(3, 4)], [(0, 1), (1, 2)]]),
    _q(5, 2, "00011 11122 22200 33333 44444",
       [[(0, 3), (1, 3), (2, 3), (3, 4)], [(0, 3), (1, 3), (2, 3)], [(3, 4)]],
       [[(0, 1), (1, 2), (3, 4)], [(3, 4)], [(0, 1), (1, 2)]]),
    _q(5, 3, "00012 11120 22201 33333 44444",
       [[(0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)], [(0, 3), (1, 3), (2, 3)], [(3, 4)]],
       [[(0, 1), (1, 2)], [(0, 1)]]),
    _q(5, 4, "00000 11111 22222 44433 33344",
       [[(0, 1), (0, 2)], [(0, 1), (1, 3), (1, 4)], [(0, 1), (1, 2), (2, 3), (2, 4)]],
       [[(0, 1), (0, 2)], [(0, 1), (1, 2), (3, 4)], [(0, 1), (3, 4)], [(3, 4)]]),
    _q(5, 5, "00000 11122 22211 44433 33344",
       [[(0, 1), (0, 2)], [(0, 1), (1, 3), (1, 4)], [(1, 3), (1, 4), (2, 3), (2, 4)]],
       [[(0, 1), (0, 2)], [(0, 1), (1, 2), (3, 4)], [(0, 1), (3, 4)], [(3, 4)]]),
    _q(5, 6, "00011 11122 22200 44433 33344",
       [[(0, 4), (1, 4), (2, 4), (0, 3), (1, 3), (2, 3)]],
       [[(0, 1), (0, 2)], [(0, 1), (1, 2), (3, 4)], [(0, 1), (3, 4)], [(3, 4)]]),
    _q(5, 7, "00000 11423 23241 34132 42314",
       [[(0, 1), (0, 2), (0, 3), (0, 4)]]),
    _q(5, 8, "00111 11000 22223 33332 44444",
       [[(1, 2), (0, 2), (1, 3), (0, 3), (2, 4), (3, 4)], [(1, 4), (0, 4)],
        [(1, 2), (0, 2), (1, 3), (0, 3)]],
       [[(0, 1), (2, 3)], [(0, 1)]]),
    # order 5, part III
    _q(6, 1, "00111 11000 22243 33432 44324",
       [[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]],
       [[(0, 1), (2, 3)], [(0, 1)]]),
    _q(6, 2, "00111 11000 22222 44433 33344",
       [[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], [(0, 2), (1, 2)], [(2, 3), (2, 4)],
        [(0, 3), (0, 4), (1, 3), (1, 4)]],
       [[(0, 1), (2, 3)], [(0, 1)]]),
    _q(6, 3, "00111 11000 34243 42432 23324",
       [[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]]),
)


# Printed entries that the exhaustive oracle refutes, keyed by
# (table, quandle index, side, entry index); indices are 1-based.  Witnesses
# are recomputed by the diff tool, never stored.
KNOWN_DISCREPANCIES: dict[tuple[int, int, str, int], str] = {
    (3, 1, "right", 3): "not right-continuous",
    (5, 5, "right", 2): "not right-continuous",
    (4, 5, "left", 1): "not left-continuous",
    (4, 5, "left", 2): "not left-continuous",
    (4, 7, "left", 1): "not left-continuous",
    (4, 7, "left", 2): "not left-continuous",
    (4, 7, "left", 3): "not left-continuous",
    (4, 7, "left", 4): "not left-continuous",
    (5, 1, "left", 1): "not left-continuous",
    (5, 1, "left", 3): "not left-continuous",
    (6, 1, "left", 1): "not left-continuous",
    (6, 2, "left", 1): "not left-continuous",
}


def printed_quandle(table: int, index: int) -> PrintedQuandle:
    for p in PRINTED_QUANDLES:
        if p.table == table and p.index == index:
            return p
    raise KeyError(f"no printed quandle {index} in table {table}")
