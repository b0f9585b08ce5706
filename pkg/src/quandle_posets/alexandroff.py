"""Finite topologies and their specialization orders.

Open sets are bitmasks over ``{0..n-1}``.  The minimal open set of x is the
up-set ``U_x = {w : x <= w}``, so ``x <= y`` iff ``U_y`` is contained in ``U_x``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InvalidTopology, NotT0, OrderTooLarge, ParseError
from .poset import StrictOrder, _bits

TOPOLOGY_ENUM_CAP = 4


def _mask(points: Iterable[int]) -> int:
    m = 0
    for x in points:
        m |= 1 << x
    return m


@dataclass(frozen=True)
class FiniteTopology:
    n: int
    opens: tuple[int, ...]

    def __post_init__(self):
        opens = tuple(sorted(set(self.opens)))
        object.__setattr__(self, "opens", opens)
        full = (1 << self.n) - 1
        family = set(opens)
        if 0 not in family:
            raise InvalidTopology("the empty set must be open")
        if full not in family:
            raise InvalidTopology("the whole space must be open")
        for u in opens:
            if u & ~full:
                raise InvalidTopology(f"open set {sorted(_bits(u))} has points outside [0,{self.n})")
        for i, u in enumerate(opens):
            for v in opens[i + 1:]:
                if u | v not in family:
                    raise InvalidTopology(f"union of {sorted(_bits(u))} and {sorted(_bits(v))} is not open")
                if u & v not in family:
                    raise InvalidTopology(f"intersection of {sorted(_bits(u))} and {sorted(_bits(v))} is not open")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> FiniteTopology:
        return cls(n, tuple(_mask(s) for s in sets))

    @classmethod
    def discrete(cls, n: int) -> FiniteTopology:
        return cls(n, tuple(range(1 << n)))

    @classmethod
    def indiscrete(cls, n: int) -> FiniteTopology:
        return cls(n, (0, (1 << n) - 1))

    def open_sets(self) -> list[set[int]]:
        return [set(_bits(u)) for u in self.opens]

    def __len__(self):
        return len(self.opens)

    @cached_property
    def minimal_opens(self) -> tuple[int, ...]:
        full = (1 << self.n) - 1
        result = []
        for x in range(self.n):
            m = full
            for u in self.opens:
                if u >> x & 1:
                    m &= u
            result.append(m)
        return tuple(result)


def minimal_open(t: FiniteTopology, x: int) -> set[int]:
    if not 0 <= x < t.n:
        raise IndexError(f"point {x} outside [0,{t.n})")
    return set(_bits(t.minimal_opens[x]))


def closed_complement(t: FiniteTopology, x: int) -> set[int]:
    """Complement of the minimal open set of x (a closed set)."""
    return set(range(t.n)) - minimal_open(t, x)


def strict_down_set(o: StrictOrder, x: int) -> set[int]:
    """``{v : v < x}``; differs from :func:`closed_complement` unless every
    point outside U_x lies below x."""
    return o.strict_down_set(x)


def order_to_topology(o: StrictOrder) -> FiniteTopology:
    """Up-closed sets of the order: all unions of the sets U_x."""
    minimal = [(1 << x) | o.up[x] for x in range(o.n)]
    family = {0}
    for m in minimal:
        family |= {u | m for u in family}
    return FiniteTopology(o.n, tuple(family))


def topology_to_order(t: FiniteTopology) -> StrictOrder:
    """Specialization order: ``x < y`` iff ``x != y`` and ``y`` is in ``U_x``."""
    mins = t.minimal_opens
    for x in range(t.n):
        for y in range(x + 1, t.n):
            if mins[x] == mins[y]:
                raise NotT0((x, y))
    return StrictOrder(t.n, tuple(m & ~(1 << x) for x, m in enumerate(mins)))


def is_T0(t: FiniteTopology) -> bool:
    return len(set(t.minimal_opens)) == t.n


def is_T1(t: FiniteTopology) -> bool:
    return all(m == 1 << x for x, m in enumerate(t.minimal_opens))


def enumerate_T0(n: int, cap: int = TOPOLOGY_ENUM_CAP) -> Iterator[FiniteTopology]:
    """All T0 topologies on n labelled points, found by scanning every family
    of proper non-empty subsets; it does not go through orders."""
    if n > cap:
        raise OrderTooLarge(n, cap, "topology enumeration")
    full = (1 << n) - 1
    middle = list(range(1, full))
    for choice in range(1 << len(middle)):
        family = {0, full}
        family.update(s for k, s in enumerate(middle) if choice >> k & 1)
        if not _closed(family):
            continue
        t = FiniteTopology(n, tuple(family))
        if is_T0(t):
            yield t


def _closed(family: set[int]) -> bool:
    items = list(family)
    for i, u in enumerate(items):
        for v in items[i + 1:]:
            if u | v not in family or u & v not in family:
                return False
    return True


def topology_to_json(t: FiniteTopology) -> dict:
    return {"n": t.n, "opens": [sorted(s) for s in t.open_sets()]}


def topology_from_json(text_or_obj) -> FiniteTopology:
    if isinstance(text_or_obj, str):
        try:
            data = json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    else:
        data = text_or_obj
    if not isinstance(data, dict) or not isinstance(data.get("n"), int):
        raise ParseError('expected an object with integer "n" and list "opens"')
    n = data["n"]
    opens = data.get("opens")
    if not isinstance(opens, list):
        raise ParseError('"opens" must be a list of point lists')
    for k, s in enumerate(opens):
        if not isinstance(s, list) or not all(isinstance(v, int) and 0 <= v < n for v in s):
            raise ParseError(f"opens[{k}] = {s!r} is not a list of points in [0,{n})")
    return FiniteTopology.from_sets(n, opens)
