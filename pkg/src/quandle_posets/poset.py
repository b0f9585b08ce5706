"""Strict partial orders on ``{0..n-1}``.

An order is stored as one bitmask per point: bit ``y`` of ``up[x]`` is set
iff ``x < y``.  The reflexive part is implicit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CycleDetected, InvalidOrder, OrderTooLarge, ParseError

Pair = tuple[int, int]

ORDER_ENUM_CAP = 6


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class StrictOrder:
    n: int
    up: tuple[int, ...]

    def __post_init__(self):
        if len(self.up) != self.n:
            raise InvalidOrder(f"expected {self.n} rows, got {len(self.up)}")
        full = (1 << self.n) - 1
        for x, row in enumerate(self.up):
            if row & ~full:
                raise InvalidOrder(f"row {x} references points outside [0,{self.n})")
            if row >> x & 1:
                raise InvalidOrder(f"not irreflexive at {x}")
            for y in _bits(row):
                if self.up[y] >> x & 1:
                    raise InvalidOrder(f"not antisymmetric at ({x},{y})")
                if self.up[y] & ~row:
                    z = next(_bits(self.up[y] & ~row))
                    raise InvalidOrder(f"not transitive: {x}<{y}<{z} but not {x}<{z}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> StrictOrder:
        """Build from an already transitively closed relation."""
        up = [0] * n
        for x, y in pairs:
            up[x] |= 1 << y
        return cls(n, tuple(up))

    @classmethod
    def from_matrix(cls, rel: Sequence[Sequence[bool]]) -> StrictOrder:
        n = len(rel)
        return cls(n, tuple(sum(1 << y for y in range(n) if rel[x][y]) for x in range(n)))

    @classmethod
    def empty(cls, n: int) -> StrictOrder:
        return cls(n, (0,) * n)

    def less(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        return self.less(x, y) or self.less(y, x)

    @cached_property
    def down(self) -> tuple[int, ...]:
        down = [0] * self.n
        for x, row in enumerate(self.up):
            for y in _bits(row):
                down[y] |= 1 << x
        return tuple(down)

    @property
    def rel(self) -> list[list[bool]]:
        return [[self.less(x, y) for y in range(self.n)] for x in range(self.n)]

    def pairs(self) -> list[Pair]:
        return [(x, y) for x in range(self.n) for y in _bits(self.up[x])]

    def pair_set(self) -> frozenset[Pair]:
        return frozenset(self.pairs())

    def __len__(self):
        return sum(bin(row).count("1") for row in self.up)

    def is_empty(self) -> bool:
        return not any(self.up)

    def up_set(self, x: int) -> set[int]:
        """Points w with x <= w."""
        return {x, *_bits(self.up[x])}

    def strict_down_set(self, x: int) -> set[int]:
        return set(_bits(self.down[x]))

    def reverse(self) -> StrictOrder:
        return StrictOrder(self.n, self.down)

    def relabel(self, sigma: Sequence[int]) -> StrictOrder:
        """Transport along sigma: x < y becomes sigma[x] < sigma[y]."""
        up = [0] * self.n
        for x, y in self.pairs():
            up[sigma[x]] |= 1 << sigma[y]
        return StrictOrder(self.n, tuple(up))

    def sort_key(self) -> tuple:
        return (len(self), self.pairs())

    def edges(self) -> list[Pair]:
        """Sorted covering pairs (the transitive reduction)."""
        return list(transitive_reduction(self).edges)

    def __repr__(self):
        return f"StrictOrder(n={self.n}, {self.edges()})"


@dataclass(frozen=True)
class HasseDiagram:
    n: int
    edges: tuple[Pair, ...]

    def to_dot(self, name: str = "poset") -> str:
        """Graphviz digraph drawn bottom-to-top, one arrow per covering pair."""
        lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
        lines += [f"  {x};" for x in range(self.n)]
        lines += [f"  {x} -> {y};" for x, y in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def _closure_rows(n: int, edges: Iterable[Pair]) -> list[int]:
    up = [0] * n
    for x, y in edges:
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"edge ({x},{y}) outside [0,{n})")
        up[x] |= 1 << y
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    return up


def order_from_edges(n: int, edges: Iterable[Pair]) -> StrictOrder:
    """Transitive closure of ``edges``; raises CycleDetected if the closure
    relates two points both ways (or a point to itself)."""
    up = _closure_rows(n, edges)
    for x in range(n):
        if up[x] >> x & 1:
            partner = next((y for y in _bits(up[x]) if y != x and up[y] >> x & 1), x)
            raise CycleDetected((x, partner))
    return StrictOrder(n, tuple(up))


def transitive_reduction(o: StrictOrder) -> HasseDiagram:
    edges = []
    for x in range(o.n):
        succ = o.up[x]
        above = 0
        for z in _bits(succ):
            above |= o.up[z]
        edges += [(x, y) for y in _bits(succ & ~above)]
    return HasseDiagram(o.n, tuple(sorted(edges)))


def is_connected_poset(o: StrictOrder) -> bool:
    if o.n <= 1:
        return True
    comp = [o.up[x] | o.down[x] for x in range(o.n)]
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for x in _bits(frontier):
            nxt |= comp[x]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << o.n) - 1


def is_crosspartite(o: StrictOrder, partition) -> bool:
    """True iff every related pair lies in two different blocks.

    ``partition`` is an OrbitPartition or any object with ``orbit_of``.
    """
    block = partition.orbit_of
    return all(block[x] != block[y] for x, y in o.pairs())


def is_chain(o: StrictOrder, c: Iterable[int]) -> bool:
    pts = sorted(set(c))
    return all(o.comparable(a, b) for i, a in enumerate(pts) for b in pts[i + 1:])


def maximal_chains(o: StrictOrder) -> list[tuple[int, ...]]:
    """Inclusion-maximal chains, each listed bottom to top; these are the
    Hasse-diagram paths from a minimal to a maximal point."""
    hasse = transitive_reduction(o)
    covers: dict[int, list[int]] = {x: [] for x in range(o.n)}
    for x, y in hasse.edges:
        covers[x].append(y)
    chains: list[tuple[int, ...]] = []

    def walk(path):
        nxt = covers[path[-1]]
        if not nxt:
            chains.append(tuple(path))
            return
        for y in nxt:
            walk(path + [y])

    for x in range(o.n):
        if not o.down[x]:
            walk([x])
    return sorted(chains)


# isomorphism ------------------------------------------------------------------------

def _poset_isomorphisms(o1: StrictOrder, o2: StrictOrder) -> Iterator[tuple[int, ...]]:
    n = o1.n
    if o2.n != n or len(o1) != len(o2):
        return

    def degrees(o):
        return [(bin(o.up[x]).count("1"), bin(o.down[x]).count("1")) for x in range(n)]

    d1, d2 = degrees(o1), degrees(o2)
    if sorted(d1) != sorted(d2):
        return
    f = [-1] * n
    used = 0

    def search(x):
        nonlocal used
        if x == n:
            yield tuple(f)
            return
        for y in range(n):
            if used >> y & 1 or d1[x] != d2[y]:
                continue
            ok = True
            for w in range(x):
                fw = f[w]
                if o1.less(w, x) != o2.less(fw, y) or o1.less(x, w) != o2.less(y, fw):
                    ok = False
                    break
            if ok:
                f[x] = y
                used |= 1 << y
                yield from search(x + 1)
                used &= ~(1 << y)
                f[x] = -1

    yield from search(0)


def poset_isomorphic(o1: StrictOrder, o2: StrictOrder) -> tuple[int, ...] | None:
    """First bijection f (in lexicographic search order) with
    ``x < y  iff  f(x) < f(y)``, or None."""
    return next(_poset_isomorphisms(o1, o2), None)


def is_order_isomorphism(o1: StrictOrder, o2: StrictOrder, f: Sequence[int]) -> bool:
    n = o1.n
    if sorted(f) != list(range(n)) or o2.n != n:
        return False
    return all(o1.less(x, y) == o2.less(f[x], f[y]) for x in range(n) for y in range(n))


def poset_invariant(o: StrictOrder) -> tuple:
    """Cheap isomorphism invariant, used to bucket before exact tests."""
    degs = sorted((bin(o.up[x]).count("1"), bin(o.down[x]).count("1")) for x in range(o.n))
    return (o.n, len(o), tuple(degs))


# enumeration -------------------------------------------------------------------------

def _up_closed_subsets(o: StrictOrder) -> list[int]:
    return [s for s in range(1 << o.n) if all(o.up[x] & ~s == 0 for x in _bits(s))]


def _down_closed_subsets(o: StrictOrder) -> list[int]:
    return [s for s in range(1 << o.n) if all(o.down[x] & ~s == 0 for x in _bits(s))]


def enumerate_orders(n: int, cap: int = ORDER_ENUM_CAP) -> Iterator[StrictOrder]:
    """Every labelled strict order on n points, each exactly once.

    Orders on ``{0..k}`` arise from an order on ``{0..k-1}`` by choosing the
    down-set D and up-set U of the new point k, with every element of D
    already below every element of U.
    """
    if n > cap:
        raise OrderTooLarge(n, cap, "order enumeration")
    if n < 0:
        raise ValueError("n must be non-negative")

    def extend(o: StrictOrder) -> Iterator[StrictOrder]:
        k = o.n
        ups = _up_closed_subsets(o)
        for dset in _down_closed_subsets(o):
            allowed = (1 << k) - 1
            for d in _bits(dset):
                allowed &= o.up[d]
            bit = 1 << k
            for uset in ups:
                if uset & ~allowed:
                    continue
                up = [row | (bit if dset >> x & 1 else 0) for x, row in enumerate(o.up)]
                up.append(uset)
                yield _unchecked(k + 1, up)

    def rec(o: StrictOrder) -> Iterator[StrictOrder]:
        if o.n == n:
            yield o
            return
        for bigger in extend(o):
            yield from rec(bigger)

    yield from rec(StrictOrder(0, ()))


def _unchecked(n: int, up: Sequence[int]) -> StrictOrder:
    """Skip validation for orders that are valid by construction."""
    o = object.__new__(StrictOrder)
    object.__setattr__(o, "n", n)
    object.__setattr__(o, "up", tuple(up))
    return o


# serialization ----------------------------------------------------------------------

def order_to_json(o: StrictOrder) -> dict:
    return {"n": o.n, "edges": [list(e) for e in o.edges()]}


def order_from_json(text_or_obj) -> StrictOrder:
    if isinstance(text_or_obj, str):
        try:
            data = json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    else:
        data = text_or_obj
    if not isinstance(data, dict) or not isinstance(data.get("n"), int):
        raise ParseError('expected an object with integer "n" and list "edges"')
    n = data["n"]
    edges = data.get("edges", [])
    pairs = []
    for k, e in enumerate(edges):
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(v, int) and 0 <= v < n for v in e)):
            raise ParseError(f"edges[{k}] = {e!r} is not a pair of points in [0,{n})")
        pairs.append((e[0], e[1]))
    return order_from_edges(n, pairs)


def format_edges(edges: Iterable[Pair]) -> str:
    """Render an edge list as ``((a,b),(c,d))``."""
    return "(" + ",".join(f"({a},{b})" for a, b in edges) + ")"
