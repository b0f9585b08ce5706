"""Orders on a quandle that make the right (or left) multiplications
order-preserving.

For right multiplications the search runs over *pair orbits*: orbits of
ordered pairs ``(x, y)`` under ``(x, y) -> (x*z, y*z)``.  A strict order is
right-continuous exactly when its relation is a union of pair orbits, so the
engine only has to pick sets of orbits whose union is a strict order.  Pairs
inside a single quandle orbit can never be used: some inner automorphism maps
x to y, and iterating it closes a cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import OrderTooLarge, SingleOrbit, WrongOrbitShape
from .poset import (
    ORDER_ENUM_CAP,
    StrictOrder,
    _bits,
    _unchecked,
    enumerate_orders,
    format_edges,
    is_crosspartite,
    poset_invariant,
    poset_isomorphic,
)
from .quandle import (
    Quandle,
    inner_group,
    is_connected,
    is_latin,
    orbits,
    quandle_automorphisms,
    quandle_to_json,
)

Pair = tuple[int, int]

DEDUP_MODES = ("none", "iso", "iso_or_dual", "quandle_aut")
_DEDUP_ALIASES = {"iso-dual": "iso_or_dual", "iso_dual": "iso_or_dual", "quandle-aut": "quandle_aut"}


def normalize_dedup(mode: str) -> str:
    mode = _DEDUP_ALIASES.get(mode, mode)
    if mode not in DEDUP_MODES:
        raise ValueError(f"unknown dedup mode {mode!r}; choose from {', '.join(DEDUP_MODES)}")
    return mode


# predicates --------------------------------------------------------------------------

def is_right_continuous(q: Quandle, o: StrictOrder) -> bool:
    """x < y implies x*z < y*z for every z."""
    _same_size(q, o)
    up = o.up
    for z in range(q.n):
        col = q.column(z)
        for x in range(q.n):
            target = up[col[x]]
            for y in _bits(up[x]):
                if not target >> col[y] & 1:
                    return False
    return True


def is_left_continuous(q: Quandle, o: StrictOrder) -> bool:
    """x < y implies z*x <= z*y for every z."""
    _same_size(q, o)
    up = o.up
    for row in q.table:
        for x in range(q.n):
            zx = row[x]
            for y in _bits(up[x]):
                zy = row[y]
                if zx != zy and not up[zx] >> zy & 1:
                    return False
    return True


def right_violation(q: Quandle, o: StrictOrder) -> tuple[int, int, int] | None:
    """First (x, y, z) with x < y but not x*z < y*z."""
    _same_size(q, o)
    for x, y in o.pairs():
        for z in range(q.n):
            if not o.less(q.table[x][z], q.table[y][z]):
                return (x, y, z)
    return None


def left_violation(q: Quandle, o: StrictOrder) -> tuple[int, int, int] | None:
    """First (x, y, z) with x < y but neither z*x = z*y nor z*x < z*y."""
    _same_size(q, o)
    for x, y in o.pairs():
        for z in range(q.n):
            a, b = q.table[z][x], q.table[z][y]
            if a != b and not o.less(a, b):
                return (x, y, z)
    return None


def left_collapse_check(q: Quandle, o: StrictOrder) -> bool:
    """True iff every left multiplication is constant on each related pair."""
    _same_size(q, o)
    return all(row[x] == row[y] for row in q.table for x, y in o.pairs())


def _same_size(q: Quandle, o: StrictOrder) -> None:
    if q.n != o.n:
        raise ValueError(f"quandle has {q.n} points but the order has {o.n}")


# pair orbits ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairOrbit:
    pairs: tuple[Pair, ...]
    usable: bool
    blocks: tuple[int, int]

    @property
    def id(self) -> Pair:
        return self.pairs[0]

    def rows(self, n: int) -> tuple[int, ...]:
        up = [0] * n
        for x, y in self.pairs:
            up[x] |= 1 << y
        return tuple(up)

    def reverse_id(self) -> Pair:
        return min((y, x) for x, y in self.pairs)

    def __len__(self):
        return len(self.pairs)


@lru_cache(maxsize=4096)
def pair_orbits(q: Quandle) -> tuple[PairOrbit, ...]:
    """All diagonal orbits of ordered pairs of distinct points, sorted by
    least pair.  Orbits inside one quandle orbit are marked unusable."""
    n = q.n
    gens = [g.image for g in inner_group(q).generators]
    part = orbits(q)
    seen: set[Pair] = set()
    result = []
    for x in range(n):
        for y in range(n):
            if x == y or (x, y) in seen:
                continue
            members = {(x, y)}
            stack = [(x, y)]
            while stack:
                a, b = stack.pop()
                for g in gens:
                    p = (g[a], g[b])
                    if p not in members:
                        members.add(p)
                        stack.append(p)
            seen |= members
            bx, by = part.orbit_of[x], part.orbit_of[y]
            result.append(PairOrbit(tuple(sorted(members)), bx != by, (bx, by)))
    return tuple(result)


# the two enumeration routes ---------------------------------------------------------------

def right_orders(q: Quandle) -> list[StrictOrder]:
    """Every non-empty right-continuous strict order, via unions of pair orbits.

    Orbits are decided in order (exclude first, then include).  Including an
    orbit takes the transitive closure; the closure is again a union of
    orbits, and those orbits become included too.  A branch dies when the
    closure relates a pair both ways or needs an excluded or unusable orbit.
    """
    n = q.n
    orbs = pair_orbits(q)
    where: dict[Pair, int] = {}
    for k, orb in enumerate(orbs):
        for p in orb.pairs:
            where[p] = k
    usable = [k for k, orb in enumerate(orbs) if orb.usable]
    rows_of = [orb.rows(n) for orb in orbs]
    status = [0] * len(orbs)  # 0 open, 1 in, 2 out
    for k, orb in enumerate(orbs):
        if not orb.usable:
            status[k] = 2
    found: list[StrictOrder] = []

    def include(up: list[int], k: int) -> list[int] | None:
        new = [a | b for a, b in zip(up, rows_of[k])]
        for m in range(n):
            bit = 1 << m
            for i in range(n):
                if new[i] & bit:
                    new[i] |= new[m]
        for x in range(n):
            if new[x] >> x & 1:
                return None
            for y in _bits(new[x] & ~up[x]):
                j = where[(x, y)]
                if status[j] == 2:
                    return None
        return new

    def rec(pos: int, up: list[int]) -> None:
        while pos < len(usable) and status[usable[pos]] != 0:
            pos += 1
        if pos == len(usable):
            if any(up):
                found.append(_unchecked(n, up))
            return
        k = usable[pos]
        status[k] = 2
        rec(pos + 1, up)
        status[k] = 0
        new = include(up, k)
        if new is not None:
            touched = sorted({where[(x, y)] for x in range(n) for y in _bits(new[x] & ~up[x])})
            for j in touched:
                status[j] = 1
            rec(pos + 1, new)
            for j in touched:
                status[j] = 0

    rec(0, [0] * n)
    found.sort(key=StrictOrder.sort_key)
    return found


def right_orders_brute_force(q: Quandle, cap: int = ORDER_ENUM_CAP) -> list[StrictOrder]:
    """Oracle: filter every labelled order on n points."""
    found = [o for o in enumerate_orders(q.n, cap) if not o.is_empty() and is_right_continuous(q, o)]
    found.sort(key=StrictOrder.sort_key)
    return found


def left_orders(q: Quandle, cap: int = ORDER_ENUM_CAP) -> list[StrictOrder]:
    if q.n > cap:
        raise OrderTooLarge(q.n, cap, "left-continuity enumeration")
    found = [o for o in enumerate_orders(q.n, cap) if not o.is_empty() and is_left_continuous(q, o)]
    found.sort(key=StrictOrder.sort_key)
    return found


def is_union_of_pair_orbits(q: Quandle, o: StrictOrder) -> bool:
    """Every pair orbit lies either wholly inside or wholly outside o."""
    rel = o.pair_set()
    return all(rel.issuperset(orb.pairs) or rel.isdisjoint(orb.pairs) for orb in pair_orbits(q))


# deduplication --------------------------------------------------------------------------

def equivalence_classes(orders: Sequence[StrictOrder], mode: str, q: Quandle | None = None) -> list[list[int]]:
    """Partition indices of ``orders`` by the chosen equivalence; classes keep
    input order and are listed by their first member."""
    mode = normalize_dedup(mode)
    if mode == "none":
        return [[k] for k in range(len(orders))]
    if mode == "quandle_aut":
        if q is None:
            raise ValueError("quandle_aut dedup needs the quandle")
        auts = quandle_automorphisms(q)
        keyed: dict[tuple, list[int]] = {}
        for k, o in enumerate(orders):
            key = min(o.relabel(s).sort_key() for s in auts)
            keyed.setdefault(_freeze(key), []).append(k)
        return sorted(keyed.values())
    classes: list[list[int]] = []
    buckets: dict[tuple, list[int]] = {}
    for k, o in enumerate(orders):
        variants = [o] if mode == "iso" else [o, o.reverse()]
        key = min(poset_invariant(v) for v in variants)
        for c in buckets.setdefault(key, []):
            rep = orders[classes[c][0]]
            if any(poset_isomorphic(v, rep) is not None for v in variants):
                classes[c].append(k)
                break
        else:
            buckets[key].append(len(classes))
            classes.append([k])
    return classes


def _freeze(key):
    size, pairs = key
    return (size, tuple(pairs))


def dedup_orders(orders: Sequence[StrictOrder], mode: str, q: Quandle | None = None) -> list[StrictOrder]:
    return [orders[c[0]] for c in equivalence_classes(orders, mode, q)]


@dataclass
class ContinuityReport:
    quandle: Quandle
    side: str
    dedup: str
    orders: list[StrictOrder]
    iso_classes: list[list[int]]
    discrepancies: list[str] = field(default_factory=list)

    def __post_init__(self):
        check = is_right_continuous if self.side == "right" else is_left_continuous
        bad = [o for o in self.orders if not check(self.quandle, o)]
        if bad:
            raise AssertionError(f"report lists orders failing {self.side}-continuity: {bad}")

    def to_json(self) -> dict:
        return {
            "quandle": {"name": self.quandle.name, **quandle_to_json(self.quandle)},
            "side": self.side,
            "dedup": self.dedup,
            "orders": [[list(e) for e in o.edges()] for o in self.orders],
            "iso_classes": self.iso_classes,
            "discrepancies": self.discrepancies,
        }

    def to_text(self) -> str:
        title = self.quandle.name or f"quandle of order {self.quandle.n}"
        lines = [f"{title}: {self.side}-continuous orders (dedup={self.dedup}): {len(self.orders)}"]
        lines += [f"  {format_edges(o.edges())}" for o in self.orders]
        lines.append(f"  isomorphism classes: {len(self.iso_classes)}")
        lines += [f"  ! {d}" for d in self.discrepancies]
        return "\n".join(lines) + "\n"


def _report(q: Quandle, side: str, found: list[StrictOrder], dedup: str) -> ContinuityReport:
    dedup = normalize_dedup(dedup)
    kept = dedup_orders(found, dedup, q)
    return ContinuityReport(q, side, dedup, kept, equivalence_classes(kept, "iso"))


def enumerate_right_orders(q: Quandle, dedup: str = "none") -> ContinuityReport:
    return _report(q, "right", right_orders(q), dedup)


def enumerate_left_orders(q: Quandle, dedup: str = "none", cap: int = ORDER_ENUM_CAP) -> ContinuityReport:
    return _report(q, "left", left_orders(q, cap), dedup)


# constructions ------------------------------------------------------------------------------

def single_extra_orbit_order(q: Quandle) -> StrictOrder:
    """For orbit shape ``X1 + {a}``: the order with ``x < a`` for all x in X1.

    When both orbits are singletons, a is the larger point.
    """
    part = orbits(q)
    if len(part) != 2 or min(len(b) for b in part.orbits) != 1:
        raise WrongOrbitShape(f"need exactly two orbits, one a single point; got {list(part.orbits)}")
    first, second = part.orbits
    big, (a,) = (first, second) if len(second) == 1 else (second, first)
    return StrictOrder.from_pairs(q.n, [(x, a) for x in big])


def complete_npartite_order(q: Quandle, orbit_ranking: Sequence[int] | None = None) -> StrictOrder:
    """``x < y`` whenever x's orbit is ranked below y's.  ``orbit_ranking``
    lists orbit indices from bottom to top (default: index order)."""
    part = orbits(q)
    k = len(part)
    if k < 2:
        raise SingleOrbit("the complete multipartite order needs at least two orbits")
    ranking = list(range(k)) if orbit_ranking is None else list(orbit_ranking)
    if sorted(ranking) != list(range(k)):
        raise ValueError(f"orbit_ranking must be a permutation of range({k})")
    rank = {b: r for r, b in enumerate(ranking)}
    pairs = [(x, y) for x in range(q.n) for y in range(q.n)
             if rank[part.orbit_of[x]] < rank[part.orbit_of[y]]]
    return StrictOrder.from_pairs(q.n, pairs)


# theorem audit --------------------------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    applicable: bool = True
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if not self.applicable:
            status += " (vacuous)"
        return f"{self.name}: {status}" + (f" - {self.detail}" if self.detail else "")


@dataclass
class TheoremReport:
    quandle: Quandle
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        return {
            "quandle": self.quandle.name,
            "passed": self.passed,
            "checks": [vars(c) for c in self.checks],
        }


def verify_quandle_theorems(q: Quandle, left_cap: int = 5) -> TheoremReport:
    """Audit the structural claims about right/left-continuous orders on q.

    connected / latin: no right-continuous order exists.
    crosspartite: every right-continuous order only relates different orbits.
    orbit_count: right-continuous orders exist iff there are at least 2 orbits.
    complete_multipartite: the orbit-ranked order is right-continuous.
    left_collapse: left multiplications are constant on related pairs
    (only when ``q.n <= left_cap``).
    """
    part = orbits(q)
    right = right_orders(q)
    witness = format_edges(right[0].edges()) if right else ""
    checks = [
        Check("connected_no_right_order", not (is_connected(q) and right), is_connected(q),
              f"witness {witness}" if is_connected(q) and right else ""),
        Check("latin_no_right_order", not (is_latin(q) and right), is_latin(q),
              f"witness {witness}" if is_latin(q) and right else ""),
    ]
    bad = [o for o in right if not is_crosspartite(o, part)]
    checks.append(Check("crosspartite", not bad, bool(right),
                        f"witness {format_edges(bad[0].edges())}" if bad else f"{len(right)} orders"))
    checks.append(Check("orbit_count_iff", bool(right) == (len(part) > 1),
                        detail=f"{len(part)} orbits, {len(right)} right orders"))
    if len(part) > 1:
        o = complete_npartite_order(q)
        checks.append(Check("complete_multipartite", is_right_continuous(q, o)))
    else:
        checks.append(Check("complete_multipartite", True, False))
    if q.n <= left_cap:
        left = left_orders(q)
        bad = [o for o in left if not left_collapse_check(q, o)]
        checks.append(Check("left_collapse", not bad, bool(left),
                            f"witness {format_edges(bad[0].edges())}" if bad else f"{len(left)} orders"))
    return TheoremReport(q, checks)


def engine_matches_oracle(q: Quandle, cap: int = ORDER_ENUM_CAP) -> tuple[bool, list[StrictOrder], list[StrictOrder]]:
    """Compare the pair-orbit engine with the brute-force filter.

    Returns (agree, missing_from_engine, extra_in_engine).
    """
    engine = set(right_orders(q))
    oracle = set(right_orders_brute_force(q, cap))
    missing = sorted(oracle - engine, key=StrictOrder.sort_key)
    extra = sorted(engine - oracle, key=StrictOrder.sort_key)
    return not missing and not extra, missing, extra

