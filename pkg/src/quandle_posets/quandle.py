"""Finite quandles stored as Cayley tables.

Convention: ``table[i][j] == i * j``.  Columns are the right multiplications
``R_j`` and must be permutations; rows are the left multiplications ``L_i``
and need not be.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    NotAUnit,
    NotDistributive,
    NotIdempotent,
    OrderTooLarge,
    OutOfRange,
    ParseError,
    RightNotBijective,
)

Table = tuple[tuple[int, ...], ...]

QUANDLE_ENUM_CAP = 6


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{0..n-1}``; ``(p * q)(x) == p(q(x))``."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(self.image[x] for x in other.image))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.image))

    def cycle_type(self) -> tuple[int, ...]:
        seen = [False] * self.n
        lengths = []
        for start in range(self.n):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self.image[x]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def __repr__(self):
        return f"Permutation({self.image})"


@dataclass(frozen=True)
class PermGroup:
    """A permutation group given by generators, with its elements listed in
    breadth-first order from the identity.  ``words[k]`` is a shortest
    generator word (indices into ``generators``) for ``elements[k]``, read
    right to left: word ``(a, b)`` is ``generators[a] * generators[b]``."""

    n: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]
    words: tuple[tuple[int, ...], ...]

    @classmethod
    def generated_by(cls, n: int, generators: Sequence[Permutation]) -> PermGroup:
        identity = Permutation.identity(n)
        elements = [identity]
        words: list[tuple[int, ...]] = [()]
        index = {identity: 0}
        queue = deque([0])
        while queue:
            k = queue.popleft()
            g = elements[k]
            for a, gen in enumerate(generators):
                h = gen * g
                if h not in index:
                    index[h] = len(elements)
                    elements.append(h)
                    words.append((a,) + words[k])
                    queue.append(index[h])
        return cls(n, tuple(generators), tuple(elements), tuple(words))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements)

    def word_of(self, p: Permutation) -> tuple[int, ...]:
        return self.words[self.elements.index(p)]


@dataclass(frozen=True)
class OrbitPartition:
    """Orbits listed by increasing least element; ``orbit_of[x]`` is the
    position of x's orbit in that list."""

    n: int
    orbit_of: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, n: int, blocks) -> OrbitPartition:
        blocks = sorted(tuple(sorted(b)) for b in blocks if b)
        orbit_of = [-1] * n
        for k, block in enumerate(blocks):
            for x in block:
                orbit_of[x] = k
        if -1 in orbit_of or sum(map(len, blocks)) != n:
            raise ValueError("blocks do not partition the point set")
        return cls(n, tuple(orbit_of), tuple(blocks))

    def __len__(self):
        return len(self.orbits)

    def block(self, x: int) -> tuple[int, ...]:
        return self.orbits[self.orbit_of[x]]

    def as_sets(self) -> list[set[int]]:
        return [set(b) for b in self.orbits]


@dataclass(frozen=True)
class Quandle:
    """A validated finite quandle.  Construction checks all three axioms and
    raises the matching :class:`~quandle_posets.errors.QuandleAxiomError`."""

    table: Table
    name: str = field(default="", compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", table)
        _check_axioms(table)

    @property
    def n(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.table)

    def relabel(self, sigma: Sequence[int]) -> Quandle:
        """The quandle transported along ``sigma`` (old label -> new label)."""
        n = self.n
        inv = [0] * n
        for old, new in enumerate(sigma):
            inv[new] = old
        return Quandle(tuple(
            tuple(sigma[self.table[inv[i]][inv[j]]] for j in range(n)) for i in range(n)
        ), name=self.name)

    def __str__(self):
        return "\n".join(" ".join(map(str, row)) for row in self.table)


def _check_axioms(table: Table) -> None:
    n = len(table)
    if n == 0:
        raise ValueError("a quandle needs at least one element")
    for i, row in enumerate(table):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise OutOfRange(i, j, v, n)
    for i in range(n):
        if table[i][i] != i:
            raise NotIdempotent(i, table[i][i])
    for j in range(n):
        if len({table[i][j] for i in range(n)}) != n:
            raise RightNotBijective(j)
    for i in range(n):
        for j in range(n):
            ij = table[i][j]
            for k in range(n):
                if table[ij][k] != table[table[i][k]][table[j][k]]:
                    raise NotDistributive(i, j, k)


def validate_quandle(n: int, table, name: str = "") -> Quandle:
    """Check shape and axioms of an ``n x n`` table and return the quandle."""
    rows = [list(r) for r in table]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"table must be {n}x{n}")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise OutOfRange(i, j, v, n)
    return Quandle(tuple(tuple(r) for r in rows), name=name)


# multiplications, group, orbits ----------------------------------------------

def right_mult(q: Quandle, y: int) -> Permutation:
    if not 0 <= y < q.n:
        raise IndexError(f"point {y} outside [0,{q.n})")
    return Permutation(q.column(y))


def left_mult(q: Quandle, y: int) -> tuple[int, ...]:
    if not 0 <= y < q.n:
        raise IndexError(f"point {y} outside [0,{q.n})")
    return q.table[y]


@lru_cache(maxsize=4096)
def inner_group(q: Quandle) -> PermGroup:
    gens = []
    for y in range(q.n):
        r = right_mult(q, y)
        if r not in gens:
            gens.append(r)
    return PermGroup.generated_by(q.n, gens)


@lru_cache(maxsize=4096)
def orbits(q: Quandle) -> OrbitPartition:
    n = q.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(n):
            a, b = find(i), find(q.table[i][j])
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, list[int]] = {}
    for x in range(n):
        blocks.setdefault(find(x), []).append(x)
    return OrbitPartition.from_blocks(n, blocks.values())


def is_connected(q: Quandle) -> bool:
    return len(orbits(q)) == 1


def is_latin(q: Quandle) -> bool:
    return all(len(set(row)) == q.n for row in q.table)


# constructors ------------------------------------------------------------------

def dihedral(m: int) -> Quandle:
    """R_m: Z_m with ``x * y = 2y - x``."""
    if m < 1:
        raise ValueError("dihedral quandle needs m >= 1")
    return Quandle(tuple(tuple((2 * j - i) % m for j in range(m)) for i in range(m)),
                   name=f"dihedral:{m}")


def trivial(n: int) -> Quandle:
    if n < 1:
        raise ValueError("trivial quandle needs n >= 1")
    return Quandle(tuple(tuple(i for _ in range(n)) for i in range(n)), name=f"trivial:{n}")


def alexander(n: int, t: int) -> Quandle:
    """Z_n with ``x * y = t x + (1 - t) y``; t must be a unit mod n."""
    if n < 1:
        raise ValueError("alexander quandle needs n >= 1")
    if math.gcd(t, n) != 1:
        raise NotAUnit(t, n)
    return Quandle(tuple(tuple((t * i + (1 - t) * j) % n for j in range(n)) for i in range(n)),
                   name=f"alexander:{n}:{t}")


# isomorphism ---------------------------------------------------------------------

@lru_cache(maxsize=16384)
def _element_invariants(q: Quandle) -> tuple[tuple, ...]:
    parts = orbits(q)
    return tuple(
        (right_mult(q, x).cycle_type(), len(set(q.table[x])), len(parts.block(x)))
        for x in range(q.n)
    )


def _isomorphisms(q1: Quandle, q2: Quandle) -> Iterator[tuple[int, ...]]:
    n = q1.n
    if q2.n != n:
        return
    inv1 = _element_invariants(q1)
    inv2 = _element_invariants(q2)
    if sorted(inv1) != sorted(inv2):
        return
    t1, t2 = q1.table, q2.table
    sigma = [-1] * n
    used = [False] * n
    assigned: list[int] = []

    def assign(x, y):
        # set sigma(x)=y and propagate sigma(a*b) = sigma(a)*sigma(b)
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            if sigma[a] != -1:
                if sigma[a] != b:
                    return False
                continue
            if used[b] or inv1[a] != inv2[b]:
                return False
            sigma[a] = b
            used[b] = True
            assigned.append(a)
            for c in assigned:
                sc = sigma[c]
                stack.append((t1[a][c], t2[b][sc]))
                stack.append((t1[c][a], t2[sc][b]))
        return True

    def undo(mark):
        while len(assigned) > mark:
            a = assigned.pop()
            used[sigma[a]] = False
            sigma[a] = -1

    def search(x):
        while x < n and sigma[x] != -1:
            x += 1
        if x == n:
            yield tuple(sigma)
            return
        for y in range(n):
            if used[y]:
                continue
            mark = len(assigned)
            if assign(x, y):
                yield from search(x + 1)
            undo(mark)

    yield from search(0)


def quandle_isomorphic(q1: Quandle, q2: Quandle) -> tuple[int, ...] | None:
    """An isomorphism ``sigma`` with ``sigma(i*j) = sigma(i)*sigma(j)``, or None."""
    return next(_isomorphisms(q1, q2), None)


@lru_cache(maxsize=1024)
def quandle_automorphisms(q: Quandle) -> tuple[tuple[int, ...], ...]:
    return tuple(_isomorphisms(q, q))


def canonical_form(q: Quandle) -> Table:
    """Lexicographically least relabelled table (row-major order).

    Relabelings are scanned in order; each candidate is abandoned at the first
    cell where it exceeds the best table found so far.
    """
    n = q.n
    t = q.table
    best: list[int] | None = None
    for inv in itertools.permutations(range(n)):
        sigma = [0] * n
        for new, old in enumerate(inv):
            sigma[old] = new
        cand: list[int] = []
        tied = best is not None
        worse = False
        for i in range(n):
            ti = t[inv[i]]
            for j in range(n):
                v = sigma[ti[inv[j]]]
                if tied:
                    b = best[len(cand)]
                    if v > b:
                        worse = True
                        break
                    if v < b:
                        tied = False
                cand.append(v)
            if worse:
                break
        if not worse and (best is None or cand < best):
            best = cand
    assert best is not None
    return tuple(tuple(best[i * n:(i + 1) * n]) for i in range(n))


# enumeration -------------------------------------------------------------------

def _labeled_quandles(n: int) -> Iterator[Table]:
    """Every quandle structure on {0..n-1}, built column by column.

    Right distributivity is ``R_z R_y = R_{R_z(y)} R_z``; if an earlier column
    z moves the new point k onto a known column w, then R_k = R_z^-1 R_w R_z is
    forced.
    """
    cols: list[tuple[int, ...] | None] = [None] * n
    inverses: list[tuple[int, ...] | None] = [None] * n
    free = [[p for p in itertools.permutations(range(n)) if p[k] == k] for k in range(n)]

    def inverse(p):
        inv = [0] * n
        for a, b in enumerate(p):
            inv[b] = a
        return tuple(inv)

    def consistent(k):
        for z in range(k + 1):
            rz = cols[z]
            for y in range(k + 1):
                w = rz[y]
                if w > k or (k not in (z, y, w)):
                    continue
                ry, rw = cols[y], cols[w]
                for x in range(n):
                    if rz[ry[x]] != rw[rz[x]]:
                        return False
        return True

    def candidates(k):
        for z in range(k):
            w = cols[z][k]
            if w < k:
                rz, rzi, rw = cols[z], inverses[z], cols[w]
                forced = tuple(rzi[rw[rz[x]]] for x in range(n))
                return [forced] if forced[k] == k else []
        return free[k]

    def rec(k):
        if k == n:
            yield tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
            return
        for p in candidates(k):
            cols[k] = p
            inverses[k] = inverse(p)
            if consistent(k):
                yield from rec(k + 1)
        cols[k] = None
        inverses[k] = None

    yield from rec(0)


def _quandle_invariant(q: Quandle) -> tuple:
    return tuple(sorted(_element_invariants(q)))


def enumerate_quandles(n: int, cap: int = QUANDLE_ENUM_CAP) -> list[Quandle]:
    """Pairwise non-isomorphic quandles of order n, each in canonical form,
    sorted by canonical table."""
    if n > cap:
        raise OrderTooLarge(n, cap, "quandle enumeration")
    if n < 1:
        return []
    buckets: dict[tuple, list[Quandle]] = {}
    for table in _labeled_quandles(n):
        q = Quandle(table)
        reps = buckets.setdefault(_quandle_invariant(q), [])
        if not any(quandle_isomorphic(q, r) is not None for r in reps):
            reps.append(q)
    canon = sorted(canonical_form(q) for reps in buckets.values() for q in reps)
    return [Quandle(t, name=f"Q{n}.{k}") for k, t in enumerate(canon, 1)]


# serialization ---------------------------------------------------------------------

def _int_token(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, col) from None


def parse_quandle_text(text: str, name: str = "") -> Quandle:
    """Parse ``n`` followed by n rows of n integers (row i lists i*0 .. i*(n-1))."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input", 1, 1)
    head = lines[0].split()
    if len(head) != 1:
        raise ParseError("first line must hold only the order n", 1, 1)
    n = _int_token(head[0], 1, lines[0].index(head[0]) + 1)
    if n < 1:
        raise ParseError(f"order must be positive, got {n}", 1, 1)
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}", len(lines), None)
    rows = []
    for lineno, raw in enumerate(lines[1:], start=2):
        row = []
        pos = 0
        for tok in raw.split():
            col = raw.index(tok, pos) + 1
            pos = col - 1 + len(tok)
            v = _int_token(tok, lineno, col)
            if not 0 <= v < n:
                raise ParseError(f"entry {v} outside [0,{n})", lineno, col)
            row.append(v)
        if len(row) != n:
            raise ParseError(f"expected {n} entries, found {len(row)}", lineno, len(raw) + 1)
        rows.append(row)
    return validate_quandle(n, rows, name=name)


def parse_quandle_json(text: str, name: str = "") -> Quandle:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "n" not in data or "table" not in data:
        raise ParseError('expected an object with keys "n" and "table"', 1, 1)
    n, table = data["n"], data["table"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(f'"n" must be a positive integer, got {n!r}')
    if not isinstance(table, list) or len(table) != n:
        raise ParseError(f'"table" must be a list of {n} rows')
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"table row {i} must be a list of {n} integers", i + 1, None)
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise ParseError(f"table[{i}][{j}] = {v!r} is not an integer in [0,{n})", i + 1, j + 1)
    return validate_quandle(n, table, name=name or str(data.get("name", "")))


def quandle_to_text(q: Quandle) -> str:
    return f"{q.n}\n{q}\n"


def quandle_to_json(q: Quandle) -> dict:
    return {"n": q.n, "table": [list(r) for r in q.table]}
