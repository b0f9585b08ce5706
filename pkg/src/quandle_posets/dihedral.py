"""Right-continuous orders on the even dihedral quandles R_{2n}.

For odd x the order ``<_x`` puts each even point ``2y`` below the two odd
points ``2y - x`` and ``2y + x``.  ``<_x`` and ``<_{2n-x}`` coincide, so odd
x in ``[1, n]`` index all of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .continuity import equivalence_classes, right_orders
from .errors import NotCoprime, OrderTooLarge, XNotOdd
from .poset import StrictOrder, format_edges, is_order_isomorphism, poset_isomorphic
from .quandle import dihedral

DIHEDRAL_REPORT_CAP = 8


@dataclass(frozen=True)
class ChiOrder:
    n: int
    x: int
    order: StrictOrder

    @property
    def quandle_order(self) -> int:
        return 2 * self.n


def chi_order(n: int, x: int) -> ChiOrder:
    if n < 1:
        raise ValueError("n must be positive")
    if x % 2 == 0 or not 1 <= x <= 2 * n - 1:
        raise XNotOdd(x, n)
    m = 2 * n
    pairs = set()
    for y in range(n):
        even = 2 * y
        pairs.add((even, (even - x) % m))
        pairs.add((even, (even + x) % m))
    return ChiOrder(n, x, StrictOrder.from_pairs(m, pairs))


def distinct_chi_residues(n: int) -> list[int]:
    """Odd x with 1 <= x <= n; one per distinct order."""
    return list(range(1, n + 1, 2))


def affine_map(n: int, m: int, shift: int = -2) -> tuple[int, ...]:
    """k -> m*k + shift on Z_{2n}."""
    return tuple((m * k + shift) % (2 * n) for k in range(2 * n))


def affine_iso_check(n: int, m: int, target_x: int | None = None) -> bool:
    """Does ``k -> m*k - 2`` carry ``<_1`` onto ``<_target_x`` (default m)?"""
    if m % 2 == 0:
        raise XNotOdd(m, n)
    if math.gcd(m, n) != 1:
        raise NotCoprime(m, n)
    target = m if target_x is None else target_x
    return is_order_isomorphism(chi_order(n, 1).order, chi_order(n, target % (2 * n)).order,
                                affine_map(n, m))


def count_classes_formula(n: int) -> int:
    """1 + #{odd x : 1 <= x <= n, gcd(x, n) > 1} (upper bound read inclusively)."""
    if n < 2:
        raise ValueError("formula is stated for n >= 2")
    return 1 + sum(1 for x in distinct_chi_residues(n) if math.gcd(x, n) > 1)


@dataclass
class DihedralReport:
    n: int
    chi: list[ChiOrder]
    chi_classes: list[list[int]]
    formula_count: int
    engine_orders: list[StrictOrder]
    extra_orders: list[StrictOrder]
    notes: list[str] = field(default_factory=list)

    @property
    def chi_class_count(self) -> int:
        return len(self.chi_classes)

    @property
    def formula_matches(self) -> bool:
        return self.formula_count == self.chi_class_count

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "quandle": f"dihedral:{2 * self.n}",
            "formula_count": self.formula_count,
            "chi_class_count": self.chi_class_count,
            "distinct_chi_orders": len(self.chi),
            "chi_orders": [{"x": c.x, "edges": [list(e) for e in c.order.edges()]} for c in self.chi],
            "chi_classes": [[self.chi[k].x for k in cls] for cls in self.chi_classes],
            "engine_order_count": len(self.engine_orders),
            "extra_orders": [[list(e) for e in o.edges()] for o in self.extra_orders],
            "discrepancies": {
                "formula_vs_chi_classes": not self.formula_matches,
                "orders_beyond_chi_family": bool(self.extra_orders),
            },
            "notes": self.notes,
        }

    def to_text(self) -> str:
        lines = [f"R_{2 * self.n}: formula {self.formula_count}, chi classes {self.chi_class_count}, "
                 f"distinct chi orders {len(self.chi)}, engine orders {len(self.engine_orders)}"]
        for c in self.chi:
            lines.append(f"  <_{c.x}: {format_edges(c.order.edges())}")
        lines.append(f"  orders outside the chi family: {len(self.extra_orders)}")
        lines += [f"    {format_edges(o.edges())}" for o in self.extra_orders]
        lines += [f"  note: {t}" for t in self.notes]
        return "\n".join(lines) + "\n"


def dihedral_report(n: int, cap: int = DIHEDRAL_REPORT_CAP) -> DihedralReport:
    if n > cap:
        raise OrderTooLarge(n, cap, "dihedral report")
    if n < 2:
        raise ValueError("dihedral report needs n >= 2")
    chis = [chi_order(n, x) for x in distinct_chi_residues(n)]
    classes = equivalence_classes([c.order for c in chis], "iso")
    engine = right_orders(dihedral(2 * n))
    chi_set = {c.order for c in chis}
    extra = [o for o in engine if o not in chi_set]
    notes = ["odd x counted with 1 <= x <= n inclusive"]
    for cls in classes:
        if len(cls) > 1:
            xs = [chis[k].x for k in cls]
            notes.append(f"chi orders {xs} are isomorphic")
    missing = chi_set - set(engine)
    if missing:
        notes.append(f"{len(missing)} chi orders were not found by the engine")
    return DihedralReport(n, chis, classes, count_classes_formula(n), engine, extra, notes)


def chi_orders_isomorphic(n: int, x1: int, x2: int) -> tuple[int, ...] | None:
    return poset_isomorphic(chi_order(n, x1).order, chi_order(n, x2).order)
