"""Property suite behind ``quandle-posets verify``.

Each check carries a name, a pass flag and a short detail line; failures
carry the first witness found.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .alexandroff import enumerate_T0, order_to_topology, topology_to_order
from .continuity import (
    Check,
    complete_npartite_order,
    engine_matches_oracle,
    is_right_continuous,
    verify_quandle_theorems,
)
from .dihedral import affine_iso_check, chi_order, dihedral_report
from .poset import enumerate_orders, format_edges
from .quandle import Quandle, dihedral, enumerate_quandles, orbits
from .reproduce import reproduce_tables

QUANDLE_AUDIT_CAP = 5
DIHEDRAL_AUDIT_CAP = 8
T0_COUNT_CAP = 4


@dataclass
class AuditReport:
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [c.line() for c in self.checks]
        lines += [f"note: {n}" for n in self.notes]
        lines.append("RESULT: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [vars(c) for c in self.checks], "notes": self.notes}


def _over(name: str, items, predicate, describe) -> Check:
    """Passes when predicate holds for every item; otherwise report the first failure."""
    count = 0
    for item in items:
        count += 1
        if not predicate(item):
            return Check(name, False, detail=f"witness {describe(item)}")
    return Check(name, True, count > 0, f"{count} cases")


def audit_quandles(quandles: list[Quandle]) -> list[Check]:
    reports = [verify_quandle_theorems(q) for q in quandles]
    checks = []
    for name in ("connected_no_right_order", "latin_no_right_order", "crosspartite",
                 "orbit_count_iff", "complete_multipartite", "left_collapse"):
        bad = [(r.quandle, c) for r in reports for c in r.checks if c.name == name and not c.passed]
        applicable = sum(1 for r in reports for c in r.checks if c.name == name and c.applicable)
        if bad:
            q, c = bad[0]
            checks.append(Check(name, False, detail=f"{q.name} {q.table}: {c.detail}"))
        else:
            checks.append(Check(name, True, applicable > 0, f"{applicable} non-vacuous of {len(reports)} quandles"))

    def agree(q):
        return engine_matches_oracle(q)[0]

    checks.append(_over("engine_equals_brute_force", quandles, agree, lambda q: f"{q.name} {q.table}"))
    return checks


def audit_dihedral(max_n: int) -> list[Check]:
    ns = list(range(2, max_n + 1))
    checks = []
    counts = []
    for n in ns:
        r = dihedral_report(n, cap=max(max_n, n))
        counts.append((n, r.formula_count, r.chi_class_count))
    bad = [c for c in counts if c[1] != c[2]]
    checks.append(Check("dihedral_class_count_formula", not bad, bool(ns),
                        f"n=2..{max_n}: " + ",".join(str(c[2]) for c in counts) if not bad
                        else f"witness n={bad[0][0]}: formula {bad[0][1]}, classes {bad[0][2]}"))
    powers = [n for n in ns if n & (n - 1) == 0]
    bad = [c for c in counts if c[0] in powers and c[2] != 1]
    checks.append(Check("dihedral_power_of_two_unique", not bad, bool(powers),
                        f"n in {powers}" if not bad else f"witness n={bad[0][0]}"))
    checks.append(_over("dihedral_complete_bipartite", ns,
                        lambda n: is_right_continuous(dihedral(2 * n), complete_npartite_order(dihedral(2 * n))),
                        lambda n: f"R_{2 * n}"))
    checks.append(_over("dihedral_chi_right_continuous",
                        [(n, x) for n in ns for x in range(1, 2 * n, 2)],
                        lambda nx: is_right_continuous(dihedral(2 * nx[0]), chi_order(*nx).order),
                        lambda nx: f"n={nx[0]} x={nx[1]}"))
    affine = [(n, 3) for n in (4, 5) if n <= max_n]
    checks.append(_over("affine_3k_minus_2", affine, lambda nm: affine_iso_check(*nm),
                        lambda nm: f"n={nm[0]} m={nm[1]}"))
    return checks


def audit_alexandroff(max_n: int) -> list[Check]:
    round_n = min(max_n, 5)
    orders = [o for n in range(round_n + 1) for o in enumerate_orders(n)]
    checks = [_over("order_topology_round_trip", orders,
                    lambda o: topology_to_order(order_to_topology(o)) == o,
                    lambda o: f"n={o.n} {format_edges(o.edges())}")]
    count_n = min(max_n, T0_COUNT_CAP)
    bad = None
    counts = []
    for n in range(1, count_n + 1):
        a = sum(1 for _ in enumerate_T0(n))
        b = sum(1 for _ in enumerate_orders(n))
        counts.append(a)
        if a != b and bad is None:
            bad = f"n={n}: {a} T0 topologies vs {b} orders"
    checks.append(Check("t0_count_equals_order_count", bad is None, count_n > 0,
                        bad or f"n=1..{count_n}: {counts}"))
    return checks


def run_audit(max_order: int = QUANDLE_AUDIT_CAP, extra: list[Quandle] | None = None,
              dihedral_n: int = DIHEDRAL_AUDIT_CAP, tables: bool = True) -> AuditReport:
    report = AuditReport()
    quandles = [q for n in range(1, min(max_order, QUANDLE_AUDIT_CAP) + 1) for q in enumerate_quandles(n)]
    quandles += extra or []
    report.checks += audit_quandles(quandles)
    report.checks += audit_dihedral(dihedral_n)
    report.checks += audit_alexandroff(max_order)
    multi = [q for q in quandles if len(orbits(q)) > 1]
    report.notes.append(f"{len(quandles)} quandles audited, {len(multi)} with more than one orbit; "
                        f"dihedral R_4..R_{2 * dihedral_n}")
    if tables:
        t = reproduce_tables()
        report.checks.append(Check("table_diff", t.ok, detail=f"{len(t.entries)} printed entries, "
                                   f"{len(t.known())} known discrepancies, {len(t.failures())} unexpected"))
        for e in t.known():
            report.notes.append(f"known discrepancy {e.quandle} {e.side} #{e.entry} {e.printed}: {e.reason}")
    return report
