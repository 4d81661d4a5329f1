"""Exhaustive small-graph classification and family parameter scans.

enumerate_cubic generates connected cubic graphs up to isomorphism by edge
augmentation: each step completes the adjacency of the first deficient
vertex, intermediate states are deduplicated by canonical form, and fresh
(still isolated) vertices are interchangeable so only prefix choices among
them are explored.  classify_corpus runs the solver as ground truth and
cross-checks the advisory evidence (precheck, forbidden patterns, bridges,
Tait colorability) against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .balance import (
    BudgetExhausted,
    DEFAULT_BUDGET,
    is_3_balanced,
    order_precheck,
    solve_3_balanced,
)
from .cubic import forbidden_scan, tait_coloring_exists
from .families import (
    BadParamsError,
    gen_pappus,
    gen_petersen,
    mobius_ladder,
)
from .graphs import (
    Graph,
    canonical_form,
    emit_graph6,
    from_edges,
    graph_from_canonical,
    is_connected,
    read_graph6,
)


class BadNError(ValueError):
    """Enumeration order outside the supported even range."""


def enumerate_cubic(n: int, _reverse: bool = False) -> list[Graph]:
    """All connected cubic graphs on n vertices up to isomorphism.

    Supported for even 4 <= n <= 14.  The _reverse flag flips the
    augmentation order; results must not depend on it (used as a
    self-check).  Returned sorted by canonical graph6 string.
    """
    if n % 2 or not 4 <= n <= 14:
        raise BadNError(f"need even n with 4 <= n <= 14, got {n}")
    # Root state: vertex 0 completed against the first three fresh vertices.
    root = from_edges(n, [(0, 1), (0, 2), (0, 3)])
    states = {_support_key(root): root}
    finished: set[bytes] = set()
    while states:
        next_states: dict[bytes, Graph] = {}
        for g in states.values():
            degs = g.degrees()
            u = next((v for v in range(n) if degs[v] < 3), None)
            if u is None:
                if is_connected(g):
                    finished.add(canonical_form(g))
                continue
            touched = [v for v in range(n) if degs[v] > 0]
            if degs[u] == 0 and all(degs[v] == 3 for v in touched):
                # A saturated component closed before using every vertex;
                # no connected completion exists.
                continue
            need = 3 - degs[u]
            partners = [
                v
                for v in range(n)
                if v != u and degs[v] > 0 and degs[v] < 3 and not g.has_edge(u, v)
            ]
            fresh = [v for v in range(n) if degs[v] == 0 and v != u]
            for take_fresh in range(min(need, len(fresh)) + 1):
                others = need - take_fresh
                if others > len(partners):
                    continue
                pool = list(combinations(partners, others))
                if _reverse:
                    pool = pool[::-1]
                for chosen in pool:
                    edges = list(g.edges())
                    edges += [(u, v) for v in chosen]
                    edges += [(u, fresh[i]) for i in range(take_fresh)]
                    child = from_edges(n, edges)
                    if not _feasible(child):
                        continue
                    key = _support_key(child)
                    if key not in next_states:
                        next_states[key] = child
        states = next_states
    return [graph_from_canonical(k) for k in sorted(finished)]


def _support_key(g: Graph) -> bytes:
    """Canonical form of the subgraph on non-isolated vertices.

    Fresh vertices are mutually interchangeable, so with n fixed the
    support's isomorphism class identifies the state's.
    """
    touched = [v for v in range(g.n) if g.degree(v) > 0]
    idx = {v: i for i, v in enumerate(touched)}
    sub = from_edges(len(touched), [(idx[u], idx[v]) for u, v in g.edges()])
    return canonical_form(sub)


def _feasible(g: Graph) -> bool:
    """Cheap necessary condition: deficiencies must still be matchable."""
    deficient = [3 - d for d in g.degrees() if d < 3]
    total = sum(deficient)
    if total % 2:
        return False
    # A vertex needing k more edges needs k other deficient non-neighbors;
    # the coarse bound below only filters the endgame.
    if deficient and max(deficient) > total - max(deficient):
        return False
    return True


@dataclass(frozen=True)
class ClassificationRecord:
    """Verdict and self-check evidence for one graph."""

    graph6: str
    balanced: str  # "yes" | "no" | "budget"
    coloring: list[int] | None
    precheck_ok: bool
    precheck_reason: str | None
    forbidden: tuple[str, ...]
    has_bridge: bool
    tait_colorable: bool | None


class CrossCheckError(RuntimeError):
    """Advisory evidence contradicts the solver's exhaustive verdict."""


def classify_graph(
    g: Graph, budget: int = DEFAULT_BUDGET, double_check: bool = True
) -> ClassificationRecord:
    """Classify one graph with the solver as ground truth.

    The precheck and (for cubic graphs) the forbidden-pattern scan and Tait
    search are recorded as evidence and cross-checked: a pattern hit, a
    bridge, or Tait-uncolorability must coincide with an exhausted "no";
    witnesses must verify; "no" verdicts are re-run with reversed color
    order when double_check is set.
    """
    pre = order_precheck(g)
    cubic = g.is_cubic()
    scan = forbidden_scan(g) if cubic else None
    tait = tait_coloring_exists(g) if cubic else None
    try:
        coloring = solve_3_balanced(g, budget=budget)
    except BudgetExhausted:
        return ClassificationRecord(
            emit_graph6(g), "budget", None, pre.ok, pre.reason,
            scan.patterns if scan else (), scan.has_bridge if scan else False, tait,
        )
    if coloring is not None:
        if not is_3_balanced(g, coloring):
            raise CrossCheckError("solver witness fails verification")
        if not pre.ok:
            raise CrossCheckError("precheck rejected a solvable graph")
        if scan is not None and scan.any_hit:
            raise CrossCheckError("forbidden evidence on a solvable graph")
        if tait is False:
            raise CrossCheckError("solvable cubic graph without Tait coloring")
        verdict = "yes"
    else:
        if double_check and solve_3_balanced(g, budget=budget, color_order=(2, 1, 0)) is not None:
            raise CrossCheckError("solver verdict depends on color order")
        verdict = "no"
    return ClassificationRecord(
        emit_graph6(g), verdict, coloring, pre.ok, pre.reason,
        scan.patterns if scan else (), scan.has_bridge if scan else False, tait,
    )


@dataclass
class CorpusSummary:
    total: int = 0
    balanced: int = 0
    unbalanced: int = 0
    budget_exhausted: int = 0
    checks_passed: bool = True
    failures: list[str] = field(default_factory=list)


def classify_corpus(
    graphs: Iterable[Graph],
    budget: int = DEFAULT_BUDGET,
    double_check: bool = True,
) -> tuple[list[ClassificationRecord], CorpusSummary]:
    """Classify a corpus, collecting records and a cross-check summary."""
    records = []
    summary = CorpusSummary()
    for g in graphs:
        summary.total += 1
        try:
            rec = classify_graph(g, budget=budget, double_check=double_check)
        except CrossCheckError as exc:
            summary.checks_passed = False
            summary.failures.append(f"{emit_graph6(g)}: {exc}")
            rec = ClassificationRecord(
                emit_graph6(g), "budget", None, False, str(exc), (), False, None
            )
        records.append(rec)
        if rec.balanced == "yes":
            summary.balanced += 1
        elif rec.balanced == "no":
            summary.unbalanced += 1
        else:
            summary.budget_exhausted += 1
    return records, summary


def corpus_from_graph6(text: str) -> list[Graph]:
    """Graphs from graph6 text, one per line, header tolerated."""
    return list(read_graph6(text))


@dataclass(frozen=True)
class ScanRow:
    """One family member's solver verdict against the classification law."""

    params: tuple[int, ...]
    solvable: bool
    predicted: bool

    @property
    def agree(self) -> bool:
        return self.solvable == self.predicted


def family_scan(
    family: str,
    m_max: int | None = None,
    n_max: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[ScanRow]:
    """Solve every family member in range and compare with the known law.

    petersen: G(m, j) for 5 <= m <= m_max, 1 <= j < m/2; balanced iff
    3 | m and 3 does not divide j.  pappus: P(m, j, k) for even
    4 <= m <= m_max; balanced iff 6 | m, 3 does not divide j, k = m/2.
    mobius: M_n for even 4 <= n <= n_max; balanced iff 6 | n.
    """
    rows = []
    if family == "petersen":
        if m_max is None:
            raise BadParamsError("petersen scan needs m_max")
        for m in range(5, m_max + 1):
            for j in range(1, (m + 1) // 2):
                if 2 * j == m:
                    continue
                g = gen_petersen(m, j)
                solvable = solve_3_balanced(g, budget=budget) is not None
                predicted = m % 3 == 0 and j % 3 != 0
                rows.append(ScanRow((m, j), solvable, predicted))
    elif family == "pappus":
        if m_max is None:
            raise BadParamsError("pappus scan needs m_max")
        for m in range(4, m_max + 1, 2):
            for j in range(1, (m + 1) // 2):
                if 2 * j == m:
                    continue
                for k in range(1, m // 2 + 1):
                    g = gen_pappus(m, j, k)
                    solvable = solve_3_balanced(g, budget=budget) is not None
                    predicted = m % 6 == 0 and j % 3 != 0 and 2 * k == m
                    rows.append(ScanRow((m, j, k), solvable, predicted))
    elif family == "mobius":
        if n_max is None:
            raise BadParamsError("mobius scan needs n_max")
        for n in range(4, n_max + 1, 2):
            g = mobius_ladder(n)
            solvable = solve_3_balanced(g, budget=budget) is not None
            rows.append(ScanRow((n,), solvable, n % 6 == 0))
    else:
        raise BadParamsError(f"unknown family {family!r}")
    return rows
