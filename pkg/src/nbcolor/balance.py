"""Neighborhood-balanced coloring checks and exact backtracking solvers.

A 3-coloring l: V -> {0, 1, 2} is neighborhood 3-balanced when every open
neighborhood N(v) contains each color exactly deg(v)/3 times.  The 2-balanced
analogue labels vertices +1/-1 and asks every neighborhood sum to vanish,
equivalently each color appears deg(v)/2 times.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, connected_components, edge_id

Coloring = list[int]

DEFAULT_BUDGET = 10**8


class LengthMismatchError(ValueError):
    """Coloring length differs from the vertex count."""


class BudgetExhausted(RuntimeError):
    """Search stopped at the node budget without a definite answer."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


def _check_length(g: Graph, coloring: Sequence[int]) -> None:
    if len(coloring) != g.n:
        raise LengthMismatchError(
            f"coloring has {len(coloring)} entries for {g.n} vertices"
        )


def is_3_balanced(g: Graph, coloring: Sequence[int]) -> bool:
    """True when every open neighborhood has equal counts of 0, 1, 2."""
    _check_length(g, coloring)
    if any(c not in (0, 1, 2) for c in coloring):
        raise ValueError("colors must be 0, 1 or 2")
    for v in range(g.n):
        counts = [0, 0, 0]
        for w in g.adj[v]:
            counts[coloring[w]] += 1
        if not counts[0] == counts[1] == counts[2]:
            return False
    return True


def is_2_balanced(g: Graph, signs: Sequence[int]) -> bool:
    """True when every open neighborhood's +1/-1 labels sum to zero."""
    _check_length(g, signs)
    if any(s not in (1, -1) for s in signs):
        raise ValueError("labels must be +1 or -1")
    for v in range(g.n):
        if sum(signs[w] for w in g.adj[v]) != 0:
            return False
    return True


@dataclass(frozen=True)
class PrecheckResult:
    """Outcome of the divisibility prechecks; reason set on failure."""

    ok: bool
    reason: str | None = None


def order_precheck(g: Graph) -> PrecheckResult:
    """Fast necessary conditions for a 3-balanced coloring to exist.

    Checked in order: every degree divisible by 3; |E| divisible by 9;
    for r-regular graphs additionally 3 | r, 3 | n and 2 | rn.
    """
    for v in range(g.n):
        d = g.degree(v)
        if d % 3:
            return PrecheckResult(False, f"degree {d} at vertex {v} not divisible by 3")
    if g.m % 9:
        return PrecheckResult(False, f"edge count {g.m} not divisible by 9")
    r = g.is_regular()
    if r is not None and r > 0:
        if r % 3:
            return PrecheckResult(False, f"regular degree {r} not divisible by 3")
        if g.n % 3:
            return PrecheckResult(False, f"regular order {g.n} not divisible by 3")
        if (r * g.n) % 2:
            return PrecheckResult(False, f"odd degree sum for r={r}, n={g.n}")
    return PrecheckResult(True)


@dataclass(frozen=True)
class ColorClassStats:
    """Sizes of the color classes and of the colored edge classes."""

    vertex_class_sizes: tuple[int, int, int]
    edge_class_sizes: dict[tuple[int, int], int]


def stats(g: Graph, coloring: Sequence[int]) -> ColorClassStats:
    """Count |V_i| and |E_ij| (unordered color pairs i <= j)."""
    _check_length(g, coloring)
    sizes = [0, 0, 0]
    for c in coloring:
        sizes[c] += 1
    edge_sizes = {(i, j): 0 for i in range(3) for j in range(i, 3)}
    for u, v in g.edges():
        pair = tuple(sorted((coloring[u], coloring[v])))
        edge_sizes[pair] += 1
    return ColorClassStats(tuple(sizes), edge_sizes)


def normalize_coloring(coloring: Sequence[int]) -> Coloring:
    """Least coloring in the orbit under relabelings c -> eps*c + i0 (mod 3)."""
    best = None
    for eps in (1, 2):
        for shift in (0, 1, 2):
            candidate = [(eps * c + shift) % 3 for c in coloring]
            if best is None or candidate < best:
                best = candidate
    return best if best is not None else []


# ---------------------------------------------------------------------------
# solvers

def _bfs_order(g: Graph, comp: list[int]) -> list[int]:
    start = max(comp, key=lambda v: (g.degree(v), -v))
    order = [start]
    seen = {start}
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                order.append(w)
    return order


def solve_3_balanced(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    color_order: tuple[int, int, int] = (0, 1, 2),
) -> Coloring | None:
    """Find a neighborhood 3-balanced coloring or prove none exists.

    Backtracking in BFS order from a maximum-degree vertex per component.
    A partial coloring dies as soon as some vertex has more than deg/3
    neighbors of one color; saturated budgets propagate to prune neighbor
    color choices.  Symmetry is quotiented by forcing the first vertex of
    each component to color 0 and the first differently colored vertex to 1.
    Raises BudgetExhausted when the node budget runs out.
    """
    if any(d % 3 for d in g.degrees()):
        return None
    result = [0] * g.n
    spent = [0]
    for comp in connected_components(g):
        sub = _solve_component_3(g, comp, budget, spent, color_order)
        if sub is None:
            return None
        for v, c in sub.items():
            result[v] = c
    return result


def _solve_component_3(
    g: Graph,
    comp: list[int],
    budget: int,
    spent: list[int],
    color_order: tuple[int, int, int],
) -> dict[int, int] | None:
    order = _bfs_order(g, comp)
    quota = {v: g.degree(v) // 3 for v in comp}
    counts = {v: [0, 0, 0] for v in comp}
    avail = {v: 0b111 for v in comp}
    color: dict[int, int] = {}
    adj = g.adj

    def assign(v: int, c: int, trail: list[tuple[int, int]]) -> bool:
        """Place color c on v, recording avail removals for undo.

        Count increments always complete so unassign can decrement blindly.
        """
        color[v] = c
        ok = True
        for w in adj[v]:
            cw = counts[w]
            cw[c] += 1
            if cw[c] > quota[w]:
                ok = False
        if not ok:
            return False
        mask = 1 << c
        for w in adj[v]:
            if counts[w][c] == quota[w]:
                for x in adj[w]:
                    if x in color:
                        continue
                    if avail[x] & mask:
                        avail[x] &= ~mask
                        trail.append((x, mask))
                        if not avail[x]:
                            return False
        return True

    def unassign(v: int, c: int, trail: list[tuple[int, int]]) -> None:
        for x, mask in trail:
            avail[x] |= mask
        for w in adj[v]:
            counts[w][c] -= 1
        del color[v]

    def extend(idx: int, seen_second: bool) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        for c in color_order:
            if not avail[v] >> c & 1:
                continue
            if not seen_second and c == 2:
                continue
            spent[0] += 1
            if spent[0] > budget:
                raise BudgetExhausted(spent[0])
            trail: list[tuple[int, int]] = []
            ok = assign(v, c, trail)
            if ok and extend(idx + 1, seen_second or c != 0):
                return True
            unassign(v, c, trail)
        return False

    # First vertex fixed to color 0 (shift symmetry); the first vertex to
    # take a nonzero color is forced to 1 (sign symmetry).
    v0 = order[0]
    spent[0] += 1
    if spent[0] > budget:
        raise BudgetExhausted(spent[0])
    trail0: list[tuple[int, int]] = []
    if assign(v0, 0, trail0) and extend(1, False):
        return dict(color)
    unassign(v0, 0, trail0)
    return None


def solve_2_balanced(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
) -> list[int] | None:
    """Find +1/-1 labels with all neighborhood sums zero, or prove none.

    Same search scheme as the 3-color solver with per-color quota deg/2;
    the global sign flip is quotiented by fixing each component's first
    vertex to +1.
    """
    if any(d % 2 for d in g.degrees()):
        return None
    result = [0] * g.n
    spent = [0]
    for comp in connected_components(g):
        order = _bfs_order(g, comp)
        quota = {v: g.degree(v) // 2 for v in comp}
        counts = {v: [0, 0] for v in comp}
        color: dict[int, int] = {}
        adj = g.adj

        def assign(v: int, c: int) -> bool:
            color[v] = c
            ok = True
            for w in adj[v]:
                if w in counts:
                    cw = counts[w]
                    cw[c] += 1
                    if cw[c] > quota[w]:
                        ok = False
            return ok

        def unassign(v: int, c: int) -> None:
            for w in adj[v]:
                if w in counts:
                    counts[w][c] -= 1
            del color[v]

        def extend(idx: int) -> bool:
            if idx == len(order):
                return True
            v = order[idx]
            first = idx == 0
            for c in (0,) if first else (0, 1):
                spent[0] += 1
                if spent[0] > budget:
                    raise BudgetExhausted(spent[0])
                ok = assign(v, c)
                if ok and extend(idx + 1):
                    return True
                unassign(v, c)
            return False

        if not extend(0):
            return None
        for v, c in color.items():
            result[v] = 1 if c == 0 else -1
    return result
