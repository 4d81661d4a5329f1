"""Edge-coloring theory of 3-balanced cubic graphs.

On a cubic graph a balanced vertex coloring induces the edge coloring
l(uv) = l(u) + l(v) mod 3, which is proper (a Tait coloring), so its color
classes are three disjoint perfect matchings and any two classes cover the
graph by even cycles with alternating labels.  The reverse direction
recovers vertex colorings from edge colorings through alternating sums
around cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .balance import Coloring, is_3_balanced
from .graphs import (
    Graph,
    SizeLimitExceeded,
    bridges,
    connected_components,
    edge_id,
    from_edges,
    is_connected,
    subgraph_monomorphism_exists,
)

EdgeColoring = dict[tuple[int, int], int]

_CYCLE_LIMIT = 14


class NotCubicError(ValueError):
    """Operation defined only for 3-regular graphs."""


class NotTaitError(ValueError):
    """Edge coloring is not a proper 3-edge-coloring."""


class NotThreeMatchingsError(ValueError):
    """Edge color classes are not three disjoint perfect matchings."""


class CharacterizationFailsError(ValueError):
    """Alternating sums are not constant per base vertex."""


class InvalidDatasetError(ValueError):
    """Dataset violates the bijection or fixed-point-free conditions."""


def _require_cubic(g: Graph) -> None:
    if not g.is_cubic():
        raise NotCubicError(f"graph is not cubic: degrees {sorted(set(g.degrees()))}")


def induced_edge_coloring(g: Graph, coloring: Sequence[int]) -> EdgeColoring:
    """The edge coloring l(uv) = l(u) + l(v) mod 3 of a cubic graph."""
    _require_cubic(g)
    if len(coloring) != g.n:
        raise ValueError("coloring length mismatch")
    return {(u, v): (coloring[u] + coloring[v]) % 3 for u, v in g.edges()}


def is_tait(g: Graph, ec: Mapping[tuple[int, int], int]) -> bool:
    """True when ec is a proper 3-edge-coloring of all of g's edges."""
    if set(ec) != set(g.edges()):
        raise ValueError("edge coloring must cover exactly the edge set")
    if any(c not in (0, 1, 2) for c in ec.values()):
        raise ValueError("edge colors must be 0, 1 or 2")
    for v in range(g.n):
        seen = set()
        for w in g.adj[v]:
            c = ec[edge_id(v, w)]
            if c in seen:
                return False
            seen.add(c)
    return True


def tait_coloring_exists(g: Graph) -> bool:
    """Whether the cubic graph has any proper 3-edge-coloring.

    Plain backtracking over edges ordered to keep each new edge adjacent
    to colored ones.
    """
    _require_cubic(g)
    edges = list(g.edges())
    # Reorder so each edge (after the first per component) touches the prefix.
    placed_vertices: set[int] = set()
    ordered: list[tuple[int, int]] = []
    remaining = set(edges)
    while remaining:
        pick = None
        for e in remaining:
            if e[0] in placed_vertices or e[1] in placed_vertices:
                pick = e
                break
        if pick is None:
            pick = min(remaining)
        ordered.append(pick)
        remaining.discard(pick)
        placed_vertices.update(pick)
    used = [0] * g.n  # bitmask of colors at each vertex

    def extend(idx: int) -> bool:
        if idx == len(ordered):
            return True
        u, v = ordered[idx]
        free = ~(used[u] | used[v]) & 0b111
        while free:
            bit = free & -free
            free ^= bit
            used[u] |= bit
            used[v] |= bit
            if extend(idx + 1):
                return True
            used[u] ^= bit
            used[v] ^= bit
        return False

    return extend(0)


def matchings_from_edge_coloring(
    g: Graph, ec: Mapping[tuple[int, int], int]
) -> tuple[list[tuple[int, int]], list[tuple[int, int]], list[tuple[int, int]]]:
    """Split a Tait coloring into its three perfect matchings."""
    _require_cubic(g)
    if not is_tait(g, ec):
        raise NotTaitError("edge coloring is not proper")
    classes: tuple[list, list, list] = ([], [], [])
    for e, c in sorted(ec.items()):
        classes[c].append(e)
    return classes


def _check_three_matchings(g: Graph, ec: Mapping[tuple[int, int], int]) -> None:
    if set(ec) != set(g.edges()):
        raise NotThreeMatchingsError("edge coloring must cover exactly the edge set")
    for color in (0, 1, 2):
        covered = set()
        for (u, v), c in ec.items():
            if c == color:
                if u in covered or v in covered:
                    raise NotThreeMatchingsError(f"color {color} is not a matching")
                covered.update((u, v))
        if len(covered) != g.n:
            raise NotThreeMatchingsError(f"color {color} does not cover all vertices")


def alternating_cycle_cover(
    g: Graph, ec: Mapping[tuple[int, int], int], colors: tuple[int, int]
) -> list[list[int]]:
    """Disjoint cycles covering V formed by two edge color classes.

    With three disjoint perfect matchings, any two classes give a 2-regular
    subgraph whose cycles alternate the two colors and so have even length.
    Cycles are rotated to start at their least vertex, oriented toward the
    smaller neighbor, and returned sorted by that least vertex.
    """
    i, j = colors
    if i == j or i not in (0, 1, 2) or j not in (0, 1, 2):
        raise ValueError("need two distinct colors from 0, 1, 2")
    _check_three_matchings(g, ec)
    next_of: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for (u, v), c in ec.items():
        if c in (i, j):
            next_of[u].append(v)
            next_of[v].append(u)
    seen = [False] * g.n
    cycles = []
    for start in range(g.n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        prev = start
        cur = min(next_of[start])
        while cur != start:
            seen[cur] = True
            cycle.append(cur)
            a, b = next_of[cur]
            prev, cur = cur, b if a == prev else a
        cycles.append(cycle)
    return cycles


def alternating_sum(cycle: Sequence[int], ec: Mapping[tuple[int, int], int]) -> int:
    """S(C) = x_1 - x_2 + x_3 - ... mod 3 for the cycle's edge labels.

    The cycle v_0 .. v_{k-1} is read with x_i the label of v_{i-1} v_i and
    x_k closing back to v_0.
    """
    k = len(cycle)
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    total = 0
    sign = 1
    for idx in range(1, k + 1):
        e = edge_id(cycle[idx - 1], cycle[idx % k])
        total += sign * ec[e]
        sign = -sign
    return total % 3


def enumerate_cycles(g: Graph, limit: int = _CYCLE_LIMIT) -> list[list[int]]:
    """All cycles of the graph as canonical vertex sequences.

    Canonical: least vertex first, oriented so the second vertex is smaller
    than the last.  Exhaustive DFS restricted to vertices above the start;
    refuses graphs beyond the size limit since cycle counts grow quickly.
    """
    if g.n > limit:
        raise SizeLimitExceeded(f"cycle enumeration sized for n <= {limit}")
    cycles: list[list[int]] = []
    path: list[int] = []
    on_path = [False] * g.n

    def dfs(start: int, v: int) -> None:
        path.append(v)
        on_path[v] = True
        for w in g.adj[v]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                cycles.append(path.copy())
            elif w > start and not on_path[w]:
                dfs(start, w)
        path.pop()
        on_path[v] = False

    for start in range(g.n):
        dfs(start, start)
    return cycles


def check_sum_characterization(g: Graph, ec: Mapping[tuple[int, int], int]) -> bool:
    """Whether alternating sums follow the base-vertex law on every cycle.

    An edge coloring induced by a balanced coloring satisfies
    S(C) = (1 + (-1)^(k-1)) l(v_0) on every length-k cycle based at v_0,
    so even cycles must sum to zero and all odd cycles based at the same
    vertex must agree.  Both conditions together are also sufficient: they
    make the propagation in reconstruct_vertex_coloring consistent.  All
    rotations and both orientations of every cycle are checked.
    """
    _check_three_matchings(g, ec)
    per_vertex: dict[int, set[int]] = {}
    for cycle in enumerate_cycles(g):
        k = len(cycle)
        for r in range(k):
            rotated = cycle[r:] + cycle[:r]
            for oriented in (rotated, [rotated[0]] + rotated[1:][::-1]):
                s = alternating_sum(oriented, ec)
                if k % 2 == 0:
                    if s != 0:
                        return False
                else:
                    per_vertex.setdefault(oriented[0], set()).add(s)
    return all(len(vals) == 1 for vals in per_vertex.values())


def reconstruct_vertex_coloring(
    g: Graph, ec: Mapping[tuple[int, int], int]
) -> Coloring:
    """Recover a vertex coloring whose induced edge coloring equals ec.

    Seeds from the shortest odd cycle using l(v_0) = (-1)^k S(C), then
    propagates l(u) = x - l(w) along a spanning tree; the characterization
    condition guarantees consistency, which is verified before returning.
    On bipartite graphs even cycles force nothing, so the seed colour is a
    free choice and 0 is used.  The graph must be connected.
    """
    _require_cubic(g)
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if not check_sum_characterization(g, ec):
        raise CharacterizationFailsError("alternating sums break the base-vertex law")
    odd = [c for c in enumerate_cycles(g) if len(c) % 2 == 1]
    if odd:
        seed = min(odd, key=lambda c: (len(c), c))
        base = seed[0]
        colors = [None] * g.n
        colors[base] = -alternating_sum(seed, ec) % 3
    else:
        base = 0
        colors = [None] * g.n
        colors[base] = 0
    queue = [base]
    while queue:
        w = queue.pop(0)
        for u in g.adj[w]:
            if colors[u] is None:
                colors[u] = (ec[edge_id(w, u)] - colors[w]) % 3
                queue.append(u)
    result = [int(c) for c in colors]
    if induced_edge_coloring(g, result) != dict(ec):
        raise CharacterizationFailsError("propagated coloring does not induce ec")
    return result


# ---------------------------------------------------------------------------
# dataset equivalence

@dataclass(frozen=True)
class CubicDataset:
    """Three equal even-size sets with nine pairing bijections.

    maps[(i, j)] sends each element of part i to its unique color-j
    neighbor; inverses pair up ((i, j) with (j, i)) and the diagonal maps
    are fixed-point-free involutions.
    """

    parts: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    maps: dict[tuple[int, int], dict[int, int]]

    def validate(self) -> None:
        sets = [set(p) for p in self.parts]
        if any(len(s) != len(p) for s, p in zip(sets, self.parts)):
            raise InvalidDatasetError("parts contain repeats")
        if sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2]:
            raise InvalidDatasetError("parts are not disjoint")
        size = len(sets[0])
        if any(len(s) != size for s in sets):
            raise InvalidDatasetError("parts must have equal size")
        if size % 2:
            raise InvalidDatasetError("part size must be even")
        if set(self.maps) != {(i, j) for i in range(3) for j in range(3)}:
            raise InvalidDatasetError("need all nine maps")
        for (i, j), f in self.maps.items():
            if set(f) != sets[i] or set(f.values()) != sets[j]:
                raise InvalidDatasetError(f"map {(i, j)} is not a bijection")
            for v, w in f.items():
                if self.maps[(j, i)][w] != v:
                    raise InvalidDatasetError(f"map {(j, i)} is not the inverse of {(i, j)}")
            if i == j and any(f[v] == v for v in f):
                raise InvalidDatasetError(f"map {(i, i)} has a fixed point")


def dataset_from_colored_graph(g: Graph, coloring: Sequence[int]) -> CubicDataset:
    """Split a 3-balanced cubic graph into parts and neighbor bijections."""
    _require_cubic(g)
    if not is_3_balanced(g, list(coloring)):
        raise ValueError("coloring is not 3-balanced")
    parts = tuple(
        tuple(v for v in range(g.n) if coloring[v] == c) for c in range(3)
    )
    maps: dict[tuple[int, int], dict[int, int]] = {}
    for i in range(3):
        for j in range(3):
            f = {}
            for v in parts[i]:
                targets = [w for w in g.adj[v] if coloring[w] == j]
                f[v] = targets[0]  # balanced cubic: exactly one per color
            maps[(i, j)] = f
    ds = CubicDataset(parts, maps)
    ds.validate()
    return ds


def graph_from_dataset(ds: CubicDataset) -> tuple[Graph, Coloring]:
    """Rebuild the colored cubic graph a dataset encodes.

    Elements are relabeled 0..n-1 with part 0 first (each part in sorted
    order); the returned coloring is the part index.
    """
    ds.validate()
    relabel: dict[int, int] = {}
    coloring: Coloring = []
    for part_index, part in enumerate(ds.parts):
        for v in sorted(part):
            relabel[v] = len(coloring)
            coloring.append(part_index)
    edges = set()
    for (i, j), f in ds.maps.items():
        for v, w in f.items():
            edges.add(edge_id(relabel[v], relabel[w]))
    return from_edges(len(coloring), edges), coloring


# ---------------------------------------------------------------------------
# forbidden substructures

def _pattern(n: int, edges: list[tuple[int, int]]) -> Graph:
    return from_edges(n, edges)


# Small subgraphs that rule out a balanced coloring in cubic graphs.
# D is the diamond K4 minus an edge; EB is two triangles tied through a
# middle vertex; F1 to F4 are the larger obstructions.
FORBIDDEN_PATTERNS: dict[str, Graph] = {
    "D": _pattern(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]),
    "EB": _pattern(
        7,
        [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 6), (3, 6)],
    ),
    "F1": _pattern(
        7,
        [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 6), (0, 6)],
    ),
    "F2": _pattern(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0),
         (1, 3), (0, 4)],
    ),
    "F3": _pattern(
        9,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0),
         (0, 7), (7, 8), (2, 8), (5, 8)],
    ),
    "F4": _pattern(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
         (5, 6), (5, 7), (6, 1), (6, 3), (7, 4)],
    ),
}


@dataclass(frozen=True)
class ForbiddenScan:
    """Names of forbidden patterns found as subgraphs, plus a bridge flag."""

    patterns: tuple[str, ...]
    has_bridge: bool

    @property
    def any_hit(self) -> bool:
        return bool(self.patterns) or self.has_bridge


def forbidden_scan(g: Graph) -> ForbiddenScan:
    """Scan for the balanced-coloring obstructions.

    Finding any pattern as a subgraph, or any bridge, certifies that a
    cubic graph has no balanced coloring; absence certifies nothing.
    """
    hits = tuple(
        name
        for name, pattern in FORBIDDEN_PATTERNS.items()
        if subgraph_monomorphism_exists(pattern, g)
    )
    return ForbiddenScan(hits, bool(bridges(g)))
