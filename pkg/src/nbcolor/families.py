"""Graph families with known balanced-coloring classifications, and the
constructions that combine balanced graphs into new ones.

Vertex layouts are fixed so colorings can be written down by index:

* generalized Petersen G(m, j): outer v_i -> i, inner u_i -> m + i;
  edges v_i v_{i+1}, v_i u_i, u_i u_{i+j} (indices mod m).
* generalized Pappus P(m, j, k): v_i -> i, u_i -> m + i, w_i -> 2m + i;
  edges v_i v_{i+1}, v_i u_i, u_i w_{i+j}, u_i w_{i-j}, w_i w_{i+k}.
* Moebius ladder M_n: cycle 0..n-1 plus chords i, i + n/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .balance import Coloring, is_2_balanced, is_3_balanced
from .graphs import Graph, edge_id, from_edges


class BadParamsError(ValueError):
    """Family parameters outside the defined range."""


class NotApplicableError(ValueError):
    """The closed-form coloring does not exist for these parameters."""


class HypothesisViolatedError(ValueError):
    """A construction's hypothesis fails on the given inputs."""


class EdgeOverlapError(ValueError):
    """Graphs meant to be edge-disjoint share an edge."""


@dataclass(frozen=True)
class PetersenParams:
    m: int
    j: int

    def __post_init__(self) -> None:
        if self.m < 5:
            raise BadParamsError(f"m={self.m} < 5")
        if not 1 <= self.j < self.m / 2:
            raise BadParamsError(f"j={self.j} outside 1 <= j < m/2 for m={self.m}")


@dataclass(frozen=True)
class PappusParams:
    m: int
    j: int
    k: int

    def __post_init__(self) -> None:
        if self.m < 4:
            raise BadParamsError(f"m={self.m} < 4")
        if not 1 <= self.j < self.m / 2:
            raise BadParamsError(f"j={self.j} outside 1 <= j < m/2 for m={self.m}")
        if not 1 <= self.k <= self.m / 2:
            raise BadParamsError(f"k={self.k} outside 1 <= k <= m/2 for m={self.m}")


def gen_petersen(m: int, j: int) -> Graph:
    """Generalized Petersen graph G(m, j); always cubic on 2m vertices."""
    p = PetersenParams(m, j)
    edges = []
    for i in range(m):
        edges.append((i, (i + 1) % m))
        edges.append((i, m + i))
        edges.append(edge_id(m + i, m + (i + j) % m))
    return from_edges(2 * m, set(edges))


def petersen_coloring(m: int, j: int) -> Coloring:
    """The coloring l(v_i) = l(u_i) = i mod 3; defined iff 3 | m and 3 does not divide j."""
    PetersenParams(m, j)
    if m % 3 or j % 3 == 0:
        raise NotApplicableError(f"G({m}, {j}) has no index-mod-3 coloring")
    return [i % 3 for i in range(m)] * 2


def gen_pappus(m: int, j: int, k: int) -> Graph:
    """Generalized Pappus graph P(m, j, k) on 3m vertices; cubic iff k = m/2."""
    p = PappusParams(m, j, k)
    edges = set()
    for i in range(m):
        edges.add(edge_id(i, (i + 1) % m))
        edges.add(edge_id(i, m + i))
        edges.add(edge_id(m + i, 2 * m + (i + j) % m))
        edges.add(edge_id(m + i, 2 * m + (i - j) % m))
        edges.add(edge_id(2 * m + i, 2 * m + (i + k) % m))
    return from_edges(3 * m, edges)


def pappus_coloring(m: int, j: int, k: int) -> Coloring:
    """The coloring l = index mod 3 on all rings; defined iff 6 | m, 3 does not divide j, k = m/2."""
    PappusParams(m, j, k)
    if m % 6 or j % 3 == 0 or 2 * k != m:
        raise NotApplicableError(f"P({m}, {j}, {k}) has no index-mod-3 coloring")
    return [i % 3 for i in range(m)] * 3


def mobius_ladder(n: int) -> Graph:
    """Cycle 0..n-1 plus all antipodal chords; cubic on n vertices, n even."""
    if n < 4 or n % 2:
        raise BadParamsError(f"Moebius ladder needs even n >= 4, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, i + n // 2) for i in range(n // 2)]
    return from_edges(n, edges)


def mobius_coloring(n: int) -> Coloring:
    """The coloring l(v_i) = i mod 3; defined iff 6 | n."""
    if n < 4 or n % 2:
        raise BadParamsError(f"Moebius ladder needs even n >= 4, got {n}")
    if n % 6:
        raise NotApplicableError(f"M_{n} has no index-mod-3 coloring")
    return [i % 3 for i in range(n)]


def interior_cycle_lengths(m: int, j: int) -> tuple[int, int]:
    """(number, length) of the cycles the inner edges u_i u_{i+j} decompose into."""
    PetersenParams(m, j)
    from math import gcd

    d = gcd(j, m)
    return d, m // d


# ---------------------------------------------------------------------------
# constructions

def edge_disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Union of edge-disjoint graphs on a common vertex set."""
    if not graphs:
        raise BadParamsError("need at least one graph")
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise BadParamsError("graphs must share one vertex set")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for g in graphs:
        for e in g.edges():
            if e in seen:
                raise EdgeOverlapError(f"edge {e} appears in two graphs")
            seen.add(e)
            edges.append(e)
    return from_edges(n, edges)


def edge_disjoint_union_check(graphs: Sequence[Graph], coloring: Sequence[int]) -> bool:
    """Whether the union of edge-disjoint graphs is 3-balanced under coloring."""
    return is_3_balanced(edge_disjoint_union(graphs), list(coloring))


def glue_at_vertex(graphs: Sequence[Graph], shared: Sequence[int]) -> Graph:
    """Identify one chosen vertex of each graph into a single vertex.

    Layout: the glued vertex is 0; the other vertices of graph i follow in
    original order, offset past those of earlier graphs.
    """
    if not graphs or len(graphs) != len(shared):
        raise BadParamsError("need one shared vertex per graph")
    maps = _glue_maps(graphs, shared)
    total = 1 + sum(g.n - 1 for g in graphs)
    edges = []
    for g, vmap in zip(graphs, maps):
        for u, v in g.edges():
            edges.append(edge_id(vmap[u], vmap[v]))
    return from_edges(total, edges)


def _glue_maps(graphs: Sequence[Graph], shared: Sequence[int]) -> list[dict[int, int]]:
    maps = []
    offset = 1
    for g, s in zip(graphs, shared):
        if not 0 <= s < g.n:
            raise BadParamsError(f"shared vertex {s} outside graph of order {g.n}")
        vmap = {}
        for v in range(g.n):
            if v == s:
                vmap[v] = 0
            else:
                vmap[v] = offset
                offset += 1
        maps.append(vmap)
    return maps


def glue_colorings(
    graphs: Sequence[Graph], shared: Sequence[int], colorings: Sequence[Sequence[int]]
) -> Coloring:
    """Combine per-graph balanced colorings across a vertex gluing.

    Each coloring is shifted so its shared vertex lands on color 0, which
    keeps every neighborhood balanced in the glued graph.
    """
    if len(colorings) != len(graphs):
        raise BadParamsError("need one coloring per graph")
    maps = _glue_maps(graphs, shared)
    total = 1 + sum(g.n - 1 for g in graphs)
    out = [0] * total
    for g, s, c, vmap in zip(graphs, shared, colorings, maps):
        if len(c) != g.n:
            raise HypothesisViolatedError("coloring length mismatch")
        shift = (-c[s]) % 3
        for v in range(g.n):
            out[vmap[v]] = (c[v] + shift) % 3
    return out


def join_along(base: Graph, parts: Sequence[Graph]) -> Graph:
    """Replace each base vertex by a graph; join whole parts along base edges.

    Part i occupies indices offset_i .. offset_i + parts[i].n - 1 where
    offsets accumulate in base-vertex order (see join_offsets).
    """
    if len(parts) != base.n:
        raise BadParamsError("need one part per base vertex")
    offsets = join_offsets(parts)
    total = sum(p.n for p in parts)
    edges = []
    for i, p in enumerate(parts):
        for u, v in p.edges():
            edges.append((offsets[i] + u, offsets[i] + v))
    for a, b in base.edges():
        for u in range(parts[a].n):
            for v in range(parts[b].n):
                edges.append(edge_id(offsets[a] + u, offsets[b] + v))
    return from_edges(total, edges)


def join_offsets(parts: Sequence[Graph]) -> list[int]:
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    return offsets


def join_thirds_coloring(parts: Sequence[Graph]) -> Coloring:
    """Color each (edgeless) part one third per color, in layout order.

    Defined for empty parts whose orders are divisible by 3; then any join
    along a base graph is 3-balanced because every part contributes its
    colors equally to each neighborhood.
    """
    out: Coloring = []
    for p in parts:
        if p.m:
            raise HypothesisViolatedError("parts must be edgeless")
        if p.n % 3:
            raise HypothesisViolatedError(f"part order {p.n} not divisible by 3")
        third = p.n // 3
        out.extend([0] * third + [1] * third + [2] * third)
    return out


PRODUCT_KINDS = ("cartesian", "tensor", "strong", "lexicographic")


def product(g1: Graph, g2: Graph, kind: str) -> Graph:
    """Graph product on vertex pairs (a, b) -> a * g2.n + b."""
    if kind not in PRODUCT_KINDS:
        raise BadParamsError(f"unknown product kind {kind!r}")
    n1, n2 = g1.n, g2.n
    edges = set()

    def idx(a: int, b: int) -> int:
        return a * n2 + b

    if kind in ("cartesian", "strong", "lexicographic"):
        for a in range(n1):
            for b, b2 in g2.edges():
                edges.add(edge_id(idx(a, b), idx(a, b2)))
        for a, a2 in g1.edges():
            for b in range(n2):
                edges.add(edge_id(idx(a, b), idx(a2, b)))
    if kind in ("tensor", "strong"):
        for a, a2 in g1.edges():
            for b, b2 in g2.edges():
                edges.add(edge_id(idx(a, b), idx(a2, b2)))
                edges.add(edge_id(idx(a, b2), idx(a2, b)))
    if kind == "lexicographic":
        for a, a2 in g1.edges():
            for b in range(n2):
                for b2 in range(n2):
                    if b != b2:
                        edges.add(edge_id(idx(a, b), idx(a2, b2)))
    return from_edges(n1 * n2, edges)


def product_coloring(
    g1: Graph,
    c1: Sequence[int] | None,
    g2: Graph,
    c2: Sequence[int],
    kind: str,
) -> Coloring:
    """Balanced coloring of a product from balanced colorings of the factors.

    cartesian / tensor / strong with two 3-balanced factors: label sum
    l1(a) + l2(b) mod 3.  tensor with a +1/-1 second factor (3k-regular
    3-balanced times 2k'-regular 2-balanced): l1(a) when the sign is +1,
    else -l1(a) mod 3.  lexicographic: projection l2(b), second factor
    3r-regular and 3-balanced.  Hypotheses are verified.
    """
    if kind not in PRODUCT_KINDS:
        raise BadParamsError(f"unknown product kind {kind!r}")
    n2 = g2.n
    if kind == "lexicographic":
        r2 = g2.is_regular()
        if r2 is None or r2 % 3:
            raise HypothesisViolatedError("second factor must be 3r-regular")
        if not is_3_balanced(g2, list(c2)):
            raise HypothesisViolatedError("second factor coloring not 3-balanced")
        return [c2[v % n2] for v in range(g1.n * n2)]
    if c1 is None:
        raise HypothesisViolatedError("first factor coloring required")
    signed = any(x not in (0, 1, 2) for x in c2)
    if signed:
        if kind != "tensor":
            raise HypothesisViolatedError("signed second factor only for tensor")
        r1, r2 = g1.is_regular(), g2.is_regular()
        if r1 is None or r1 % 3:
            raise HypothesisViolatedError("first factor must be 3k-regular")
        if r2 is None or r2 % 2:
            raise HypothesisViolatedError("second factor must be 2k-regular")
        if not is_3_balanced(g1, list(c1)):
            raise HypothesisViolatedError("first factor coloring not 3-balanced")
        if not is_2_balanced(g2, list(c2)):
            raise HypothesisViolatedError("second factor labels not 2-balanced")
        return [
            c1[a] if c2[b] == 1 else (-c1[a]) % 3
            for a in range(g1.n)
            for b in range(n2)
        ]
    if not is_3_balanced(g1, list(c1)):
        raise HypothesisViolatedError("first factor coloring not 3-balanced")
    if not is_3_balanced(g2, list(c2)):
        raise HypothesisViolatedError("second factor coloring not 3-balanced")
    return [(c1[a] + c2[b]) % 3 for a in range(g1.n) for b in range(n2)]
