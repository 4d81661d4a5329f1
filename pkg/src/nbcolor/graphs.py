"""Immutable simple graphs with graph6 I/O and isomorphism utilities.

Vertices are 0..n-1.  Adjacency is kept twice: sorted neighbor tuples for
iteration and one int bitmask per vertex for fast set arithmetic.  Edges are
identified by (u, v) tuples with u < v.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

EdgeId = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction input."""


class LoopEdgeError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same edge was given twice."""


class VertexRangeError(GraphError):
    """An endpoint is outside 0..n-1."""


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class MalformedHeaderError(Graph6Error):
    """A '>>' prefix that is not the optional '>>graph6<<' header."""


class TruncatedPayloadError(Graph6Error):
    """graph6 payload shorter than the vertex count requires."""


class SizeLimitExceeded(ValueError):
    """Input larger than the operation's supported envelope."""


def edge_id(u: int, v: int) -> EdgeId:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "bits", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise VertexRangeError(f"vertex count {n} is negative")
        seen: set[EdgeId] = set()
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            e = edge_id(u, v)
            if e in seen:
                raise DuplicateEdgeError(f"edge {e} given twice")
            seen.add(e)
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbor_sets
        )
        self.bits: tuple[int, ...] = tuple(
            sum(1 << w for w in s) for s in neighbor_sets
        )
        self._edges: tuple[EdgeId, ...] = tuple(sorted(seen))

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[EdgeId, ...]:
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def is_regular(self) -> int | None:
        """The common degree, or None if degrees differ (or n == 0)."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_cubic(self) -> bool:
        return self.n > 0 and self.is_regular() == 3

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, rejecting loops, duplicates and out-of-range vertices."""
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# graph6 format

_HEADER = ">>graph6<<"


def _parse_size(s: str) -> tuple[int, int]:
    """Decode the leading N(n) field, returning (n, chars consumed)."""
    if not s:
        raise TruncatedPayloadError("empty graph6 string")
    c0 = ord(s[0])
    if c0 != 126:
        if not 63 <= c0 <= 126:
            raise Graph6Error(f"byte {c0} outside graph6 range")
        return c0 - 63, 1
    if len(s) >= 2 and ord(s[1]) == 126:
        chunk = s[2:8]
        if len(chunk) < 6:
            raise TruncatedPayloadError("truncated 36-bit size field")
        return _decode_bigendian(chunk), 8
    chunk = s[1:4]
    if len(chunk) < 3:
        raise TruncatedPayloadError("truncated 18-bit size field")
    return _decode_bigendian(chunk), 4


def _decode_bigendian(chunk: str) -> int:
    value = 0
    for ch in chunk:
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range")
        value = value << 6 | (b - 63)
    return value


def parse_graph6(line: str) -> Graph:
    """Parse one graph6 line; tolerates the optional '>>graph6<<' header."""
    s = line.strip()
    if s.startswith(">>"):
        if not s.startswith(_HEADER):
            raise MalformedHeaderError(f"unrecognized header on {s[:12]!r}")
        s = s[len(_HEADER):]
    n, consumed = _parse_size(s)
    payload = s[consumed:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(payload) < need:
        raise TruncatedPayloadError(
            f"need {need} payload chars for n={n}, got {len(payload)}"
        )
    if len(payload) > need:
        raise Graph6Error(f"{len(payload) - need} trailing chars after payload")
    edges = []
    bit = 0
    for ch in payload:
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range")
        group = b - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                break
            if group >> k & 1:
                edges.append(_bit_to_edge(bit))
            bit += 1
    return Graph(n, edges)


def _bit_to_edge(bit: int) -> tuple[int, int]:
    # Upper triangle in column-major order: column j lists rows 0..j-1.
    j = 1
    while j * (j - 1) // 2 + j <= bit:
        j += 1
    return (bit - j * (j - 1) // 2, j)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no header)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + _encode_bigendian(n, 3)
    elif n <= 68719476735:
        head = chr(126) * 2 + _encode_bigendian(n, 6)
    else:
        raise SizeLimitExceeded(f"n={n} beyond graph6 range")
    out = [head]
    group = 0
    filled = 0
    for j in range(1, n):
        column = g.bits[j]
        for i in range(j):
            group = group << 1 | (column >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def _encode_bigendian(value: int, chunks: int) -> str:
    return "".join(
        chr(((value >> 6 * k) & 63) + 63) for k in range(chunks - 1, -1, -1)
    )


def read_graph6(text: str) -> Iterator[Graph]:
    """Yield graphs from graph6 text, one per line, skipping blank lines.

    The optional >>graph6<< header is tolerated, alone or glued to the
    first line.
    """
    for line in text.splitlines():
        line = line.strip()
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        if not line:
            continue
        yield parse_graph6(line)


# ---------------------------------------------------------------------------
# canonical form

_CANON_LIMIT = 20


def canonical_form(g: Graph, limit: int = _CANON_LIMIT) -> bytes:
    """Canonical byte string: equal iff graphs are isomorphic.

    Individualization-refinement searching all branches of the first
    non-singleton cell; the minimum packed adjacency matrix over discrete
    partitions is canonical because refinement and cell choice are
    label-independent.  Sized for n <= 20.
    """
    if g.n > limit:
        raise SizeLimitExceeded(f"canonical_form sized for n <= {limit}, got {g.n}")
    n = g.n
    if n == 0:
        return b"\x00"
    bits = g.bits
    best: list[bytes | None] = [None]

    def refine(cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
        while True:
            changed = False
            for splitter in list(cells):
                smask = 0
                for v in splitter:
                    smask |= 1 << v
                new_cells: list[tuple[int, ...]] = []
                for cell in cells:
                    if len(cell) == 1:
                        new_cells.append(cell)
                        continue
                    groups: dict[int, list[int]] = {}
                    for v in cell:
                        groups.setdefault((bits[v] & smask).bit_count(), []).append(v)
                    if len(groups) == 1:
                        new_cells.append(cell)
                    else:
                        changed = True
                        for count in sorted(groups):
                            new_cells.append(tuple(groups[count]))
                cells = new_cells
            if not changed:
                return cells

    def leaf_string(cells: list[tuple[int, ...]]) -> bytes:
        label = [0] * n
        for new, cell in enumerate(cells):
            label[cell[0]] = new
        rows = [0] * n
        for v in range(n):
            lv = label[v]
            for w in g.adj[v]:
                rows[lv] |= 1 << label[w]
        packed = bytearray([n])
        group = 0
        filled = 0
        for j in range(1, n):
            for i in range(j):
                group = group << 1 | (rows[j] >> i & 1)
                filled += 1
                if filled == 8:
                    packed.append(group)
                    group = 0
                    filled = 0
        if filled:
            packed.append(group << (8 - filled))
        return bytes(packed)

    def prefix_bytes(cells: list[tuple[int, ...]]) -> bytes:
        # Whole bytes of the packed matrix fixed by the leading singleton
        # run; every leaf below shares them, so a losing prefix prunes.
        verts = []
        for cell in cells:
            if len(cell) > 1:
                break
            verts.append(cell[0])
        out = bytearray([n])
        group = 0
        filled = 0
        for j in range(1, len(verts)):
            bj = bits[verts[j]]
            for i in range(j):
                group = group << 1 | (bj >> verts[i] & 1)
                filled += 1
                if filled == 8:
                    out.append(group)
                    group = 0
                    filled = 0
        return bytes(out)

    def explore(cells: list[tuple[int, ...]]) -> None:
        cells = refine(cells)
        if best[0] is not None:
            partial = prefix_bytes(cells)
            if partial > best[0][: len(partial)]:
                return
        target = None
        size = n + 1
        for idx, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target = idx
                size = len(cell)
        if target is None:
            s = leaf_string(cells)
            if best[0] is None or s < best[0]:
                best[0] = s
            return
        cell = cells[target]
        for v in cell if not _twin_cell(bits, cell) else cell[:1]:
            rest = tuple(w for w in cell if w != v)
            explore(cells[:target] + [(v,), rest] + cells[target + 1:])

    explore([tuple(range(n))])
    assert best[0] is not None
    return best[0]


def _twin_cell(bits: Sequence[int], cell: tuple[int, ...]) -> bool:
    """Cell whose members are pairwise swappable by an automorphism.

    True when every vertex has the same neighbors outside the cell and the
    cell is internally empty or complete; then one branch represents all.
    """
    mask = 0
    for v in cell:
        mask |= 1 << v
    outside = bits[cell[0]] & ~mask
    inside = bits[cell[0]] & mask
    empty = inside == 0
    for v in cell:
        if bits[v] & ~mask != outside:
            return False
        here = bits[v] & mask
        if empty:
            if here:
                return False
        elif here != mask ^ (1 << v):
            return False
    return True


def graph_from_canonical(form: bytes) -> Graph:
    """Rebuild the canonically labelled graph from canonical_form bytes."""
    n = form[0]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if form[1 + (pos >> 3)] >> (7 - (pos & 7)) & 1:
                edges.append((i, j))
            pos += 1
    return from_edges(n, edges)


# ---------------------------------------------------------------------------
# subgraph containment

def subgraph_monomorphism_exists(pattern: Graph, host: Graph) -> bool:
    """True when an injective map pattern -> host sends edges to edges.

    Plain subgraph (not induced): host may have extra edges among the image.
    Backtracking over pattern vertices ordered so each (after the first) has
    an already-placed neighbor, pruned by degree and neighborhood bitsets.
    """
    if pattern.n > host.n or pattern.m > host.m:
        return False
    order = _connected_first_order(pattern)
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    placed: dict[int, int] = {}
    used = 0

    def extend(idx: int) -> bool:
        nonlocal used
        if idx == len(order):
            return True
        pv = order[idx]
        anchored = [placed[w] for w in pattern.adj[pv] if w in placed]
        if anchored:
            # Candidates must be common neighbors of every placed neighbor.
            cand_mask = ~used
            for hv in anchored:
                cand_mask &= host.bits[hv]
            candidates = _mask_vertices(cand_mask, host.n)
        else:
            candidates = [v for v in range(host.n) if not used >> v & 1]
        for hv in candidates:
            if hdeg[hv] < pdeg[pv]:
                continue
            placed[pv] = hv
            used |= 1 << hv
            if extend(idx + 1):
                return True
            del placed[pv]
            used &= ~(1 << hv)
        return False

    return extend(0)


def _connected_first_order(g: Graph) -> list[int]:
    """Vertex order where each vertex after a component seed touches the prefix."""
    order: list[int] = []
    seen = [False] * g.n
    for comp in connected_components(g):
        seed = max(comp, key=lambda v: g.degree(v))
        frontier = [seed]
        seen[seed] = True
        while frontier:
            frontier.sort(key=lambda v: -g.degree(v))
            v = frontier.pop(0)
            order.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    frontier.append(w)
    return order


def _mask_vertices(mask: int, n: int) -> list[int]:
    out = []
    v = 0
    while mask and v < n:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


# ---------------------------------------------------------------------------
# connectivity

def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by least vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def bridges(g: Graph) -> set[EdgeId]:
    """All cut edges, by iterative DFS lowpoint computation."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    result: set[EdgeId] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        # Stack entries: (vertex, parent edge source, iterator index).
        stack: list[list[int]] = [[root, -1, 0]]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            frame = stack[-1]
            v, parent, idx = frame
            if idx < len(g.adj[v]):
                frame[2] += 1
                w = g.adj[v][idx]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, v, 0])
                elif w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        result.add(edge_id(p, v))
    return result
