"""Immutable simple undirected graphs: construction, parsing, generators.

Vertices are dense integer ids in [0, n). Edges are stored in canonical
order (sorted by (min endpoint, max endpoint)) so that every enumeration
over edge subsets is deterministic and subset bitmasks are reproducible:
bit i of a mask always refers to ``graph.edges[i]``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphError, ParseError


class Edge(NamedTuple):
    """Undirected edge with endpoints normalized so that u < v."""

    u: int
    v: int


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adjacency[v]`` is the neighbor set of v, i.e. the symmetric closure
    of ``edges``. Instances are immutable and safe to share between
    threads or processes.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered endpoint pairs, validating simplicity."""
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        seen: set[Edge] = set()
        edges: list[Edge] = []
        for u, v in pairs:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            e = Edge(u, v) if u < v else Edge(v, u)
            if e in seen:
                raise GraphError(f"duplicate edge ({e.u}, {e.v})")
            seen.add(e)
            edges.append(e)
        edges.sort()
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            neighbors[e.u].add(e.v)
            neighbors[e.v].add(e.u)
        return cls(n, tuple(edges), tuple(frozenset(s) for s in neighbors))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class IsolatedSplit:
    """Partition of a graph into its isolated vertices and the rest.

    ``stripped`` is the graph on the non-isolated vertices, relabeled to
    dense ids via ``relabel_map`` (original id -> new id). The stripped
    graph never contains a degree-0 vertex.
    """

    isolated: frozenset[int]
    stripped: Graph
    relabel_map: dict[int, int]


@dataclass(frozen=True)
class PropertyReport:
    """Structural facts about a graph.

    ``is_regular`` holds the common degree when all degrees agree, else
    None (and None for the empty graph). ``components`` partitions the
    vertex set, ordered by smallest member.
    """

    is_regular: int | None
    is_bipartite: bool
    is_connected: bool
    components: tuple[frozenset[int], ...]


# ---------------------------------------------------------------------------
# parsing / serialization


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse edge-list text into a Graph.

    Two formats are autodetected on the first significant line:

    * native: header ``n m``, then exactly m lines ``u v`` with 0-based
      vertex ids; lines starting with ``#`` and blank lines are ignored.
    * DIMACS-like: header ``p edge n m``, edge lines ``e u v`` with
      1-based ids, comment lines starting with ``c``.

    Raises ParseError with the offending line number for malformed
    headers, out-of-range ids, self-loops, duplicate edges, and
    edge-count mismatches.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    significant: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        significant.append((lineno, line))
    if not significant:
        raise ParseError("no header line found (input is empty or all comments)")
    first = significant[0][1]
    if first[0] in ("p", "c") and (len(first) == 1 or first[1].isspace()):
        return _parse_dimacs(significant)
    return _parse_native(significant)


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: {what} {token!r} is not an integer") from None


def _parse_native(lines: list[tuple[int, str]]) -> Graph:
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: malformed header {header!r}, expected 'n m'")
    n = _parse_int(parts[0], lineno, "vertex count")
    m = _parse_int(parts[1], lineno, "edge count")
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: header counts must be nonnegative")
    body = lines[1:]
    if len(body) < m:
        raise ParseError(f"edge count mismatch: header declares {m} edges, found {len(body)}")
    if len(body) > m:
        extra_lineno = body[m][0]
        raise ParseError(
            f"line {extra_lineno}: unexpected extra line, header declares {m} edges"
        )
    pairs = [_parse_edge_line(lineno, line, n) for lineno, line in body]
    return _build_parsed(n, pairs)


def _parse_dimacs(lines: list[tuple[int, str]]) -> Graph:
    rows = [(lineno, line) for lineno, line in lines if line.split()[0] != "c"]
    if not rows:
        raise ParseError("no 'p edge' header line found in DIMACS input")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] != "edge":
        raise ParseError(
            f"line {lineno}: malformed header {header!r}, expected 'p edge n m'"
        )
    n = _parse_int(parts[2], lineno, "vertex count")
    m = _parse_int(parts[3], lineno, "edge count")
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: header counts must be nonnegative")
    body = rows[1:]
    if len(body) < m:
        raise ParseError(f"edge count mismatch: header declares {m} edges, found {len(body)}")
    if len(body) > m:
        extra_lineno = body[m][0]
        raise ParseError(
            f"line {extra_lineno}: unexpected extra line, header declares {m} edges"
        )
    pairs = []
    for edge_lineno, line in body:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "e":
            raise ParseError(f"line {edge_lineno}: malformed edge line {line!r}, expected 'e u v'")
        u = _parse_int(parts[1], edge_lineno, "vertex id")
        v = _parse_int(parts[2], edge_lineno, "vertex id")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"line {edge_lineno}: vertex id out of range [1, {n}]")
        if u == v:
            raise ParseError(f"line {edge_lineno}: self-loop at vertex {u}")
        pairs.append((edge_lineno, u - 1, v - 1))
    return _build_parsed(n, pairs)


def _parse_edge_line(lineno: int, line: str, n: int) -> tuple[int, int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: malformed edge line {line!r}, expected 'u v'")
    u = _parse_int(parts[0], lineno, "vertex id")
    v = _parse_int(parts[1], lineno, "vertex id")
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(f"line {lineno}: vertex id out of range [0, {n})")
    if u == v:
        raise ParseError(f"line {lineno}: self-loop at vertex {u}")
    return (lineno, u, v)


def _build_parsed(n: int, pairs: list[tuple[int, int, int]]) -> Graph:
    seen: dict[tuple[int, int], int] = {}
    for lineno, u, v in pairs:
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(
                f"line {lineno}: duplicate edge ({u}, {v}), first seen on line {seen[key]}"
            )
        seen[key] = lineno
    return Graph.from_edges(n, [(u, v) for _, u, v in pairs])


def to_edge_list(g: Graph) -> str:
    """Serialize a graph in the native edge-list format (canonical edge order)."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{e.u} {e.v}" for e in g.edges)
    return "\n".join(out) + "\n"


def load_graph(path) -> Graph:
    """Read and parse a graph file."""
    with open(path, "rb") as fh:
        return parse_edge_list(fh.read())


# ---------------------------------------------------------------------------
# transformations


def strip_isolated(g: Graph) -> IsolatedSplit:
    """Split off the degree-0 vertices, relabeling the remainder densely."""
    kept = [v for v in range(g.n) if g.adjacency[v]]
    isolated = frozenset(v for v in range(g.n) if not g.adjacency[v])
    relabel = {v: i for i, v in enumerate(kept)}
    stripped = Graph.from_edges(len(kept), [(relabel[e.u], relabel[e.v]) for e in g.edges])
    return IsolatedSplit(isolated=isolated, stripped=stripped, relabel_map=relabel)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices (relabeled densely in sorted order)."""
    chosen = sorted(set(vertices))
    for v in chosen:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} not in [0, {g.n})")
    relabel = {v: i for i, v in enumerate(chosen)}
    pairs = [(relabel[e.u], relabel[e.v]) for e in g.edges if e.u in relabel and e.v in relabel]
    return Graph.from_edges(len(chosen), pairs)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; b's vertices are shifted up by a.n."""
    pairs = [(e.u, e.v) for e in a.edges]
    pairs.extend((e.u + a.n, e.v + a.n) for e in b.edges)
    return Graph.from_edges(a.n + b.n, pairs)


def add_isolated(g: Graph, t: int) -> Graph:
    """Append t isolated vertices."""
    if t < 0:
        raise GraphError(f"cannot add {t} vertices")
    return Graph.from_edges(g.n + t, [(e.u, e.v) for e in g.edges])


# ---------------------------------------------------------------------------
# generators


def gen_family(name: str, size: int | None = None) -> Graph:
    """Build a named test-family graph.

    Families: path, cycle, complete, complete_bipartite (K_{s,s}), star
    (on ``size`` vertices), cube_q3 (the 3-dimensional hypercube; ignores
    ``size``), prism (over a cycle of length ``size``; requires ``size``
    even and >= 4 so the result is 3-regular, planar and bipartite).
    """
    if name == "cube_q3":
        return _cube_q3()
    builder = _FAMILIES.get(name)
    if builder is None:
        known = ", ".join(sorted(list(_FAMILIES) + ["cube_q3"]))
        raise ValueError(f"unknown family {name!r}; known families: {known}")
    if size is None:
        raise ValueError(f"family {name!r} requires a size")
    return builder(size)


def _gen_path(s: int) -> Graph:
    if s < 1:
        raise ValueError(f"path size must be >= 1, got {s}")
    return Graph.from_edges(s, [(i, i + 1) for i in range(s - 1)])


def _gen_cycle(s: int) -> Graph:
    if s < 3:
        raise ValueError(f"cycle size must be >= 3, got {s}")
    return Graph.from_edges(s, [(i, (i + 1) % s) for i in range(s)])


def _gen_complete(s: int) -> Graph:
    if s < 1:
        raise ValueError(f"complete size must be >= 1, got {s}")
    return Graph.from_edges(s, [(i, j) for i in range(s) for j in range(i + 1, s)])


def _gen_complete_bipartite(s: int) -> Graph:
    if s < 1:
        raise ValueError(f"complete_bipartite size must be >= 1, got {s}")
    return Graph.from_edges(2 * s, [(i, s + j) for i in range(s) for j in range(s)])


def _gen_star(s: int) -> Graph:
    if s < 1:
        raise ValueError(f"star size must be >= 1, got {s}")
    return Graph.from_edges(s, [(0, i) for i in range(1, s)])


def _cube_q3() -> Graph:
    pairs = []
    for a in range(8):
        for bit in (1, 2, 4):
            b = a ^ bit
            if a < b:
                pairs.append((a, b))
    return Graph.from_edges(8, pairs)


def _gen_prism(s: int) -> Graph:
    # Odd cycle lengths give odd cycles in the prism, breaking bipartiteness.
    if s < 4 or s % 2 != 0:
        raise ValueError(f"prism size must be even and >= 4, got {s}")
    pairs = [(i, (i + 1) % s) for i in range(s)]
    pairs.extend((s + i, s + (i + 1) % s) for i in range(s))
    pairs.extend((i, s + i) for i in range(s))
    return Graph.from_edges(2 * s, pairs)


_FAMILIES = {
    "path": _gen_path,
    "cycle": _gen_cycle,
    "complete": _gen_complete,
    "complete_bipartite": _gen_complete_bipartite,
    "star": _gen_star,
    "prism": _gen_prism,
}

FAMILY_NAMES: tuple[str, ...] = tuple(sorted(list(_FAMILIES) + ["cube_q3"]))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style G(n, p) with a deterministic seeded generator.

    The same (n, p, seed) always produces the same edge list: pairs are
    visited in lexicographic order and included when the next draw from
    ``random.Random(seed)`` falls below p.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, pairs)


# ---------------------------------------------------------------------------
# structural properties


def connected_components(g: Graph) -> tuple[frozenset[int], ...]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = {start}
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return tuple(comps)


def check_properties(g: Graph) -> PropertyReport:
    """Report regularity, bipartiteness, connectivity and components."""
    comps = connected_components(g)
    degrees = [len(s) for s in g.adjacency]
    if g.n == 0:
        regular: int | None = None
    else:
        regular = degrees[0] if all(d == degrees[0] for d in degrees) else None
    color: dict[int, int] = {}
    bipartite = True
    for comp in comps:
        start = min(comp)
        color[start] = 0
        queue = deque([start])
        while queue and bipartite:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in color:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    bipartite = False
                    break
        if not bipartite:
            break
    return PropertyReport(
        is_regular=regular,
        is_bipartite=bipartite,
        is_connected=len(comps) <= 1,
        components=comps,
    )
