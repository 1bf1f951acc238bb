"""
Graph representation, graph6 / edge-list parsing, BFS distances and the
scalar invariants the spectral analyzers consume
"""
import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from utils.errors import DisconnectedGraphError, GraphFormatError

logger = logging.getLogger(__name__)

GRAPH6_HEADER = '>>graph6<<'


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1"""
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class GraphInvariants:
    diameter: int
    transmissions: Tuple[int, ...]
    wiener: int
    max_degree: int
    second_max_degree: int
    min_degree: int
    second_min_degree: int
    transmission_regular: Optional[int]

    def to_dict(self) -> Dict:
        return {
            'diameter': self.diameter,
            'transmissions': list(self.transmissions),
            'wiener': self.wiener,
            'maxDegree': self.max_degree,
            'secondMaxDegree': self.second_max_degree,
            'minDegree': self.min_degree,
            'secondMinDegree': self.second_min_degree,
            'transmissionRegular': self.transmission_regular,
        }


def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a graph from an edge iterable; duplicates collapse"""
    if n < 0:
        raise GraphFormatError(f"negative order {n}")
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n=n, adjacency=tuple(tuple(sorted(s)) for s in nbrs))


# graph6

def _decode_order(data: bytes) -> Tuple[int, int]:
    """Return (n, header length)"""
    if not data:
        raise GraphFormatError("empty graph6 string")
    if not 63 <= data[0] <= 126:
        raise GraphFormatError(f"character {chr(data[0])!r} out of range in graph6 header")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 36-bit graph6 header")
        chunks, size = data[2:8], 8
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated 18-bit graph6 header")
        chunks, size = data[1:4], 4
    n = 0
    for c in chunks:
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {chr(c)!r} out of range in graph6 header")
        n = (n << 6) | (c - 63)
    return n, size


def parse_graph6(data, line_number: Optional[int] = None) -> Graph:
    """Decode one graph6 line (bytes or str); a trailing newline is tolerated"""
    try:
        if isinstance(data, str):
            try:
                data = data.encode('ascii')
            except UnicodeEncodeError as e:
                raise GraphFormatError(
                    f"non-ASCII character {e.object[e.start]!r} at position {e.start}") from None
        data = data.strip()
        if data.startswith(GRAPH6_HEADER.encode()):
            data = data[len(GRAPH6_HEADER):]

        n, offset = _decode_order(data)
        body = data[offset:]
        for c in body:
            if not 63 <= c <= 126:
                raise GraphFormatError(f"character {chr(c)!r} out of range 63..126")
        if n < 0:
            raise GraphFormatError("malformed graph6 header")

        bit_count = n * (n - 1) // 2
        expected = (bit_count + 5) // 6
        if len(body) != expected:
            raise GraphFormatError(
                f"expected {expected} body bytes for n={n}, got {len(body)}")
    except GraphFormatError as e:
        if line_number is None:
            raise
        raise GraphFormatError(str(e), line_number) from None

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        header = [n]
    elif n <= 258047:
        header = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        header = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]

    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        body.append(value)
    return ''.join(chr(63 + v) for v in header + body)


def parse_edge_list(text: str) -> Graph:
    """First non-empty line is n, every later non-empty line is 'u v'"""
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(num, line) for num, line in lines if line and not line.startswith('#')]
    if not lines:
        raise GraphFormatError("empty edge list")

    first_num, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise GraphFormatError(f"unparsable vertex count {first!r}", first_num) from None
    if n < 0:
        raise GraphFormatError(f"negative vertex count {n}", first_num)

    edges = []
    for num, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", num)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"unparsable token in {line!r}", num) from None
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", num)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in {line!r} for n={n}", num)
        edges.append((u, v))
    return from_edges(n, edges)


# Connectivity and distances

def _bfs(g: Graph, source: int) -> List[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return min(_bfs(g, 0)) >= 0


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    rows = []
    for source in range(g.n):
        dist = _bfs(g, source)
        if min(dist, default=0) < 0:
            raise DisconnectedGraphError(
                f"graph on {g.n} vertices is disconnected; distance matrix undefined")
        rows.append(tuple(dist))
    return DistanceMatrix(n=g.n, d=tuple(rows))


def _two_largest(values: Sequence[int]) -> Tuple[int, int]:
    ordered = sorted(values, reverse=True)
    return ordered[0], ordered[1] if len(ordered) > 1 else ordered[0]


def graph_invariants(g: Graph, dist: Optional[DistanceMatrix] = None) -> GraphInvariants:
    if dist is None:
        dist = all_pairs_distances(g)
    transmissions = tuple(sum(row) for row in dist.d)
    degrees = g.degrees or (0,)
    max_deg, second_max = _two_largest(degrees)
    low = sorted(degrees)
    min_deg, second_min = low[0], low[1] if len(low) > 1 else low[0]
    tr_regular = transmissions[0] if transmissions and len(set(transmissions)) == 1 else None

    return GraphInvariants(
        diameter=max((max(row) for row in dist.d), default=0),
        transmissions=transmissions,
        wiener=sum(transmissions) // 2,
        max_degree=max_deg,
        second_max_degree=second_max,
        min_degree=min_deg,
        second_min_degree=second_min,
        transmission_regular=tr_regular,
    )


# Structure tests

def complement(g: Graph) -> Graph:
    return from_edges(g.n, [(u, v) for u, v in combinations(range(g.n), 2)
                            if not g.has_edge(u, v)])


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_complete_multipartite(g: Graph) -> Optional[Tuple[int, ...]]:
    """
    Part sizes (descending) when the complement is a disjoint union of
    cliques with at least two parts. K_n gives n parts of size 1.
    """
    comp = complement(g)
    seen = [False] * g.n
    parts = []
    for v in range(g.n):
        if seen[v]:
            continue
        component = [u for u, d in enumerate(_bfs(comp, v)) if d >= 0]
        for u in component:
            seen[u] = True
        size = len(component)
        if any(len(comp.adjacency[u]) != size - 1 for u in component):
            return None
        parts.append(size)
    if len(parts) < 2:
        return None
    return tuple(sorted(parts, reverse=True))


def is_regular(g: Graph) -> Optional[int]:
    degrees = set(g.degrees)
    if len(degrees) == 1:
        return degrees.pop()
    return None


def is_bipartite_partition(g: Graph) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Two-colouring (P, Q) of a connected graph, P containing vertex 0"""
    if g.n == 0:
        return None
    colour = [-1] * g.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if colour[v] < 0:
                colour[v] = 1 - colour[u]
                queue.append(v)
            elif colour[v] == colour[u]:
                return None
    if min(colour) < 0:
        return None
    P = tuple(v for v in range(g.n) if colour[v] == 0)
    Q = tuple(v for v in range(g.n) if colour[v] == 1)
    return P, Q


def edge_deleted(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphFormatError(f"({u}, {v}) is not an edge")
    return from_edges(g.n, [e for e in g.edges() if e != (min(u, v), max(u, v))])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, shift = [], 0
    for h in graphs:
        edges.extend((u + shift, v + shift) for u, v in h.edges())
        shift += h.n
    return from_edges(shift, edges)


# Named graphs

def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """S_n on n vertices, centre 0"""
    return from_edges(n, [(0, i) for i in range(1, n)])


def complete_multipartite_graph(parts: Sequence[int]) -> Graph:
    labels = [p for p, size in enumerate(parts) for _ in range(size)]
    n = len(labels)
    return from_edges(n, [(u, v) for u, v in combinations(range(n), 2)
                          if labels[u] != labels[v]])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return complete_multipartite_graph((a, b))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)
