"""
Simple graphs as adjacency bit rows, and their text format.

``GRAPH n`` is followed by one line of C(n, 2) bits: the upper triangle of
the adjacency matrix, row by row.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from ..core.bitset import iter_bits, popcount
from ..core.config import GRAPH_MAX_VERTICES
from ..core.errors import CapacityError, InputError

logger = logging.getLogger(__name__)

GRAPH_HEADER = "GRAPH"


class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1"""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n > GRAPH_MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {GRAPH_MAX_VERTICES} vertices")
        adj = tuple(int(row) for row in adj)
        if len(adj) != n:
            raise InputError(f"expected {n} adjacency rows, got {len(adj)}")
        for v, row in enumerate(adj):
            if row >> n or row < 0:
                raise InputError(f"row {v} has neighbours outside 0..{n - 1}")
            if row >> v & 1:
                raise InputError(f"vertex {v} has a self-loop")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise InputError(f"edge {v}-{u} is not symmetric")
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise InputError(f"bad edge ({u}, {v}) on {n} vertices")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        rows = [full & ~row & ~(1 << v) for v, row in enumerate(self.adj)]
        return SimpleGraph(self.n, rows)

    def relabel(self, ordering: Sequence[int]) -> "SimpleGraph":
        """Graph whose vertex i is vertex ordering[i] of this one.

        Vertices missing from `ordering` are dropped with their edges.
        """
        position = {v: i for i, v in enumerate(ordering)}
        rows = []
        for v in ordering:
            row = 0
            for u in iter_bits(self.adj[v]):
                if u in position:
                    row |= 1 << position[u]
            rows.append(row)
        return SimpleGraph(len(rows), rows)

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        """Induced subgraph, vertices relabelled in increasing order"""
        return self.relabel(sorted(vertices))

    def delete_vertex(self, v: int) -> "SimpleGraph":
        return self.induced(u for u in range(self.n) if u != v)

    def add_vertex(self, neighbours: int) -> "SimpleGraph":
        """New vertex n joined to the vertices in the mask `neighbours`"""
        rows = [
            row | ((neighbours >> u & 1) << self.n) for u, row in enumerate(self.adj)
        ]
        rows.append(neighbours)
        return SimpleGraph(self.n + 1, rows)

    def components(self) -> List[int]:
        """Vertex masks of connected components, by smallest vertex"""
        seen = 0
        result = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                reach = 0
                for u in iter_bits(frontier):
                    reach |= self.adj[u]
                frontier = reach & ~comp
                comp |= frontier
            seen |= comp
            result.append(comp)
        return result

    def is_clique(self, vertices: int) -> bool:
        return all(
            (self.adj[v] | 1 << v) & vertices == vertices for v in iter_bits(vertices)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edge_count()})"

    def __getstate__(self) -> Dict[str, Any]:
        return {"n": self.n, "adj": self.adj}

    def __setstate__(self, state: Dict[str, Any]) -> None:
        self.n = state["n"]
        self.adj = tuple(state["adj"])


def disjoint_union(graphs: Iterable[SimpleGraph]) -> SimpleGraph:
    rows: List[int] = []
    for G in graphs:
        offset = len(rows)
        rows.extend(row << offset for row in G.adj)
    return SimpleGraph(len(rows), rows)


def serialize_graph(G: SimpleGraph) -> str:
    bits = "".join(
        "1" if G.has_edge(u, v) else "0" for u in range(G.n) for v in range(u + 1, G.n)
    )
    return f"{GRAPH_HEADER} {G.n}\n{bits}\n"


def serialize_graphs(graphs: Iterable[SimpleGraph]) -> str:
    return "".join(serialize_graph(G) for G in graphs)


def parse_graphs(text: str) -> List[SimpleGraph]:
    """Parse every GRAPH record in `text`"""
    lines = text.splitlines()
    graphs = []
    i = 0
    while i < len(lines):
        line = lines[i].strip()
        i += 1
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] != GRAPH_HEADER:
            raise InputError(f"expected 'GRAPH n' header, got {line!r}")
        try:
            n = int(parts[1])
        except ValueError:
            raise InputError(f"bad header {line!r}") from None
        bits = lines[i].strip() if i < len(lines) else ""
        if i < len(lines):
            i += 1
        expected = n * (n - 1) // 2
        if len(bits) != expected or any(ch not in "01" for ch in bits):
            raise InputError(f"GRAPH {n} needs a line of {expected} bits")
        pairs = ((u, v) for u in range(n) for v in range(u + 1, n))
        edges = (p for p, b in zip(pairs, bits) if b == "1")
        graphs.append(SimpleGraph.from_edges(n, edges))
    return graphs


def parse_graph(text: str) -> SimpleGraph:
    graphs = parse_graphs(text)
    if len(graphs) != 1:
        raise InputError(f"expected one graph record, found {len(graphs)}")
    return graphs[0]


def read_graph_file(path: Union[str, Path]) -> SimpleGraph:
    return parse_graph(Path(path).read_text())


def write_graph_file(path: Union[str, Path], G: SimpleGraph) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_graph(G))
    logger.debug(f"Wrote {G!r} to {path}")
