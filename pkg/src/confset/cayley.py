"""Undirected Cayley graphs over symmetric connection sets.

Vertices are the ambient group's elements; x and y are adjacent when
x^-1 y lies in the connection set.  Components are the cosets of the
subgroup the connection set generates, and breadth-first distance from
the identity is the least word length expressing a vertex in the
connection set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, TextIO

import numpy as np

from .groups import DirectPowerGroup, Group, as_code

DEFAULT_DOT_CAP = 5000
_DIAMETER_CAP = 10_000


@dataclass
class CayleyGraph:
    ambient: Group
    connection: np.ndarray  # sorted codes, identity-free, inverse-closed
    _dist: np.ndarray | None = field(default=None, repr=False)

    @property
    def vertex_count(self) -> int:
        return self.ambient.order

    @property
    def degree(self) -> int:
        return int(self.connection.size)

    def in_connection(self, x: int | Sequence[int]) -> bool:
        code = as_code(self.ambient, x)
        pos = int(np.searchsorted(self.connection, code))
        return pos < self.degree and int(self.connection[pos]) == code

    def neighbors(self, x: int | Sequence[int]) -> list[int]:
        code = as_code(self.ambient, x)
        return [self.ambient.mul(code, int(s)) for s in self.connection]

    def vertex(self, code: int):
        """Vertex in user-facing form: a tuple over direct powers, else the id."""
        if isinstance(self.ambient, DirectPowerGroup):
            return self.ambient.unpack(int(code))
        return int(code)


def build_cayley(ambient: Group, connection) -> CayleyGraph:
    """Validate the connection set (no identity, inverse-closed) and wrap it."""
    codes = sorted({as_code(ambient, s) for s in connection})
    arr = np.array(codes, dtype=np.int64)
    if codes and codes[0] == ambient.identity:
        raise ValueError("identity cannot appear in the connection set")
    for s in codes:
        t = ambient.inv(s)
        pos = int(np.searchsorted(arr, t))
        if pos >= arr.size or int(arr[pos]) != t:
            raise ValueError(
                f"connection set is not closed under inverses (missing {t})"
            )
    return CayleyGraph(ambient, arr)


def _bfs(
    graph: CayleyGraph, source: int, visited: np.ndarray, dist: np.ndarray | None
) -> np.ndarray:
    """Mark the component of ``source`` in ``visited``; return its codes."""
    ambient = graph.ambient
    frontier = np.array([source], dtype=np.int64)
    visited[source] = True
    if dist is not None:
        dist[source] = 0
    level = 0
    collected = [frontier]
    while frontier.size:
        level += 1
        new_parts = []
        for s in graph.connection:
            prods = np.unique(ambient.mul_many(frontier, int(s)))
            prods = prods[~visited[prods]]
            if prods.size:
                visited[prods] = True
                if dist is not None:
                    dist[prods] = level
                new_parts.append(prods)
        if not new_parts:
            break
        frontier = np.concatenate(new_parts)
        collected.append(frontier)
    return np.sort(np.concatenate(collected))


@dataclass
class ComponentPartition:
    labels: np.ndarray  # component index per vertex code
    sizes: list[int]
    representatives: list[int]  # least code per component, discovery order

    @property
    def count(self) -> int:
        return len(self.sizes)

    def component_of(self, code: int) -> int:
        return int(self.labels[code])

    def members(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.labels == i)


def connected_components(graph: CayleyGraph) -> ComponentPartition:
    """Partition the vertices; blocks are cosets of the generated subgroup."""
    order = graph.vertex_count
    visited = np.zeros(order, dtype=bool)
    labels = np.full(order, -1, dtype=np.int64)
    sizes: list[int] = []
    reps: list[int] = []
    start = 0
    while start < order:
        comp = _bfs(graph, start, visited, None)
        labels[comp] = len(sizes)
        sizes.append(int(comp.size))
        reps.append(start)
        nxt = np.flatnonzero(~visited[start:])
        if nxt.size == 0:
            break
        start += int(nxt[0])
    return ComponentPartition(labels, sizes, reps)


def distances_from_identity(graph: CayleyGraph) -> np.ndarray:
    """BFS distance per vertex code; -1 marks unreachable vertices."""
    if graph._dist is None:
        order = graph.vertex_count
        visited = np.zeros(order, dtype=bool)
        dist = np.full(order, -1, dtype=np.int64)
        _bfs(graph, graph.ambient.identity, visited, dist)
        graph._dist = dist
    return graph._dist


def distance_from_identity(graph: CayleyGraph, x: int | Sequence[int]) -> int | None:
    """Least word length over the connection set reaching x, or None."""
    d = int(distances_from_identity(graph)[as_code(graph.ambient, x)])
    return None if d < 0 else d


def shortest_path_from_identity(graph: CayleyGraph, x: int | Sequence[int]) -> list:
    """A BFS-shortest vertex path from the identity to x."""
    target = as_code(graph.ambient, x)
    ambient = graph.ambient
    order = graph.vertex_count
    visited = np.zeros(order, dtype=bool)
    parent = np.full(order, -1, dtype=np.int64)
    frontier = np.array([ambient.identity], dtype=np.int64)
    visited[ambient.identity] = True
    while frontier.size and not visited[target]:
        new_parts = []
        for s in graph.connection:
            prods = ambient.mul_many(frontier, int(s))
            uniq, first = np.unique(prods, return_index=True)
            keep = ~visited[uniq]
            uniq, first = uniq[keep], first[keep]
            if uniq.size:
                visited[uniq] = True
                parent[uniq] = frontier[first]
                new_parts.append(uniq)
        if not new_parts:
            break
        frontier = np.concatenate(new_parts)
    if not visited[target]:
        raise ValueError("target is unreachable from the identity")
    path = [target]
    while path[-1] != ambient.identity:
        path.append(int(parent[path[-1]]))
    return [graph.vertex(c) for c in reversed(path)]


def factorization_to_path(graph: CayleyGraph, word: Sequence) -> list:
    """Prefix products of a word over the connection set, identity first."""
    ambient = graph.ambient
    cur = ambient.identity
    path = [cur]
    for letter in word:
        code = as_code(ambient, letter)
        if not graph.in_connection(code):
            raise ValueError(f"letter {letter!r} is not in the connection set")
        cur = ambient.mul(cur, code)
        path.append(cur)
    return [graph.vertex(c) for c in path]


def path_to_factorization(graph: CayleyGraph, path: Sequence) -> list:
    """Recover the word whose prefix products trace the given vertex path."""
    ambient = graph.ambient
    codes = [as_code(ambient, v) for v in path]
    if not codes or codes[0] != ambient.identity:
        raise ValueError("path must start at the identity")
    word = []
    for prev, nxt in zip(codes, codes[1:]):
        step = ambient.mul(ambient.inv(prev), nxt)
        if not graph.in_connection(step):
            raise ValueError(f"vertices {prev} and {nxt} are not adjacent")
        word.append(graph.vertex(step))
    return word


def export_dot(
    graph: CayleyGraph,
    sink: TextIO,
    *,
    cap: int = DEFAULT_DOT_CAP,
    force: bool = False,
) -> None:
    """Undirected DOT with quoted tuple labels, one edge per vertex pair.

    Vertices are emitted in code order and an edge when the right factor
    increases the code, so output bytes are deterministic.
    """
    order = graph.vertex_count
    if order > cap and not force:
        raise ValueError(f"vertex count {order} exceeds the DOT cap {cap}")
    ambient = graph.ambient
    sink.write("graph cayley {\n")
    for x in range(order):
        sink.write(f'  "{ambient.label(x)}";\n')
    for x in range(order):
        lx = ambient.label(x)
        for s in graph.connection:
            y = ambient.mul(x, int(s))
            if y > x:
                sink.write(f'  "{lx}" -- "{ambient.label(y)}";\n')
    sink.write("}\n")


def component_summary(graph: CayleyGraph) -> dict:
    """Component counts/sizes plus per-component diameters on small graphs.

    Each component is a coset graph of the generated subgroup, hence
    vertex-transitive, so one eccentricity per component is its diameter.
    """
    parts = connected_components(graph)
    out: dict = {"components": parts.count, "sizes": parts.sizes}
    if graph.vertex_count <= _DIAMETER_CAP:
        diameters = []
        for rep in parts.representatives:
            visited = np.zeros(graph.vertex_count, dtype=bool)
            dist = np.full(graph.vertex_count, -1, dtype=np.int64)
            _bfs(graph, rep, visited, dist)
            diameters.append(int(dist.max()))
        out["diameter_per_component"] = diameters
    return out
