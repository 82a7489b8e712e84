"""Graph representation, dataset I/O, and the graph property functions.

Graphs are simple and undirected: edges are stored canonically as (u, v)
with u < v, no self-loops, no duplicates. The five property functions are
registered in a fixed order (degree, triangles, shortest path, clustering,
maximal cliques) so property indices are stable across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import DataFormatError, NoReachablePairs

__all__ = [
    "Graph",
    "PropertyRegistry",
    "PropertyMatrix",
    "DEFAULT_REGISTRY",
    "avg_degree",
    "triangle_count",
    "avg_shortest_path",
    "avg_clustering",
    "maximal_clique_count",
    "compute_properties",
    "load_graphs_jsonl",
    "write_graphs_jsonl",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: node count, canonical edge set, string id."""

    num_nodes: int
    edges: tuple[tuple[int, int], ...]
    id: str = ""

    def __post_init__(self):
        if self.num_nodes < 1:
            raise ValueError(f"graph {self.id!r}: num_nodes must be >= 1")
        canon = []
        for edge in self.edges:
            u, v = int(edge[0]), int(edge[1])
            if u == v:
                raise ValueError(f"graph {self.id!r}: self-loop at node {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u < v < self.num_nodes):
                raise ValueError(f"graph {self.id!r}: edge ({u}, {v}) out of range")
            canon.append((u, v))
        canon.sort()
        for prev, cur in zip(canon, canon[1:]):
            if prev == cur:
                raise ValueError(f"graph {self.id!r}: duplicate edge {cur}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_array(self) -> np.ndarray:
        """Edges as a C-contiguous (E, 2) int32 array for the kernels."""
        if not self.edges:
            return np.empty((0, 2), dtype=np.int32)
        return np.ascontiguousarray(np.asarray(self.edges, dtype=np.int32))


def avg_degree(g: Graph) -> float:
    """Mean node degree, 2|E|/n."""
    return 2.0 * g.num_edges / g.num_nodes


def triangle_count(g: Graph) -> int:
    """Exact number of triangles (3-cliques)."""
    return _kernels.triangle_count(g.num_nodes, g.edge_array())


def avg_shortest_path(g: Graph) -> float:
    """Mean BFS distance over unordered pairs within the same component.

    Cross-component pairs are excluded so the statistic stays finite on
    disconnected graphs; a graph with no edges has no reachable pair at all
    and raises NoReachablePairs.
    """
    total, pairs = _kernels.path_length_stats(g.num_nodes, g.edge_array())
    if pairs == 0:
        raise NoReachablePairs(f"graph {g.id!r} has no connected pair of nodes")
    return total / pairs


def avg_clustering(g: Graph) -> float:
    """Mean local clustering coefficient; nodes of degree < 2 contribute 0."""
    return _kernels.clustering_sum(g.num_nodes, g.edge_array()) / g.num_nodes


def maximal_clique_count(g: Graph) -> int:
    """Number of maximal cliques (Bron-Kerbosch with pivoting, exact)."""
    return _kernels.maximal_clique_count(g.num_nodes, g.edge_array())


@dataclass(frozen=True)
class PropertyRegistry:
    """Ordered collection of named graph property functions."""

    entries: tuple[tuple[str, Callable[[Graph], float]], ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("property registry must not be empty")
        names = [name for name, _ in self.entries]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate property names: {names}")

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    def index(self, name_or_index: str | int) -> int:
        if isinstance(name_or_index, str):
            try:
                return self.names.index(name_or_index)
            except ValueError:
                raise KeyError(f"unknown property {name_or_index!r}") from None
        idx = int(name_or_index)
        if not 0 <= idx < len(self):
            raise IndexError(f"property index {idx} out of range for m={len(self)}")
        return idx

    def function(self, name_or_index: str | int) -> Callable[[Graph], float]:
        return self.entries[self.index(name_or_index)][1]

    def subset(self, names: Sequence[str]) -> "PropertyRegistry":
        return PropertyRegistry(tuple((n, self.function(n)) for n in names))


DEFAULT_REGISTRY = PropertyRegistry(
    (
        ("avg_degree", avg_degree),
        ("triangle_count", triangle_count),
        ("avg_shortest_path", avg_shortest_path),
        ("avg_clustering", avg_clustering),
        ("maximal_clique_count", maximal_clique_count),
    )
)


@dataclass(frozen=True)
class PropertyMatrix:
    """Per-graph property vectors: rows align with graph ids, columns with names."""

    ids: tuple[str, ...]
    names: tuple[str, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (len(self.ids), len(self.names)):
            raise ValueError(
                f"values shape {values.shape} does not match "
                f"{len(self.ids)} graphs x {len(self.names)} properties"
            )
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.ids)

    @property
    def num_properties(self) -> int:
        return len(self.names)

    def column(self, name_or_index: str | int) -> np.ndarray:
        if isinstance(name_or_index, str):
            name_or_index = self.names.index(name_or_index)
        return self.values[:, name_or_index]

    def rows(self, indices) -> "PropertyMatrix":
        indices = np.asarray(indices)
        if indices.dtype == bool:
            indices = np.flatnonzero(indices)
        return PropertyMatrix(
            ids=tuple(self.ids[i] for i in indices),
            names=self.names,
            values=self.values[indices],
        )


def compute_properties(
    graphs: Sequence[Graph], registry: PropertyRegistry = DEFAULT_REGISTRY
) -> PropertyMatrix:
    """Evaluate every registered property on every graph, order preserved."""
    values = np.empty((len(graphs), len(registry)), dtype=float)
    for i, g in enumerate(graphs):
        for j, (name, fn) in enumerate(registry.entries):
            try:
                values[i, j] = fn(g)
            except Exception as exc:
                raise type(exc)(f"graph {g.id!r}, property {name!r}: {exc}") from exc
    if values.size and not np.all(np.isfinite(values)):
        bad = np.argwhere(~np.isfinite(values))[0]
        raise ValueError(
            f"non-finite property value for graph {graphs[bad[0]].id!r}, "
            f"property {registry.names[bad[1]]!r}"
        )
    return PropertyMatrix(
        ids=tuple(g.id for g in graphs), names=registry.names, values=values
    )


def load_graphs_jsonl(path) -> list[Graph]:
    """Read a JSON-lines graph dataset; malformed lines abort with the line number."""
    graphs = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
                graphs.append(
                    Graph(
                        num_nodes=int(record["num_nodes"]),
                        edges=tuple((int(u), int(v)) for u, v in record["edges"]),
                        id=str(record["id"]),
                    )
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise DataFormatError(f"{path}: line {lineno}: {exc}") from exc
    return graphs


def write_graphs_jsonl(graphs: Iterable[Graph], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for g in graphs:
            record = {
                "id": g.id,
                "num_nodes": g.num_nodes,
                "edges": [[u, v] for u, v in g.edges],
            }
            fh.write(json.dumps(record, separators=(",", ":")) + "\n")
