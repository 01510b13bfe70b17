"""Immutable simple graphs, multigraphs and vertex orders, plus the edge-list format.

Text format (one directive per line)::

    # comment
    v <id>        declare a (possibly isolated) vertex
    e <u> <v>     undirected edge, u != v

Labels are non-negative decimal integers.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from typing import TextIO

from .errors import DomainError, ParseError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with non-negative integer labels.

    Instances are immutable; every transform returns a new graph.
    """

    __slots__ = ("_adj", "_m", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            _check_label(v)
            adj.setdefault(v, set())
        for u, v in edges:
            _check_label(u)
            _check_label(v)
            if u == v:
                raise DomainError(f"self-loop on vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._m = sum(len(nb) for nb in self._adj.values()) // 2
        self._hash = None

    @classmethod
    def _from_adj(cls, adj: Mapping[int, frozenset[int]]) -> Graph:
        g = cls.__new__(cls)
        g._adj = dict(adj)
        g._m = sum(len(nb) for nb in g._adj.values()) // 2
        g._hash = None
        return g

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._adj))

    @property
    def num_edges(self) -> int:
        return self._m

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return sorted((u, v) for u, nb in self._adj.items() for v in nb if u < v)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise DomainError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        nb = self._adj.get(u)
        return nb is not None and v in nb

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj.values()), default=0)

    def max_label(self) -> int:
        return max(self._adj, default=-1)

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    def check_subset(self, s: Iterable[int]) -> frozenset[int]:
        s = frozenset(s)
        unknown = s - self._adj.keys()
        if unknown:
            raise DomainError(f"unknown vertex label(s): {sorted(unknown)}")
        return s

    def without_edges(self, drop) -> Graph:
        """Return a copy without the edges ``uv`` for which ``drop(u, v)`` is true."""
        adj = {v: frozenset(u for u in nb if not drop(v, u)) for v, nb in self._adj.items()}
        return Graph._from_adj(adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, frozenset(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self.num_edges})"


def _check_label(v: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise DomainError(f"vertex labels must be non-negative integers, got {v!r}")


class Multigraph:
    """Undirected multigraph without loops; ``multiplicity[(u, v)]`` with ``u < v``."""

    __slots__ = ("_vertices", "_mult")

    def __init__(self, vertices: Iterable[int] = (), multiplicity: Mapping[Edge, int] | None = None):
        self._vertices = frozenset(vertices)
        mult: dict[Edge, int] = {}
        for (u, v), c in (multiplicity or {}).items():
            if u == v:
                raise DomainError(f"self-loop on vertex {u}")
            if c < 1:
                raise DomainError(f"multiplicity of {u}-{v} must be positive, got {c}")
            if u not in self._vertices or v not in self._vertices:
                raise DomainError(f"edge {u}-{v} has an endpoint outside the vertex set")
            key = _norm(u, v)
            mult[key] = mult.get(key, 0) + c
        self._mult = mult

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[Edge]) -> Multigraph:
        mult: dict[Edge, int] = {}
        for u, v in edges:
            key = _norm(u, v)
            mult[key] = mult.get(key, 0) + 1
        return cls(vertices, mult)

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    def mu(self, u: int, v: int) -> int:
        return self._mult.get(_norm(u, v), 0)

    def multiplicities(self) -> dict[Edge, int]:
        return dict(sorted(self._mult.items()))

    @property
    def num_edges(self) -> int:
        """Edge count with multiplicity."""
        return sum(self._mult.values())

    def degree(self, v: int) -> int:
        return sum(c for (a, b), c in self._mult.items() if v in (a, b))

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(b if a == v else a for (a, b) in self._mult if v in (a, b))

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self._vertices), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._mult == other._mult

    def __repr__(self) -> str:
        return f"Multigraph(n={len(self._vertices)}, m={self.num_edges})"


class VertexOrder:
    """A sequence of distinct labels with O(1) position lookup."""

    __slots__ = ("sequence", "_pos")

    def __init__(self, sequence: Iterable[int]):
        self.sequence = tuple(sequence)
        self._pos = {v: i for i, v in enumerate(self.sequence)}
        if len(self._pos) != len(self.sequence):
            raise DomainError("vertex order contains a repeated label")

    def position(self, v: int) -> int:
        return self._pos[v]

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sequence)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexOrder):
            return NotImplemented
        return self.sequence == other.sequence

    def __repr__(self) -> str:
        return f"VertexOrder({list(self.sequence)})"

    def check_permutation_of(self, g: Graph) -> None:
        if set(self._pos) != set(g.vertices):
            raise DomainError("order is not a permutation of the graph's vertex set")

    def later_neighbors(self, g: Graph, v: int) -> list[int]:
        p = self._pos[v]
        return sorted((u for u in g.neighbors(v) if self._pos[u] > p), key=self._pos.__getitem__)

    def to_text(self) -> str:
        return " ".join(map(str, self.sequence)) + "\n"

    @classmethod
    def from_text(cls, text: str) -> VertexOrder:
        try:
            return cls(int(tok) for tok in text.split())
        except ValueError as exc:
            raise ParseError(f"bad vertex order: {exc}") from None


# ---------------------------------------------------------------- transforms

def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    s = g.check_subset(s)
    return Graph._from_adj({v: g.neighbors(v) & s for v in s})


def underlying_simple(m: Multigraph) -> Graph:
    return Graph(m.vertices, m.multiplicities().keys())


def complement(g: Graph) -> Graph:
    vs = g.vertices
    return Graph._from_adj({v: vs - g.neighbors(v) - {v} for v in vs})


def relabel(g: Graph, mapping: Mapping[int, int]) -> Graph:
    return Graph((mapping[v] for v in g.vertices), ((mapping[u], mapping[v]) for u, v in g.edges()))


# ---------------------------------------------------------------- text I/O

def parse_graph(text: str | Iterable[str]) -> Graph:
    """Parse the edge-list format; duplicate edge lines collapse to one edge."""
    lines = text.splitlines() if isinstance(text, str) else text
    vertices: list[int] = []
    edges: list[Edge] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        try:
            nums = [int(a) for a in args]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if any(x < 0 for x in nums):
            raise ParseError("negative vertex label", lineno)
        if kind == "v" and len(nums) == 1:
            vertices.append(nums[0])
        elif kind == "e" and len(nums) == 2:
            u, v = nums
            if u == v:
                raise ParseError("self-loop", lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    return Graph(vertices, edges)


def serialize_graph(g: Graph) -> str:
    """Canonical form: sorted ``v`` lines, then sorted ``e`` lines with u < v."""
    out = [f"v {v}" for v in sorted(g.vertices)]
    out += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(out) + ("\n" if out else "")


def read_graph(fh: TextIO | str) -> Graph:
    if isinstance(fh, str):
        with open(fh) as f:
            return parse_graph(f.read())
    return parse_graph(fh.read())


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w") as f:
        f.write(serialize_graph(g))


def parse_vertex_list(text: str) -> list[int]:
    """One label per line; blank lines and ``#`` comments are ignored."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            v = int(line)
        except ValueError:
            raise ParseError(f"non-integer label {line!r}", lineno) from None
        if v < 0:
            raise ParseError("negative vertex label", lineno)
        out.append(v)
    return out


def serialize_vertex_list(vs: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in sorted(vs))


# ---------------------------------------------------------------- small families

def complete_graph(n: int, start: int = 0) -> Graph:
    vs = range(start, start + n)
    return Graph(vs, ((u, v) for u in vs for v in vs if u < v))


def cycle_graph(n: int) -> Graph:
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))


def empty_graph(n: int) -> Graph:
    return Graph(range(n))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(range(a + b), ((u, a + v) for u in range(a) for v in range(b)))


def star_graph(leaves: int) -> Graph:
    return Graph(range(leaves + 1), ((0, i) for i in range(1, leaves + 1)))
