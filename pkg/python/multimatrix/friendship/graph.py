"""Partitioned graphs and their `pg` text format.

Format::

    pg <nparts> <nvertices> <nedges>
    part <p> <v1> <v2> ...
    edge <u> <v>

Vertex ids are 1..nvertices and each id belongs to exactly one part.
"""

from __future__ import annotations

import hashlib
import itertools
from collections.abc import Iterable, Sequence

import networkx as nx

from multimatrix.core.matrix import pad_to_square
from multimatrix.exceptions import InputError, ParseError

Edge = tuple[int, int]


class PartitionedGraph:
    """Undirected graph whose vertex set is split into ordered parts A^1..A^n.

    Parts are stored sorted, so the i-th vertex of a part is its i-th smallest id.
    """

    __slots__ = ("parts", "graph", "_part_of")

    def __init__(self, parts: Sequence[Iterable[int]], edges: Iterable[Edge] = ()) -> None:
        self.parts: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(p)) for p in parts)
        if not self.parts:
            raise InputError("a partitioned graph needs at least one part")
        self._part_of: dict[int, int] = {}
        for index, part in enumerate(self.parts, 1):
            for v in part:
                if v in self._part_of:
                    raise InputError(f"vertex {v} appears in parts {self._part_of[v]} and {index}")
                self._part_of[v] = index

        self.graph = nx.Graph()
        for v in sorted(self._part_of):
            self.graph.add_node(v, part=self._part_of[v])
        for u, v in edges:
            if u == v:
                raise InputError(f"edge {u}-{v} is a loop")
            for w in (u, v):
                if w not in self._part_of:
                    raise InputError(f"edge {u}-{v} uses vertex {w} outside every part")
            self.graph.add_edge(u, v)

    @classmethod
    def complete_multipartite(cls, n: int, k: int) -> PartitionedGraph:
        parts = [range(p * k + 1, (p + 1) * k + 1) for p in range(n)]
        edges = [
            (u, v)
            for a, b in itertools.combinations(parts, 2)
            for u in a
            for v in b
        ]
        return cls(parts, edges)

    @classmethod
    def from_marriage(cls, rows: Sequence[Sequence[int]]) -> PartitionedGraph:
        """Girls (part 1) and boys (part 2) from an m x l acquaintance matrix, m <= l.

        Missing girls are added without acquaintances, matching zero-padded rows.
        """
        square = pad_to_square(rows)
        k = square.shape.k
        girls, boys = range(1, k + 1), range(k + 1, 2 * k + 1)
        edges = [(g, k + b) for g, b in square.ones_coords()]
        return cls([girls, boys], edges)

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def vertices(self) -> list[int]:
        return sorted(self._part_of)

    @property
    def edges(self) -> list[Edge]:
        return sorted((min(u, v), max(u, v)) for u, v in self.graph.edges)

    def part_of(self, v: int) -> int:
        return self._part_of[v]

    def position(self, v: int) -> int:
        """1-based index of `v` inside its part."""
        return self.parts[self._part_of[v] - 1].index(v) + 1

    def has_edge(self, u: int, v: int) -> bool:
        return self.graph.has_edge(u, v)

    def neighbors(self, v: int) -> set[int]:
        return set(self.graph.neighbors(v))

    def inter_part_edges(self) -> list[Edge]:
        return [(u, v) for u, v in self.edges if self._part_of[u] != self._part_of[v]]

    def without_edge(self, edge: Edge) -> PartitionedGraph:
        return PartitionedGraph(self.parts, [e for e in self.edges if e != edge])

    def check_friendship(self) -> int:
        """Validate the friendship setting and return the common part size k.

        Raises:
            InputError: Fewer than two parts, unequal or empty parts, or an intra-part edge.
        """
        if self.n < 2:
            raise InputError(f"friendship graphs need at least 2 parts, got {self.n}")
        sizes = {len(p) for p in self.parts}
        if len(sizes) != 1 or 0 in sizes:
            raise InputError(f"parts must have equal non-zero size, got sizes {self.part_sizes}")
        for u, v in self.edges:
            if self._part_of[u] == self._part_of[v]:
                raise InputError(f"edge {u}-{v} lies inside part {self._part_of[u]}")
        return sizes.pop()

    @property
    def part_sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartitionedGraph):
            return NotImplemented
        return self.parts == other.parts and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.parts, tuple(self.edges)))

    def __repr__(self) -> str:
        return f"PartitionedGraph(parts={self.part_sizes}, edges={self.graph.number_of_edges()})"


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"{token!r} is not an integer") from None


def parse_graph(text: bytes | str) -> PartitionedGraph:
    """Parse the `pg` format.

    Raises:
        ParseError: Malformed header or record, unknown or duplicated vertex, count mismatch.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    records = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), 1)
        if line.split() and not line.lstrip().startswith("#")
    ]
    if not records:
        raise ParseError(1, "missing header")
    number, header = records[0]
    if len(header) != 4 or header[0] != "pg":
        raise ParseError(number, "header must be 'pg <nparts> <nvertices> <nedges>'")
    nparts, nvertices, nedges = (_int(t, number) for t in header[1:])

    parts: dict[int, list[int]] = {}
    owner: dict[int, int] = {}
    edges: list[Edge] = []
    last = number
    for number, tokens in records[1:]:
        last = number
        if tokens[0] == "part":
            if len(tokens) < 2:
                raise ParseError(number, "part record needs a part number")
            p = _int(tokens[1], number)
            if not 1 <= p <= nparts:
                raise ParseError(number, f"part {p} out of range 1..{nparts}")
            if p in parts:
                raise ParseError(number, f"part {p} listed twice")
            parts[p] = []
            for token in tokens[2:]:
                v = _int(token, number)
                if not 1 <= v <= nvertices:
                    raise ParseError(number, f"vertex {v} out of range 1..{nvertices}")
                if v in owner:
                    raise ParseError(number, f"vertex {v} already in part {owner[v]}")
                owner[v] = p
                parts[p].append(v)
        elif tokens[0] == "edge":
            if len(tokens) != 3:
                raise ParseError(number, f"edge record needs 2 vertices, got {len(tokens) - 1}")
            u, v = _int(tokens[1], number), _int(tokens[2], number)
            for w in (u, v):
                if w not in owner:
                    raise ParseError(number, f"edge uses vertex {w} that is in no part")
            if u == v:
                raise ParseError(number, f"edge {u}-{v} is a loop")
            edges.append((u, v))
        else:
            raise ParseError(number, f"unknown record {tokens[0]!r}")

    if sorted(parts) != list(range(1, nparts + 1)):
        raise ParseError(last, f"expected parts 1..{nparts}, got {sorted(parts)}")
    if len(owner) != nvertices:
        missing = sorted(set(range(1, nvertices + 1)) - set(owner))
        raise ParseError(last, f"vertices {missing} belong to no part")
    if len(edges) != nedges:
        raise ParseError(last, f"header announces {nedges} edges, found {len(edges)}")
    if len({frozenset(e) for e in edges}) != len(edges):
        raise ParseError(last, "duplicate edge")
    return PartitionedGraph([parts[p] for p in range(1, nparts + 1)], edges)


def serialize_graph(g: PartitionedGraph) -> bytes:
    """Canonical `pg` text; vertex ids must be exactly 1..|V|."""
    if g.vertices != list(range(1, len(g.vertices) + 1)):
        raise InputError("vertex ids must be 1..|V| to serialize")
    edges = g.edges
    out = [f"pg {g.n} {len(g.vertices)} {len(edges)}"]
    out += [" ".join(["part", str(p), *map(str, part)]) for p, part in enumerate(g.parts, 1)]
    out += [f"edge {u} {v}" for u, v in edges]
    return ("\n".join(out) + "\n").encode("utf-8")


def graph_digest(data: PartitionedGraph | bytes) -> str:
    if not isinstance(data, bytes):
        data = serialize_graph(data)
    return "sha256:" + hashlib.sha256(data).hexdigest()
