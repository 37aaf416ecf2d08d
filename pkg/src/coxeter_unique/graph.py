"""Coxeter graphs: data model, text format, and the structural analysis
needed to classify connected components.

A bond between two generators carries a label ``m >= 3`` or ``INF``. Pairs
without a bond commute (``m = 2``); the label 2 is never stored.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Union

INF = math.inf

NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")

Label = Union[int, float]  # int >= 3, or INF
VertexRef = Union[str, int]
Word = tuple  # tuple[int, ...] of generator indices


class GraphError(ValueError):
    """Base class for invalid graph input or a violated precondition."""


class GraphSyntaxError(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class DuplicateVertex(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfBond(GraphError):
    pass


class InvalidLabel(GraphError):
    pass


class NotATree(GraphError):
    pass


class EdgeAbsent(GraphError):
    pass


class Disconnected(GraphError):
    pass


class EmptyComponent(GraphError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    index: int


def check_label(label) -> Label:
    if label == INF:
        return INF
    if isinstance(label, bool) or not isinstance(label, int):
        raise InvalidLabel(f"bond label must be an integer >= 3 or inf, got {label!r}")
    if label < 3:
        raise InvalidLabel(f"bond label must be >= 3 (m = 2 means no bond), got {label}")
    return label


def format_label(label: Label) -> str:
    return "inf" if label == INF else str(label)


@dataclass(frozen=True)
class CoxeterGraph:
    """An immutable Coxeter graph.

    ``names`` fixes the vertex order; ``bonds`` maps index pairs ``(i, j)``
    with ``i < j`` to labels. Use :meth:`build` rather than the raw
    constructor so that everything gets validated.
    """

    names: tuple
    bonds: dict = field(default_factory=dict)
    _index: dict = field(init=False, repr=False, compare=False)
    _adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {}
        for i, name in enumerate(self.names):
            if not isinstance(name, str) or not NAME_RE.match(name):
                raise GraphSyntaxError(f"invalid vertex name {name!r}")
            if name in index:
                raise DuplicateVertex(f"vertex {name!r} declared twice")
            index[name] = i
        n = len(self.names)
        adj = [[] for _ in range(n)]
        for (i, j), label in self.bonds.items():
            if not (0 <= i < n and 0 <= j < n):
                raise UnknownVertex(f"bond ({i}, {j}) out of range")
            if i == j:
                raise SelfBond(f"self-bond on {self.names[i]!r}")
            if i > j:
                raise GraphError("bond keys must be ordered pairs (i < j)")
            check_label(label)
            adj[i].append(j)
            adj[j].append(i)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    def __hash__(self):
        return hash((self.names, tuple(sorted(self.bonds.items()))))

    @classmethod
    def build(cls, names: Iterable[str], edges: Iterable[tuple] = ()) -> "CoxeterGraph":
        """Build from vertex names and ``(u, v, label)`` triples keyed by name."""
        names = tuple(names)
        index = {}
        for i, name in enumerate(names):
            if name in index:
                raise DuplicateVertex(f"vertex {name!r} declared twice")
            index[name] = i
        bonds = {}
        for u, v, label in edges:
            for x in (u, v):
                if x not in index:
                    raise UnknownVertex(f"edge references undeclared vertex {x!r}")
            if u == v:
                raise SelfBond(f"self-bond on {u!r}")
            key = tuple(sorted((index[u], index[v])))
            if key in bonds:
                raise DuplicateEdge(f"edge {u} {v} given twice")
            bonds[key] = check_label(label)
        return cls(names, bonds)

    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    @property
    def generators(self) -> tuple:
        return tuple(Generator(name, i) for i, name in enumerate(self.names))

    def index(self, v: VertexRef) -> int:
        if isinstance(v, str):
            try:
                return self._index[v]
            except KeyError:
                raise UnknownVertex(f"no vertex named {v!r}") from None
        if not 0 <= v < self.n:
            raise UnknownVertex(f"vertex index {v} out of range")
        return v

    def m(self, r: VertexRef, s: VertexRef) -> Label:
        """Coxeter matrix entry: 1 on the diagonal, the label if bonded, else 2."""
        i, j = self.index(r), self.index(s)
        if i == j:
            return 1
        return self.bonds.get((i, j) if i < j else (j, i), 2)

    def neighbors(self, v: VertexRef) -> tuple:
        return self._adj[self.index(v)]

    def bond_list(self) -> list:
        """``(i, j, label)`` for every bond, sorted by index pair."""
        return [(i, j, lab) for (i, j), lab in sorted(self.bonds.items())]

    def edges_by_name(self) -> list:
        return [(self.names[i], self.names[j], lab) for i, j, lab in self.bond_list()]

    def subgraph(self, vertices: Iterable[VertexRef]) -> "CoxeterGraph":
        """Induced subgraph; vertex order follows this graph's order."""
        keep = sorted({self.index(v) for v in vertices})
        remap = {old: new for new, old in enumerate(keep)}
        bonds = {
            (remap[i], remap[j]): lab
            for (i, j), lab in self.bonds.items()
            if i in remap and j in remap
        }
        return CoxeterGraph(tuple(self.names[i] for i in keep), bonds)

    def disjoint_union(self, other: "CoxeterGraph") -> "CoxeterGraph":
        shift = self.n
        bonds = dict(self.bonds)
        bonds.update({(i + shift, j + shift): lab for (i, j), lab in other.bonds.items()})
        return CoxeterGraph(self.names + other.names, bonds)

    def reordered(self, order: Iterable[VertexRef]) -> "CoxeterGraph":
        """Same graph with the vertex list permuted to ``order``."""
        order = [self.index(v) for v in order]
        if sorted(order) != list(range(self.n)):
            raise GraphError("reordering must be a permutation of all vertices")
        pos = {old: new for new, old in enumerate(order)}
        bonds = {}
        for (i, j), lab in self.bonds.items():
            a, b = pos[i], pos[j]
            bonds[(a, b) if a < b else (b, a)] = lab
        return CoxeterGraph(tuple(self.names[i] for i in order), bonds)

    def with_bond(self, u: VertexRef, v: VertexRef, label) -> "CoxeterGraph":
        """Copy with the bond u-v set (or replaced) to ``label``."""
        i, j = sorted((self.index(u), self.index(v)))
        if i == j:
            raise SelfBond(f"self-bond on {self.names[i]!r}")
        bonds = dict(self.bonds)
        bonds[(i, j)] = check_label(label)
        return CoxeterGraph(self.names, bonds)

    def render(self, word: Iterable[int]) -> str:
        word = tuple(word)
        if not word:
            return "e"
        return " ".join(self.names[i] for i in word)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> CoxeterGraph:
    """Parse the line-oriented graph format.

    ::

        # comment
        vertices r s t
        edge r s 4
        edge s t inf
    """
    names = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        if names is None:
            if keyword != "vertices":
                raise GraphSyntaxError(f"line {lineno}: expected 'vertices' line first")
            for name in tokens[1:]:
                if not NAME_RE.match(name):
                    raise GraphSyntaxError(f"line {lineno}: invalid vertex name {name!r}")
            names = tokens[1:]
        elif keyword == "vertices":
            raise GraphSyntaxError(f"line {lineno}: second 'vertices' line")
        elif keyword == "edge":
            if len(tokens) != 4:
                raise GraphSyntaxError(f"line {lineno}: expected 'edge <name> <name> <label>'")
            _, u, v, lab = tokens
            edges.append((u, v, _parse_label(lab, lineno)))
        else:
            raise GraphSyntaxError(f"line {lineno}: unknown keyword {keyword!r}")
    if names is None:
        raise GraphSyntaxError("missing 'vertices' line")
    return CoxeterGraph.build(names, edges)


def _parse_label(token: str, lineno: int) -> Label:
    if token == "inf":
        return INF
    if not token.isdigit():
        raise InvalidLabel(f"line {lineno}: label must be an integer >= 3 or 'inf', got {token!r}")
    value = int(token)
    if value < 3:
        raise InvalidLabel(f"line {lineno}: label {value} < 3 (omit the edge for m = 2)")
    return value


def format_graph(g: CoxeterGraph) -> str:
    lines = ["vertices " + " ".join(g.names)]
    for u, v, lab in g.edges_by_name():
        lines.append(f"edge {u} {v} {format_label(lab)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Structure
# ---------------------------------------------------------------------------

def connected_components(g: CoxeterGraph) -> list:
    """Components as induced subgraphs, ordered by smallest member index."""
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        members = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    members.append(w)
                    queue.append(w)
        components.append(g.subgraph(members))
    return components


def is_connected(g: CoxeterGraph) -> bool:
    return len(connected_components(g)) <= 1


def is_tree(g: CoxeterGraph) -> bool:
    return g.n >= 1 and len(g.bonds) == g.n - 1 and is_connected(g)


def find_cycle(g: CoxeterGraph):
    """Return one cycle as a list of vertex indices, or None for a forest.

    Depth-first from vertex 0 upward, neighbours in index order, so the
    witness is reproducible.
    """
    state = [0] * g.n  # 0 unvisited, 1 on stack, 2 done
    parent = [-1] * g.n
    for root in range(g.n):
        if state[root]:
            continue
        state[root] = 1
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if w == parent[v]:
                    continue
                if state[w] == 1:
                    cycle = [v]
                    while cycle[-1] != w:
                        cycle.append(parent[cycle[-1]])
                    cycle.reverse()
                    return cycle
                if state[w] == 0:
                    state[w] = 1
                    parent[w] = v
                    stack.append((w, iter(g.neighbors(w))))
                    break
            else:
                state[v] = 2
                stack.pop()
    return None


def _component_of(g: CoxeterGraph, start: int, skip_bond=None) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if skip_bond is not None and {v, w} == skip_bond:
                continue
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def tree_split_sizes(g: CoxeterGraph, edge) -> tuple:
    """Orders ``(a, b)``, ``a <= b``, of the two pieces left after deleting ``edge``."""
    if not is_tree(g):
        raise NotATree("graph is not a tree")
    u, v = (g.index(x) for x in edge)
    if g.m(u, v) in (1, 2):
        raise EdgeAbsent(f"no bond between {g.names[u]} and {g.names[v]}")
    side = len(_component_of(g, u, skip_bond={u, v}))
    a, b = side, g.n - side
    return (a, b) if a <= b else (b, a)


def find_chain(g: CoxeterGraph, u: VertexRef, v: VertexRef) -> Word:
    """The unique simple path from ``u`` to ``v`` in a forest, both ends included."""
    src, dst = g.index(u), g.index(v)
    parent = {src: None}
    queue = deque([src])
    while queue and dst not in parent:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if dst not in parent:
        raise Disconnected(f"{g.names[src]} and {g.names[dst]} lie in different components")
    path = [dst]
    while path[-1] != src:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


# ---------------------------------------------------------------------------
# Classification of a connected component
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplyLacedTree:
    n: int
    tag = "simply-laced tree"


@dataclass(frozen=True)
class SingleHighEdgeTree:
    n: int
    m: int
    a: int
    b: int
    high_edge: tuple
    tag = "single-high-edge tree"


@dataclass(frozen=True)
class InfiniteBond:
    pair: tuple
    tag = "infinite bond"

    def describe(self):
        return "infinite bond"


@dataclass(frozen=True)
class ContainsCycle:
    cycle: tuple
    tag = "cycle"

    def describe(self):
        return "cycle"


@dataclass(frozen=True)
class MultipleHighEdges:
    pairs: tuple
    tag = "high edges"

    def describe(self):
        k = len(self.pairs)
        return "two high edges" if k == 2 else f"{k} high edges"


@dataclass(frozen=True)
class InfiniteType:
    reason: object  # InfiniteBond | ContainsCycle | MultipleHighEdges
    tag = "infinite"

    @property
    def n(self):
        return None


def classify_component(g: CoxeterGraph):
    """Sort a connected Coxeter graph into one of the three classes that
    decide whether only finitely many elements have a unique reduced word.
    """
    if g.n == 0:
        raise EmptyComponent("cannot classify an empty component")
    if not is_connected(g):
        raise Disconnected("classify_component needs a connected graph")
    bonds = g.bond_list()
    for i, j, lab in bonds:
        if lab == INF:
            return InfiniteType(InfiniteBond((g.names[i], g.names[j])))
    if len(bonds) >= g.n:
        cycle = find_cycle(g)
        return InfiniteType(ContainsCycle(tuple(g.names[i] for i in cycle)))
    high = [(i, j, lab) for i, j, lab in bonds if lab >= 4]
    if not high:
        return SimplyLacedTree(g.n)
    if len(high) == 1:
        i, j, lab = high[0]
        a, b = tree_split_sizes(g, (i, j))
        return SingleHighEdgeTree(g.n, lab, a, b, (g.names[i], g.names[j]))
    return InfiniteType(MultipleHighEdges(tuple((g.names[i], g.names[j]) for i, j, _ in high)))
