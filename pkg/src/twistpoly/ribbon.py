"""Ribbon graphs as signed rotation systems.

A vertex is a cyclic sequence of half-edge names; an edge pairs two half-edges
and carries a ``twisted`` flag.  Boundary components are traced on "flags":
each half-edge has a left and a right end where its edge meets the vertex
disc.  Vertex-boundary arcs join the right end of a half-edge to the left end
of its rotation successor; edge sides join the ends of one edge's two
half-edges, swapping left/right for an untwisted edge and preserving them for
a twisted one.  Each flag lies on exactly one arc of each kind, so the
boundary components are the alternating cycles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import GuardError, LabelError
from .setsys import SetSystem, iter_bits, twist, width
from .widthpoly import WidthPolynomial, twist_polynomial

MAX_EDGES = 20

EdgeSubset = Union[int, Iterable[str]]


@dataclass(frozen=True)
class Edge:
    a: str
    b: str
    twisted: bool = False
    name: str = ""


@dataclass(frozen=True)
class GraphCounts:
    v: int
    e: int
    c: int
    f: int
    chi: int
    euler_genus: int
    orientable: bool


@dataclass(frozen=True)
class RibbonGraph:
    vertices: tuple[tuple[str, ...], ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        verts = tuple(tuple(rot) for rot in self.vertices)
        object.__setattr__(self, "vertices", verts)
        edges = []
        for i, ed in enumerate(self.edges):
            if not isinstance(ed, Edge):
                raise TypeError(f"edge #{i} must be an Edge, got {type(ed).__name__}")
            if not ed.name:
                ed = Edge(ed.a, ed.b, bool(ed.twisted), f"e{i + 1}")
            edges.append(ed)
        edges = tuple(edges)
        object.__setattr__(self, "edges", edges)

        seen = {}
        for vi, rot in enumerate(verts):
            for h in rot:
                if not isinstance(h, str) or not h:
                    raise LabelError(f"vertex {vi}: half-edge names must be non-empty strings, got {h!r}")
                if h in seen:
                    raise LabelError(f"half-edge {h!r} appears twice in the rotations")
                seen[h] = vi
        names = [ed.name for ed in edges]
        if len(set(names)) != len(names):
            raise LabelError("duplicate edge names")
        used = set()
        for ed in edges:
            if ed.a == ed.b:
                raise LabelError(f"edge {ed.name} pairs half-edge {ed.a!r} with itself")
            for h in (ed.a, ed.b):
                if h not in seen:
                    raise LabelError(f"edge {ed.name} uses half-edge {h!r} that is in no rotation")
                if h in used:
                    raise LabelError(f"half-edge {h!r} is used by two edges")
                used.add(h)
        unused = sorted(set(seen) - used)
        if unused:
            raise LabelError(f"half-edge(s) not attached to any edge: {', '.join(unused)}")
        object.__setattr__(self, "_vertex_of", seen)

    @property
    def edge_names(self) -> tuple[str, ...]:
        return tuple(ed.name for ed in self.edges)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_mask(self, A: EdgeSubset) -> int:
        full = (1 << len(self.edges)) - 1
        if isinstance(A, bool):
            raise LabelError(f"invalid edge subset {A!r}")
        if isinstance(A, int):
            if A < 0 or A & ~full:
                raise LabelError(f"edge mask {A:#x} mentions unknown edges")
            return A
        if isinstance(A, str):
            A = [A]
        names = self.edge_names
        m = 0
        for name in A:
            if name not in names:
                raise LabelError(f"unknown edge {name!r}")
            m |= 1 << names.index(name)
        return m

    def _flag_data(self):
        # half-edge integer ids: edge i owns 2i (end a) and 2i+1 (end b)
        hid = {}
        for i, ed in enumerate(self.edges):
            hid[ed.a] = 2 * i
            hid[ed.b] = 2 * i + 1
        rotations = [[hid[h] for h in rot] for rot in self.vertices]
        twisted = [ed.twisted for ed in self.edges]
        return rotations, twisted


def make_ribbon_graph(vertices: Sequence[Sequence[str]], edges: Iterable) -> RibbonGraph:
    """Build a validated ribbon graph.

    ``edges`` items may be :class:`Edge`, ``(a, b)``, ``(a, b, twisted)``,
    ``(a, b, twisted, name)`` or mappings with ``ends``/``twisted``/``name``.
    """
    out = []
    for i, ed in enumerate(edges):
        if isinstance(ed, Edge):
            out.append(ed)
        elif isinstance(ed, dict):
            ends = ed.get("ends")
            if not isinstance(ends, (list, tuple)) or len(ends) != 2:
                raise LabelError(f"edge #{i}: 'ends' must be a pair of half-edge names")
            out.append(Edge(ends[0], ends[1], bool(ed.get("twisted", False)), ed.get("name", "") or ""))
        else:
            ed = tuple(ed)
            if len(ed) not in (2, 3, 4):
                raise LabelError(f"edge #{i}: expected (a, b[, twisted[, name]]), got {ed!r}")
            out.append(Edge(*ed))
    return RibbonGraph(tuple(tuple(r) for r in vertices), tuple(out))


def _boundary_count(rotations, twisted, a: int) -> int:
    """Boundary components of the spanning ribbon subgraph with edge mask ``a``."""
    nflags = 4 * len(twisted)
    kappa = [-1] * nflags
    isolated = 0
    for rot in rotations:
        kept = [h for h in rot if a >> (h >> 1) & 1]
        if not kept:
            isolated += 1
            continue
        for k, h in enumerate(kept):
            nxt = kept[(k + 1) % len(kept)]
            # flag 2h = left end of h, 2h + 1 = right end
            kappa[2 * h + 1] = 2 * nxt
            kappa[2 * nxt] = 2 * h + 1
    seen = bytearray(nflags)
    cycles = 0
    for i in iter_bits(a):
        for start in (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3):
            if seen[start]:
                continue
            cycles += 1
            f = start
            while True:
                seen[f] = 1
                g = kappa[f]
                seen[g] = 1
                # cross the edge from the flag g: other half-edge is h ^ 1
                h, side = g >> 1, g & 1
                if twisted[h >> 1]:
                    f = 2 * (h ^ 1) + side
                else:
                    f = 2 * (h ^ 1) + (1 - side)
                if f == start:
                    break
    return cycles + isolated


def boundary_count(G: RibbonGraph, A: EdgeSubset) -> int:
    rotations, twisted = G._flag_data()
    return _boundary_count(rotations, twisted, G.edge_mask(A))


def _components(num_vertices: int, pairs) -> int:
    parent = list(range(num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = num_vertices
    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def _edge_ends(G: RibbonGraph) -> list[tuple[int, int]]:
    vertex_of = G._vertex_of
    return [(vertex_of[ed.a], vertex_of[ed.b]) for ed in G.edges]


def components(G: RibbonGraph, A: EdgeSubset | None = None) -> int:
    """Connected components of the spanning subgraph ``(V, A)``; isolated vertices count."""
    ends = _edge_ends(G)
    a = (1 << len(ends)) - 1 if A is None else G.edge_mask(A)
    return _components(G.num_vertices, [ends[i] for i in iter_bits(a)])


def is_orientable(G: RibbonGraph) -> bool:
    """True iff vertex orientations can be chosen so exactly the twisted edges flip sign."""
    adj = [[] for _ in G.vertices]
    for (u, v), ed in zip(_edge_ends(G), G.edges):
        s = 1 if ed.twisted else 0
        adj[u].append((v, s))
        adj[v].append((u, s))
    sign = [-1] * len(G.vertices)
    for root in range(len(G.vertices)):
        if sign[root] >= 0:
            continue
        sign[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v, s in adj[u]:
                want = sign[u] ^ s
                if sign[v] < 0:
                    sign[v] = want
                    stack.append(v)
                elif sign[v] != want:
                    return False
    return True


def graph_counts(G: RibbonGraph) -> GraphCounts:
    v, e = G.num_vertices, G.num_edges
    c = components(G)
    f = boundary_count(G, (1 << e) - 1)
    chi = v - e + f
    return GraphCounts(v, e, c, f, chi, 2 * c - chi, is_orientable(G))


def subgraph_counts(G: RibbonGraph, A: EdgeSubset) -> GraphCounts:
    """Counts of the spanning ribbon subgraph ``(V(G), A)``."""
    a = G.edge_mask(A)
    ends = _edge_ends(G)
    kept = [i for i in iter_bits(a)]
    v, e = G.num_vertices, len(kept)
    c = _components(v, [ends[i] for i in kept])
    f = boundary_count(G, a)
    chi = v - e + f
    orientable = _orientable_subset(G, kept)
    return GraphCounts(v, e, c, f, chi, 2 * c - chi, orientable)


def _orientable_subset(G: RibbonGraph, kept) -> bool:
    edges = [G.edges[i] for i in kept]
    halves = {h for ed in edges for h in (ed.a, ed.b)}
    verts = tuple(tuple(h for h in rot if h in halves) for rot in G.vertices)
    return is_orientable(RibbonGraph(verts, tuple(edges)))


def _check_guard(G: RibbonGraph) -> None:
    if G.num_edges > MAX_EDGES:
        raise GuardError(f"ribbon graph has {G.num_edges} edges; subset enumeration allows at most {MAX_EDGES}")


def delta_matroid_of_graph(G: RibbonGraph) -> SetSystem:
    """``D(G)``: feasible sets are the edge sets of spanning quasi-trees.

    Every component of ``(V, A)`` lies inside a component of ``G`` and has at
    least one boundary, so ``f(A) >= c(G)`` with equality exactly when each
    component of ``G`` is spanned by a single-boundary subgraph.
    """
    _check_guard(G)
    rotations, twisted = G._flag_data()
    c = components(G)
    feasible = tuple(a for a in range(1 << G.num_edges) if _boundary_count(rotations, twisted, a) == c)
    return SetSystem(G.edge_names, feasible)


def partial_dual_genus(G: RibbonGraph, A: EdgeSubset) -> int:
    """Euler genus of the partial dual ``G^A``, computed as ``width(D(G) * A)``."""
    a = G.edge_mask(A)
    return width(twist(delta_matroid_of_graph(G), a))


def partial_dual_genus_from_counts(G: RibbonGraph, A: EdgeSubset) -> int:
    """Euler genus of ``G^A`` from boundary counts alone, without any delta-matroid.

    The vertices of ``G^A`` are the boundary components of ``(V, A)``, its
    boundary components are those of ``(V, A^c)``; edges and components are
    unchanged, so ``eps(G^A) = 2c(G) - f(A) + e(G) - f(A^c)``.
    """
    a = G.edge_mask(A)
    rotations, twisted = G._flag_data()
    full = (1 << G.num_edges) - 1
    v_dual = _boundary_count(rotations, twisted, a)
    f_dual = _boundary_count(rotations, twisted, full ^ a)
    return 2 * components(G) - (v_dual - G.num_edges + f_dual)


def partial_dual_polynomial(G: RibbonGraph) -> WidthPolynomial:
    return twist_polynomial(delta_matroid_of_graph(G))


def random_ribbon_graph(v: int, e: int, twist_probability: float = 0.5, seed: int = 0) -> RibbonGraph:
    """Random ribbon graph: uniform endpoints and rotation slots, independent twists."""
    if v < 1 or e < 0:
        raise ValueError(f"need v >= 1 and e >= 0, got v={v}, e={e}")
    if not 0.0 <= twist_probability <= 1.0:
        raise ValueError(f"twist_probability must lie in [0, 1], got {twist_probability}")
    rng = random.Random(seed)
    rotations: list[list[str]] = [[] for _ in range(v)]
    edges = []
    for i in range(e):
        ends = (f"h{2 * i + 1}", f"h{2 * i + 2}")
        for h in ends:
            rot = rotations[rng.randrange(v)]
            rot.insert(rng.randint(0, len(rot)), h)
        twisted = rng.random() < twist_probability
        edges.append(Edge(ends[0], ends[1], twisted, f"e{i + 1}"))
    return RibbonGraph(tuple(tuple(r) for r in rotations), tuple(edges))
