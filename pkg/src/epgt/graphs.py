"""Small undirected loopless graphs: cliques, chordless 4-cycles, isomorphism, families."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable


class BadParameterError(ValueError):
    """A named-family parameter is out of range."""


class SizeLimitExceededError(ValueError):
    """Isomorphism test asked for more vertices than the configured limit."""


class GraphFormatError(ValueError):
    """A graph file could not be parsed."""


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices 0..n-1 without loops or multi-edges."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{self.n - 1}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self.adjacency))


def maximal_cliques(g: SimpleGraph) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques (size >= 1), sorted, via pivoting expansion."""
    adj = g.adjacency
    found: list[tuple[int, ...]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            found.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda v: len(adj[v] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand(set(), set(range(g.n)), set())
    return sorted(found)


def chordless_4cycles(g: SimpleGraph) -> list[tuple[int, int, int, int]]:
    """All induced 4-cycles as tuples (a, b, c, d) in cyclic order, one per cycle.

    Canonical form: a is the smallest vertex of the cycle and b < d.
    """
    adj = g.adjacency
    out: list[tuple[int, int, int, int]] = []
    for a in range(g.n):
        for c in range(a + 1, g.n):
            if c in adj[a]:
                continue
            common = sorted(v for v in adj[a] & adj[c] if v > a)
            for i, b in enumerate(common):
                for d in common[i + 1:]:
                    if d in adj[b]:
                        continue
                    out.append((a, b, c, d))
    return sorted(out)


def find_isomorphism(
    g: SimpleGraph, h: SimpleGraph, size_limit: int = 24
) -> dict[int, int] | None:
    """An edge-preserving bijection g -> h, or None.

    Backtracking with degree and neighbor-degree pruning; intended for small
    graphs (raises SizeLimitExceededError beyond size_limit vertices).
    """
    if g.n > size_limit or h.n > size_limit:
        raise SizeLimitExceededError(f"isomorphism supports up to {size_limit} vertices")
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    if g.degree_sequence() != h.degree_sequence():
        return None

    def profile(graph: SimpleGraph, v: int) -> tuple:
        degs = sorted(len(graph.adjacency[u]) for u in graph.adjacency[v])
        return (len(graph.adjacency[v]), tuple(degs))

    gp = [profile(g, v) for v in range(g.n)]
    hp = [profile(h, v) for v in range(h.n)]
    if sorted(gp) != sorted(hp):
        return None

    order = sorted(range(g.n), key=lambda v: (-len(g.adjacency[v]), v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in range(h.n):
            if w in used or gp[v] != hp[w]:
                continue
            ok = True
            for u, img in mapping.items():
                if g.has_edge(u, v) != h.has_edge(img, w):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphic(g: SimpleGraph, h: SimpleGraph, size_limit: int = 24) -> bool:
    return find_isomorphism(g, h, size_limit=size_limit) is not None


# -- named families ----------------------------------------------------------


def cycle_graph(k: int) -> SimpleGraph:
    if k < 3:
        raise BadParameterError("cycles need k >= 3")
    return SimpleGraph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def complete_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise BadParameterError("complete graphs need n >= 1")
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> SimpleGraph:
    if m < 1 or n < 1:
        raise BadParameterError("complete bipartite graphs need m, n >= 1")
    return SimpleGraph.from_edges(
        m + n, ((i, m + j) for i in range(m) for j in range(n))
    )


def star(k: int) -> SimpleGraph:
    """The k-star K_{1,k}."""
    if k < 1:
        raise BadParameterError("stars need k >= 1")
    return complete_bipartite(1, k)


def claw() -> SimpleGraph:
    return star(3)


def sun(k: int) -> SimpleGraph:
    """The k-sun: inner clique v_1..v_k (vertices 0..k-1) plus an outer
    independent set s_1..s_k (vertices k..2k-1) with s_i ~ v_i, v_{i+1}."""
    if k < 3:
        raise BadParameterError("suns need k >= 3")
    edges = set(combinations(range(k), 2))
    for i in range(k):
        edges.add((k + i, i))
        edges.add((k + i, (i + 1) % k))
    return SimpleGraph.from_edges(2 * k, edges)


def catalog(name: str, **params: int) -> SimpleGraph:
    """Named-family dispatcher used by the command line."""
    name = name.lower()
    try:
        if name in ("cycle", "c"):
            return cycle_graph(params["k"])
        if name in ("complete", "k"):
            return complete_graph(params["n"])
        if name in ("biclique", "complete-bipartite", "kmn"):
            return complete_bipartite(params["m"], params["n"])
        if name == "star":
            return star(params["k"])
        if name == "claw":
            return claw()
        if name == "sun":
            return sun(params["k"])
    except KeyError as exc:
        raise BadParameterError(f"family {name!r} is missing parameter {exc}") from exc
    raise BadParameterError(f"unknown family {name!r}")


# -- graph file format ---------------------------------------------------------
#
# First line "n <count>", then one "u v" edge per line, 0-based.


def parse_graph(text: str) -> SimpleGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n "):
        raise GraphFormatError("first line must be 'n <vertex count>'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise GraphFormatError("first line must be 'n <vertex count>'") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {ln!r}") from exc
        edges.append((u, v))
    try:
        return SimpleGraph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def format_graph(g: SimpleGraph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
