"""Vertex link of Brady's 2-complex for ``B_4 / Z(B_4)``.

Every edge of the link has angle ``pi/3``, so lengths are kept as integers
counting units of ``pi/3``.  ``PI`` is three units and ``TWO_PI`` six.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

PI = 3
TWO_PI = 6

# Braid word for the axis element bd^-1, carried as report metadata only.
AXIS_BRAID_WORD = "s2 s1 s3 s2^-1 s1^-1 s3^-1"


class LinkError(ValueError):
    pass


@dataclass(frozen=True)
class LinkGraph:
    vertices: Tuple[str, ...]
    edges: FrozenSet[FrozenSet[str]]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(set(self.vertices)) != len(self.vertices):
            raise LinkError("duplicate vertex label")
        edges = set()
        known = set(self.vertices)
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise LinkError(f"self-loop or malformed edge {sorted(e)}")
            missing = e - known
            if missing:
                raise LinkError(f"edge endpoint(s) {sorted(missing)} not declared")
            edges.add(e)
        object.__setattr__(self, "edges", frozenset(edges))
        if self.vertices and len(self._bfs(self.vertices[0])) != len(self.vertices):
            raise LinkError("link graph is not connected")

    @classmethod
    def from_pairs(cls, vertices: Iterable[str], pairs: Iterable[Tuple[str, str]]) -> "LinkGraph":
        pairs = list(pairs)
        if len({frozenset(p) for p in pairs}) != len(pairs):
            raise LinkError("duplicate edge")
        return cls(tuple(vertices), frozenset(frozenset(p) for p in pairs))

    def neighbours(self, v: str) -> List[str]:
        self._check(v)
        return sorted(w for e in self.edges if v in e for w in e if w != v)

    def _adjacency(self, skip: Optional[FrozenSet[str]] = None) -> Dict[str, List[str]]:
        adj: Dict[str, List[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            if e == skip:
                continue
            a, b = sorted(e)
            adj[a].append(b)
            adj[b].append(a)
        for v in adj:
            adj[v].sort()
        return adj

    def _bfs(self, source: str, skip=None) -> Dict[str, Optional[str]]:
        adj = self._adjacency(skip)
        parent: Dict[str, Optional[str]] = {source: None}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        return parent

    def _check(self, *labels: str) -> None:
        for v in labels:
            if v not in self.vertices:
                raise LinkError(f"unknown link vertex {v!r}")


def standard_link() -> LinkGraph:
    """The 12-vertex link: a Mobius strip drawn as a 4x2 grid with end identifications."""
    vertices = ("a+", "a-", "b+", "b-", "c+", "c-", "d+", "d-", "e+", "e-", "f+", "f-")
    bottom = ["c+", "a-", "e+", "f-", "a+"]
    top = ["a+", "c-", "f+", "e-", "c+"]
    columns = [("a+", "b-", "c+"), ("c-", "d+", "a-"), ("f+", "d-", "e+"), ("e-", "b+", "f-")]
    pairs = list(zip(bottom, bottom[1:])) + list(zip(top, top[1:]))
    for upper, middle, lower in columns:
        pairs += [(upper, middle), (middle, lower)]
    return LinkGraph.from_pairs(vertices, pairs)


def shortest_path(g: LinkGraph, u: str, v: str) -> Optional[List[str]]:
    """A shortest edge path from ``u`` to ``v``; ties broken by label order."""
    g._check(u, v)
    parent = g._bfs(u)
    if v not in parent:
        return None
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def link_distance(g: LinkGraph, u: str, v: str) -> int:
    """Path distance in units of ``pi/3``."""
    path = shortest_path(g, u, v)
    # the constructor guarantees connectivity
    return len(path) - 1


def check_girth_2pi(g: LinkGraph) -> bool:
    """Every embedded cycle has length at least ``2pi``.

    The shortest cycle through an edge ``uv`` is ``uv`` plus a shortest
    ``u``-``v`` path avoiding it.
    """
    return shortest_cycle(g) is None


def shortest_cycle(g: LinkGraph) -> Optional[List[str]]:
    """A cycle shorter than ``2pi`` if one exists, else ``None``."""
    best = None
    for e in sorted(g.edges, key=sorted):
        u, v = sorted(e)
        parent = g._bfs(u, skip=e)
        if v not in parent:
            continue
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        if len(path) < TWO_PI and (best is None or len(path) < len(best)):
            best = path[::-1]
    return best


def certify_local_geodesic(g: LinkGraph, in_v: str, out_v: str) -> bool:
    return link_distance(g, in_v, out_v) >= PI


def rank_one_flat_obstruction(g: LinkGraph, in_v: str, out_v: str) -> bool:
    """Turn angle strictly above ``pi``: no half-disk in the link can contain it."""
    return link_distance(g, in_v, out_v) > PI


@dataclass(frozen=True)
class TurnSequence:
    turns: Tuple[Tuple[str, str], ...]
    periodic: bool = True

    def __post_init__(self):
        object.__setattr__(self, "turns", tuple(tuple(t) for t in self.turns))

    def rotated(self, k: int) -> "TurnSequence":
        k %= max(len(self.turns), 1)
        return TurnSequence(self.turns[k:] + self.turns[:k], self.periodic)


def certify_axis(g: LinkGraph, turns: TurnSequence) -> bool:
    if not turns.turns:
        raise LinkError("turn sequence is empty")
    return all(certify_local_geodesic(g, a, b) for a, b in turns.turns)


# turns of the bd^-1 axis as labelled in the original description
BD_INV_TURNS = TurnSequence((("b-", "d-"), ("b+", "d-")))
# turns read off from the path x0 -> b.x0 -> bd^-1.x0 translated back to x0
BD_INV_ACTION_TURNS = TurnSequence((("d+", "b+"), ("b-", "d-")))


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def parse_link(text: str) -> LinkGraph:
    """Read ``v <label>`` / ``e <u> <v>`` lines; ``#`` starts a comment."""
    vertices: List[str] = []
    pairs: List[Tuple[str, str]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            vertices.append(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            pairs.append((parts[1], parts[2]))
        else:
            raise LinkError(f"line {lineno}: cannot parse {line!r}")
    if not vertices:
        raise LinkError("no vertices declared")
    return LinkGraph.from_pairs(vertices, pairs)


def format_link(g: LinkGraph) -> str:
    lines = [f"v {v}" for v in g.vertices]
    order = {v: k for k, v in enumerate(g.vertices)}
    edges = sorted((tuple(sorted(e, key=order.__getitem__)) for e in g.edges),
                   key=lambda p: (order[p[0]], order[p[1]]))
    lines += [f"e {a} {b}" for a, b in edges]
    return "\n".join(lines) + "\n"


def distance_table(g: LinkGraph, labels: Optional[Sequence[str]] = None) -> Dict[Tuple[str, str], int]:
    labels = list(labels or g.vertices)
    return {(u, v): link_distance(g, u, v) for u in labels for v in labels}
