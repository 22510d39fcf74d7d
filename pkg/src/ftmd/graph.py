"""Immutable simple connected graphs with exact hop distances.

Vertices are dense integer labels 0..n-1; external names should be mapped
through a label table by the caller.  Distances are computed at
construction time by breadth-first search from every vertex, and every
other module reads them from the cached matrix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DisconnectedInput,
    DuplicateEdge,
    InputFormatError,
    OrderCapExceeded,
    OrderTooSmall,
    SelfLoop,
    VertexOutOfRange,
)

VERTEX_TRANSITIVITY_CAP = 12


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path hop counts of a connected graph."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def d(self, u: int, w: int) -> int:
        return self.rows[u][w]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.rows[u]

    @cached_property
    def eccentricities(self) -> tuple[int, ...]:
        return tuple(max(row) for row in self.rows)

    @cached_property
    def diameter(self) -> int:
        return max(self.eccentricities)

    @cached_property
    def distinguisher_masks(self) -> tuple[int, ...]:
        """One bitmask per vertex pair: the vertices that tell the pair apart.

        Bit w of the mask for pair (u, v) is set when d(w, u) != d(w, v).
        A landmark set resolves the graph iff it meets every mask, and it
        tolerates any single failure iff it meets every mask twice.  Masks
        are sorted by population count so the scarcest pairs fail fastest.
        """
        masks = []
        rows = self.rows
        n = self.n
        for u in range(n):
            row_u = rows[u]
            for v in range(u + 1, n):
                row_v = rows[v]
                m = 0
                for w in range(n):
                    if row_u[w] != row_v[w]:
                        m |= 1 << w
                masks.append(m)
        masks.sort(key=_popcount)
        return tuple(masks)

    @cached_property
    def twin_forced_mask(self) -> int:
        """Union of all twin pairs (pairs distinguished only by themselves)."""
        forced = 0
        for m in self.distinguisher_masks:
            if _popcount(m) > 2:
                break  # masks are sorted ascending; a pair mask never has < 2 bits
            forced |= m
        return forced


def _popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True)
class Graph:
    """Simple connected graph on vertices 0..n-1 with n >= 2."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise OrderTooSmall(f"need at least 2 vertices, got {self.n}")
        seen: set[tuple[int, int]] = set()
        canon = []
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange(f"edge {tuple(e)} outside 0..{self.n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise DuplicateEdge(f"edge ({u}, {v}) given twice")
            seen.add((u, v))
            canon.append((u, v))
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))
        reached = self._bfs_row(0)
        if min(reached) < 0:
            missing = [i for i, x in enumerate(reached) if x < 0]
            raise DisconnectedInput(f"vertices unreachable from 0: {missing}")
        self.dist  # distances are part of the construction contract

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(b)) for b in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.adjacency)

    def _bfs_row(self, source: int) -> list[int]:
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        adj = self.adjacency
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du
                    queue.append(w)
        return dist

    @cached_property
    def dist(self) -> DistanceMatrix:
        return DistanceMatrix(tuple(tuple(self._bfs_row(s)) for s in range(self.n)))


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and build an immutable connected graph from vertex pairs."""
    return Graph(int(n), tuple((int(u), int(v)) for u, v in edges))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact BFS hop distances for every vertex pair."""
    return g.dist


def eccentricity_and_diameter(d: DistanceMatrix) -> tuple[tuple[int, ...], int]:
    """Per-vertex eccentricities and the graph diameter."""
    return d.eccentricities, d.diameter


def is_even_graph(d: DistanceMatrix) -> bool:
    """True when every vertex has exactly one vertex at full diameter."""
    diam = d.diameter
    return all(sum(1 for x in row if x == diam) == 1 for row in d.rows)


def is_path_graph(g: Graph) -> tuple[int, int] | None:
    """Return the two leaf labels when g is a path, None otherwise."""
    degs = g.degrees
    leaves = [v for v, k in enumerate(degs) if k == 1]
    if len(leaves) == 2 and all(k <= 2 for k in degs):
        return leaves[0], leaves[1]
    return None


def twin_classes(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Partition the vertices into maximal classes of mutual twins.

    Two vertices are twins when every third vertex sits at the same
    distance from both, so nothing except the pair itself can tell them
    apart.  Non-twin vertices come back as singleton classes.
    """
    rows = g.dist.rows
    n = g.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        row_u = rows[u]
        for v in range(u + 1, n):
            row_v = rows[v]
            if all(row_u[w] == row_v[w] for w in range(n) if w != u and w != v):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[rv] = ru
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(c)) for c in sorted(groups.values()))


def is_vertex_transitive(g: Graph, cap: int | None = None) -> bool:
    """Exhaustive automorphism search, pruned by distance profiles.

    The graph is vertex-transitive iff for every target vertex there is an
    adjacency-preserving bijection moving vertex 0 onto it.  Kept behind a
    small order cap; this is only meant to validate hypotheses at desk
    scale, not to serve as a general isomorphism engine.
    """
    limit = VERTEX_TRANSITIVITY_CAP if cap is None else cap
    if g.n > limit:
        raise OrderCapExceeded(f"vertex-transitivity check capped at order {limit}, got {g.n}")
    rows = g.dist.rows
    profiles = [tuple(sorted(rows[v])) for v in range(g.n)]
    if len(set(profiles)) > 1 or len(set(g.degrees)) > 1:
        return False
    return all(_automorphism_moving(g, 0, t) for t in range(1, g.n))


def _automorphism_moving(g: Graph, src: int, dst: int) -> bool:
    """Backtracking search for a distance-preserving bijection with src -> dst."""
    n = g.n
    rows = g.dist.rows
    order = [src] + [v for v in _bfs_order(g, src) if v != src]
    image = [-1] * n
    used = [False] * n
    image[src] = dst
    used[dst] = True

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for c in range(n):
            if used[c]:
                continue
            ok = True
            for j in range(idx):
                w = order[j]
                if rows[v][w] != rows[c][image[w]]:
                    ok = False
                    break
            if ok:
                image[v] = c
                used[c] = True
                if extend(idx + 1):
                    return True
                used[c] = False
                image[v] = -1
        return False

    return extend(1)


def _bfs_order(g: Graph, source: int) -> list[int]:
    seen = [False] * g.n
    seen[source] = True
    order = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
                queue.append(w)
    return order


# --- edge-list text format -------------------------------------------------
#
# First line "n m", then m lines "u v" with 0-indexed endpoints.  Blank
# lines and '#' comments are ignored.

def parse_edge_list(text: str) -> Graph:
    """Parse the plain "n m" / "u v" text format into a Graph."""
    rows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputFormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise InputFormatError(f"line {lineno}: {exc}") from exc
    if not rows:
        raise InputFormatError("empty edge-list input")
    n, m = rows[0]
    pairs = rows[1:]
    if len(pairs) != m:
        raise InputFormatError(f"header says {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json_dict(obj) -> Graph:
    """Build a Graph from a {"n": int, "edges": [[u, v], ...]} payload."""
    if not isinstance(obj, dict):
        raise InputFormatError("graph JSON must be an object")
    if "n" not in obj or "edges" not in obj:
        raise InputFormatError('graph JSON needs "n" and "edges"')
    n = obj["n"]
    edges = obj["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise InputFormatError('"n" must be an integer and "edges" a list')
    pairs = []
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise InputFormatError(f"edge {e!r} is not a pair")
        pairs.append((e[0], e[1]))
    return build_graph(n, pairs)
