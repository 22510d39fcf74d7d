"""Point-attached composites: anchor bookkeeping, the attachment variant of
fault-tolerant resolution, and the condition checkers used by the
composition rules.

Pieces are glued in order by identifying vertices that carry equal anchor
names.  Every piece after the first must share exactly one name that is
already declared, which keeps the arrangement tree-like; the other names
it declares become available to later pieces.  A name declared by a single
piece still marks its vertex as an attachment point, which is what lets a
one-piece decomposition carry a non-empty anchor set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import (
    AnchorReuseWithinPiece,
    DisconnectedInput,
    DisconnectedResult,
    InputFormatError,
    NonTreeAttachment,
    OverlapError,
    UnsupportedConfiguration,
)
from .graph import (
    Graph,
    build_graph,
    graph_from_json_dict,
    graph_to_json_dict,
    is_even_graph,
    is_path_graph,
)
from .resolve import (
    DEFAULT_ORACLE_CAP,
    FtReport,
    _as_mask,
    _attaching_ft_resolves,
    _check_cap,
    _validated,
)


@dataclass(frozen=True)
class Decomposition:
    """An ordered family of primary pieces glued at named anchor vertices."""

    pieces: tuple[Graph, ...]
    anchor_maps: tuple[tuple[tuple[int, str], ...], ...]
    composite: Graph
    global_ids: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.pieces)

    def anchors_of(self, i: int) -> dict[int, str]:
        return dict(self.anchor_maps[i])

    def at_local(self, i: int) -> tuple[int, ...]:
        """Attachment vertices of piece i in its own labeling."""
        return tuple(sorted(local for local, _ in self.anchor_maps[i]))

    def at_global(self, i: int) -> frozenset[int]:
        ids = self.global_ids[i]
        return frozenset(ids[local] for local, _ in self.anchor_maps[i])

    @property
    def attachment_vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for i in range(self.k):
            out |= self.at_global(i)
        return frozenset(out)

    def piece_role(self, i: int) -> str:
        count = len(self.anchor_maps[i])
        if count == 0:
            return "unattached"
        return "end" if count == 1 else "internal"

    def global_of(self, i: int, local: int) -> int:
        return self.global_ids[i][local]


def point_attach(spec: Sequence[tuple[Graph, Mapping[int, str]]]) -> Decomposition:
    """Glue the given pieces, identifying equal anchor names across pieces."""
    if not spec:
        raise NonTreeAttachment("need at least one piece")
    known: dict[str, int] = {}
    pieces: list[Graph] = []
    global_ids: list[tuple[int, ...]] = []
    anchor_maps: list[tuple[tuple[int, str], ...]] = []
    edges: list[tuple[int, int]] = []
    next_id = 0
    for index, (piece, amap) in enumerate(spec):
        items = sorted((int(local), str(name)) for local, name in amap.items())
        names = [name for _, name in items]
        if len(set(names)) != len(names):
            raise AnchorReuseWithinPiece(f"piece {index} declares an anchor name twice")
        for local, _ in items:
            if not 0 <= local < piece.n:
                raise InputFormatError(f"piece {index}: anchor vertex {local} out of range")
        shared = [name for name in names if name in known]
        if index == 0:
            if shared:
                raise NonTreeAttachment("the first piece cannot share anchors")
        elif len(shared) != 1:
            raise NonTreeAttachment(
                f"piece {index} shares {len(shared)} known anchors, needs exactly 1"
            )
        by_local = dict(items)
        ids = []
        for local in range(piece.n):
            name = by_local.get(local)
            if name is not None and name in known:
                ids.append(known[name])
            else:
                ids.append(next_id)
                next_id += 1
                if name is not None:
                    known[name] = ids[-1]
        pieces.append(piece)
        global_ids.append(tuple(ids))
        anchor_maps.append(tuple(items))
        edges.extend((ids[u], ids[v]) for u, v in piece.edges)
    try:
        composite = build_graph(next_id, edges)
    except DisconnectedInput as exc:  # unreachable for tree-like input; kept defensive
        raise DisconnectedResult(str(exc)) from exc
    dec = Decomposition(tuple(pieces), tuple(anchor_maps), composite, tuple(global_ids))
    _verify_isometry(dec)
    return dec


def _verify_isometry(dec: Decomposition) -> None:
    # Tree-like glueing never shortens distances inside a piece; verify anyway.
    comp = dec.composite.dist
    for i, piece in enumerate(dec.pieces):
        ids = dec.global_ids[i]
        local = piece.dist
        for x in range(piece.n):
            row = local.rows[x]
            gx = ids[x]
            for y in range(x + 1, piece.n):
                if comp.d(gx, ids[y]) != row[y]:
                    raise RuntimeError(f"piece {i} is not isometric in the composite")


def is_attaching_ft_resolving(g: Graph, at: Iterable[int], f: Iterable[int]) -> bool:
    """Anchored fault tolerance for a candidate set f outside the anchors.

    With f empty the anchors must resolve the graph by themselves;
    otherwise dropping any single member of f must leave f | at resolving.
    Anchors are never the failing element.
    """
    av = _validated(g.n, at)
    fv = _validated(g.n, f)
    overlap = set(av) & set(fv)
    if overlap:
        raise OverlapError(f"candidate set touches anchors: {sorted(overlap)}")
    return _attaching_ft_resolves(g.dist.distinguisher_masks, _as_mask(fv), _as_mask(av))


def fdim_star(g: Graph, at: Iterable[int], cap: int | None = None) -> FtReport:
    """Minimum anchored fault-tolerant candidate set, lexicographically first.

    With an empty anchor set this degenerates to the plain fault-tolerant
    dimension, which keeps sums over anchor-free one-piece decompositions
    well defined.
    """
    _check_cap(g.n, cap, DEFAULT_ORACLE_CAP, "anchored search")
    av = _validated(g.n, at)
    at_mask = _as_mask(av)
    masks = g.dist.distinguisher_masks
    anchored = set(av)
    free = [v for v in range(g.n) if v not in anchored]
    for k in range(0, len(free) + 1):
        for combo in combinations(free, k):
            if _attaching_ft_resolves(masks, _as_mask(combo), at_mask):
                return FtReport(value=k, witness=combo, method="oracle")
    raise AssertionError("unreachable: all non-anchor vertices together always qualify")


def fdim_star_closed_form(family: str, n: int, anchors: Iterable[int]) -> int:
    """Closed-form anchored dimension for canonically labeled families.

    Paths and cycles are numbered along the walk and complete graphs are
    symmetric, so the anchor positions fully determine the value: paths pay
    2 only for a single interior anchor, cycles pay 2 for a single anchor
    or an antipodal pair on an even cycle, and complete graphs pay the
    non-anchor count until n-1 anchors resolve everything.
    """
    av = sorted(set(int(a) for a in anchors))
    if not av:
        raise UnsupportedConfiguration("need at least one anchor")
    if av[0] < 0 or av[-1] >= n:
        raise UnsupportedConfiguration(f"anchors outside 0..{n - 1}")
    if family == "path":
        if n < 2:
            raise UnsupportedConfiguration("paths need n >= 2")
        if len(av) == 1 and 0 < av[0] < n - 1:
            return 2
        return 0
    if family == "cycle":
        if n < 3:
            raise UnsupportedConfiguration("cycles need n >= 3")
        if len(av) == 1:
            return 2
        if len(av) == 2 and n % 2 == 0 and (av[1] - av[0]) % n == n // 2:
            return 2
        return 0
    if family == "complete":
        if n < 2:
            raise UnsupportedConfiguration("complete graphs need n >= 2")
        return n - len(av) if len(av) < n - 1 else 0
    raise UnsupportedConfiguration(f"no closed form for family {family!r}")


@dataclass(frozen=True)
class C1Check:
    """Outcome of the anchor-distance domination check."""

    holds: bool
    cases: tuple[int, ...]
    violation: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.holds


def check_C1(g: Graph, at: Iterable[int]) -> C1Check:
    """Anchor-distance domination: from any anchor, every outside vertex is
    dominated by some anchor at least as far away.

    The ``cases`` field lists which of the four structural sufficient
    conditions apply: (1) every vertex is an anchor, (2) independent
    anchors in a diameter-2 graph, (3) anchors pairwise at full mutual
    eccentricity, (4) even graph with antipodally closed anchors.
    """
    av = _validated(g.n, at)
    if not av:
        raise ValueError("check_C1 needs a non-empty anchor set")
    d = g.dist
    anchored = set(av)
    outside = [v for v in range(g.n) if v not in anchored]
    violation = None
    for a1 in av:
        for v in outside:
            if not any(d.d(a1, a2) >= d.d(v, a2) for a2 in av):
                violation = (a1, v)
                break
        if violation:
            break
    return C1Check(holds=violation is None, cases=_c1_cases(g, av), violation=violation)


def _c1_cases(g: Graph, av: tuple[int, ...]) -> tuple[int, ...]:
    d = g.dist
    cases = []
    if len(av) == g.n:
        cases.append(1)
    if len(av) >= 2:
        if d.diameter == 2 and all(d.d(u, v) >= 2 for u, v in combinations(av, 2)):
            cases.append(2)
        ecc = d.eccentricities
        if all(ecc[u] == ecc[v] == d.d(u, v) for u, v in combinations(av, 2)):
            cases.append(3)
    if is_even_graph(d):
        anchored = set(av)
        diam = d.diameter
        if all(d.rows[u].index(diam) in anchored for u in av):
            cases.append(4)
    return tuple(cases)


def check_C2(g: Graph, at: Iterable[int]) -> bool:
    """Single anchor that is not the leaf of a path."""
    av = _validated(g.n, at)
    if len(av) != 1:
        return False
    leaves = is_path_graph(g)
    return leaves is None or av[0] not in leaves


# --- decomposition JSON format ----------------------------------------------
#
# { "pieces": [ { "n": int, "edges": [[u, v], ...],
#                 "anchors": { "<local-vertex>": "<anchor-name>" } }, ... ] }
#
# Identification happens between equal anchor names across pieces.

def decomposition_to_json(dec: Decomposition) -> dict:
    return {
        "pieces": [
            {
                **graph_to_json_dict(piece),
                "anchors": {str(local): name for local, name in dec.anchor_maps[i]},
            }
            for i, piece in enumerate(dec.pieces)
        ]
    }


def decomposition_from_json(obj) -> Decomposition:
    if not isinstance(obj, dict) or not isinstance(obj.get("pieces"), list):
        raise InputFormatError('decomposition JSON needs a "pieces" list')
    spec: list[tuple[Graph, dict[int, str]]] = []
    for idx, entry in enumerate(obj["pieces"]):
        if not isinstance(entry, dict):
            raise InputFormatError(f"piece {idx} must be an object")
        graph = graph_from_json_dict(entry)
        anchors_raw = entry.get("anchors", {})
        if not isinstance(anchors_raw, dict):
            raise InputFormatError(f"piece {idx}: anchors must map vertex to name")
        try:
            amap = {int(key): str(value) for key, value in anchors_raw.items()}
        except (TypeError, ValueError) as exc:
            raise InputFormatError(f"piece {idx}: bad anchor key: {exc}") from exc
        spec.append((graph, amap))
    return point_attach(spec)
