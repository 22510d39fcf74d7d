"""Deterministic generators for the named graph families, plus the five-piece
worked composite shared by the tests and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .attach import Decomposition, point_attach
from .errors import IllegalParameter
from .graph import Graph, build_graph


def path_graph(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    if n < 2:
        raise IllegalParameter(f"path needs n >= 2, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """Cycle numbered along the walk."""
    if n < 3:
        raise IllegalParameter(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise IllegalParameter(f"complete graph needs n >= 2, got {n}")
    return build_graph(n, list(combinations(range(n), 2)))


def star_graph(t: int) -> Graph:
    """Star with center 0 and leaves 1..t."""
    if t < 1:
        raise IllegalParameter(f"star needs t >= 1, got {t}")
    return build_graph(t + 1, [(0, i) for i in range(1, t + 1)])


def paw_graph() -> Graph:
    """Triangle 0-1-2 with pendant vertex 3 attached to 2."""
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def hypercube_graph(d: int) -> Graph:
    """d-cube with binary-label adjacency."""
    if d < 1:
        raise IllegalParameter(f"hypercube needs d >= 1, got {d}")
    n = 1 << d
    edges = []
    for v in range(n):
        for b in range(d):
            w = v ^ (1 << b)
            if v < w:
                edges.append((v, w))
    return build_graph(n, edges)


def bowtie_graph() -> Graph:
    """Two triangles sharing vertex 2."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def figure2_decomposition() -> Decomposition:
    """The five-piece worked composite on 20 vertices.

    A central triangle carries anchors a1, a2, a3; a 4-clique hangs at a1,
    the paw hangs by its pendant at a2, an 8-cycle spans a3 to a4 between
    antipodal positions, and a 5-clique hangs at a4.
    """
    return point_attach(
        [
            (complete_graph(4), {0: "a1"}),
            (complete_graph(3), {0: "a1", 1: "a2", 2: "a3"}),
            (paw_graph(), {3: "a2"}),
            (cycle_graph(8), {0: "a3", 4: "a4"}),
            (complete_graph(5), {0: "a4"}),
        ]
    )


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its size parameter (None for the fixed graphs)."""

    family: str
    size: int | None = None


_SIZED = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "star": star_graph,
    "hypercube": hypercube_graph,
}

_FIXED = {
    "paw": paw_graph,
    "bowtie": bowtie_graph,
    "figure2": figure2_decomposition,
}

FAMILY_NAMES = tuple(sorted(_SIZED) + sorted(_FIXED))


def generate(spec: FamilySpec) -> Graph | Decomposition:
    """Build the canonical member of the requested family."""
    if spec.family in _SIZED:
        if spec.size is None:
            raise IllegalParameter(f"family {spec.family!r} needs a size parameter")
        return _SIZED[spec.family](spec.size)
    if spec.family in _FIXED:
        if spec.size is not None:
            raise IllegalParameter(f"family {spec.family!r} takes no size parameter")
        return _FIXED[spec.family]()
    raise IllegalParameter(f"unknown family {spec.family!r}")
