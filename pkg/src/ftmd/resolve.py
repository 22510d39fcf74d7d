"""Exact landmark-set computations: metric dimension, the fault-tolerant
variants, basis enumeration, and anchor-overlap statistics.

All searches run on bitmask subsets against the per-pair distinguisher
masks cached on the distance matrix: a set resolves the graph iff it meets
every pair's mask, and it survives the loss of any single member iff it
meets every mask twice.  Ties are always broken toward the
lexicographically smallest witness so outputs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import OrderCapExceeded
from .graph import DistanceMatrix, Graph, twin_classes

DEFAULT_ORACLE_CAP = 16
DEFAULT_LATTICE_CAP = 14


@dataclass(frozen=True)
class FtReport:
    """Outcome of an exact invariant computation."""

    value: int
    witness: tuple[int, ...]
    method: str
    all_bases: tuple[tuple[int, ...], ...] | None = None


def _as_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _validated(n: int, vertices: Iterable[int]) -> tuple[int, ...]:
    vs = tuple(sorted(set(int(v) for v in vertices)))
    if vs and not (0 <= vs[0] and vs[-1] < n):
        raise ValueError(f"vertex set {vs} outside 0..{n - 1}")
    return vs


def _check_cap(n: int, cap: int | None, default: int, what: str) -> None:
    limit = default if cap is None else cap
    if n > limit:
        raise OrderCapExceeded(f"{what} capped at order {limit}, got {n}")


def _resolves(masks: tuple[int, ...], s: int) -> bool:
    for m in masks:
        if not m & s:
            return False
    return True


def _ft_resolves(masks: tuple[int, ...], s: int) -> bool:
    for m in masks:
        if (m & s).bit_count() < 2:
            return False
    return True


def _attaching_ft_resolves(masks: tuple[int, ...], f: int, at: int) -> bool:
    # A pair survives any single deletion from f when it keeps two
    # landmarks in f | at, or when its only landmarks are anchors
    # (anchors are never the ones removed).
    fa = f | at
    for m in masks:
        if (m & fa).bit_count() >= 2:
            continue
        if not m & f and m & at:
            continue
        return False
    return True


def is_resolving(d: DistanceMatrix, s: Iterable[int]) -> bool:
    """True when the distance vectors against s are pairwise distinct."""
    sv = _validated(d.n, s)
    if not sv:
        raise ValueError("a resolving set must be non-empty")
    return _resolves(d.distinguisher_masks, _as_mask(sv))


def is_ft_resolving(d: DistanceMatrix, s: Iterable[int]) -> bool:
    """True when s minus any single element still resolves."""
    sv = _validated(d.n, s)
    if len(sv) < 2:
        raise ValueError("a fault-tolerant resolving set needs at least 2 vertices")
    return _ft_resolves(d.distinguisher_masks, _as_mask(sv))


def metric_dimension(g: Graph) -> FtReport:
    """Minimum resolving set, by ascending subset search.

    A twin class of size t forces at least t-1 members into any resolving
    set, which both bounds the search from below and filters candidates
    cheaply before the full distinctness check.
    """
    masks = g.dist.distinguisher_masks
    class_masks = [
        (_as_mask(c), len(c) - 1) for c in twin_classes(g) if len(c) >= 2
    ]
    lower = max(1, sum(need for _, need in class_masks))
    for k in range(lower, g.n + 1):
        for combo in combinations(range(g.n), k):
            s = _as_mask(combo)
            if any((s & cm).bit_count() < need for cm, need in class_masks):
                continue
            if _resolves(masks, s):
                return FtReport(value=k, witness=combo, method="oracle")
    raise AssertionError("unreachable: the full vertex set resolves every graph")


def _minimum_ft_set(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Smallest fault-tolerant resolving set, lexicographically first.

    Twin classes of size >= 2 sit inside every fault-tolerant resolving
    set (losing one twin must leave the other covered), so the search only
    extends that forced core.
    """
    masks = g.dist.distinguisher_masks
    forced = g.dist.twin_forced_mask
    free = [v for v in range(g.n) if not (forced >> v) & 1]
    base = forced.bit_count()
    for k in range(max(2, base), g.n + 1):
        for combo in combinations(free, k - base):
            s = forced | _as_mask(combo)
            if _ft_resolves(masks, s):
                return k, _mask_to_tuple(s)
    raise AssertionError("unreachable: the full vertex set is fault-tolerant for n >= 2")


def fdim(g: Graph, cap: int | None = None) -> FtReport:
    """Minimum size of a fault-tolerant resolving set, by exact search."""
    _check_cap(g.n, cap, DEFAULT_ORACLE_CAP, "fault-tolerant search")
    value, witness = _minimum_ft_set(g)
    return FtReport(value=value, witness=witness, method="oracle")


def enumerate_ft_bases(g: Graph, cap: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All fault-tolerant resolving sets of minimum size, in lexicographic order."""
    _check_cap(g.n, cap, DEFAULT_ORACLE_CAP, "basis enumeration")
    value, _ = _minimum_ft_set(g)
    masks = g.dist.distinguisher_masks
    forced = g.dist.twin_forced_mask
    free = [v for v in range(g.n) if not (forced >> v) & 1]
    out = []
    for combo in combinations(free, value - forced.bit_count()):
        s = forced | _as_mask(combo)
        if _ft_resolves(masks, s):
            out.append(_mask_to_tuple(s))
    return tuple(out)


def fdim_plus(g: Graph, cap: int | None = None) -> FtReport:
    """Maximum size of an inclusion-minimal fault-tolerant resolving set.

    Fault tolerance is monotone under supersets, so a set is minimal iff
    none of its one-smaller subsets works; the scan walks cardinalities
    downward and returns the first minimal set it meets.
    """
    _check_cap(g.n, cap, DEFAULT_LATTICE_CAP, "minimal-set scan")
    masks = g.dist.distinguisher_masks
    cache: dict[int, bool] = {}

    def ft(s: int) -> bool:
        hit = cache.get(s)
        if hit is None:
            hit = cache[s] = _ft_resolves(masks, s)
        return hit

    for k in range(g.n, 1, -1):
        for combo in combinations(range(g.n), k):
            s = _as_mask(combo)
            if ft(s) and not any(ft(s & ~(1 << x)) for x in combo):
                return FtReport(value=k, witness=combo, method="oracle")
    raise AssertionError("unreachable: a minimum fault-tolerant set is itself minimal")


def theta(g: Graph, at: Iterable[int], cap: int | None = None) -> int:
    """Largest overlap between the anchor set and any fault-tolerant basis,
    or the full fault-tolerant dimension when the anchors already resolve
    the graph on their own."""
    _check_cap(g.n, cap, DEFAULT_LATTICE_CAP, "anchor-overlap scan")
    av = _validated(g.n, at)
    masks = g.dist.distinguisher_masks
    if av and _resolves(masks, _as_mask(av)):
        return _minimum_ft_set(g)[0]
    at_mask = _as_mask(av)
    return max(
        (_as_mask(b) & at_mask).bit_count() for b in enumerate_ft_bases(g, cap=g.n)
    )


def in_some_ft_basis(g: Graph, v: int, cap: int | None = None) -> bool:
    """Whether vertex v appears in at least one fault-tolerant basis."""
    _check_cap(g.n, cap, DEFAULT_ORACLE_CAP, "basis membership")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    return any(v in b for b in enumerate_ft_bases(g, cap=g.n))
