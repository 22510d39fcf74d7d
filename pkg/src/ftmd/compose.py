"""Composition rules for point-attached graphs and rooted products.

Each rule computes the fault-tolerant dimension of a composite from
per-piece data, reports its hypothesis checks by name, and can be
cross-validated against the exact search on the composite.  Hypothesis
failures never fall back to the search silently; callers choose the
fallback explicitly.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .attach import Decomposition, check_C1, check_C2, fdim_star, point_attach
from .errors import IllegalParameter, InputFormatError, PreconditionFailed
from .families import complete_graph, cycle_graph, path_graph, paw_graph, star_graph
from .graph import Graph, graph_from_json_dict, graph_to_json_dict, is_path_graph
from .resolve import (
    _as_mask,
    _ft_resolves,
    fdim,
    fdim_plus,
    in_some_ft_basis,
    theta,
)


@dataclass(frozen=True)
class TheoremResult:
    """Value of a composition rule plus its named hypothesis checks.

    ``value`` is only set when every check passed; rules that prove a range
    instead of a point fill ``bounds``.  When a rule produces an explicit
    landmark set on the composite it is machine-checked and the outcome is
    recorded in ``witness_valid``.
    """

    theorem: str
    value: int | None
    preconditions: tuple[tuple[str, bool], ...]
    witness: tuple[int, ...] | None = None
    witness_valid: bool | None = None
    components: tuple[int, ...] | None = None
    bounds: tuple[int, int] | None = None
    detail: str | None = None


def _require(theorem: str, checks: Sequence[tuple[str, bool]]) -> tuple[tuple[str, bool], ...]:
    checks = tuple(checks)
    if any(not ok for _, ok in checks):
        raise PreconditionFailed(theorem, checks)
    return checks


def prop1_lower_bound(dec: Decomposition, cap: int | None = None) -> int:
    """Additive lower bound: the composite dimension is at least the sum of
    the per-piece anchored dimensions.  Holds for any decomposition."""
    return sum(
        fdim_star(piece, dec.at_local(i), cap=cap).value
        for i, piece in enumerate(dec.pieces)
    )


def _attachment_checks(dec: Decomposition) -> list[tuple[str, bool]]:
    checks: list[tuple[str, bool]] = [("k >= 3", dec.k >= 3)]
    ends = []
    for i, piece in enumerate(dec.pieces):
        role = dec.piece_role(i)
        if role == "internal":
            checks.append(
                (f"piece {i} (internal) satisfies C1", check_C1(piece, dec.at_local(i)).holds)
            )
        elif role == "end":
            ends.append(i)
            checks.append(
                (f"piece {i} (end) satisfies C2", check_C2(piece, dec.at_local(i)))
            )
        else:
            checks.append((f"piece {i} has an attachment vertex", False))
    checks.append(("at least two end pieces", len(ends) >= 2))
    disjoint = all(
        not (dec.at_global(a) & dec.at_global(b)) for a, b in combinations(ends, 2)
    )
    checks.append(("end attachment sets pairwise disjoint", disjoint))
    return checks


def theorem2_fdim(dec: Decomposition, cap: int | None = None) -> TheoremResult:
    """Exact composite dimension as the sum of per-piece anchored dimensions.

    The witness is the union of the per-piece optimal candidate sets,
    mapped into the composite and re-checked there.
    """
    checks = _require("thm2", _attachment_checks(dec))
    components = []
    witness: list[int] = []
    for i, piece in enumerate(dec.pieces):
        report = fdim_star(piece, dec.at_local(i), cap=cap)
        components.append(report.value)
        ids = dec.global_ids[i]
        witness.extend(ids[v] for v in report.witness)
    witness_t = tuple(sorted(witness))
    valid = len(witness_t) >= 2 and _ft_resolves(
        dec.composite.dist.distinguisher_masks, _as_mask(witness_t)
    )
    return TheoremResult(
        theorem="thm2",
        value=sum(components),
        preconditions=checks,
        witness=witness_t,
        witness_valid=valid,
        components=tuple(components),
    )


def corollary3_fdim(
    dec: Decomposition, relaxed: bool = False, cap: int | None = None
) -> TheoremResult:
    """Composite dimension as the per-piece sum of (fdim - theta).

    Strict mode additionally requires each piece to keep some non-anchor
    vertex and to have equal minimum and maximum minimal set sizes.
    Relaxed mode keeps only the attachment conditions and reproduces the
    worked-example arithmetic, whose pieces violate both extra hypotheses.
    """
    tag = "cor3-relaxed" if relaxed else "cor3"
    checks = _attachment_checks(dec)
    if not relaxed:
        for i, piece in enumerate(dec.pieces):
            checks.append(
                (f"piece {i} anchors proper (At != V)", len(dec.at_local(i)) < piece.n)
            )
            same = fdim(piece, cap=cap).value == fdim_plus(piece, cap=cap).value
            checks.append((f"piece {i} fdim equals fdim-plus", same))
    checks = _require(tag, checks)
    components = tuple(
        fdim(piece, cap=cap).value - theta(piece, dec.at_local(i), cap=cap)
        for i, piece in enumerate(dec.pieces)
    )
    return TheoremResult(tag, sum(components), checks, components=components)


def block_graph_fdim(dec: Decomposition) -> TheoremResult:
    """Clique-block composite: every block whose anchor count stays below
    its order minus one contributes its non-anchor count."""
    checks: list[tuple[str, bool]] = [("k >= 3", dec.k >= 3)]
    ends = [i for i in range(dec.k) if dec.piece_role(i) == "end"]
    for i, piece in enumerate(dec.pieces):
        r = piece.n
        checks.append((f"piece {i} is complete", len(piece.edges) == r * (r - 1) // 2))
        checks.append((f"piece {i} has r >= 3", r >= 3))
    checks.append(("at least two end pieces", len(ends) >= 2))
    checks.append(
        (
            "end attachment sets pairwise disjoint",
            all(not (dec.at_global(a) & dec.at_global(b)) for a, b in combinations(ends, 2)),
        )
    )
    checks = _require("blocks", checks)
    components = tuple(
        piece.n - len(dec.at_local(i)) if len(dec.at_local(i)) < piece.n - 1 else 0
        for i, piece in enumerate(dec.pieces)
    )
    return TheoremResult("blocks", sum(components), checks, components=components)


# --- rooted products ---------------------------------------------------------


@dataclass(frozen=True)
class RootedPiece:
    graph: Graph
    root: int

    def __post_init__(self) -> None:
        if not 0 <= self.root < self.graph.n:
            raise IllegalParameter(f"root {self.root} outside 0..{self.graph.n - 1}")


@dataclass(frozen=True)
class RootedProductSpec:
    """A base graph plus one rooted piece per base vertex."""

    base: Graph
    family: tuple[RootedPiece, ...]

    def __post_init__(self) -> None:
        if len(self.family) != self.base.n:
            raise IllegalParameter(
                f"family has {len(self.family)} pieces for a base of order {self.base.n}"
            )


def uniform_rooted_spec(base: Graph, piece: Graph, root: int) -> RootedProductSpec:
    """One isomorphic copy of (piece, root) per base vertex."""
    return RootedProductSpec(base, tuple(RootedPiece(piece, root) for _ in range(base.n)))


def rooted_product(spec: RootedProductSpec) -> Decomposition:
    """Identify each base vertex with the root of its piece.

    The base joins as an internal piece with every vertex an attachment
    point; each rooted piece becomes an end piece anchored at its root.
    """
    parts: list[tuple[Graph, dict[int, str]]] = [
        (spec.base, {v: f"r{v}" for v in range(spec.base.n)})
    ]
    parts.extend((rp.graph, {rp.root: f"r{v}"}) for v, rp in enumerate(spec.family))
    return point_attach(parts)


def cor5_fdim(spec: RootedProductSpec, cap: int | None = None) -> TheoremResult:
    """Rooted-product dimension: each piece pays its full fault-tolerant
    dimension when its root sits in no fault-tolerant basis, one less when
    the root can serve in some basis."""
    checks: list[tuple[str, bool]] = [("base order >= 2", spec.base.n >= 2)]
    for i, rp in enumerate(spec.family):
        checks.append((f"piece {i} satisfies C2 at its root", check_C2(rp.graph, (rp.root,))))
    checks = _require("cor5", checks)
    components = []
    for rp in spec.family:
        value = fdim(rp.graph, cap=cap).value
        if in_some_ft_basis(rp.graph, rp.root, cap=cap):
            value -= 1
        components.append(value)
    return TheoremResult("cor5", sum(components), checks, components=tuple(components))


def prop7_fdim(g: Graph, h: Graph, v: int, cap: int | None = None) -> TheoremResult:
    """Uniform rooted product with a non-path piece: n copies each pay
    fdim(h), minus one each when the root can serve in some basis."""
    checks = _require(
        "prop7",
        [
            ("H is not a path", is_path_graph(h) is None),
            ("root inside H", 0 <= v < h.n),
        ],
    )
    per_copy = fdim(h, cap=cap).value
    if in_some_ft_basis(h, v, cap=cap):
        per_copy -= 1
        detail = "case (ii): root lies in some fault-tolerant basis"
    else:
        detail = "case (i): root lies in no fault-tolerant basis"
    return TheoremResult(
        "prop7",
        g.n * per_copy,
        checks,
        components=tuple(per_copy for _ in range(g.n)),
        detail=detail,
    )


def cor8_check(g: Graph, h: Graph, v: int, cap: int | None = None) -> bool:
    """Characterization check: the composite dimension hits 2n exactly when
    h is a path rooted at an interior vertex.

    Requires a root outside every fault-tolerant basis of h; returns
    whether the equivalence holds on this instance (False is a finding).
    """
    if in_some_ft_basis(h, v, cap=cap):
        raise PreconditionFailed(
            "cor8", (("root lies in no fault-tolerant basis of H", False),)
        )
    composite = rooted_product(uniform_rooted_spec(g, h, v)).composite
    oracle = fdim(composite, cap=cap).value
    leaves = is_path_graph(h)
    path_with_inner_root = leaves is not None and v not in leaves
    return (oracle == 2 * g.n) == path_with_inner_root


def prop9_bounds(
    g: Graph, path_len: int, leaf_root: bool = True, cap: int | None = None
) -> TheoremResult:
    """Leaf-rooted path product: the dimension stays between fdim(g) and n,
    with the far-leaf layer V(G) x {v'} as an explicit checked witness."""
    checks = _require(
        "prop9",
        [
            ("path is non-trivial (m >= 2)", path_len >= 2),
            ("root is a leaf of the path", bool(leaf_root)),
            ("base order >= 2", g.n >= 2),
        ],
    )
    dec = rooted_product(uniform_rooted_spec(g, path_graph(path_len), 0))
    far = path_len - 1
    witness = tuple(sorted(dec.global_of(i + 1, far) for i in range(g.n)))
    valid = _ft_resolves(dec.composite.dist.distinguisher_masks, _as_mask(witness))
    lower, upper = fdim(g, cap=cap).value, g.n
    return TheoremResult(
        "prop9",
        value=lower if lower == upper else None,
        preconditions=checks,
        witness=witness,
        witness_valid=valid,
        bounds=(lower, upper),
    )


# --- oracle cross-validation -------------------------------------------------


@dataclass(frozen=True)
class VerifyReport:
    """Formula-versus-search comparison on one composite instance."""

    theorem: str
    formula_value: int | None
    bounds: tuple[int, int] | None
    oracle_value: int
    ok: bool
    witness_valid: bool | None
    composite_order: int
    elapsed_formula: float
    elapsed_oracle: float


THEOREMS_ON_DECOMPOSITIONS = ("prop1", "thm2", "cor3", "blocks")
THEOREMS_ON_ROOTED_SPECS = ("cor5", "prop7", "prop9")


def _uniform_of(spec: RootedProductSpec) -> RootedPiece:
    first = spec.family[0]
    if any(rp != first for rp in spec.family):
        raise IllegalParameter("this rule needs one isomorphic rooted piece per base vertex")
    return first


def verify(
    target: Decomposition | RootedProductSpec,
    theorem: str,
    oracle_cap: int | None = None,
    relaxed_cor3: bool = False,
) -> VerifyReport:
    """Cross-check a composition rule against the exact search on its composite."""
    if theorem in THEOREMS_ON_DECOMPOSITIONS:
        if not isinstance(target, Decomposition):
            raise IllegalParameter(f"{theorem} verifies a decomposition")
        dec = target
    elif theorem in THEOREMS_ON_ROOTED_SPECS:
        if not isinstance(target, RootedProductSpec):
            raise IllegalParameter(f"{theorem} verifies a rooted-product spec")
        dec = rooted_product(target)
    else:
        raise IllegalParameter(f"unknown theorem {theorem!r}")
    composite = dec.composite

    t0 = time.perf_counter()
    bounds = None
    witness_valid = None
    if theorem == "prop1":
        formula: int | None = prop1_lower_bound(target)
    elif theorem == "thm2":
        res = theorem2_fdim(target)
        formula, witness_valid = res.value, res.witness_valid
    elif theorem == "cor3":
        formula = corollary3_fdim(target, relaxed=relaxed_cor3).value
    elif theorem == "blocks":
        formula = block_graph_fdim(target).value
    elif theorem == "cor5":
        formula = cor5_fdim(target).value
    elif theorem == "prop7":
        rp = _uniform_of(target)
        formula = prop7_fdim(target.base, rp.graph, rp.root).value
    else:  # prop9
        rp = _uniform_of(target)
        leaves = is_path_graph(rp.graph)
        if leaves is None:
            raise IllegalParameter("prop9 needs path pieces")
        res = prop9_bounds(target.base, rp.graph.n, leaf_root=rp.root in leaves)
        formula, bounds, witness_valid = res.value, res.bounds, res.witness_valid
    t1 = time.perf_counter()
    oracle = fdim(composite, cap=oracle_cap).value
    t2 = time.perf_counter()

    if theorem == "prop1":
        ok = formula is not None and oracle >= formula
    elif theorem == "prop9":
        assert bounds is not None
        ok = bounds[0] <= oracle <= bounds[1] and bool(witness_valid)
    else:
        ok = formula == oracle and witness_valid is not False
    return VerifyReport(
        theorem=theorem,
        formula_value=formula,
        bounds=bounds,
        oracle_value=oracle,
        ok=ok,
        witness_valid=witness_valid,
        composite_order=composite.n,
        elapsed_formula=t1 - t0,
        elapsed_oracle=t2 - t1,
    )


# --- seeded random decompositions ---------------------------------------------

_POOL: dict[str, Graph] = {
    **{f"K{r}": complete_graph(r) for r in (3, 4, 5)},
    **{f"C{r}": cycle_graph(r) for r in (4, 5, 6, 7, 8)},
    "paw": paw_graph(),
    "S3": star_graph(3),
    "S4": star_graph(4),
    **{f"P{r}": path_graph(r) for r in (3, 4, 5)},
}


def random_decomposition(
    seed_or_rng: int | random.Random,
    k: int,
    max_order: int,
    condition: str | None = None,
    max_attempts: int = 500,
) -> Decomposition:
    """Draw a reproducible decomposition from the fixed piece pool.

    ``condition`` None gives an unconstrained tree-like glueing; "thm2"
    filters anchor placements so the attachment conditions hold, and
    "cor3" additionally keeps only pieces with proper anchors and equal
    minimum/maximum minimal set sizes.
    """
    rng = seed_or_rng if isinstance(seed_or_rng, random.Random) else random.Random(seed_or_rng)
    if condition not in (None, "thm2", "cor3"):
        raise IllegalParameter(f"unknown generator condition {condition!r}")
    for _ in range(max_attempts):
        dec = _try_random_decomposition(rng, k, max_order, condition)
        if dec is not None:
            return dec
    raise RuntimeError(
        f"no admissible decomposition found in {max_attempts} attempts (k={k})"
    )


def _try_random_decomposition(
    rng: random.Random, k: int, max_order: int, condition: str | None
) -> Decomposition | None:
    names = list(_POOL)
    pieces: list[Graph] = []
    total = 0
    for i in range(k):
        budget = max_order - total + (0 if i == 0 else 1)
        fits = [nm for nm in names if _POOL[nm].n <= budget]
        if not fits:
            return None
        piece = _POOL[rng.choice(fits)]
        pieces.append(piece)
        total += piece.n if i == 0 else piece.n - 1

    parent = {i: rng.randrange(i) for i in range(1, k)}
    children: dict[int, list[int]] = {i: [] for i in range(k)}
    for i in range(1, k):
        children[parent[i]].append(i)

    # Per piece: the vertex identified with its parent, and the vertices its
    # children attach to.  Conditioned runs draw the whole anchor set from
    # the subsets that actually pass the checks.
    own_anchor: dict[int, int] = {}
    target_of: dict[int, int] = {}
    for i in range(k):
        g = pieces[i]
        need = len(children[i]) + (1 if i > 0 else 0)
        if condition is None:
            if i > 0:
                own_anchor[i] = rng.randrange(g.n)
            for c in children[i]:
                target_of[c] = rng.randrange(g.n)
            continue
        if need == 0:
            return None  # isolated piece; only possible for k == 1
        if need == 1:
            candidates = [v for v in range(g.n) if check_C2(g, (v,))]
            if not candidates:
                return None
            chosen = [rng.choice(candidates)]
        else:
            if need > g.n:
                return None
            options = [s for s in combinations(range(g.n), need) if check_C1(g, s).holds]
            if not options:
                return None
            chosen = list(rng.choice(options))
            rng.shuffle(chosen)
        if i > 0:
            own_anchor[i] = chosen.pop()
        for c in children[i]:
            target_of[c] = chosen.pop()

    def resolve_name(i: int, local: int) -> str:
        while i > 0 and local == own_anchor[i]:
            i, local = parent[i], target_of[i]
        return f"a{i}.{local}"

    spec = []
    for i in range(k):
        amap: dict[int, str] = {}
        for c in children[i]:
            amap[target_of[c]] = resolve_name(i, target_of[c])
        if i > 0:
            amap[own_anchor[i]] = resolve_name(i, own_anchor[i])
        spec.append((pieces[i], amap))
    dec = point_attach(spec)
    if dec.composite.n > max_order:
        return None
    if condition is not None:
        if any(not ok for _, ok in _attachment_checks(dec)):
            return None
        if condition == "cor3":
            for i, piece in enumerate(dec.pieces):
                if len(dec.at_local(i)) == piece.n:
                    return None
                if fdim(piece).value != fdim_plus(piece).value:
                    return None
    return dec


def decomposition_suite(
    seed: int,
    count: int,
    k_choices: Sequence[int],
    max_order: int,
    condition: str | None = None,
) -> list[Decomposition]:
    """A reproducible batch of random decompositions (one shared rng stream)."""
    rng = random.Random(seed)
    ks = list(k_choices)
    out = []
    while len(out) < count:
        out.append(random_decomposition(rng, rng.choice(ks), max_order, condition))
    return out


# --- rooted-product JSON format -----------------------------------------------
#
# { "base": {"n": ..., "edges": ...},
#   "family": [ {"graph": {...}, "root": int}, ... ] }
# or, for one isomorphic piece per base vertex:
# { "base": ..., "family": {"graph": {...}, "root": int, "copies": "per-base-vertex"} }

def rooted_spec_to_json(spec: RootedProductSpec) -> dict:
    return {
        "base": graph_to_json_dict(spec.base),
        "family": [
            {"graph": graph_to_json_dict(rp.graph), "root": rp.root} for rp in spec.family
        ],
    }


def rooted_spec_from_json(obj) -> RootedProductSpec:
    if not isinstance(obj, dict) or "base" not in obj or "family" not in obj:
        raise InputFormatError('rooted-product JSON needs "base" and "family"')
    base = graph_from_json_dict(obj["base"])
    family = obj["family"]
    if isinstance(family, dict):
        if family.get("copies") != "per-base-vertex":
            raise InputFormatError('uniform family needs "copies": "per-base-vertex"')
        piece = graph_from_json_dict(family.get("graph"))
        root = family.get("root")
        if not isinstance(root, int):
            raise InputFormatError('"root" must be an integer')
        return uniform_rooted_spec(base, piece, root)
    if not isinstance(family, list):
        raise InputFormatError('"family" must be a list or a uniform-copies object')
    pieces = []
    for idx, entry in enumerate(family):
        if not isinstance(entry, dict) or "graph" not in entry or "root" not in entry:
            raise InputFormatError(f'family entry {idx} needs "graph" and "root"')
        if not isinstance(entry["root"], int):
            raise InputFormatError(f"family entry {idx}: root must be an integer")
        pieces.append(RootedPiece(graph_from_json_dict(entry["graph"]), entry["root"]))
    return RootedProductSpec(base, tuple(pieces))
