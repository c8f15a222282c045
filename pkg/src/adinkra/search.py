"""Exhaustive search over N-color topologies on d bosons + d fermions.

A topology with every color a perfect matching is a tuple of
permutations (sigma_1..sigma_N), sigma_I sending boson i to its
color-I fermion.  Relabeling fermions lets us fix sigma_1 = identity,
so the raw space is (d!)^(N-1).

Support pruning: for I != J the product L_I R_J is the permutation
matrix of sigma_J^-1 sigma_I up to signs, and L_J R_I is its
transpose.  Their sum can only vanish cell-for-cell if that relative
permutation is an involution without fixed points (the transpose pair
lands on the same cells, and a fixed point contributes equal diagonal
entries that no sign choice cancels).  Equivalently: the two-color
subgraph is a disjoint union of quads.  The rule is therefore exactly
the quad candidacy filter lifted to permutation level; the tests
confirm pruned and unpruned searches agree, as does the acceptance
cross-check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import graph as gm
from .dashings import DashingAssignment, resolve_budget, search_dashings
from .errors import BudgetError
from .graph import Edge, ValiseGraph

TOPOLOGY_BUDGET = 10**9

Perm = tuple[int, ...]  # 0-based images
Topology = tuple[Perm, ...]


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _relative(p: Perm, q: Perm) -> Perm:
    """The boson permutation q^-1 then p, i.e. i -> q^-1(p(i))."""
    qinv = _inverse(q)
    return tuple(qinv[v] for v in p)


def _compose(p: Perm, q: Perm) -> Perm:
    """i -> p(q(i))."""
    return tuple(p[v] for v in q)


def is_fpf_involution(p: Perm) -> bool:
    return all(p[i] != i and p[p[i]] == i for i in range(len(p)))


@dataclass(frozen=True)
class SearchSpec:
    d: int
    n_colors: int
    dedupe: bool = True

    def __post_init__(self):
        if self.d < 1 or self.n_colors < 1:
            raise ValueError("need d >= 1 and n_colors >= 1")

    @property
    def raw_size(self) -> int:
        return math.factorial(self.d) ** (self.n_colors - 1)


@dataclass(frozen=True)
class TopologyClass:
    topology: Topology
    canonical_key: Topology
    graph: ValiseGraph  # witness dashing applied
    witness: DashingAssignment
    connected: bool
    multiplicity: int  # raw candidates mapping to this class
    first_index: int  # position in raw enumeration order


@dataclass(frozen=True)
class SearchOutcome:
    spec: SearchSpec
    solutions: tuple[TopologyClass, ...]
    scanned: int
    pruned: tuple[tuple[str, int], ...]  # (reason, raw candidate count)

    def connected_solutions(self) -> tuple[TopologyClass, ...]:
        return tuple(s for s in self.solutions if s.connected)

    def to_json_obj(self) -> dict:
        return {
            "d": self.spec.d,
            "colors": self.spec.n_colors,
            "scanned": self.scanned,
            "pruned": {reason: count for reason, count in self.pruned},
            "solutions": [
                {
                    "graph": gm.to_json_obj(s.graph),
                    "connected": s.connected,
                    "multiplicity": s.multiplicity,
                }
                for s in self.solutions
            ],
        }


def topology_graph(topology: Topology, name: str = "topology") -> ValiseGraph:
    """Valise graph of a matching tuple, all signs +1."""
    d = len(topology[0])
    edges = [
        Edge(i + 1, p[i] + 1, color, 1)
        for color, p in enumerate(topology, start=1)
        for i in range(d)
    ]
    return ValiseGraph(
        name=name,
        n_colors=len(topology),
        bosons=tuple(str(i + 1) for i in range(d)),
        fermions=tuple(str(j + 1) for j in range(d)),
        edges=tuple(sorted(edges)),
    )


def topology_of(g: ValiseGraph) -> Topology:
    """Extract the matching tuple from a graph whose colors are perfect
    matchings; signs are discarded."""
    if g.d != g.d_hat:
        raise ValueError(f"need equal counts, got {g.d} vs {g.d_hat}")
    maps: list[dict[int, int]] = [{} for _ in range(g.n_colors)]
    for e in g.edges:
        maps[e.color - 1][e.boson - 1] = e.fermion - 1
    out = []
    for color, m in enumerate(maps, start=1):
        if len(m) != g.d or len(set(m.values())) != g.d:
            raise ValueError(f"color {color} is not a perfect matching")
        out.append(tuple(m[i] for i in range(g.d)))
    return tuple(out)


def canonical_form(topology: Topology | ValiseGraph) -> Topology:
    """Key invariant under boson/fermion relabeling and color permutation.

    Fermion relabeling is normalized away by composing with the first
    color's inverse; the key is the minimum over color permutations and
    boson relabelings of the resulting relative permutation tuple.
    Cost is O(N! * d! * N * d): meant for desk-scale d.
    """
    if isinstance(topology, ValiseGraph):
        topology = topology_of(topology)
    d = len(topology[0])
    n = len(topology)
    best: Topology | None = None
    for order in itertools.permutations(range(n)):
        base_inv = _inverse(topology[order[0]])
        rel = [_compose(base_inv, topology[c]) for c in order[1:]]
        for alpha in itertools.permutations(range(d)):
            alpha_inv = _inverse(alpha)
            key = tuple(
                _compose(alpha, _compose(t, alpha_inv)) for t in rel
            )
            if best is None or key < best:
                best = key
    if best is None:  # n == 1: every matching is the same class
        best = ()
    return best


def enumerate_topologies(spec: SearchSpec, prune: bool = True,
                         budget: int | None = None):
    """Yield candidate topologies, sigma_1 = identity, in lexicographic
    order of the remaining permutation choices."""
    budget = resolve_budget(budget, TOPOLOGY_BUDGET)
    if spec.raw_size > budget:
        raise BudgetError(spec.raw_size, budget, what="topology enumeration")
    perms = list(itertools.permutations(range(spec.d)))
    identity = tuple(range(spec.d))

    def rec(chosen: list[Perm]):
        if len(chosen) == spec.n_colors:
            yield tuple(chosen)
            return
        for p in perms:
            if prune and not all(
                is_fpf_involution(_relative(p, q)) for q in chosen
            ):
                continue
            chosen.append(p)
            yield from rec(chosen)
            chosen.pop()

    yield from rec([identity])


_SUPPORT_REASON = "relative permutation not a fixed-point-free involution"


def _scan_chunk(
    spec: SearchSpec,
    prune: bool,
    perms: list[Perm],
    top_range: tuple[int, int],
) -> tuple[dict[Topology, tuple[int, int, Topology]], dict[str, int]]:
    """Enumerate candidates whose sigma_2 index lies in top_range.

    Returns {class_key: (first_index, multiplicity, topology)} and
    pruned counts.  Candidate indices are mixed-radix positions in the
    full (d!)^(N-1) space, so merging chunks preserves global order; a
    prefix pruned at level L accounts for its whole subtree.
    """
    n_perms = len(perms)
    identity = tuple(range(spec.d))
    levels = spec.n_colors - 1
    classes: dict[Topology, tuple[int, int, Topology]] = {}
    pruned = {_SUPPORT_REASON: 0}

    def record(topo: Topology, index: int) -> None:
        key = canonical_form(topo) if spec.dedupe else topo
        if key in classes:
            first, mult, rep = classes[key]
            classes[key] = (first, mult + 1, rep)
        else:
            classes[key] = (index, 1, topo)

    def rec(chosen: list[Perm], base: int, level: int) -> None:
        if level == levels:
            record(tuple(chosen), base)
            return
        subtree = n_perms ** (levels - level - 1)
        lo, hi = top_range if level == 0 else (0, n_perms)
        for t in range(lo, hi):
            p = perms[t]
            if prune and not all(
                is_fpf_involution(_relative(p, q)) for q in chosen
            ):
                pruned[_SUPPORT_REASON] += subtree
                continue
            chosen.append(p)
            rec(chosen, base + t * subtree, level + 1)
            chosen.pop()

    if levels == 0:
        # No free colors: the identity matching is the only candidate.
        if top_range[0] == 0:
            record((identity,), 0)
    else:
        rec([identity], 0, 0)
    return classes, pruned


def run_search(
    spec: SearchSpec,
    prune: bool = True,
    budget: int | None = None,
    workers: int = 1,
) -> SearchOutcome:
    """Full pipeline: enumerate, dedupe, dashing-search each class.

    Every returned solution carries a witness dashing and has been
    re-verified by the exact garden check inside search_dashings.  The
    outcome is independent of worker count: chunks cover disjoint
    sigma_2 ranges and merge by first raw index.
    """
    budget = resolve_budget(budget, TOPOLOGY_BUDGET)
    if spec.raw_size > budget:
        raise BudgetError(spec.raw_size, budget, what="topology search")
    perms = list(itertools.permutations(range(spec.d)))

    if spec.n_colors == 1:
        ranges = [(0, 1)]
    else:
        n_top = len(perms)
        workers = max(1, min(workers, n_top))
        step, extra = divmod(n_top, workers)
        ranges, lo = [], 0
        for w in range(workers):
            hi = lo + step + (1 if w < extra else 0)
            ranges.append((lo, hi))
            lo = hi

    merged: dict[Topology, tuple[int, int, Topology]] = {}
    pruned_counts: dict[str, int] = {}
    for rng in ranges:
        classes, pruned = _scan_chunk(spec, prune, perms, rng)
        for key, (first, mult, topo) in classes.items():
            if key in merged:
                mfirst, mmult, mtopo = merged[key]
                better = (first, topo) if first < mfirst else (mfirst, mtopo)
                merged[key] = (better[0], mmult + mult, better[1])
            else:
                merged[key] = (first, mult, topo)
        for reason, count in pruned.items():
            if count:
                pruned_counts[reason] = pruned_counts.get(reason, 0) + count

    solutions = []
    ordered = sorted(merged.items(), key=lambda kv: kv[1][0])
    for key, (first, mult, topo) in ordered:
        g = topology_graph(topo, name=f"search-d{spec.d}-n{spec.n_colors}-{first}")
        result = search_dashings(g, exhaustive=False, budget=budget)
        if result.feasible:
            dashed = g.with_signs(result.witness.signs)
            solutions.append(
                TopologyClass(
                    topology=topo,
                    canonical_key=key if spec.dedupe else canonical_form(topo),
                    graph=dashed,
                    witness=result.witness,
                    connected=gm.is_connected(dashed),
                    multiplicity=mult,
                    first_index=first,
                )
            )
        else:
            reason = result.pruned_reason or "no feasible dashing"
            pruned_counts[reason] = pruned_counts.get(reason, 0) + mult
    return SearchOutcome(
        spec=spec,
        solutions=tuple(solutions),
        scanned=spec.raw_size,
        pruned=tuple(sorted(pruned_counts.items())),
    )
