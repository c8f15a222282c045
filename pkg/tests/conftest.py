"""Shared helpers for the test suite.

Random graphs are always built from a seeded generator passed in by the
caller, so every test run sees the same sequence.
"""

from __future__ import annotations

import numpy as np

from adinkra import Edge, ValiseGraph, garden_check, to_matrices


def random_valise_graph(
    rng: np.random.Generator,
    max_d: int = 5,
    max_colors: int = 4,
    tag: int = 0,
) -> ValiseGraph:
    """A uniformly messy but always valid valise graph.

    Each color gets an independent random partial matching with random
    signs, so matching constraints hold by construction while counts,
    coverage, and cycle structure vary freely.
    """
    d = int(rng.integers(1, max_d + 1))
    dh = int(rng.integers(1, max_d + 1))
    n = int(rng.integers(1, max_colors + 1))
    edges = []
    for c in range(1, n + 1):
        k = int(rng.integers(0, min(d, dh) + 1))
        bs = rng.permutation(d)[:k]
        fs = rng.permutation(dh)[:k]
        for b, f in zip(bs, fs):
            edges.append(
                Edge(int(b) + 1, int(f) + 1, c, int(rng.choice((-1, 1))))
            )
    return ValiseGraph(
        name=f"random-{tag}",
        n_colors=n,
        bosons=tuple(f"b{i}" for i in range(1, d + 1)),
        fermions=tuple(f"f{j}" for j in range(1, dh + 1)),
        edges=tuple(sorted(edges)),
    )


def all_sign_vectors(n_edges: int):
    """All sign tuples in lexicographic order with -1 < +1."""
    for v in range(2**n_edges):
        yield tuple(
            1 if (v >> (n_edges - 1 - t)) & 1 else -1 for t in range(n_edges)
        )


def raw_feasible_count(g: ValiseGraph) -> int:
    """Brute-force count of garden-passing dashings over all 2^E signs."""
    count = 0
    for signs in all_sign_vectors(len(g.edges)):
        if garden_check(to_matrices(g.with_signs(signs))).ok:
            count += 1
    return count


def disjoint_union(a: ValiseGraph, b: ValiseGraph, name: str) -> ValiseGraph:
    """Side-by-side union; colors are shared, vertex rows concatenate."""
    if a.n_colors != b.n_colors:
        raise ValueError("unions here keep a common color count")
    edges = list(a.edges) + [
        Edge(e.boson + a.d, e.fermion + a.d_hat, e.color, e.sign)
        for e in b.edges
    ]
    return ValiseGraph(
        name=name,
        n_colors=a.n_colors,
        bosons=a.bosons + tuple(lab + "+" for lab in b.bosons),
        fermions=a.fermions + tuple(lab + "+" for lab in b.fermions),
        edges=tuple(sorted(edges)),
    )
