"""Valise graph data model and exact matrix extraction.

A valise graph is a two-level bipartite graph: one row of bosons, one row
of fermions.  Edges carry a color (one of N) and a sign (dashed = -1,
solid = +1).  For a graph to encode a pair of signed permutation matrix
lists (L_I, R_I) the edges of each color must form a partial matching:
no vertex may touch two edges of the same color.

Matrix convention: L_I is d x dhat with L_I[i, j] equal to the sign of
the color-I edge between boson i+1 and fermion j+1 (0 if absent), and
R_I is its transpose.  All arithmetic is exact over int64; no floats
appear anywhere in this package.

Vertices are addressed 1-based in every report and file format, matching
the usual convention for these graphs.  Internally a vertex is the pair
("B", i) or ("F", j) with 1-based i, j.
"""

from __future__ import annotations

import dataclasses
import enum
import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import GraphFormatError

Node = tuple[str, int]


class Statistics(enum.Enum):
    BOSON = "boson"
    FERMION = "fermion"


class Vertex(NamedTuple):
    statistics: Statistics
    index: int  # 1-based within its row
    label: str

    @property
    def node(self) -> Node:
        return ("B" if self.statistics is Statistics.BOSON else "F", self.index)

    def __str__(self) -> str:
        return f"{self.node[0]}{self.index}"


class Edge(NamedTuple):
    boson: int  # 1-based boson index
    fermion: int  # 1-based fermion index
    color: int  # 1-based color
    sign: int  # -1 or +1


@dataclass(frozen=True)
class ValiseGraph:
    """Immutable edge-colored signed bipartite graph in valise form."""

    name: str
    n_colors: int
    bosons: tuple[str, ...]
    fermions: tuple[str, ...]
    edges: tuple[Edge, ...]

    @property
    def d(self) -> int:
        return len(self.bosons)

    @property
    def d_hat(self) -> int:
        return len(self.fermions)

    def boson_vertices(self) -> tuple[Vertex, ...]:
        return tuple(
            Vertex(Statistics.BOSON, i + 1, lab) for i, lab in enumerate(self.bosons)
        )

    def fermion_vertices(self) -> tuple[Vertex, ...]:
        return tuple(
            Vertex(Statistics.FERMION, j + 1, lab)
            for j, lab in enumerate(self.fermions)
        )

    def vertices(self) -> tuple[Vertex, ...]:
        return self.boson_vertices() + self.fermion_vertices()

    def vertex(self, node: Node) -> Vertex:
        kind, idx = node
        if kind == "B":
            return Vertex(Statistics.BOSON, idx, self.bosons[idx - 1])
        return Vertex(Statistics.FERMION, idx, self.fermions[idx - 1])

    def with_name(self, name: str) -> "ValiseGraph":
        return dataclasses.replace(self, name=name)

    def with_signs(self, signs: Sequence[int]) -> "ValiseGraph":
        """Replace edge signs positionally; order follows self.edges."""
        if len(signs) != len(self.edges):
            raise ValueError(
                f"got {len(signs)} signs for {len(self.edges)} edges"
            )
        new_edges = tuple(
            Edge(e.boson, e.fermion, e.color, int(s))
            for e, s in zip(self.edges, signs)
        )
        return dataclasses.replace(self, edges=new_edges)


def node_str(node: Node) -> str:
    return f"{node[0]}{node[1]}"


def _check_label_row(what: str, labels: object) -> list[str]:
    problems = []
    if not isinstance(labels, tuple) or not all(
        isinstance(x, str) for x in labels
    ):
        problems.append(f"{what} labels must be a tuple of strings")
    return problems


def validate(g: ValiseGraph) -> list[str]:
    """Return all format violations, deterministically ordered.

    An empty list means the graph is a well-formed valise graph: edge
    endpoints and colors in range, signs in {-1, +1}, no repeated
    (boson, fermion, color) triple, and each color a partial matching.
    Violations are reported with 1-based edge positions.
    """
    problems = _check_label_row("boson", g.bosons) + _check_label_row(
        "fermion", g.fermions
    )
    if g.n_colors < 1:
        problems.append(f"n_colors must be at least 1, got {g.n_colors}")
    d, dh = g.d, g.d_hat

    for pos, e in enumerate(g.edges, start=1):
        if not (1 <= e.boson <= d):
            problems.append(
                f"edge {pos}: boson index {e.boson} out of range 1..{d}"
            )
        if not (1 <= e.fermion <= dh):
            problems.append(
                f"edge {pos}: fermion index {e.fermion} out of range 1..{dh}"
            )
        if not (1 <= e.color <= g.n_colors):
            problems.append(
                f"edge {pos}: color {e.color} out of range 1..{g.n_colors}"
            )
        if e.sign not in (-1, 1):
            problems.append(f"edge {pos}: sign must be -1 or +1, got {e.sign}")

    seen_triple: dict[tuple[int, int, int], int] = {}
    seen_slot: dict[tuple[str, int, int], int] = {}
    for pos, e in enumerate(g.edges, start=1):
        triple = (e.boson, e.fermion, e.color)
        if triple in seen_triple:
            problems.append(
                f"edges {seen_triple[triple]} and {pos}: duplicate edge "
                f"(boson {e.boson}, fermion {e.fermion}, color {e.color})"
            )
            continue  # a duplicate would double-report the matching slots
        seen_triple[triple] = pos
        for slot in (("boson", e.boson, e.color), ("fermion", e.fermion, e.color)):
            if slot in seen_slot:
                problems.append(
                    f"edges {seen_slot[slot]} and {pos}: {slot[0]} {slot[1]} "
                    f"has two edges of color {slot[2]}"
                )
            else:
                seen_slot[slot] = pos
    return problems


def to_matrices(g: ValiseGraph) -> list[np.ndarray]:
    """Extract the L matrices, one d x dhat int64 array per color.

    L_I[i, j] is the sign of the color-(I+1) edge joining boson i+1 and
    fermion j+1, or 0 when no such edge exists.  Raises ValueError when
    the graph is not a well-formed valise graph, since the matrices
    would not be faithful.
    """
    problems = validate(g)
    if problems:
        raise ValueError(
            "graph is not a valid valise graph: " + "; ".join(problems)
        )
    mats = [np.zeros((g.d, g.d_hat), dtype=np.int64) for _ in range(g.n_colors)]
    for e in g.edges:
        mats[e.color - 1][e.boson - 1, e.fermion - 1] = e.sign
    for m in mats:
        m.setflags(write=False)
    return mats


def from_matrices(
    name: str,
    matrices: Sequence[object],
    boson_labels: Sequence[str] | None = None,
    fermion_labels: Sequence[str] | None = None,
) -> ValiseGraph:
    """Build the valise graph whose L matrices are the given arrays.

    Each matrix must have entries in {-1, 0, 1} with at most one nonzero
    per row and per column; shapes must agree across colors.
    """
    if not matrices:
        raise ValueError("need at least one matrix")
    arrs = [np.asarray(m, dtype=np.int64) for m in matrices]
    d, dh = arrs[0].shape
    edges = []
    for ci, a in enumerate(arrs, start=1):
        if a.ndim != 2 or a.shape != (d, dh):
            raise ValueError(
                f"matrix {ci} has shape {a.shape}, expected {(d, dh)}"
            )
        bad = np.setdiff1d(np.unique(a), [-1, 0, 1])
        if bad.size:
            raise ValueError(
                f"matrix {ci} has entries outside -1, 0, 1: {bad.tolist()}"
            )
        nz = np.abs(a)
        rows = nz.sum(axis=1)
        cols = nz.sum(axis=0)
        if (rows > 1).any():
            r = int(np.argmax(rows > 1)) + 1
            raise ValueError(f"matrix {ci} has two nonzeros in row {r}")
        if (cols > 1).any():
            c = int(np.argmax(cols > 1)) + 1
            raise ValueError(f"matrix {ci} has two nonzeros in column {c}")
        for i, j in zip(*np.nonzero(a)):
            edges.append(Edge(int(i) + 1, int(j) + 1, ci, int(a[i, j])))
    if boson_labels is None:
        boson_labels = [str(i + 1) for i in range(d)]
    if fermion_labels is None:
        fermion_labels = [str(j + 1) for j in range(dh)]
    if len(boson_labels) != d or len(fermion_labels) != dh:
        raise ValueError("label counts do not match matrix shape")
    g = ValiseGraph(
        name=name,
        n_colors=len(arrs),
        bosons=tuple(boson_labels),
        fermions=tuple(fermion_labels),
        edges=tuple(sorted(edges)),
    )
    return g


def connected_components(g: ValiseGraph) -> list[frozenset[Node]]:
    """Connected components over all vertices, ignoring colors and signs.

    Isolated vertices form singleton components.  Components are sorted
    by their smallest member for determinism.
    """
    adj: dict[Node, list[Node]] = {v.node: [] for v in g.vertices()}
    for e in g.edges:
        b, f = ("B", e.boson), ("F", e.fermion)
        adj[b].append(f)
        adj[f].append(b)
    seen: set[Node] = set()
    comps = []
    for start in adj:
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(w for w in adj[v] if w not in comp)
        seen |= comp
        comps.append(frozenset(comp))
    return sorted(comps, key=lambda c: min(c))


def is_connected(g: ValiseGraph) -> bool:
    return len(connected_components(g)) <= 1


# --- JSON wire format ---------------------------------------------------
#
# {"name": str, "colors": int, "bosons": [str], "fermions": [str],
#  "edges": [{"b": int, "f": int, "c": int, "s": -1 | 1}, ...]}
#
# to_json is canonical: edges sorted by (b, f, c), fixed key order and
# layout, so equal graphs serialize to identical bytes.

_TOP_KEYS = ("name", "colors", "bosons", "fermions", "edges")
_EDGE_KEYS = ("b", "f", "c", "s")


def to_json_obj(g: ValiseGraph) -> dict:
    """The wire format as a plain dict (same content as to_json)."""
    return {
        "name": g.name,
        "colors": g.n_colors,
        "bosons": list(g.bosons),
        "fermions": list(g.fermions),
        "edges": [
            {"b": e.boson, "f": e.fermion, "c": e.color, "s": e.sign}
            for e in sorted(g.edges)
        ],
    }


def to_json(g: ValiseGraph) -> str:
    """Serialize to the canonical JSON text (deterministic bytes)."""
    lines = [
        "{",
        f'  "name": {json.dumps(g.name)},',
        f'  "colors": {g.n_colors},',
        f'  "bosons": {json.dumps(list(g.bosons))},',
        f'  "fermions": {json.dumps(list(g.fermions))},',
        '  "edges": [',
    ]
    ordered = sorted(g.edges)
    for k, e in enumerate(ordered):
        comma = "," if k + 1 < len(ordered) else ""
        lines.append(
            f'    {{"b": {e.boson}, "f": {e.fermion}, '
            f'"c": {e.color}, "s": {e.sign}}}{comma}'
        )
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphFormatError(msg)


def from_json(text: str) -> ValiseGraph:
    """Parse the JSON wire format, rejecting malformed input loudly.

    Unknown keys, wrong types, out-of-range indices, repeated
    (b, f, c) triples, and matching violations are all rejected with a
    GraphFormatError naming the problem.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"not valid JSON: {exc}") from exc
    _require(isinstance(obj, dict), "top level must be a JSON object")
    extra = sorted(set(obj) - set(_TOP_KEYS))
    _require(not extra, f"unknown keys: {', '.join(extra)}")
    missing = [k for k in _TOP_KEYS if k not in obj]
    _require(not missing, f"missing keys: {', '.join(missing)}")
    _require(isinstance(obj["name"], str), '"name" must be a string')
    _require(
        isinstance(obj["colors"], int) and not isinstance(obj["colors"], bool),
        '"colors" must be an integer',
    )
    for key in ("bosons", "fermions"):
        _require(
            isinstance(obj[key], list)
            and all(isinstance(x, str) for x in obj[key]),
            f'"{key}" must be a list of strings',
        )
    _require(isinstance(obj["edges"], list), '"edges" must be a list')
    edges = []
    for pos, raw in enumerate(obj["edges"], start=1):
        _require(isinstance(raw, dict), f"edge {pos} must be an object")
        extra = sorted(set(raw) - set(_EDGE_KEYS))
        _require(not extra, f"edge {pos}: unknown keys: {', '.join(extra)}")
        missing = [k for k in _EDGE_KEYS if k not in raw]
        _require(not missing, f"edge {pos}: missing keys: {', '.join(missing)}")
        for k in _EDGE_KEYS:
            _require(
                isinstance(raw[k], int) and not isinstance(raw[k], bool),
                f'edge {pos}: "{k}" must be an integer',
            )
        edges.append(Edge(raw["b"], raw["f"], raw["c"], raw["s"]))
    g = ValiseGraph(
        name=obj["name"],
        n_colors=obj["colors"],
        bosons=tuple(obj["bosons"]),
        fermions=tuple(obj["fermions"]),
        edges=tuple(edges),
    )
    problems = validate(g)
    if problems:
        raise GraphFormatError("; ".join(problems))
    return g


def load(path: str) -> ValiseGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(fh.read())


def dump(g: ValiseGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json(g))
