"""Graphviz DOT rendering of valise graphs.

Bosons are hollow circles on the top rank, fermions filled circles on
the bottom rank, every color gets its own pen color, and dashed style
marks sign -1.  Output is deterministic byte for byte.
"""

from __future__ import annotations

from .graph import ValiseGraph

PALETTE = (
    "black",
    "red",
    "green3",
    "blue",
    "darkorange",
    "purple",
    "brown",
    "deeppink",
    "cyan3",
    "gold3",
)


def color_name(color: int) -> str:
    """Pen color for a 1-based color index; cycles past the palette."""
    return PALETTE[(color - 1) % len(PALETTE)]


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: ValiseGraph) -> str:
    lines = [f"graph {_quote(g.name)} {{"]
    lines.append("  rankdir=TB;")
    lines.append('  node [shape=circle, fontsize=10];')
    lines.append("  { rank=source;")
    for i, lab in enumerate(g.bosons, start=1):
        lines.append(f"    b{i} [label={_quote(lab)}];")
    lines.append("  }")
    lines.append("  { rank=sink;")
    for j, lab in enumerate(g.fermions, start=1):
        lines.append(
            f"    f{j} [label={_quote(lab)}, style=filled, "
            f"fillcolor=black, fontcolor=white];"
        )
    lines.append("  }")
    for e in sorted(g.edges):
        style = ", style=dashed" if e.sign < 0 else ""
        lines.append(
            f"  b{e.boson} -- f{e.fermion} "
            f"[color={color_name(e.color)}{style}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
