"""DOT export."""

from adinkra import Edge, ValiseGraph, diamond, lifted_rd, to_dot
from adinkra.dot import PALETTE, color_name


def test_color_name_cycles():
    assert color_name(1) == "black"
    assert color_name(2) == "red"
    assert color_name(len(PALETTE) + 1) == "black"


def test_diamond_dot_layout():
    text = to_dot(diamond())
    lines = text.splitlines()
    assert lines[0] == 'graph "diamond" {'
    assert lines[-1] == "}"
    assert "  rankdir=TB;" in lines
    assert '    b1 [label="00"];' in lines
    assert '    f2 [label="10", style=filled, fillcolor=black, fontcolor=white];' in lines
    assert "  b1 -- f1 [color=black];" in lines
    # The single dashed edge of the diamond renders with style=dashed.
    assert "  b2 -- f1 [color=red, style=dashed];" in lines
    assert sum("style=dashed" in ln for ln in lines if " -- " in ln) == 1


def test_dot_is_deterministic_and_quotes_labels():
    g = lifted_rd()
    assert to_dot(g) == to_dot(g)
    assert '[label="1\'"]' in to_dot(g).replace(", style=filled", "")


def test_dot_edge_order_follows_sorted_edges():
    g = ValiseGraph(
        "z", 2, ("a", "b"), ("x", "y"),
        (Edge(2, 2, 1, 1), Edge(1, 1, 2, -1)),
    )
    text = to_dot(g)
    first = text.index("b1 -- f1")
    second = text.index("b2 -- f2")
    assert first < second
    assert "b1 -- f1 [color=red, style=dashed];" in text
