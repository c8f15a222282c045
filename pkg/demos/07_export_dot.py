"""Graphviz export: solid edges for +1, dashed for -1."""

import tempfile
from pathlib import Path

from adinkra import builtin, to_dot

print(to_dot(builtin("diamond")))

out_dir = Path(tempfile.mkdtemp(prefix="adinkra-dot-"))
for name in ("cube", "rhombic-dodecahedron"):
    g = builtin(name)
    path = out_dir / f"{g.name}.dot"
    path.write_text(to_dot(g))
    print(f"wrote {path}")
print("render with: dot -Tpng <file> -o <file>.png")
