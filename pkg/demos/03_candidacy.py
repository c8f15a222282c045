"""Sign-independent candidacy filters."""

import numpy as np

from adinkra import builtin, candidacy

for name in ("cube", "rhombic-dodecahedron", "rhombic-icosahedron"):
    g = builtin(name)
    rep = candidacy(g)
    print(f"{g.name}: {rep.verdict}")
    for reason in rep.reasons:
        print(f"  {reason}")
    if rep.coverage_misses:
        for vertex, missing in rep.coverage_misses[:3]:
            colors = ", ".join(str(c) for c in missing)
            print(f"  {vertex} (label {vertex.label}) lacks colors {colors}")
        if len(rep.coverage_misses) > 3:
            print(f"  ... {len(rep.coverage_misses) - 3} more vertices")
    print()

# The filters never look at signs, so a random redash changes nothing.
rng = np.random.default_rng(1)
g = builtin("rhombic-icosahedron")
signs = [int(s) for s in rng.choice((-1, 1), size=len(g.edges))]
assert candidacy(g.with_signs(signs)).reasons == candidacy(g).reasons
print("a random redash of the rhombic icosahedron is rejected identically")
