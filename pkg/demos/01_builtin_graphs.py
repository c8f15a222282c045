"""Tour of the built-in graph catalog."""

from adinkra import BUILTIN_NAMES, builtin, from_json, is_connected, to_json

print("built-in graphs:")
for name in BUILTIN_NAMES:
    if name == "hypercube-<n>":
        name = "hypercube-4"
    g = builtin(name)
    status = "connected" if is_connected(g) else "disconnected"
    print(
        f"  {g.name:24s} {g.d:2d} bosons, {g.d_hat:2d} fermions, "
        f"{g.n_colors} colors, {len(g.edges):3d} edges, {status}"
    )

# Every graph serializes to canonical JSON and parses back unchanged.
g = builtin("cube")
assert from_json(to_json(g)) == g
print()
print("canonical JSON for the 2-cube:")
print(to_json(builtin("diamond")), end="")
