"""Counting and cocycle invariants of the bundled classical links."""

from biracks import (
    cocycle_invariant,
    counting_invariant,
    load_birack,
    load_cochain,
    load_diagram,
    reverse_component,
)

b4 = load_birack("ab4")
phi4 = load_cochain("ab4_phi", 4)

# The Hopf link over the 4-element birack.  N = 2, so the framing tile
# for a 2-component link has 4 cells; only one of them admits labelings.
hopf = load_diagram("l2a1")
result = counting_invariant(hopf, b4)
print("per-framing counts:")
for framing, count in result.per_framing:
    print(f"  {framing}: {count}")
print("counting invariant:", result.phi_z)

# The cocycle invariant refines the count into a polynomial in u.
print("hopf weight polynomial:", cocycle_invariant(hopf, b4, phi4).poly)

# A small table over the 5-element biquandle (N = 1, tile is trivial).
b5 = load_birack("ab5")
phi5 = load_cochain("ab5_phi", 5)
for name in ("l2a1", "l4a1", "l5a1", "l6a2", "l6a4", "l6a5"):
    poly = cocycle_invariant(load_diagram(name), b5, phi5).poly
    print(f"  {name}: {poly}")

# The invariant sees orientation: reverse one Hopf component.
reversed_hopf = reverse_component(hopf, 0)
print("hopf reversed:", cocycle_invariant(reversed_hopf, b5, phi5).poly)
