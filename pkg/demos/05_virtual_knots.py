"""Virtual knots from Gauss codes.

Gauss codes list each crossing twice, as O (over) or U (under) with a
sign.  Virtual crossings are simply never mentioned, so the same parser
covers classical and virtual knots.
"""

from biracks import (
    cocycle_invariant,
    load_birack,
    load_cochain,
    load_diagram,
    parse_gauss,
    render_gauss,
)

b5 = load_birack("ab5")
phi5 = load_cochain("ab5_phi", 5)

# The virtual trefoil from its Gauss code.
v2_1 = parse_gauss("O1+O2+U1+U2+")
print("v2_1:", v2_1.semiarc_count, "semiarcs,", len(v2_1.crossings), "crossings")
assert load_diagram("v2_1") == v2_1

# Its cocycle invariant differs from every classical knot with crossing
# number at most 4 over this biquandle.
print("v2_1 invariant:", cocycle_invariant(v2_1, b5, phi5).poly)
for name in ("k3_1", "k4_1"):
    print(f"{name} invariant:", cocycle_invariant(load_diagram(name), b5, phi5).poly)

# The counting invariant alone misses some of these distinctions; v3_1
# and the trefoil both have 5 labelings, while the weights split v3_2 off.
for name in ("v3_1", "v3_2"):
    result = cocycle_invariant(load_diagram(name), b5, phi5)
    print(f"{name}: count {result.phi_z}, polynomial {result.poly}")

# Round trip: render back to a Gauss code and reparse.
code = render_gauss(v2_1)
print("rendered:", code)
assert parse_gauss(code) == v2_1
