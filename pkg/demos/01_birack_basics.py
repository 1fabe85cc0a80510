"""Build augmented biracks three ways and check the axioms."""

from biracks import (
    check_axioms,
    cycle_notation,
    from_tables,
    load_birack,
    tsr_birack,
)


def show(name, b):
    print(f"{name}: size {b.size}, pi = {cycle_notation(b.pi)}, N = {b.characteristic}")
    print(f"  biquandle: {b.is_biquandle}")


# 1. From explicit permutation tables.  alpha[x][y] is alpha_x(y), 1-based.
A14 = (2, 4, 1, 3)
A23 = (3, 1, 4, 2)
ab4 = from_tables((A14, A23, A23, A14), (A23, A14, A14, A23))
show("from_tables", ab4)

# 2. From (t, s, r) parameters over Z_n: B(x, y) = (ty + sx, rx).
tsr = tsr_birack(5, 2, 0, 3)
show("tsr_birack(5, 2, 0, 3)", tsr)

# 3. Bundled data, same object as case 1.
bundled = load_birack("ab4")
assert bundled.alpha == ab4.alpha and bundled.beta == ab4.beta

# The maps themselves: a(x, y) = alpha_x(y) and b(x, y) = beta_x(y).
x, y = 1, 2
print(f"a(1, 2) = {ab4.a(x, y)}, b(1, 2) = {ab4.b(x, y)}")
print(f"sideways S(1, 2) = {ab4.sideways(x, y)}")

# check_axioms reports each axiom with witnesses instead of raising.
report = check_axioms(ab4.alpha, ab4.beta)
for axiom in (report.axiom_i, report.axiom_ii, report.axiom_iii):
    print(f"axiom {axiom.name}: {'pass' if axiom.passed else 'fail'}")

# A non-example: beta_y(x) = x + y mod 3 with alpha the identity.
alpha = ((1, 2, 3),) * 3
beta = tuple(tuple((x + y - 1) % 3 + 1 for x in (1, 2, 3)) for y in (1, 2, 3))
bad = check_axioms(alpha, beta)
print(f"shear example ok: {bad.ok}")
for axiom in (bad.axiom_i, bad.axiom_ii, bad.axiom_iii):
    if not axiom.passed:
        print(f"  axiom {axiom.name} fails, first witness {axiom.witnesses[0]}")
