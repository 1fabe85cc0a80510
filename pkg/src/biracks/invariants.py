"""Labelings of diagrams by a birack and the derived link invariants.

A labeling assigns a birack element to every semiarc so that each crossing
satisfies the sideways relations fixed in the diagram module.  The counting
invariant totals labelings over the framing tile: all framings reachable by
adding 0..N-1 positive kinks per component, N the birack characteristic.
Since labeling counts are periodic in each framing coordinate with period N,
the tile sum is independent of the chosen diagram.

A reduced 2-cocycle phi refines counting: each labeling contributes u to the
power of its Boltzmann weight, the signed sum over crossings of phi at the
left-side labels with the under label first.  Positive crossings contribute
phi(u_out, o_in), negative ones -phi(u_in, o_out).
"""

from __future__ import annotations

import os
import warnings as _warnings
from dataclasses import dataclass
from itertools import product

from .algebra import AugmentedBirack
from .diagram import LinkDiagram, add_positive_kink
from .errors import InvalidLabeling, NotReducedCocycle, ResourceLimitExceeded
from .homology import Cochain2, is_reduced_2_cocycle

DEFAULT_MAX_TILE = 4096


def _tile_limit(override=None) -> int:
    if override is not None:
        return int(override)
    return int(os.environ.get("BIRACKS_MAX_TILE", DEFAULT_MAX_TILE))


class LaurentPolynomial:
    """Sparse integer Laurent polynomial in one variable u."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for exp, coeff in (terms or {}).items():
            if coeff:
                clean[int(exp)] = int(coeff)
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c: int):
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1):
        return cls({exp: coeff})

    @classmethod
    def from_pairs(cls, pairs):
        terms: dict = {}
        for exp, coeff in pairs:
            terms[exp] = terms.get(exp, 0) + coeff
        return cls(terms)

    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return LaurentPolynomial(terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def evaluate(self, u: int = 1) -> int:
        return sum(c * u**e for e, c in self.terms.items())

    def pairs(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, ascending in exponent."""
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.pairs():
            if exp == 0:
                parts.append(str(c))
                continue
            power = "u" if exp == 1 else f"u^{exp}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append("-" + power)
            else:
                parts.append(f"{c}{power}")
        return "+".join(parts).replace("+-", "-")

    def __repr__(self):
        return f"LaurentPolynomial({self})"


@dataclass(frozen=True)
class InvariantResult:
    """Counts and weight polynomial for one diagram and birack.

    per_framing pairs each visited framing vector with its labeling count;
    phi_z is their total; poly and multiset carry the weight distribution
    (with no cochain given, everything sits at weight zero).
    """

    per_framing: tuple[tuple[tuple[int, ...], int], ...]
    phi_z: int
    poly: LaurentPolynomial
    multiset: tuple[tuple[int, int], ...]
    warnings: tuple[str, ...] = ()

    def to_json_dict(self):
        return {
            "per_framing": [
                {"framing": list(f), "count": c} for f, c in self.per_framing
            ],
            "phi_Z": self.phi_z,
            "poly": [[e, c] for e, c in self.poly.pairs()],
            "multiset": [[w, m] for w, m in self.multiset],
            "warnings": list(self.warnings),
        }


# -- labeling enumeration -------------------------------------------------


def crossing_equations(d: LinkDiagram):
    """Constraint list: (table, subscript, source, target) per crossing side.

    Each entry demands labels[target] = map_{labels[subscript]}(labels[source])
    where table 'a' is alpha and 'b' is beta.
    """
    eqs = []
    for c in d.crossings:
        if c.sign > 0:
            eqs.append(("a", c.under_out, c.over_in, c.over_out))
            eqs.append(("b", c.over_in, c.under_out, c.under_in))
        else:
            eqs.append(("a", c.under_in, c.over_out, c.over_in))
            eqs.append(("b", c.over_out, c.under_in, c.under_out))
    return eqs


def _propagate(b: AugmentedBirack, by_var, labels, queue) -> bool:
    """Fixpoint unit propagation; False on contradiction."""
    while queue:
        v = queue.pop()
        for kind, sub, src, dst in by_var[v]:
            ls = labels[sub]
            if not ls:
                continue
            fwd = b.alpha if kind == "a" else b.beta
            lsrc, ldst = labels[src], labels[dst]
            if lsrc:
                want = fwd[ls - 1][lsrc - 1]
                if not ldst:
                    labels[dst] = want
                    queue.append(dst)
                elif ldst != want:
                    return False
            elif ldst:
                inv = b.alpha_inv if kind == "a" else b.beta_inv
                labels[src] = inv[ls - 1][ldst - 1]
                queue.append(src)
    return True


def enumerate_labelings(d: LinkDiagram, b: AugmentedBirack) -> list[tuple[int, ...]]:
    """All valid labelings, lexicographic by (semiarc 0, semiarc 1, ...).

    Backtracking on the lowest unassigned semiarc with unit propagation
    through the crossing equations; bijectivity of the alpha and beta rows
    lets a known subscript force source from target and vice versa.
    """
    count = d.semiarc_count
    by_var = [[] for _ in range(count)]
    for eq in crossing_equations(d):
        for v in {eq[1], eq[2], eq[3]}:
            by_var[v].append(eq)

    out: list[tuple[int, ...]] = []

    def descend(labels):
        try:
            v = labels.index(0)
        except ValueError:
            out.append(tuple(labels))
            return
        for value in range(1, b.size + 1):
            trial = labels[:]
            trial[v] = value
            if _propagate(b, by_var, trial, [v]):
                descend(trial)

    descend([0] * count)
    return out


def labeling_is_valid(d: LinkDiagram, b: AugmentedBirack, labeling) -> bool:
    if len(labeling) != d.semiarc_count:
        return False
    if any(not 1 <= v <= b.size for v in labeling):
        return False
    for kind, sub, src, dst in crossing_equations(d):
        fwd = b.alpha if kind == "a" else b.beta
        if labeling[dst] != fwd[labeling[sub] - 1][labeling[src] - 1]:
            return False
    return True


def brute_force_labelings(d: LinkDiagram, b: AugmentedBirack) -> list[tuple[int, ...]]:
    """Filter every assignment; exponential, for cross-checking small diagrams."""
    return [
        labels
        for labels in product(range(1, b.size + 1), repeat=d.semiarc_count)
        if labeling_is_valid(d, b, labels)
    ]


# -- weights and invariants ----------------------------------------------


def boltzmann_weight(d: LinkDiagram, labeling, phi: Cochain2,
                     birack: AugmentedBirack | None = None) -> int:
    """Signed sum of phi over crossings at the left-side labels, under first."""
    if birack is not None and not labeling_is_valid(d, birack, labeling):
        raise InvalidLabeling(f"labeling {labeling} fails the crossing equations")
    total = 0
    for c in d.crossings:
        if c.sign > 0:
            total += phi(labeling[c.under_out], labeling[c.over_in])
        else:
            total -= phi(labeling[c.under_in], labeling[c.over_out])
    return total


def _with_kinks(d: LinkDiagram, kinks) -> LinkDiagram:
    out = d
    for comp, k in enumerate(kinks):
        for _ in range(k):
            out = add_positive_kink(out, comp)
    return out


def _check_cochain(b: AugmentedBirack, phi: Cochain2 | None, quiet: bool):
    if phi is None or is_reduced_2_cocycle(b, phi):
        return ()
    message = ("cochain is not a reduced 2-cocycle for this birack; "
               "tile-summed values may depend on the chosen diagram")
    if not quiet:
        _warnings.warn(message, NotReducedCocycle, stacklevel=3)
    return (message,)


def _collect(d: LinkDiagram, b: AugmentedBirack, phi: Cochain2 | None,
             framings, warn_messages) -> InvariantResult:
    per_framing = []
    weight_counts: dict[int, int] = {}
    total = 0
    for dk in framings:
        labelings = enumerate_labelings(dk, b)
        per_framing.append((dk.framing, len(labelings)))
        total += len(labelings)
        for f in labelings:
            w = boltzmann_weight(dk, f, phi) if phi is not None else 0
            weight_counts[w] = weight_counts.get(w, 0) + 1
    poly = LaurentPolynomial(weight_counts)
    return InvariantResult(
        per_framing=tuple(per_framing),
        phi_z=total,
        poly=poly,
        multiset=tuple(sorted(weight_counts.items())),
        warnings=warn_messages,
    )


def _tile(d: LinkDiagram, b: AugmentedBirack, max_tile) -> list[LinkDiagram]:
    c = d.component_count
    N = b.characteristic
    limit = _tile_limit(max_tile)
    needed = N**c
    if needed > limit:
        raise ResourceLimitExceeded(f"framing tile of {N}^{c} vectors", needed, limit)
    return [_with_kinks(d, kinks) for kinks in product(range(N), repeat=c)]


def counting_invariant(d: LinkDiagram, b: AugmentedBirack,
                       max_tile=None) -> InvariantResult:
    """Total labelings over the framing tile, with per-framing counts."""
    return _collect(d, b, None, _tile(d, b, max_tile), ())


def cocycle_invariant(d: LinkDiagram, b: AugmentedBirack, phi: Cochain2,
                      max_tile=None) -> InvariantResult:
    """Weight polynomial over the framing tile.

    If phi is not a reduced 2-cocycle a NotReducedCocycle warning is issued
    and recorded in the result; the tile sum is then diagram-dependent and
    only fixed-framing values are meaningful.
    """
    messages = _check_cochain(b, phi, quiet=False)
    return _collect(d, b, phi, _tile(d, b, max_tile), messages)


def framed_invariants(d: LinkDiagram, b: AugmentedBirack,
                      phi: Cochain2 | None = None,
                      framing=None) -> InvariantResult:
    """Counts and weights at one fixed framing, no tile sum.

    The target framing is realized by adding positive kinks on top of the
    diagram's base framing, so every coordinate must be >= the base value.
    """
    if framing is None:
        framing = d.framing
    framing = tuple(int(v) for v in framing)
    if len(framing) != d.component_count:
        raise ValueError(
            f"framing needs {d.component_count} coordinates, got {len(framing)}")
    kinks = []
    for i, (target, base) in enumerate(zip(framing, d.framing)):
        if target < base:
            raise ValueError(
                f"framing {target} on component {i} is below the diagram's "
                f"base framing {base}; only positive kinks can be added")
        kinks.append(target - base)
    messages = _check_cochain(b, phi, quiet=True)
    return _collect(d, b, phi, [_with_kinks(d, kinks)], messages)
