"""Chain complex of a finite augmented birack and its reduced cohomology.

Degree n chains live in the free abelian group on ordered n-tuples of birack
elements, with basis ordered lexicographically (fixed so matrix fixtures are
stable).  Degree 0 is rank one, generated by the empty tuple, making the
degree-1 boundary the zero map.

The boundary is an alternating sum of two face maps: the deleting face and
the twisted face that acts by beta_{x_k} before the deleted slot and
alpha_{x_k} after it.  Each alternating sum is a boundary map on its own;
their difference is the one used here.

The kink map pi determines the degenerate subcomplex: degree-n generators
are sums over k = 1..N of tuples carrying (pi^k(x), pi^{k-1}(x)) in a fixed
adjacent pair of slots.  A reduced 2-cocycle is an integer 2-cochain killed
by the degree-3 boundary and vanishing on every degenerate 2-generator;
those are exactly the cochains usable as crossing weights for links whose
framings are only defined mod N.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

from .algebra import AugmentedBirack
from .errors import ResourceLimitExceeded
from .linalg import (
    IntegerMatrix,
    SmithDecomposition,
    kernel_basis,
    kernel_lattice_mod,
    quotient_invariants,
    smith_normal_form,
)

__all__ = [
    "Chain",
    "Cochain1",
    "Cochain2",
    "HomologyGroup",
    "boundary_matrix",
    "boundary_of_chain",
    "boundary_of_tuple",
    "coboundary_basis",
    "cohomology_group",
    "degenerate_generators",
    "evaluate_coboundary",
    "homology_group",
    "is_reduced_2_cocycle",
    "parse_cochain",
    "format_cochain",
    "partial_dprime",
    "partial_prime",
    "reduced_2_cocycles",
    "reduced_2_cohomology",
    "reduced_cocycle_constraints",
    "smith_normal_form",
    "tuple_basis",
    "SmithDecomposition",
    "IntegerMatrix",
    "DEFAULT_MAX_CELLS",
]

DEFAULT_MAX_CELLS = 20_000


def _cell_limit(override=None) -> int:
    if override is not None:
        return int(override)
    return int(os.environ.get("BIRACKS_MAX_CELLS", DEFAULT_MAX_CELLS))


def _guard(size: int, degree: int, limit: int):
    needed = size**degree
    if needed > limit:
        raise ResourceLimitExceeded(
            f"degree-{degree} chain basis on {size} elements", needed, limit)


def tuple_basis(size: int, degree: int) -> list[tuple[int, ...]]:
    """Lexicographically ordered basis tuples of C_degree."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return list(product(range(1, size + 1), repeat=degree))


def partial_prime(k: int, tup: tuple[int, ...]) -> tuple[int, ...]:
    """Deleting face: remove entry k (1-based)."""
    if not 1 <= k <= len(tup):
        raise IndexError(f"face index {k} out of range for length {len(tup)}")
    return tup[: k - 1] + tup[k:]


def partial_dprime(b: AugmentedBirack, k: int, tup: tuple[int, ...]) -> tuple[int, ...]:
    """Twisted face: delete entry k, apply beta_{x_k} before it, alpha_{x_k} after."""
    if not 1 <= k <= len(tup):
        raise IndexError(f"face index {k} out of range for length {len(tup)}")
    xk = tup[k - 1]
    beta_row = b.beta[xk - 1]
    alpha_row = b.alpha[xk - 1]
    return tuple(beta_row[v - 1] for v in tup[: k - 1]) + tuple(
        alpha_row[v - 1] for v in tup[k:])


class Chain:
    """A finitely supported integer combination of same-length tuples."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        self.degree = degree
        clean = {}
        for tup, c in (terms or {}).items():
            if len(tup) != degree:
                raise ValueError(f"term {tup} has wrong length for degree {degree}")
            if c:
                clean[tuple(tup)] = int(c)
        self.terms = clean

    @classmethod
    def of(cls, tup, coeff=1):
        return cls(len(tup), {tuple(tup): coeff})

    def coefficient(self, tup) -> int:
        return self.terms.get(tuple(tup), 0)

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, Chain) or other.degree != self.degree:
            return NotImplemented
        terms = dict(self.terms)
        for tup, c in other.terms.items():
            terms[tup] = terms.get(tup, 0) + c
        return Chain(self.degree, terms)

    def __sub__(self, other):
        if not isinstance(other, Chain) or other.degree != self.degree:
            return NotImplemented
        terms = dict(self.terms)
        for tup, c in other.terms.items():
            terms[tup] = terms.get(tup, 0) - c
        return Chain(self.degree, terms)

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return Chain(self.degree, {t: scalar * c for t, c in self.terms.items()})

    def __neg__(self):
        return -1 * self

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, tuple(self.items())))

    def to_vector(self, basis_index) -> list[int]:
        vec = [0] * len(basis_index)
        for tup, c in self.terms.items():
            vec[basis_index[tup]] = c
        return vec

    def __repr__(self):
        if not self.terms:
            return f"Chain({self.degree}, 0)"
        body = " ".join(
            f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{t}"
            for t, c in self.items())
        return f"Chain({self.degree}, {body.lstrip('+')})"


def boundary_of_tuple(b: AugmentedBirack, tup) -> Chain:
    """Boundary of a basis tuple: sum over k of (-1)^k (prime - dprime)."""
    tup = tuple(tup)
    n = len(tup)
    terms: dict = {}
    for k in range(1, n + 1):
        sign = -1 if k % 2 else 1
        t1 = partial_prime(k, tup)
        terms[t1] = terms.get(t1, 0) + sign
        t2 = partial_dprime(b, k, tup)
        terms[t2] = terms.get(t2, 0) - sign
    return Chain(n - 1, terms)


def boundary_of_chain(b: AugmentedBirack, chain: Chain) -> Chain:
    out = Chain(chain.degree - 1)
    for tup, c in chain.terms.items():
        out = out + c * boundary_of_tuple(b, tup)
    return out


def boundary_matrix(b: AugmentedBirack, degree: int, max_cells=None) -> IntegerMatrix:
    """Matrix of the boundary C_degree -> C_(degree-1) in the tuple bases.

    Columns follow the lexicographic order of degree-tuples, rows of
    (degree-1)-tuples; degree 0 gives the empty matrix with one column.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    limit = _cell_limit(max_cells)
    _guard(b.size, degree, limit)
    if degree == 0:
        return IntegerMatrix.zeros(0, 1)
    cols = tuple_basis(b.size, degree)
    rows = tuple_basis(b.size, degree - 1)
    row_index = {t: i for i, t in enumerate(rows)}
    m = IntegerMatrix.zeros(len(rows), len(cols))
    for j, tup in enumerate(cols):
        for t, c in boundary_of_tuple(b, tup).terms.items():
            m.data[row_index[t]][j] += c
    return m


def _face_only_matrix(b: AugmentedBirack, degree: int, twisted: bool) -> IntegerMatrix:
    """Alternating sum of just one face family; each squares to zero alone."""
    cols = tuple_basis(b.size, degree)
    rows = tuple_basis(b.size, degree - 1)
    row_index = {t: i for i, t in enumerate(rows)}
    m = IntegerMatrix.zeros(len(rows), len(cols))
    for j, tup in enumerate(cols):
        for k in range(1, degree + 1):
            sign = -1 if k % 2 else 1
            t = partial_dprime(b, k, tup) if twisted else partial_prime(k, tup)
            m.data[row_index[t]][j] += sign
    return m


def deleting_boundary_matrix(b: AugmentedBirack, degree: int) -> IntegerMatrix:
    return _face_only_matrix(b, degree, twisted=False)


def twisted_boundary_matrix(b: AugmentedBirack, degree: int) -> IntegerMatrix:
    return _face_only_matrix(b, degree, twisted=True)


def degenerate_generators(b: AugmentedBirack, degree: int, max_cells=None) -> list[Chain]:
    """Generating chains of the degenerate subgroup in the given degree.

    For each adjacent slot pair (j, j+1), each filling of the remaining
    slots, and each element x, the chain sums (pi^k(x), pi^(k-1)(x)) over
    k = 1..N in those slots.  x and pi(x) give the same chain, so duplicates
    are removed; order is deterministic.
    """
    if degree < 2:
        return []
    limit = _cell_limit(max_cells)
    _guard(b.size, degree, limit)
    N = b.characteristic
    gens: list[Chain] = []
    seen = set()
    carrier = range(1, b.size + 1)
    for j in range(1, degree):
        for rest in product(carrier, repeat=degree - 2):
            head, tail = rest[: j - 1], rest[j - 1:]
            for x in carrier:
                terms: dict = {}
                cur = x
                for _k in range(N):
                    nxt = b.pi[cur - 1]
                    tup = head + (nxt, cur) + tail
                    terms[tup] = terms.get(tup, 0) + 1
                    cur = nxt
                key = (j, tuple(sorted(terms.items())))
                if key in seen:
                    continue
                seen.add(key)
                gens.append(Chain(degree, terms))
    return gens


# -- homology and cohomology groups ------------------------------------


@dataclass(frozen=True)
class HomologyGroup:
    """Free rank plus torsion coefficients in divisibility order."""

    free_rank: int
    torsion: tuple[int, ...]

    def describe(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json_dict(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        return self.describe()


def _group_integral(kernel_of: IntegerMatrix, image_from: IntegerMatrix) -> HomologyGroup:
    snf_k = smith_normal_form(kernel_of)
    snf_i = smith_normal_form(image_from)
    free = kernel_of.cols - snf_k.rank - snf_i.rank
    torsion = tuple(d for d in snf_i.invariant_factors if d > 1)
    return HomologyGroup(free, torsion)


def _group_mod(kernel_of: IntegerMatrix, image_from: IntegerMatrix, modulus: int) -> HomologyGroup:
    dim = kernel_of.cols
    lattice = kernel_lattice_mod(kernel_of, modulus)
    gens = image_from.columns()
    for i in range(dim):
        col = [0] * dim
        col[i] = modulus
        gens.append(col)
    free, torsion = quotient_invariants(
        lattice, IntegerMatrix.from_columns(gens, dim))
    return HomologyGroup(free, tuple(torsion))


def homology_group(b: AugmentedBirack, degree: int, modulus: int | None = None,
                   max_cells=None) -> HomologyGroup:
    """Homology in the given degree, over Z or over Z_modulus."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    d_n = boundary_matrix(b, degree, max_cells=max_cells)
    d_up = boundary_matrix(b, degree + 1, max_cells=max_cells)
    if modulus is None:
        return _group_integral(d_n, d_up)
    return _group_mod(d_n, d_up, modulus)


def cohomology_group(b: AugmentedBirack, degree: int, modulus: int | None = None,
                     max_cells=None) -> HomologyGroup:
    """Cohomology in the given degree, computed from transposed boundaries."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    delta_up = boundary_matrix(b, degree + 1, max_cells=max_cells).transpose()
    delta_down = boundary_matrix(b, degree, max_cells=max_cells).transpose()
    if modulus is None:
        return _group_integral(delta_up, delta_down)
    return _group_mod(delta_up, delta_down, modulus)


# -- cochains -----------------------------------------------------------


@dataclass(frozen=True)
class Cochain1:
    """Integer function on elements 1..n."""

    values: tuple[int, ...]

    @classmethod
    def zero(cls, n: int):
        return cls((0,) * n)

    @classmethod
    def chi(cls, n: int, i: int, coeff: int = 1):
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        vals = [0] * n
        vals[i - 1] = coeff
        return cls(tuple(vals))

    @property
    def size(self) -> int:
        return len(self.values)

    def __call__(self, x: int) -> int:
        return self.values[x - 1]

    def __add__(self, other):
        if not isinstance(other, Cochain1) or other.size != self.size:
            return NotImplemented
        return Cochain1(tuple(a + b for a, b in zip(self.values, other.values)))


@dataclass(frozen=True)
class Cochain2:
    """Integer function on ordered pairs of elements 1..n.

    The characteristic cochains chi(i, j) (value 1 on the pair (i, j), zero
    elsewhere) form the standard basis; vector form lists values in the
    lexicographic pair order used by the chain bases.
    """

    values: tuple[tuple[int, ...], ...]

    @classmethod
    def zero(cls, n: int):
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def chi(cls, n: int, i: int, j: int, coeff: int = 1):
        return cls.from_pairs(n, [(i, j, coeff)])

    @classmethod
    def from_pairs(cls, n: int, pairs):
        """Build from (i, j) or (i, j, coeff) entries; repeats accumulate."""
        table = [[0] * n for _ in range(n)]
        for entry in pairs:
            if len(entry) == 2:
                i, j = entry
                c = 1
            else:
                i, j, c = entry
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"pair ({i}, {j}) out of range 1..{n}")
            table[i - 1][j - 1] += c
        return cls(tuple(tuple(row) for row in table))

    @classmethod
    def from_vector(cls, n: int, vec):
        if len(vec) != n * n:
            raise ValueError("vector length must be n^2")
        it = iter(vec)
        return cls(tuple(tuple(int(next(it)) for _ in range(n)) for _ in range(n)))

    @property
    def size(self) -> int:
        return len(self.values)

    def __call__(self, x: int, y: int) -> int:
        return self.values[x - 1][y - 1]

    def to_vector(self) -> list[int]:
        return [v for row in self.values for v in row]

    def pairs(self):
        """Nonzero entries as (i, j, coeff), lexicographic."""
        return [
            (i + 1, j + 1, v)
            for i, row in enumerate(self.values)
            for j, v in enumerate(row)
            if v
        ]

    def evaluate(self, chain: Chain) -> int:
        if chain.degree != 2:
            raise ValueError("can only evaluate on 2-chains")
        return sum(c * self(x, y) for (x, y), c in chain.terms.items())

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.values for v in row)

    def __add__(self, other):
        if not isinstance(other, Cochain2) or other.size != self.size:
            return NotImplemented
        return Cochain2(tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.values, other.values)))

    def __sub__(self, other):
        if not isinstance(other, Cochain2) or other.size != self.size:
            return NotImplemented
        return Cochain2(tuple(
            tuple(a - b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.values, other.values)))

    def __neg__(self):
        return Cochain2(tuple(tuple(-v for v in row) for row in self.values))

    def scaled(self, k: int):
        return Cochain2(tuple(tuple(k * v for v in row) for row in self.values))

    def __str__(self):
        parts = []
        for i, j, c in self.pairs():
            term = f"chi({i},{j})" if abs(c) == 1 else f"{abs(c)}*chi({i},{j})"
            parts.append(("-" if c < 0 else "+") + term)
        if not parts:
            return "0"
        return "".join(parts).lstrip("+")


def parse_cochain(text: str, size: int) -> Cochain2:
    """Parse the cochain format: lines `i j c` meaning c * chi(i, j)."""
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 3:
            raise ValueError(f"line {lineno}: expected `i j c`, got {body!r}")
        try:
            i, j, c = (int(t) for t in tokens)
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token in {body!r}") from None
        entries.append((i, j, c))
    return Cochain2.from_pairs(size, entries)


def format_cochain(phi: Cochain2) -> str:
    lines = [f"{i} {j} {c}" for i, j, c in phi.pairs()]
    return "\n".join(lines) + ("\n" if lines else "")


def evaluate_coboundary(b: AugmentedBirack, psi: Cochain1) -> Cochain2:
    """The 2-coboundary of a 1-cochain, normalized against the boundary above:

        (delta psi)(x, y) = psi(boundary(x, y))
                          = psi(x) - psi(y) + psi(alpha_x(y)) - psi(beta_y(x))
    """
    if psi.size != b.size:
        raise ValueError("cochain size does not match the birack")
    n = b.size
    table = [
        [
            psi(x) - psi(y) + psi(b.alpha[x - 1][y - 1]) - psi(b.beta[y - 1][x - 1])
            for y in range(1, n + 1)
        ]
        for x in range(1, n + 1)
    ]
    return Cochain2(tuple(tuple(row) for row in table))


def coboundary_basis(b: AugmentedBirack) -> list[Cochain2]:
    """Coboundaries of the characteristic 1-cochains, in index order."""
    return [evaluate_coboundary(b, Cochain1.chi(b.size, i))
            for i in range(1, b.size + 1)]


def reduced_cocycle_constraints(b: AugmentedBirack, max_cells=None) -> IntegerMatrix:
    """Stacked constraint matrix whose kernel is the reduced 2-cocycle space.

    Rows are the transposed degree-3 boundary (cocycle condition) followed by
    one row per degenerate 2-generator (vanishing condition); columns run
    over the lexicographic pair basis of 2-cochains.
    """
    d3 = boundary_matrix(b, 3, max_cells=max_cells)
    rows = d3.transpose().data
    pair_index = {t: i for i, t in enumerate(tuple_basis(b.size, 2))}
    for gen in degenerate_generators(b, 2, max_cells=max_cells):
        rows.append(gen.to_vector(pair_index))
    return IntegerMatrix(rows)


def reduced_2_cocycles(b: AugmentedBirack, modulus: int | None = None,
                       max_cells=None) -> list[Cochain2]:
    """Basis of the reduced 2-cocycle space over Z, or generators over Z_modulus.

    Over Z the result is a lattice basis of all integer solutions.  Over
    Z_modulus the cochains generate the solution group; entries are reduced
    to 0..modulus-1 and zero generators are dropped.
    """
    constraints = reduced_cocycle_constraints(b, max_cells=max_cells)
    n = b.size
    if modulus is None:
        return [Cochain2.from_vector(n, col) for col in kernel_basis(constraints)]
    lattice = kernel_lattice_mod(constraints, modulus)
    out = []
    for col in lattice.columns():
        reduced = [v % modulus for v in col]
        if any(reduced):
            out.append(Cochain2.from_vector(n, reduced))
    return out


def is_reduced_2_cocycle(b: AugmentedBirack, phi: Cochain2,
                         modulus: int | None = None) -> bool:
    """Direct check: cocycle identity on all triples, zero on degenerates."""
    if phi.size != b.size:
        return False
    n = b.size

    def vanishes(value: int) -> bool:
        return value % modulus == 0 if modulus else value == 0

    for x in range(1, n + 1):
        for y in range(1, n + 1):
            axy = b.alpha[x - 1][y - 1]
            byx = b.beta[y - 1][x - 1]
            for z in range(1, n + 1):
                lhs = (phi(y, z)
                       + phi(byx, b.alpha[y - 1][z - 1])
                       + phi(x, y))
                rhs = (phi(axy, b.alpha[x - 1][z - 1])
                       + phi(x, z)
                       + phi(b.beta[z - 1][x - 1], b.beta[z - 1][y - 1]))
                if not vanishes(lhs - rhs):
                    return False
    for gen in degenerate_generators(b, 2):
        if not vanishes(phi.evaluate(gen)):
            return False
    return True


def reduced_2_cohomology(b: AugmentedBirack, max_cells=None) -> HomologyGroup:
    """Quotient view: reduced 2-cocycles modulo coboundaries of 1-cochains.

    Degenerate chains need two adjacent slots, so every 1-cochain
    contributes; coboundaries land inside the reduced space.
    """
    constraints = reduced_cocycle_constraints(b, max_cells=max_cells)
    basis_cols = kernel_basis(constraints)
    n2 = b.size * b.size
    cocycle_basis = IntegerMatrix.from_columns(basis_cols, n2)
    cob_cols = [phi.to_vector() for phi in coboundary_basis(b)]
    cobs = IntegerMatrix.from_columns(cob_cols, n2)
    free, torsion = quotient_invariants(cocycle_basis, cobs)
    return HomologyGroup(free, tuple(torsion))
