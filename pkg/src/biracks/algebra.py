"""Finite augmented biracks.

A structure on the set {1, ..., n} is given by two tables of permutations:
alpha[x] is the map y -> alpha_x(y) and beta[x] is y -> beta_x(y).  From
these the package derives the inverse maps alpha_bar, beta_bar (by inverting
the sideways map (x, y) -> (alpha_x(y), beta_y(x)) as a bijection on pairs,
never column by column), the kink map pi, and the characteristic N = order
of pi.  All elements are 1-based to match the usual matrix presentation:
a 2n x n matrix whose upper block has (i, j) entry alpha_j(i) and lower
block beta_j(i).

The defining identities, checked exhaustively:

  (i)   alpha_{pi(x)}(x) = beta_x(pi(x)), and the mirror identity
        beta_bar_{pi(x)}(x) = alpha_bar_x(pi(x));
  (ii)  the sideways map is a bijection of ordered pairs;
  (iii) alpha_{alpha_x(y)} alpha_x = alpha_{beta_y(x)} alpha_y,
        beta_{alpha_x(y)} alpha_x  = alpha_{beta_y(x)} beta_y,
        beta_{alpha_x(y)} beta_x   = beta_{beta_y(x)} beta_y,
        as maps, compared pointwise.

Structures with pi = id are biquandles; labelings of link diagrams by a
biquandle do not depend on framing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm

from .errors import (
    AxiomViolation,
    KinkMapMissing,
    KinkMapNotUnique,
    NonBijectiveColumn,
    NotAUnit,
    RelationFails,
)

Perm = tuple[int, ...]  # perm[i-1] is the 1-based image of i


def _identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def _invert_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def _perm_order(p: Perm) -> int:
    n = len(p)
    seen = [False] * n
    order = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i] - 1
            length += 1
        order = lcm(order, length)
    return order


def cycle_notation(p: Perm) -> str:
    """Render a permutation as disjoint cycles, e.g. "(1 4)(2 3)" or "id"."""
    n = len(p)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i + 1)
            i = p[i] - 1
        if len(cyc) > 1:
            parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "id"


def _normalize_tables(alpha, beta):
    alpha = tuple(tuple(int(v) for v in row) for row in alpha)
    beta = tuple(tuple(int(v) for v in row) for row in beta)
    n = len(alpha)
    if n == 0 or len(beta) != n:
        raise ValueError("alpha and beta must be nonempty tables of equal size")
    target = set(range(1, n + 1))
    for kind, table in (("alpha", alpha), ("beta", beta)):
        for x, row in enumerate(table, start=1):
            if len(row) != n or set(row) != target:
                raise NonBijectiveColumn(kind, x, row)
    return alpha, beta, n


def _sideways_inverse_tables(alpha, beta, n):
    """Invert the pair map S(x,y) = (alpha_x(y), beta_y(x)).

    Returns (alpha_bar, beta_bar, collisions); the tables are None when S is
    not a bijection, and collisions lists the input pairs whose images clash.
    """
    hits = {}
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            image = (alpha[x - 1][y - 1], beta[y - 1][x - 1])
            hits.setdefault(image, []).append((x, y))
    collisions = sorted(p for pairs in hits.values() if len(pairs) > 1 for p in pairs)
    if collisions:
        return None, None, collisions
    alpha_bar = [[0] * n for _ in range(n)]
    beta_bar = [[0] * n for _ in range(n)]
    for (u, v), [(x, y)] in hits.items():
        # S_inverse(u, v) = (beta_bar_u(v), alpha_bar_v(u))
        beta_bar[u - 1][v - 1] = x
        alpha_bar[v - 1][u - 1] = y
    return (
        tuple(tuple(r) for r in alpha_bar),
        tuple(tuple(r) for r in beta_bar),
        [],
    )


def _inversion_identity_failures(alpha, beta, alpha_bar, beta_bar, n):
    """All four inversion identities of axiom (ii), checked on every pair."""
    bad = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            ok = (
                alpha_bar[beta[x - 1][y - 1] - 1][alpha[y - 1][x - 1] - 1] == x
                and beta_bar[alpha[x - 1][y - 1] - 1][beta[y - 1][x - 1] - 1] == x
                and alpha[beta_bar[x - 1][y - 1] - 1][alpha_bar[y - 1][x - 1] - 1] == x
                and beta[alpha_bar[x - 1][y - 1] - 1][beta_bar[y - 1][x - 1] - 1] == x
            )
            if not ok:
                bad.append((x, y))
    return bad


def _exchange_failures(alpha, beta, n):
    """Pairs (x, y) violating any of the three exchange identities."""
    bad = []
    for x in range(1, n + 1):
        ax = alpha[x - 1]
        bx = beta[x - 1]
        for y in range(1, n + 1):
            ay = alpha[y - 1]
            by = beta[y - 1]
            u = alpha[x - 1][y - 1]  # alpha_x(y)
            v = beta[y - 1][x - 1]   # beta_y(x)
            au, bu = alpha[u - 1], beta[u - 1]
            av, bv = alpha[v - 1], beta[v - 1]
            ok = all(
                au[ax[z] - 1] == av[ay[z] - 1]
                and bu[ax[z] - 1] == av[by[z] - 1]
                and bu[bx[z] - 1] == bv[by[z] - 1]
                for z in range(n)
            )
            if not ok:
                bad.append((x, y))
    return bad


def _kink_solutions(alpha, beta, n, x):
    """All y with alpha_y(x) = beta_x(y); axiom (i) demands exactly one."""
    return [y for y in range(1, n + 1)
            if alpha[y - 1][x - 1] == beta[x - 1][y - 1]]


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witnesses: tuple

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking the three defining identities on a pair of tables.

    pi and characteristic are populated only when the kink map exists and is
    unique for every element; witnesses list the offending x or (x, y).
    """

    size: int
    axiom_i: AxiomCheck
    axiom_ii: AxiomCheck
    axiom_iii: AxiomCheck
    pi: Perm | None
    characteristic: int | None

    @property
    def ok(self) -> bool:
        return self.axiom_i.passed and self.axiom_ii.passed and self.axiom_iii.passed

    @property
    def checks(self):
        return (self.axiom_i, self.axiom_ii, self.axiom_iii)


@dataclass(frozen=True)
class AugmentedBirack:
    """A validated finite augmented birack on {1, ..., size}.

    Instances are immutable; build them with from_tables, from_matrix,
    tsr_birack, or parse_birack rather than directly, so the derived tables
    are consistent and the axioms have been verified.
    """

    size: int
    alpha: tuple[Perm, ...]
    beta: tuple[Perm, ...]
    alpha_bar: tuple[Perm, ...]
    beta_bar: tuple[Perm, ...]
    pi: Perm
    characteristic: int

    # -- primary and derived maps ------------------------------------

    def a(self, x: int, y: int) -> int:
        """alpha_x(y)."""
        self._check(x, y)
        return self.alpha[x - 1][y - 1]

    def b(self, x: int, y: int) -> int:
        """beta_x(y)."""
        self._check(x, y)
        return self.beta[x - 1][y - 1]

    def abar(self, x: int, y: int) -> int:
        """alpha_bar_x(y)."""
        self._check(x, y)
        return self.alpha_bar[x - 1][y - 1]

    def bbar(self, x: int, y: int) -> int:
        """beta_bar_x(y)."""
        self._check(x, y)
        return self.beta_bar[x - 1][y - 1]

    def kink(self, x: int) -> int:
        """pi(x)."""
        self._check(x)
        return self.pi[x - 1]

    @cached_property
    def alpha_inv(self) -> tuple[Perm, ...]:
        """Permutation inverses of the maps alpha_x (not alpha_bar)."""
        return tuple(_invert_perm(p) for p in self.alpha)

    @cached_property
    def beta_inv(self) -> tuple[Perm, ...]:
        """Permutation inverses of the maps beta_x (not beta_bar)."""
        return tuple(_invert_perm(p) for p in self.beta)

    @property
    def is_biquandle(self) -> bool:
        return self.characteristic == 1

    # -- composite maps ----------------------------------------------

    def sideways(self, x: int, y: int) -> tuple[int, int]:
        """S(x, y) = (alpha_x(y), beta_y(x))."""
        self._check(x, y)
        return self.alpha[x - 1][y - 1], self.beta[y - 1][x - 1]

    def sideways_inverse(self, u: int, v: int) -> tuple[int, int]:
        """S_inverse(u, v) = (beta_bar_u(v), alpha_bar_v(u))."""
        self._check(u, v)
        return self.beta_bar[u - 1][v - 1], self.alpha_bar[v - 1][u - 1]

    def birack_map(self, x: int, y: int) -> tuple[int, int]:
        """B(x, y) = (beta_x^-1(y), alpha_{beta_x^-1(y)}(x)).

        beta_x^-1 is the permutation inverse of beta_x, which differs from
        beta_bar_x in general.
        """
        self._check(x, y)
        w = self.beta_inv[x - 1][y - 1]
        return w, self.alpha[w - 1][x - 1]

    # -- rendering ----------------------------------------------------

    def to_matrix(self) -> list[list[int]]:
        """The 2n x n block matrix: upper (i,j) = alpha_j(i), lower beta_j(i)."""
        n = self.size
        upper = [[self.alpha[j][i] for j in range(n)] for i in range(n)]
        lower = [[self.beta[j][i] for j in range(n)] for i in range(n)]
        return upper + lower

    def _check(self, *vals: int):
        for v in vals:
            if not 1 <= v <= self.size:
                raise ValueError(f"element {v} out of range 1..{self.size}")

    def __repr__(self):
        return (f"AugmentedBirack(size={self.size}, "
                f"pi={cycle_notation(self.pi)}, N={self.characteristic})")


def check_axioms(alpha, beta) -> AxiomReport:
    """Check the three augmented-birack identities on permutation tables.

    Always returns a report (never raises for axiom failures); tables whose
    rows are not permutations of 1..n are rejected with NonBijectiveColumn.
    """
    alpha, beta, n = _normalize_tables(alpha, beta)

    alpha_bar, beta_bar, collisions = _sideways_inverse_tables(alpha, beta, n)
    if collisions:
        axiom_ii = AxiomCheck("ii", False, tuple(collisions))
    else:
        bad = _inversion_identity_failures(alpha, beta, alpha_bar, beta_bar, n)
        axiom_ii = AxiomCheck("ii", not bad, tuple(bad))

    axiom_iii = AxiomCheck("iii", True, ())
    bad = _exchange_failures(alpha, beta, n)
    if bad:
        axiom_iii = AxiomCheck("iii", False, tuple(bad))

    witnesses = []
    pi = [0] * n
    for x in range(1, n + 1):
        sols = _kink_solutions(alpha, beta, n, x)
        if len(sols) == 1:
            pi[x - 1] = sols[0]
        else:
            witnesses.append((x,))
    have_pi = not witnesses and set(pi) == set(range(1, n + 1))
    if not have_pi and not witnesses:
        # every x has a unique solution but the map is not injective
        witnesses = [(x,) for x in range(1, n + 1)
                     if pi.count(pi[x - 1]) > 1]
    if have_pi and alpha_bar is not None:
        # mirror identity of axiom (i)
        for x in range(1, n + 1):
            px = pi[x - 1]
            if beta_bar[px - 1][x - 1] != alpha_bar[x - 1][px - 1]:
                witnesses.append((x,))
    axiom_i = AxiomCheck("i", not witnesses, tuple(sorted(set(witnesses))))

    return AxiomReport(
        size=n,
        axiom_i=axiom_i,
        axiom_ii=axiom_ii,
        axiom_iii=axiom_iii,
        pi=tuple(pi) if have_pi else None,
        characteristic=_perm_order(tuple(pi)) if have_pi else None,
    )


def derive_kink_map(alpha, beta) -> Perm:
    """The kink map pi: for each x the unique y with alpha_y(x) = beta_x(y)."""
    alpha, beta, n = _normalize_tables(alpha, beta)
    pi = [0] * n
    for x in range(1, n + 1):
        sols = _kink_solutions(alpha, beta, n, x)
        if not sols:
            raise KinkMapMissing(x)
        if len(sols) > 1:
            raise KinkMapNotUnique(x, sols)
        pi[x - 1] = sols[0]
    if set(pi) != set(range(1, n + 1)):
        raise AxiomViolation(
            "i", tuple(pi), "kink map solutions do not form a permutation")
    return tuple(pi)


def from_tables(alpha, beta) -> AugmentedBirack:
    """Build and validate a birack from permutation tables alpha, beta."""
    report = check_axioms(alpha, beta)
    if not report.axiom_ii.passed:
        raise AxiomViolation("ii", report.axiom_ii.witnesses[0])
    if not report.axiom_iii.passed:
        raise AxiomViolation("iii", report.axiom_iii.witnesses[0])
    if report.pi is None:
        # reconstruct the precise failure for the error type
        alpha_n, beta_n, n = _normalize_tables(alpha, beta)
        derive_kink_map(alpha_n, beta_n)
        raise AxiomViolation("i", report.axiom_i.witnesses[0])
    if not report.axiom_i.passed:
        raise AxiomViolation("i", report.axiom_i.witnesses[0])
    alpha, beta, n = _normalize_tables(alpha, beta)
    alpha_bar, beta_bar, _ = _sideways_inverse_tables(alpha, beta, n)
    return AugmentedBirack(
        size=n,
        alpha=alpha,
        beta=beta,
        alpha_bar=alpha_bar,
        beta_bar=beta_bar,
        pi=report.pi,
        characteristic=report.characteristic,
    )


def matrix_to_tables(matrix):
    """Split a 2n x n block matrix into unvalidated (alpha, beta) tables.

    Row i, column j of the upper block is alpha_j(i); of the lower block,
    beta_j(i).  So the columns of the blocks are the maps, which is why a
    failed permutation check reports a column.
    """
    rows = [list(map(int, row)) for row in matrix]
    if not rows or len(rows) % 2 != 0:
        raise ValueError("matrix must have 2n rows")
    n = len(rows) // 2
    if any(len(row) != n for row in rows):
        raise ValueError(f"matrix must have {n} columns to match its 2n rows")
    alpha = [[rows[i][j] for i in range(n)] for j in range(n)]
    beta = [[rows[n + i][j] for i in range(n)] for j in range(n)]
    return alpha, beta


def from_matrix(matrix) -> AugmentedBirack:
    """Build and validate a birack from its 2n x n block matrix."""
    alpha, beta = matrix_to_tables(matrix)
    return from_tables(alpha, beta)


def tsr_birack(n: int, t: int, s: int, r: int) -> AugmentedBirack:
    """The birack on Z_n with alpha_x(y) = ry and beta_y(x) = tx - tsy.

    Requires t, r invertible mod n and s^2 = (1 - t^-1 r)s mod n; the kink
    map comes out as x -> (t^-1 r + s)x, so these do not all have pi = id.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    for name, value in (("t", t), ("r", r)):
        if gcd(value % n if n > 1 else 1, n) != 1:
            raise NotAUnit(name, value, n)
    t_inv = pow(t, -1, n)
    if (s * s - (1 - t_inv * r) * s) % n != 0:
        raise RelationFails(
            f"s^2 = (1 - t^-1 r)s fails mod {n} for t={t}, s={s}, r={r}")

    def mod1(v):
        return (v - 1) % n + 1

    alpha = [[mod1(r * y) for y in range(1, n + 1)] for _x in range(n)]
    beta = [[mod1(t * x - t * s * y) for x in range(1, n + 1)]
            for y in range(1, n + 1)]
    return from_tables(alpha, beta)


def sideways(b: AugmentedBirack, x: int, y: int) -> tuple[int, int]:
    return b.sideways(x, y)


def sideways_inverse(b: AugmentedBirack, u: int, v: int) -> tuple[int, int]:
    return b.sideways_inverse(u, v)


def birack_map(b: AugmentedBirack, x: int, y: int) -> tuple[int, int]:
    return b.birack_map(x, y)


def characteristic(b: AugmentedBirack) -> int:
    return b.characteristic


def kink_map(b: AugmentedBirack) -> Perm:
    return b.pi


def parse_birack_tables(text: str):
    """Parse the birack text format into unvalidated (alpha, beta) tables.

    Format: first token n, then 2n rows of n entries (upper block alpha,
    lower beta, columns are the maps).  Whitespace is free-form and `#`
    starts a comment running to end of line.
    """
    tokens = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        tokens.extend(body.split())
    if not tokens:
        raise ValueError("empty birack file")
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as e:
        raise ValueError(f"birack file has a non-integer token: {e}") from None
    n = values[0]
    if n < 1:
        raise ValueError("size must be a positive integer")
    need = 2 * n * n
    body = values[1:]
    if len(body) != need:
        raise ValueError(
            f"expected {need} table entries for size {n}, found {len(body)}")
    rows = [body[i * n:(i + 1) * n] for i in range(2 * n)]
    return matrix_to_tables(rows)


def parse_birack(text: str) -> AugmentedBirack:
    """Parse and validate the birack text format."""
    alpha, beta = parse_birack_tables(text)
    return from_tables(alpha, beta)


def format_birack(b: AugmentedBirack) -> str:
    """Render a birack in the text format accepted by parse_birack."""
    lines = [str(b.size)]
    for row in b.to_matrix():
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"
