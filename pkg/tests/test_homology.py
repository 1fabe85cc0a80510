"""Birack chain complex, degenerate subcomplex, and reduced 2-cocycles."""

from fractions import Fraction

import pytest

from biracks import (
    Chain,
    Cochain2,
    IntegerMatrix,
    boundary_matrix,
    boundary_of_chain,
    boundary_of_tuple,
    cohomology_group,
    degenerate_generators,
    evaluate_coboundary,
    homology_group,
    is_reduced_2_cocycle,
    partial_dprime,
    partial_prime,
    reduced_2_cocycles,
    reduced_2_cohomology,
    tuple_basis,
)
from biracks.errors import ResourceLimitExceeded
from biracks.homology import (
    Cochain1,
    deleting_boundary_matrix,
    twisted_boundary_matrix,
)
from biracks.linalg import column_span_contains


def rank_rational(rows):
    """Row-reduction rank over Q, independent of the Smith machinery."""
    m = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for j in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][j]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][j]
        m[rank] = [v * inv for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][j]:
                f = m[i][j]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def rank_mod_p(rows, p):
    m = [[v % p for v in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for j in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][j]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][j], -1, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][j]:
                f = m[i][j]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def test_tuple_basis():
    assert tuple_basis(2, 0) == [()]
    assert tuple_basis(2, 2) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    with pytest.raises(ValueError):
        tuple_basis(2, -1)


def test_partial_prime_deletes():
    assert partial_prime(1, (1, 2, 3)) == (2, 3)
    assert partial_prime(2, (1, 2, 3)) == (1, 3)
    assert partial_prime(3, (1, 2, 3)) == (1, 2)
    with pytest.raises(IndexError):
        partial_prime(4, (1, 2, 3))


def test_partial_dprime_last_face_uses_beta(tsr3):
    # deleting the last entry pushes beta_z through everything before it
    for x in range(1, 4):
        for y in range(1, 4):
            for z in range(1, 4):
                assert partial_dprime(tsr3, 3, (x, y, z)) == (
                    tsr3.b(z, x),
                    tsr3.b(z, y),
                )


def test_partial_dprime_first_face_uses_alpha(ab4):
    assert partial_dprime(ab4, 1, (1, 1)) == (2,)
    for x in range(1, 5):
        for y in range(1, 5):
            assert partial_dprime(ab4, 1, (x, y)) == (ab4.a(x, y),)
            assert partial_dprime(ab4, 2, (x, y)) == (ab4.b(y, x),)


def test_boundary_of_tuple_examples(ab4):
    assert boundary_of_tuple(ab4, (1, 1)).terms == {(2,): 1, (3,): -1}
    # by hand: -(2) + (alpha_1(2)) + (1) - (beta_2(1)) = (1) - 2(2) + (4)
    assert boundary_of_tuple(ab4, (1, 2)).terms == {(1,): 1, (2,): -2, (4,): 1}


def test_degree_one_boundary_vanishes(ab4, ab5, tsr3):
    for b in (ab4, ab5, tsr3):
        assert boundary_matrix(b, 1).is_zero()
        for x in range(1, b.size + 1):
            assert boundary_of_tuple(b, (x,)).is_zero()


def test_boundary_squares_to_zero(ab4, ab5, tsr3, dih3):
    for b in (ab4, ab5, tsr3, dih3):
        for degree in (2, 3, 4):
            lower = boundary_matrix(b, degree - 1)
            upper = boundary_matrix(b, degree)
            assert (lower @ upper).is_zero()


def test_face_families_square_to_zero_alone(ab4, tsr3):
    for b in (ab4, tsr3):
        for degree in (2, 3):
            d1 = deleting_boundary_matrix(b, degree)
            d2 = deleting_boundary_matrix(b, degree + 1)
            assert (d1 @ d2).is_zero()
            t1 = twisted_boundary_matrix(b, degree)
            t2 = twisted_boundary_matrix(b, degree + 1)
            assert (t1 @ t2).is_zero()


def test_degenerate_generators_ab4(ab4):
    gens = degenerate_generators(ab4, 2)
    assert [g.terms for g in gens] == [
        {(4, 1): 1, (1, 4): 1},
        {(3, 2): 1, (2, 3): 1},
    ]
    assert degenerate_generators(ab4, 1) == []


def test_degenerate_generators_biquandle_are_diagonal(ab5):
    gens = degenerate_generators(ab5, 2)
    assert [g.terms for g in gens] == [{(x, x): 1} for x in range(1, 6)]


def test_degenerate_two_generators_are_cycles(ab4, ab5, tsr3):
    # lower degenerate span in degree 1 is empty, so these must be cycles
    for b in (ab4, ab5, tsr3):
        for g in degenerate_generators(b, 2):
            assert boundary_of_chain(b, g).is_zero()


def test_degenerate_three_boundaries_in_degenerate_span(ab4, ab5, tsr3):
    for b in (ab4, ab5, tsr3):
        basis_index = {t: i for i, t in enumerate(tuple_basis(b.size, 2))}
        gens2 = degenerate_generators(b, 2)
        span = IntegerMatrix.from_columns(
            [g.to_vector(basis_index) for g in gens2], len(basis_index)
        )
        for g in degenerate_generators(b, 3):
            bd = boundary_of_chain(b, g)
            assert column_span_contains(span, bd.to_vector(basis_index))


def test_phi4_is_reduced_and_in_the_computed_basis(ab4, phi4):
    assert is_reduced_2_cocycle(ab4, phi4)
    basis = reduced_2_cocycles(ab4)
    assert len(basis) == 4
    for c in basis:
        assert is_reduced_2_cocycle(ab4, c)
    cols = [c.to_vector() for c in basis]
    span = IntegerMatrix.from_columns(cols, len(cols[0]))
    assert column_span_contains(span, phi4.to_vector())


def test_phi5_is_reduced_and_in_the_computed_basis(ab5, phi5):
    assert is_reduced_2_cocycle(ab5, phi5)
    basis = reduced_2_cocycles(ab5)
    cols = [c.to_vector() for c in basis]
    span = IntegerMatrix.from_columns(cols, len(cols[0]))
    assert column_span_contains(span, phi5.to_vector())


def test_zero_cochain_is_reduced_and_diagonal_is_not(ab4):
    assert is_reduced_2_cocycle(ab4, Cochain2.zero(4))
    assert not is_reduced_2_cocycle(ab4, Cochain2.from_pairs(4, [(1, 1)]))


def test_coboundary_matches_hand_formula(ab4, ab5, tsr3):
    for b in (ab4, ab5, tsr3):
        for i in range(1, b.size + 1):
            psi = Cochain1.chi(b.size, i)
            delta = evaluate_coboundary(b, psi)
            for x in range(1, b.size + 1):
                for y in range(1, b.size + 1):
                    expected = psi(x) - psi(y) + psi(b.a(x, y)) - psi(b.b(y, x))
                    assert delta(x, y) == expected
            # pairing with the boundary of the degenerate chains gives zero
            assert is_reduced_2_cocycle(b, delta)


def test_coboundary_pairs_with_boundary(ab4):
    psi = Cochain1((3, 1, 4, 1))
    delta = evaluate_coboundary(ab4, psi)
    for x in range(1, 5):
        for y in range(1, 5):
            chain = boundary_of_tuple(ab4, (x, y))
            paired = sum(c * psi(t[0]) for t, c in chain.terms.items())
            assert delta(x, y) == paired


def test_rack_boundary_correspondence(dih3):
    # alpha is trivial here, so the complex must agree with the rack one
    def tri(x, y):
        return (2 * y - x - 1) % 3 + 1

    def rack_boundary_matrix(degree):
        cols = tuple_basis(3, degree)
        rows = tuple_basis(3, degree - 1)
        index = {t: i for i, t in enumerate(rows)}
        m = IntegerMatrix.zeros(len(rows), len(cols))
        for j, tup in enumerate(cols):
            for k in range(1, degree + 1):
                sign = -1 if k % 2 else 1
                plain = tup[: k - 1] + tup[k:]
                acted = tuple(tri(v, tup[k - 1]) for v in tup[: k - 1]) + tup[k:]
                m.data[index[plain]][j] += sign
                m.data[index[acted]][j] -= sign
        return m

    for degree in (2, 3):
        assert boundary_matrix(dih3, degree) == rack_boundary_matrix(degree)


def test_free_rank_matches_rational_oracle(ab4, ab5, tsr3, dih3):
    for b in (ab4, ab5, tsr3, dih3):
        for degree in (1, 2, 3):
            upper = boundary_matrix(b, degree + 1)
            lower = boundary_matrix(b, degree)
            betti = lower.cols - rank_rational(lower.data) - rank_rational(upper.data)
            assert homology_group(b, degree).free_rank == betti


def test_one_element_homology(one_element):
    for degree in range(4):
        group = homology_group(one_element, degree)
        assert group.free_rank == 1
        assert group.torsion == ()
        assert group.describe() == "Z"


def test_known_groups(ab4):
    assert homology_group(ab4, 2).describe() == "Z^2"
    assert cohomology_group(ab4, 2).describe() == "Z^2 + Z/2"
    quotient = reduced_2_cohomology(ab4)
    assert (quotient.free_rank, tuple(quotient.torsion)) == (1, (2,))


def test_mod_p_dimensions_match_universal_coefficients(ab4, tsr3):
    for b in (ab4, tsr3):
        for degree in (1, 2, 3):
            for p in (2, 3):
                upper = boundary_matrix(b, degree + 1)
                lower = boundary_matrix(b, degree)
                dim = lower.cols - rank_mod_p(lower.data, p) - rank_mod_p(upper.data, p)
                group = homology_group(b, degree, modulus=p)
                assert group.free_rank == 0
                assert all(t == p for t in group.torsion)
                assert len(group.torsion) == dim
                # mod-p dimension also decomposes through the integral groups
                h_here = homology_group(b, degree)
                h_below = homology_group(b, degree - 1)
                t_here = sum(1 for t in h_here.torsion if t % p == 0)
                t_below = sum(1 for t in h_below.torsion if t % p == 0)
                assert dim == h_here.free_rank + t_here + t_below


def test_reduced_cocycles_mod_two(ab4, phi4):
    basis = reduced_2_cocycles(ab4, modulus=2)
    assert len(basis) == 4
    for c in basis:
        assert is_reduced_2_cocycle(ab4, c, modulus=2)
    assert is_reduced_2_cocycle(ab4, phi4, modulus=2)


def test_chain_arithmetic():
    a = Chain.of((1, 2))
    b = Chain.of((2, 1), 3)
    s = a + b - 2 * a
    assert s.terms == {(1, 2): -1, (2, 1): 3}
    assert (a - a).is_zero()
    index = {t: i for i, t in enumerate(tuple_basis(2, 2))}
    assert s.to_vector(index) == [0, -1, 3, 0]
    assert s.coefficient((2, 1)) == 3
    assert s.coefficient((2, 2)) == 0


def test_resource_guard(ab4):
    with pytest.raises(ResourceLimitExceeded):
        boundary_matrix(ab4, 9)
    with pytest.raises(ResourceLimitExceeded):
        homology_group(ab4, 2, max_cells=10)
    with pytest.raises(ResourceLimitExceeded):
        degenerate_generators(ab4, 3, max_cells=10)
