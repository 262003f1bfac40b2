from itertools import combinations_with_replacement

from hypothesis import given, settings, strategies as st

from ginlab.ideals import (
    Ideal,
    MonomialIdeal,
    component_ideal,
    graded_piece_basis,
    hilbert_function,
    hilbert_numerator,
    is_strongly_stable,
    lex_ideal,
    lex_segment_ideal,
    m_leq,
    minimal_generators,
    quotient_dim_from_numerator,
)
from ginlab.parsing import parse_ideal
from ginlab.rings import Element, exterior_ring, polynomial_ring

from conftest import CANCEL_GIN, STAIRCASE_3


def brute_ideal_monomials(gens, n, d):
    """Enumeration oracle: degree-d monomials divisible by some generator."""
    out = set()
    for c in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in c:
            exps[i] += 1
        if any(all(g[i] <= exps[i] for i in range(n)) for g in gens):
            out.add(tuple(exps))
    return out


class TestGradedPieces:
    def test_principal(self):
        I = parse_ideal("ring poly 2 QQ\nx1\n")
        assert len(graded_piece_basis(I, 2)) == 2

    def test_exterior_principal(self):
        I = parse_ideal("ring ext 3 QQ\ne1*e2\n")
        assert I.dim_piece(3) == 1

    def test_staircase_degree2(self):
        I = parse_ideal(STAIRCASE_3)
        assert I.dim_piece(2) == 2

    def test_staircase_dims_by_enumeration(self):
        # oracle: count degree-d multiples of the four generators directly
        I = parse_ideal(STAIRCASE_3)
        gens = [(2, 0, 0), (0, 2, 0), (1, 1, 2), (0, 0, 5)]
        for d in range(2, 7):
            assert I.dim_piece(d) == len(brute_ideal_monomials(gens, 3, d))

    def test_basis_is_reduced_echelon(self):
        I = parse_ideal("ring poly 2 QQ\nx1^2 + x2^2\nx1*x2\n")
        basis = graded_piece_basis(I, 3)
        leads = [f.leading_monomial() for f in basis]
        assert len(set(leads)) == len(basis)
        for f in basis:
            tail = {m for m in f.terms if m != f.leading_monomial()}
            assert not (tail & set(leads))


class TestHilbert:
    def test_zero_ideal(self):
        ring = polynomial_ring(3)
        hf = hilbert_function(Ideal.zero(ring), 4)
        assert all(hf[d] == 0 for d in range(5))

    def test_whole_ring(self):
        I = parse_ideal("ring poly 2 QQ\n1\n")
        hf = hilbert_function(I, 3)
        assert [hf[d] for d in range(4)] == [1, 2, 3, 4]

    def test_staircase_values(self):
        # frozen from the enumeration oracle above
        I = parse_ideal(STAIRCASE_3)
        hf = hilbert_function(I, 5)
        assert [hf[d] for d in (2, 3, 4, 5)] == [2, 6, 12, 19]

    def test_quotient_flag(self):
        I = parse_ideal(STAIRCASE_3)
        hf = hilbert_function(I, 4, quotient=True)
        assert [hf[d] for d in range(5)] == [1, 3, 4, 4, 3]

    def test_numerator_expansion(self):
        ring = polynomial_ring(3)
        J = MonomialIdeal(ring, [(2, 0, 0), (0, 2, 0), (1, 0, 3)])
        num = hilbert_numerator(J)
        for d in range(9):
            assert quotient_dim_from_numerator(num, 3, d) == ring.dim(d) - J.dim(d)


class TestMinimalGenerators:
    def test_redundant(self):
        ring = polynomial_ring(2)
        J = minimal_generators(ring, [(1, 0), (2, 0)])
        assert J.gens == ((1, 0),)

    def test_gin_generators_already_minimal(self):
        I = parse_ideal("ring poly 4 QQ\n" + "\n".join(CANCEL_GIN) + "\n")
        J = I.monomial_image()
        assert len(J.gens) == 7

    def test_exterior(self):
        ring = exterior_ring(3)
        J = minimal_generators(ring, [(0, 1), (0, 1, 2)])
        assert J.gens == ((0, 1),)


class TestStronglyStable:
    def test_positive(self):
        ring = polynomial_ring(2)
        assert is_strongly_stable(MonomialIdeal(ring, [(2, 0), (1, 1)]))

    def test_negative(self):
        ring = polynomial_ring(2)
        assert not is_strongly_stable(MonomialIdeal(ring, [(0, 1)]))

    def test_staircase_gin(self):
        from conftest import STAIRCASE_GIN

        I = parse_ideal("ring poly 3 QQ\n" + "\n".join(STAIRCASE_GIN) + "\n")
        assert is_strongly_stable(I.monomial_image())

    def test_exterior(self):
        ring = exterior_ring(3)
        assert is_strongly_stable(MonomialIdeal(ring, [(0, 1)]))
        assert not is_strongly_stable(MonomialIdeal(ring, [(1, 2)]))

    def test_generator_test_matches_full_membership(self):
        # exchange closure checked monomial by monomial in low degrees
        ring = polynomial_ring(3)
        J = MonomialIdeal(ring, [(2, 0, 0), (1, 1, 0), (0, 3, 0)])
        assert is_strongly_stable(J)
        for d in range(1, 6):
            for u in J.monomials(d):
                for j in range(3):
                    if not u[j]:
                        continue
                    for i in range(j):
                        moved = list(u)
                        moved[j] -= 1
                        moved[i] += 1
                        assert J.contains(tuple(moved))


class TestComponentIdeal:
    def test_mixed(self):
        I = parse_ideal("ring poly 2 QQ\nx1\nx2^2\n")
        comp = component_ideal(I, 2)
        assert len(comp.generators) == 3  # all of degree 2

    def test_below_min_degree(self):
        I = parse_ideal("ring poly 2 QQ\nx1^2\n")
        assert component_ideal(I, 1).is_zero()

    def test_degreewise_containment(self):
        I = parse_ideal(STAIRCASE_3)
        comp = component_ideal(I, 3)
        assert comp.dim_piece(3) == I.dim_piece(3)
        for d in range(3, 7):
            assert comp.dim_piece(d) <= I.dim_piece(d)


class TestMLeq:
    def test_principal(self):
        ring = polynomial_ring(2)
        J = MonomialIdeal(ring, [(1, 0)])
        assert m_leq(J, 1, 3) == 1
        assert m_leq(J, 2, 2) == 2

    def test_cancel_gin(self):
        I = parse_ideal("ring poly 4 QQ\n" + "\n".join(CANCEL_GIN) + "\n")
        assert m_leq(I.monomial_image(), 2, 3) == 4

    def test_full_q_is_dimension(self):
        I = parse_ideal("ring poly 3 QQ\n" + "\n".join(["x1^2", "x1*x2"]) + "\n")
        J = I.monomial_image()
        for k in range(5):
            assert m_leq(J, 3, k) == J.dim(k)


class TestLex:
    def test_two_vars(self):
        I = parse_ideal("ring poly 2 QQ\nx1*x2\n")
        assert lex_ideal(I).gens == ((2, 0),)

    def test_fixed_point(self):
        I = parse_ideal("ring poly 2 QQ\nx1\n")
        assert lex_ideal(I).gens == ((1, 0),)

    def test_exterior(self):
        I = parse_ideal("ring ext 3 QQ\ne2*e3\n")
        assert lex_ideal(I).gens == ((0, 1),)

    def test_idempotent_and_stable(self):
        I = parse_ideal(STAIRCASE_3)
        L = lex_ideal(I)
        assert is_strongly_stable(L)
        again = lex_ideal(L.to_ideal())
        assert again == L

    def test_same_hilbert_function(self):
        I = parse_ideal(STAIRCASE_3)
        L = lex_ideal(I)
        for d in range(9):
            assert L.dim(d) == I.dim_piece(d)

    def test_truncated_prefix(self):
        I = parse_ideal(STAIRCASE_3)
        L = lex_ideal(I)
        trunc, complete = lex_segment_ideal(I, 4)
        assert not complete
        want = tuple(m for m in L.gens if sum(m) <= 4)
        assert trunc.gens == want


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_lex_properties_random(exp_pairs):
    ring = polynomial_ring(2)
    gens = []
    for a, b in exp_pairs:
        if a + b > 0:
            gens.append(Element.monomial(ring, (a, b)))
    if not gens:
        return
    I = Ideal(ring, gens)
    L = lex_ideal(I)
    assert is_strongly_stable(L)
    for d in range(7):
        assert L.dim(d) == I.dim_piece(d)


def test_hilbert_function_invariance_chain():
    # I, in(I), gin(I) and Lex(I) share every graded dimension
    from ginlab.groebner import gin, initial_ideal

    I = parse_ideal("ring poly 3 QQ\nx1^2 + x2*x3\nx2^2 - x1*x3\nx3^3\n")
    J_in = initial_ideal(I)
    J_gin, _ = gin(I, seed=0)
    L = lex_ideal(I)
    for d in range(9):
        dim = I.dim_piece(d)
        assert J_in.dim(d) == dim
        assert J_gin.dim(d) == dim
        assert L.dim(d) == dim
