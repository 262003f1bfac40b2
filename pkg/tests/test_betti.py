import random
from math import comb

import pytest

from ginlab.betti import (
    IDEAL,
    QUOTIENT,
    NotStronglyStableError,
    ahh_betti,
    bigatti_betti,
    cartan_betti,
    ek_betti,
    has_linear_resolution,
    is_componentwise_linear,
    koszul_betti,
    regularity,
)
from ginlab.groebner import gin, gin_exterior
from ginlab.ideals import Ideal, MonomialIdeal, is_strongly_stable
from ginlab.parsing import parse_ideal
from ginlab.rings import exterior_ring, polynomial_ring



def random_borel(ring, rng, tries=8):
    """Random strongly stable ideal: Borel closure of a few monomials."""
    n = ring.n
    seeds = []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(1, 4)
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        seeds.append(tuple(exps))
    closure = set(seeds)
    frontier = list(seeds)
    while frontier:
        u = frontier.pop()
        for j in range(n):
            if not u[j]:
                continue
            for i in range(j):
                moved = list(u)
                moved[j] -= 1
                moved[i] += 1
                moved = tuple(moved)
                if moved not in closure:
                    closure.add(moved)
                    frontier.append(moved)
    from ginlab.ideals import minimal_generators

    return minimal_generators(ring, closure)


class TestKoszul:
    def test_regular_sequence(self):
        I = parse_ideal("ring poly 3 QQ\nx1\nx2\nx3\n")
        T = koszul_betti(I)
        assert T.entries == {(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1}

    def test_cancel_ideal_convention(self, cancel4):
        T = koszul_betti(cancel4, convention=IDEAL)
        assert T.entries == {
            (0, 3): 6,
            (1, 4): 6,
            (1, 5): 1,
            (2, 5): 1,
            (2, 6): 1,
        }

    def test_strand_quotient_convention(self, strand4):
        T = koszul_betti(strand4)
        assert T.entries == {
            (0, 0): 1,
            (1, 3): 3,
            (2, 4): 1,
            (2, 6): 2,
            (3, 7): 1,
        }

    def test_zero_ideal(self):
        I = Ideal.zero(polynomial_ring(3))
        assert koszul_betti(I).entries == {(0, 0): 1}

    def test_euler_characteristic(self, staircase3):
        # alternating sums of Betti numbers match those of the chain spaces
        T = koszul_betti(staircase3, reg_bound=6)
        ring = staircase3.ring
        n = ring.n
        for j in range(1, 7):
            chain = sum(
                (-1) ** i
                * comb(n, i)
                * (ring.dim(j - i) - staircase3.dim_piece(j - i))
                for i in range(0, n + 1)
                if j - i >= 0
            )
            hom = sum((-1) ** i * T.get(i, j) for i in range(0, n + 1))
            assert chain == hom


class TestClosedForms:
    def test_ek_two_variables(self):
        J = MonomialIdeal(polynomial_ring(2), [(1, 0), (0, 1)])
        T = ek_betti(J)
        assert T.entries == {(0, 1): 2, (1, 2): 1}

    def test_ek_square(self):
        J = MonomialIdeal(polynomial_ring(2), [(2, 0), (1, 1), (0, 2)])
        T = ek_betti(J)
        assert T.entries == {(0, 2): 3, (1, 3): 2}
        K = koszul_betti(J.to_ideal(), convention=IDEAL, reg_bound=2)
        assert K.entries == T.entries

    def test_ek_requires_stable(self):
        J = MonomialIdeal(polynomial_ring(2), [(0, 1)])
        with pytest.raises(NotStronglyStableError):
            ek_betti(J)

    def test_bigatti_principal(self):
        J = MonomialIdeal(polynomial_ring(2), [(1, 0)])
        assert bigatti_betti(J).entries == koszul_betti(
            J.to_ideal(), reg_bound=1
        ).entries

    def test_three_way_on_gins(self, staircase3, cancel4):
        for I in (staircase3, cancel4):
            J, _ = gin(I, seed=0)
            kz = koszul_betti(J.to_ideal(), reg_bound=J.max_gen_degree())
            assert bigatti_betti(J).entries == kz.entries
            assert ek_betti(J, QUOTIENT).entries == kz.entries

    def test_three_way_on_random_borel(self):
        rng = random.Random(12)
        for n in (2, 3, 4):
            ring = polynomial_ring(n)
            for _ in range(4):
                J = random_borel(ring, rng)
                assert is_strongly_stable(J)
                kz = koszul_betti(J.to_ideal(), reg_bound=J.max_gen_degree())
                assert ek_betti(J, QUOTIENT).entries == kz.entries
                assert bigatti_betti(J).entries == kz.entries


class TestCartan:
    def test_principal_variable(self):
        I = parse_ideal("ring ext 3 QQ\ne1\n")
        T = cartan_betti(I, i_max=5)
        assert all(T.get(i, i) == 1 for i in range(1, 6))

    def test_residue_field(self):
        n = 3
        I = parse_ideal("ring ext 3 QQ\ne1\ne2\ne3\n")
        T = cartan_betti(I, i_max=5)
        for i in range(1, 6):
            assert T.get(i, i) == comb(n + i - 1, i)

    def test_two_form_strand(self):
        I = parse_ideal("ring ext 3 QQ\ne1*e2\n")
        T = cartan_betti(I, i_max=6)
        assert all(T.get(i, i + 1) == i for i in range(1, 7))

    def test_ahh_matches_cartan(self):
        I = parse_ideal("ring ext 3 QQ\ne1*e2\n")
        J = I.monomial_image()
        assert ahh_betti(J, i_max=6).entries == cartan_betti(I, i_max=6).entries

    def test_ahh_two_variables(self):
        ring = exterior_ring(2)
        J = MonomialIdeal(ring, [(0,), (1,)])
        A = ahh_betti(J, i_max=5)
        C = cartan_betti(J.to_ideal(), i_max=5)
        assert A.entries == C.entries
        for i in range(1, 6):
            assert A.get(i, i) == comb(i + 1, i)

    def test_dominance(self):
        I = parse_ideal("ring ext 4 QQ\ne1*e2 + e3*e4\n")
        J, _ = gin_exterior(I, seed=0)
        a = cartan_betti(I, i_max=6)
        b = cartan_betti(J.to_ideal(), i_max=6)
        for (i, j), v in a.entries.items():
            assert v <= b.get(i, j)


class TestPredicates:
    def test_regularity_examples(self, strand4):
        assert regularity(parse_ideal("ring poly 2 QQ\nx1\nx2\n")) == 1
        assert regularity(parse_ideal("ring poly 2 QQ\nx1*x2\n")) == 2
        assert regularity(strand4, seed=0) == 5

    def test_zero_regularity_raises(self):
        with pytest.raises(ValueError):
            regularity(Ideal.zero(polynomial_ring(2)))

    def test_linear_resolution(self, strand4):
        assert has_linear_resolution(parse_ideal("ring poly 2 QQ\nx1\nx2\n"))
        assert has_linear_resolution(parse_ideal("ring poly 2 QQ\nx1*x2\n"))
        assert not has_linear_resolution(strand4, seed=0)
        assert has_linear_resolution(Ideal.zero(polynomial_ring(2)))

    def test_componentwise_linear(self, strand4):
        assert is_componentwise_linear(parse_ideal("ring poly 2 QQ\nx1\nx2^2\n"))
        assert not is_componentwise_linear(strand4, seed=0)

    def test_lex_is_componentwise_linear(self, staircase3):
        from ginlab.ideals import lex_ideal

        L = lex_ideal(staircase3)
        assert is_componentwise_linear(L.to_ideal(), seed=0)

    def test_dominance_poly(self, staircase3, cancel4, strand4):
        for I in (staircase3, cancel4, strand4):
            J, _ = gin(I, seed=0)
            a = koszul_betti(I, reg_bound=J.max_gen_degree())
            b = koszul_betti(J.to_ideal(), reg_bound=J.max_gen_degree())
            for (i, j), v in a.entries.items():
                assert v <= b.get(i, j)


class TestTableType:
    def test_conversion_round_trip(self, cancel4):
        T = koszul_betti(cancel4)
        back = T.as_convention(IDEAL).as_convention(QUOTIENT)
        assert back.entries == T.entries

    def test_strand_view(self, cancel4):
        T = koszul_betti(cancel4, convention=IDEAL)
        assert T.strand(3) == {0: 6, 1: 6, 2: 1}
        assert T.max_strand() == 4

    def test_render_contains_totals(self, cancel4):
        text = koszul_betti(cancel4).render()
        assert "total:" in text

    def test_json_sorted(self, cancel4):
        data = koszul_betti(cancel4).to_json()
        pairs = [(e["i"], e["j"]) for e in data["entries"]]
        assert pairs == sorted(pairs)
        assert data["ring"] == {"kind": "poly", "n": 4}
