from ginlab.corpus import CorpusSpec, generate, ideal_digest, taylor_regularity_bound
from ginlab.groebner import initial_ideal
from ginlab.ideals import MonomialIdeal
from ginlab.rings import polynomial_ring


def test_reproducible():
    spec = CorpusSpec(kind="poly", n=3, count=6, seed=42)
    a = generate(spec)
    b = generate(spec)
    assert [ideal_digest(i) for i in a] == [ideal_digest(i) for i in b]


def test_mixed_generator_kinds():
    spec = CorpusSpec(kind="poly", n=3, count=30, seed=1)
    sizes = set()
    for ideal in generate(spec):
        for g in ideal.generators:
            sizes.add(min(len(g.terms), 3))
    assert {1, 2, 3} <= sizes  # monomials, binomials and dense generators


def test_bounds_respected():
    spec = CorpusSpec(kind="poly", n=4, count=12, seed=7, max_degree=5)
    for ideal in generate(spec):
        assert 1 <= len(ideal.generators) <= 6
        assert all(g.degree() <= 5 for g in ideal.generators)
        assert taylor_regularity_bound(initial_ideal(ideal)) <= 6


def test_exterior_kind():
    spec = CorpusSpec(kind="ext", n=4, count=8, seed=3)
    for ideal in generate(spec):
        assert ideal.ring.is_exterior
        assert all(g.degree() <= 4 for g in ideal.generators)


def test_taylor_bound_examples():
    ring = polynomial_ring(3)
    J = MonomialIdeal(ring, [(2, 0, 0), (0, 2, 0), (0, 0, 2)])
    # complete intersection of quadrics: regularity 3 + 1 = 4 at most
    assert taylor_regularity_bound(J) == 4
    P = MonomialIdeal(ring, [(1, 0, 0)])
    assert taylor_regularity_bound(P) == 1


def test_digest_stable():
    spec = CorpusSpec(kind="poly", n=2, count=1, seed=0)
    ideal = generate(spec)[0]
    assert ideal_digest(ideal) == ideal_digest(ideal)
