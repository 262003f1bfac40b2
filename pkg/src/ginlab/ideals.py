"""Graded ideals, their degreewise linear algebra and monomial combinatorics.

The degreewise engine is shared by everything downstream: a graded piece
I_d is echelonized once (columns ordered by the ring's term order,
descending) and cached.  Pivot monomials give the degree-d part of the
initial ideal, non-pivot monomials are a basis of (R/I)_d, and reduced
tails give normal forms, so no Groebner machinery is needed for quotient
arithmetic.
"""

from dataclasses import dataclass
from math import comb

from .linalg import Rref
from .rings import (
    Element,
    Ring,
    max_variable,
    monomial_degree,
    monomial_divides,
    order_key,
    render_monomial,
    support_divides,
)


class LexIdealError(Exception):
    """Lexsegment spans failed the ideal property; indicates a bug."""


class Piece:
    """Echelonized degree-d piece of a graded ideal."""

    def __init__(self, ring, d, monomials, pivot_set, rref):
        self.ring = ring
        self.d = d
        self.monomials = monomials  # descending in the term order
        self.index = {m: i for i, m in enumerate(monomials)}
        self.pivots = pivot_set  # set of pivot monomials
        self.rref = rref  # None for the monomial fast path
        self.dim = len(pivot_set)
        self.std_monomials = [m for m in monomials if m not in pivot_set]
        self._std_index = {m: i for i, m in enumerate(self.std_monomials)}

    def nf_monomial(self, m):
        """Normal form of a monomial as dict std monomial -> coefficient."""
        if m not in self.pivots:
            return {m: 1}
        if self.rref is None:
            return {}
        row = self.rref.rows[self.rref.pivots[self.index[m]]]
        return {
            self.monomials[c]: -v for c, v in row.items() if c != self.index[m]
        }

    def reduce_element(self, f):
        """Class of a degree-d element in the standard monomial basis."""
        vec = {self.index[m]: c for m, c in f.terms.items()}
        if self.rref is not None:
            vec = self.rref.reduce(vec)
        else:
            vec = {
                c: v
                for c, v in vec.items()
                if self.monomials[c] not in self.pivots
            }
        return {self.monomials[c]: v for c, v in vec.items()}

    def contains(self, f):
        return not self.reduce_element(f)

    def basis_elements(self):
        """Reduced echelon basis of I_d as Elements (deterministic)."""
        ring = self.ring
        if self.rref is None:
            key = order_key(ring)
            return [
                Element.monomial(ring, m)
                for m in sorted(self.pivots, key=key, reverse=True)
            ]
        rows = sorted(self.rref.rows, key=lambda r: min(r))
        return [
            Element(ring, {self.monomials[c]: v for c, v in r.items()})
            for r in rows
        ]


class Ideal:
    """A graded ideal given by homogeneous generators with exact coefficients."""

    def __init__(self, ring, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if not isinstance(g, Element) or g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                raise ValueError("zero generator")
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator: {g}")
            gens.append(g.normalized_integer())
        self.generators = tuple(gens)
        self._pieces = {}
        self._monomial = None
        self._monomial_known = False

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    def is_zero(self):
        return not self.generators

    def min_degree(self):
        return min((g.degree() for g in self.generators), default=None)

    def max_degree(self):
        return max((g.degree() for g in self.generators), default=None)

    def contains_unit(self):
        return any(g.degree() == 0 for g in self.generators)

    def monomial_image(self):
        """The same ideal as a MonomialIdeal if all generators are monomials."""
        if not self._monomial_known:
            self._monomial_known = True
            if all(len(g.terms) == 1 for g in self.generators):
                self._monomial = minimal_generators(
                    self.ring, [next(iter(g.terms)) for g in self.generators]
                )
        return self._monomial

    def piece(self, d):
        if d < 0:
            raise ValueError("negative degree")
        if d not in self._pieces:
            self._pieces[d] = self._build_piece(d)
        return self._pieces[d]

    def _build_piece(self, d):
        ring = self.ring
        monos = ring.monomials(d)
        mono_ideal = self.monomial_image()
        if mono_ideal is not None:
            pivots = {m for m in monos if mono_ideal.contains(m)}
            return Piece(ring, d, monos, pivots, None)
        index = {m: i for i, m in enumerate(monos)}
        rref = Rref()
        key = order_key(ring)
        for g in self.generators:
            e = g.degree()
            if e > d:
                continue
            for m in ring.monomials(d - e):
                prod = g.term_mul(m)
                if prod.is_zero():
                    continue
                rref.add({index[t]: c for t, c in prod.terms.items()})
        pivots = {monos[c] for c in rref.pivots}
        return Piece(ring, d, monos, pivots, rref)

    def dim_piece(self, d):
        if self.ring.is_exterior and d > self.ring.n:
            return 0
        return self.piece(d).dim

    def contains_element(self, f):
        if f.is_zero():
            return True
        return self.piece(f.degree()).contains(f)


def graded_piece_basis(ideal, d):
    """Row-reduced basis of I_d; deterministic reduced echelon form."""
    return ideal.piece(d).basis_elements()


def component_ideal(ideal, k):
    """I_<k>: the ideal generated by a reduced echelon basis of I_k."""
    return Ideal(ideal.ring, graded_piece_basis(ideal, k))


@dataclass
class HilbertFunction:
    ring: Ring
    values: dict
    quotient: bool = False

    def __getitem__(self, d):
        return self.values[d]


def hilbert_function(ideal, d_max, quotient=False):
    """Dimensions of I_d (or of (R/I)_d) for 0 <= d <= d_max."""
    ring = ideal.ring
    values = {}
    for d in range(d_max + 1):
        dim = ideal.dim_piece(d)
        values[d] = ring.dim(d) - dim if quotient else dim
    return HilbertFunction(ring, values, quotient)


# ---------------------------------------------------------------------------
# monomial ideals


class MonomialIdeal:
    """A monomial ideal by its minimal generators (unique, sorted)."""

    def __init__(self, ring, gens):
        self.ring = ring
        key = order_key(ring)
        ordered = sorted(set(gens), key=key, reverse=True)
        ordered.sort(key=lambda m: monomial_degree(ring, m))
        self.gens = tuple(ordered)
        self._degree_cache = {}

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.ring == other.ring
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        body = ", ".join(render_monomial(self.ring, m) for m in self.gens)
        return f"({body})" if body else "(0)"

    def is_zero(self):
        return not self.gens

    def contains(self, m):
        if self.ring.is_exterior:
            return any(support_divides(g, m) for g in self.gens)
        return any(monomial_divides(g, m) for g in self.gens)

    def monomials(self, d):
        """All degree-d monomials of the ideal, descending in the order."""
        if d not in self._degree_cache:
            self._degree_cache[d] = [
                m for m in self.ring.monomials(d) if self.contains(m)
            ]
        return self._degree_cache[d]

    def dim(self, d):
        if d < 0:
            return 0
        return len(self.monomials(d))

    def gens_of_degree(self, d):
        return [m for m in self.gens if monomial_degree(self.ring, m) == d]

    def max_gen_degree(self):
        return max(
            (monomial_degree(self.ring, m) for m in self.gens), default=0
        )

    def min_gen_degree(self):
        return min(
            (monomial_degree(self.ring, m) for m in self.gens), default=None
        )

    def to_ideal(self):
        return Ideal(
            self.ring, [Element.monomial(self.ring, m) for m in self.gens]
        )


def minimal_generators(ring, monomials):
    """Inclusion-minimal generating set of the monomial ideal they span."""
    divides = support_divides if ring.is_exterior else monomial_divides
    key = order_key(ring)
    by_degree = sorted(
        set(monomials), key=lambda m: (monomial_degree(ring, m), key(m))
    )
    minimal = []
    for m in by_degree:
        if not any(divides(g, m) for g in minimal):
            minimal.append(m)
    return MonomialIdeal(ring, minimal)


def is_strongly_stable(ideal):
    """Borel exchange test: replacing a variable by any earlier one stays inside.

    For monomial ideals it suffices to test the exchanges on minimal
    generators.
    """
    ring = ideal.ring
    if ring.is_exterior:
        for g in ideal.gens:
            sup = set(g)
            for j in g:
                for i in range(j):
                    if i in sup:
                        continue
                    swapped = tuple(sorted((sup - {j}) | {i}))
                    if not ideal.contains(swapped):
                        return False
        return True
    for g in ideal.gens:
        for j in range(ring.n):
            if not g[j]:
                continue
            for i in range(j):
                moved = list(g)
                moved[j] -= 1
                moved[i] += 1
                if not ideal.contains(tuple(moved)):
                    return False
    return True


def m_leq(ideal, q, k):
    """Count of degree-k monomials u in the ideal with m(u) <= q (1-based q)."""
    if not 1 <= q <= ideal.ring.n:
        raise ValueError("q out of range")
    return sum(
        1
        for m in ideal.monomials(k)
        if max_variable(ideal.ring, m) <= q
    )


# ---------------------------------------------------------------------------
# Hilbert series of monomial quotients (polynomial ring)


def _poly_add(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, v in enumerate(b):
        out[i] += v
    while out and not out[-1]:
        out.pop()
    return out


def _poly_shift(a, k):
    return [0] * k + list(a) if a else []


def _poly_neg(a):
    return [-v for v in a]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and not out[-1]:
        out.pop()
    return out


def hilbert_numerator(ideal):
    """Numerator N(t) with HS_{S/J}(t) = N(t)/(1-t)^n for a monomial ideal J."""
    ring = ideal.ring
    if ring.is_exterior:
        raise ValueError("polynomial-ring monomial ideal expected")
    n = ring.n

    def supports_disjoint(gens):
        seen = set()
        for g in gens:
            sup = {i for i in range(n) if g[i]}
            if sup & seen:
                return False
            seen |= sup
        return True

    def colon_var(gens, i):
        out = []
        for g in gens:
            if g[i]:
                h = list(g)
                h[i] -= 1
                out.append(tuple(h))
            else:
                out.append(g)
        return tuple(minimal_generators(ring, out).gens)

    def plus_var(gens, i):
        var = tuple(1 if t == i else 0 for t in range(n))
        return tuple(minimal_generators(ring, list(gens) + [var]).gens)

    memo = {}

    def rec(gens):
        if gens in memo:
            return memo[gens]
        if not gens:
            res = [1]
        elif any(sum(g) == 0 for g in gens):
            res = []
        elif supports_disjoint(gens):
            res = [1]
            for g in gens:
                res = _poly_mul(res, _poly_add([1], _poly_shift([-1], sum(g))))
        else:
            counts = [0] * n
            for g in gens:
                for i in range(n):
                    if g[i]:
                        counts[i] += 1
            i = max(range(n), key=lambda t: counts[t])
            res = _poly_add(
                rec(plus_var(gens, i)), _poly_shift(rec(colon_var(gens, i)), 1)
            )
        memo[gens] = res
        return res

    return rec(ideal.gens)


def quotient_dim_from_numerator(num, n, d):
    """dim (S/J)_d from the Hilbert numerator over n variables."""
    total = 0
    for k, c in enumerate(num):
        if c and d - k >= 0:
            total += c * comb(d - k + n - 1, n - 1)
    return total


# ---------------------------------------------------------------------------
# lexsegment ideals


def _lex_span_grow(ring, span, d):
    """All degree-(d+1) multiples of a degree-d monomial set."""
    out = set()
    if ring.is_exterior:
        for m in span:
            for i in range(ring.n):
                if i not in m:
                    out.add(tuple(sorted(m + (i,))))
    else:
        for m in span:
            for i in range(ring.n):
                grown = list(m)
                grown[i] += 1
                out.add(tuple(grown))
    return out


def _lex_construct(ideal, up_to=None, cap=64):
    """Shared lexsegment construction; returns (MonomialIdeal, complete).

    Degree by degree: the lex-first dim I_d monomials, with the ideal
    property verified.  Completeness over the polynomial ring is certified
    by Hilbert-series equality of the candidate with the input (candidate
    is contained in Lex(I), so equal series forces equality everywhere).
    When up_to is given, construction stops there; generators through that
    degree are exactly the generators of Lex(I) of degree <= up_to.
    """
    ring = ideal.ring
    if ideal.contains_unit():
        raise ValueError("proper ideal expected")
    lexkey = order_key(ring, "lex")

    if ring.is_exterior:
        top = ring.n if up_to is None else min(up_to, ring.n)
        span = set()
        gens = []
        for d in range(1, top + 1):
            grown = _lex_span_grow(ring, span, d - 1) if span else set()
            monos = sorted(ring.monomials(d), key=lexkey, reverse=True)
            new_span = set(monos[: ideal.dim_piece(d)])
            if not grown <= new_span:
                raise LexIdealError(
                    f"lex span in degree {d} is not an ideal piece"
                )
            gens += sorted(new_span - grown, key=lexkey, reverse=True)
            span = new_span
        return minimal_generators(ring, gens), top >= ring.n

    from .groebner import initial_ideal

    init = initial_ideal(ideal)
    num = hilbert_numerator(init)
    n = ring.n

    def ideal_dim(d):
        return ring.dim(d) - quotient_dim_from_numerator(num, n, d)

    span = set()
    gens = []
    d = 0
    while True:
        d += 1
        if up_to is not None and d > up_to:
            return minimal_generators(ring, gens), False
        if d > cap:
            raise LexIdealError(
                "lexsegment construction exceeded the degree cap"
            )
        grown = _lex_span_grow(ring, span, d - 1) if span else set()
        monos = sorted(ring.monomials(d), key=lexkey, reverse=True)
        new_span = set(monos[: ideal_dim(d)])
        if not grown <= new_span:
            raise LexIdealError(f"lex span in degree {d} is not an ideal piece")
        gens += sorted(new_span - grown, key=lexkey, reverse=True)
        span = new_span
        candidate = minimal_generators(ring, gens)
        if d >= init.max_gen_degree() and hilbert_numerator(candidate) == num:
            return candidate, True


def lex_ideal(ideal):
    """Lex(I): the lexsegment ideal with the Hilbert function of I."""
    result, complete = _lex_construct(ideal)
    assert complete
    return result


def lex_segment_ideal(ideal, up_to):
    """The generators of Lex(I) of degree <= up_to; (ideal, complete) pair."""
    return _lex_construct(ideal, up_to=up_to)
