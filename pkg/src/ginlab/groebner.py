"""Initial ideals and generic initial ideals.

Polynomial initial ideals come from a reduced Groebner basis (Buchberger,
normal selection, criteria 1 and 2).  Exterior initial ideals and the
per-trial initial ideals inside gin are computed degree by degree as the
pivot monomials of the echelonized graded pieces; for the polynomial ring
the scan stops once the candidate monomial ideal provably has the Hilbert
series of the input, which certifies completeness without Groebner theory
in generic coordinates.  Both routes compute the same object (tested).

gin draws integer change-of-coordinate matrices with entries in [-B, B],
requires all trials to agree, and insists the result is strongly stable;
disagreement escalates B and is never silent.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .ideals import (
    Ideal,
    MonomialIdeal,
    hilbert_numerator,
    is_strongly_stable,
    minimal_generators,
)
from .linalg import IntRank
from .rings import (
    DEGREVLEX,
    Element,
    apply_linear_change,
    matrix_det,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    order_key,
)


class GenericityError(Exception):
    """Raised when gin trials keep disagreeing or the Borel check fails."""


# ---------------------------------------------------------------------------
# Buchberger


@dataclass(frozen=True)
class GroebnerBasis:
    ring: object
    order: str
    elements: tuple
    reduced: bool = True


def _spoly(f, lmf, g, lmg):
    lcm = monomial_lcm(lmf, lmg)
    sf = f.term_mul(monomial_div(lcm, lmf), g.terms[lmg])
    sg = g.term_mul(monomial_div(lcm, lmg), f.terms[lmf])
    return (sf - sg).normalized_integer()


def _normal_form(f, basis, lms, key):
    """Remainder of f on division by basis (deterministic reducer choice)."""
    work = dict(f.terms)
    out = {}
    while work:
        t = max(work, key=key)
        c = work.pop(t)
        hit = None
        for idx, lm in enumerate(lms):
            if monomial_divides(lm, t):
                hit = idx
                break
        if hit is None:
            out[t] = c
            continue
        g = basis[hit]
        shift = monomial_div(t, lms[hit])
        factor = Fraction(c, 1) / g.terms[lms[hit]]
        for m, gc in g.terms.items():
            if m == lms[hit]:
                continue
            mm = monomial_mul(m, shift)
            s = work.get(mm, 0) - factor * gc
            if s:
                work[mm] = s
            else:
                work.pop(mm, None)
    return Element(f.ring, out)


def buchberger(ideal, order=None):
    """Reduced Groebner basis of a homogeneous polynomial ideal."""
    import heapq

    ring = ideal.ring
    if ring.is_exterior:
        raise ValueError("Buchberger runs over the polynomial ring only")
    order = order or ring.order
    key = order_key(ring, order)

    basis = []
    lms = []
    pairs = set()
    heap = []

    def push_pairs(idx):
        for i in range(idx):
            pairs.add((i, idx))
            heapq.heappush(
                heap, (key(monomial_lcm(lms[i], lms[idx])), (i, idx))
            )

    for g in ideal.generators:
        f = g.normalized_integer()
        basis.append(f)
        lms.append(f.leading_monomial(order))
        push_pairs(len(basis) - 1)

    while pairs:
        # normal strategy: smallest lcm first
        while True:
            _, (i, j) = heapq.heappop(heap)
            if (i, j) in pairs:
                break
        pairs.remove((i, j))
        lcm = monomial_lcm(lms[i], lms[j])
        if lcm == monomial_mul(lms[i], lms[j]):
            continue  # coprime leading monomials
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not monomial_divides(lms[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pairs and b not in pairs:
                skip = True
                break
        if skip:
            continue
        s = _spoly(basis[i], lms[i], basis[j], lms[j])
        r = _normal_form(s, basis, lms, key)
        if not r.is_zero():
            r = r.normalized_integer()
            basis.append(r)
            lms.append(r.leading_monomial(order))
            push_pairs(len(basis) - 1)

    # minimalize, then interreduce tails for the unique reduced basis
    order_idx = sorted(range(len(basis)), key=lambda t: key(lms[t]))
    minimal = []
    for t in order_idx:
        if not any(monomial_divides(lms[s], lms[t]) for s in minimal):
            minimal.append(t)
    reduced = []
    for t in minimal:
        others = [basis[s] for s in minimal if s != t]
        other_lms = [lms[s] for s in minimal if s != t]
        r = _normal_form(basis[t], others, other_lms, key)
        reduced.append(r.monic(order))
    reduced.sort(key=lambda f: key(f.leading_monomial(order)))
    return GroebnerBasis(ring, order, tuple(reduced))


# ---------------------------------------------------------------------------
# initial ideals


def _degree_pivot_monomials(ring, gens, d, key):
    """Leading monomials of the degree-d piece of the span of gens."""
    monos = sorted(ring.monomials(d), key=key, reverse=True)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in gens:
        e = g.degree()
        if e is None or e > d:
            continue
        for m in ring.monomials(d - e):
            prod = g.term_mul(m)
            if prod.is_zero():
                continue
            rows.append({index[t]: c for t, c in prod.terms.items()})
    # sparse rows first: keeps the elimination basis short and the
    # integer growth down when monomial and dense generators mix
    rows.sort(key=len)
    eng = IntRank()
    for row in rows:
        eng.add(row)
    return {monos[c] for c in eng.pivots}


def initial_ideal(ideal, order=None):
    """in(I): minimal monomial generators of the initial ideal."""
    ring = ideal.ring
    order = order or ring.order
    if ideal.is_zero():
        return MonomialIdeal(ring, [])
    if ideal.contains_unit():
        return MonomialIdeal(ring, [ring.unit_monomial()])
    mono = ideal.monomial_image()
    if mono is not None:
        return mono
    if ring.is_exterior:
        key = order_key(ring, order)
        found = []
        for d in range(1, ring.n + 1):
            found += _degree_pivot_monomials(ring, ideal.generators, d, key)
        return minimal_generators(ring, found)
    gb = buchberger(ideal, order)
    return minimal_generators(
        ring, [g.leading_monomial(order) for g in gb.elements]
    )


_SCAN_CAP = 64


def _initial_ideal_degreewise(ring, gens, order, stop, max_scan_degree=None):
    """in of the span of gens, scanning degrees with a certified stop.

    Every monomial found is a true leading monomial, so the accumulating
    candidate ideal sits inside the initial ideal.  Two stopping rules:

    - ("hilbert", numerator): stop once the candidate has the Hilbert
      series of the input; equality of Hilbert series plus containment
      forces equality in every degree, exactly.
    - ("crystallization", d): the input is generated in degrees <= d; in
      generic coordinates under the reverse lexicographic order, a degree
      e > d with no new minimal generators bounds the regularity by e - 1
      and so certifies completeness (generic-coordinate assumption is
      covered by the trial-agreement and Borel certificates of gin).
    """
    key = order_key(ring, order)
    if ring.is_exterior:
        found = []
        for d in range(1, ring.n + 1):
            found += _degree_pivot_monomials(ring, gens, d, key)
        return minimal_generators(ring, found), None
    mode, data = stop
    mindeg = min(g.degree() for g in gens)
    grown = set()
    found = []
    for d in range(mindeg, _SCAN_CAP + 1):
        if max_scan_degree is not None and d > max_scan_degree:
            return minimal_generators(ring, found), d - 1
        pivots = _degree_pivot_monomials(ring, gens, d, key)
        if not grown <= pivots:
            raise AssertionError("initial ideal lost monomials between degrees")
        new = pivots - grown
        found += sorted(new, key=key, reverse=True)
        if mode == "crystallization":
            if d > data and not new:
                return minimal_generators(ring, found), None
        else:
            candidate = minimal_generators(ring, found)
            if hilbert_numerator(candidate) == data:
                return candidate, None
        grown = set()
        for m in pivots:
            for i in range(ring.n):
                up = list(m)
                up[i] += 1
                grown.add(tuple(up))
    raise RuntimeError("initial ideal scan exceeded the degree cap")


# ---------------------------------------------------------------------------
# generic initial ideals


@dataclass(frozen=True)
class GinCertificate:
    order: str
    seed: object
    coeff_bound: int
    trials: int
    escalations: int
    matrices: tuple
    strongly_stable: bool
    truncated_at: int = None  # generators above this degree were not scanned

    def describe(self):
        lines = [
            f"order:           {self.order}",
            f"seed:            {self.seed}",
            f"coeff bound:     {self.coeff_bound}",
            f"trials agreeing: {self.trials}",
            f"escalations:     {self.escalations}",
            f"strongly stable: {'yes' if self.strongly_stable else 'no'}",
        ]
        if self.truncated_at is not None:
            lines.append(f"truncated at:    degree {self.truncated_at}")
        for t, mat in enumerate(self.matrices):
            lines.append(f"matrix {t}: {list(map(list, mat))}")
        return "\n".join(lines)


def _draw_matrix(n, seed, escalation, trial, bound):
    rng = random.Random(f"gin:{seed}:{escalation}:{trial}:{bound}")
    while True:
        mat = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if matrix_det(mat) != 0:
            return mat


def gin(
    ideal,
    order=None,
    seed=0,
    coeff_bound=1000,
    trials=2,
    route="degreewise",
    max_scan_degree=None,
):
    """Generic initial ideal with a reproducible certificate.

    Draws one integer matrix per trial, transforms, takes the initial
    ideal, and accepts only if all trials agree and the result is strongly
    stable; otherwise the coefficient bound is doubled (up to four times)
    and the failure is loud.

    max_scan_degree truncates the degreewise scan: the result then holds
    exactly the generators of the gin of degree <= max_scan_degree, and
    the certificate records the truncation.
    """
    ring = ideal.ring
    order = order or DEGREVLEX
    if trials < 2:
        raise ValueError("at least two trials are required")
    if ideal.contains_unit():
        raise ValueError("proper ideal expected")
    if ideal.is_zero():
        cert = GinCertificate(order, seed, coeff_bound, trials, 0, (), True)
        return MonomialIdeal(ring, []), cert

    stop = None
    if route == "degreewise" and not ring.is_exterior:
        if order == DEGREVLEX:
            stop = ("crystallization", ideal.max_degree())
        else:
            stop = ("hilbert", hilbert_numerator(initial_ideal(ideal)))

    failures = []
    bound = coeff_bound
    for escalation in range(5):
        results = []
        matrices = []
        cut = None
        for t in range(trials):
            mat = _draw_matrix(ring.n, seed, escalation, t, bound)
            matrices.append(tuple(tuple(row) for row in mat))
            transformed = [apply_linear_change(g, mat) for g in ideal.generators]
            if route == "buchberger":
                J = initial_ideal(Ideal(ring, transformed), order)
                cut = None
            else:
                J, cut = _initial_ideal_degreewise(
                    ring, transformed, order, stop, max_scan_degree
                )
            results.append(J)
        agreed = all(J == results[0] for J in results)
        borel = agreed and is_strongly_stable(results[0])
        if agreed and borel:
            cert = GinCertificate(
                order, seed, bound, trials, escalation,
                tuple(matrices), True, cut,
            )
            return results[0], cert
        failures.append(
            "trials disagree" if not agreed else "result not strongly stable"
        )
        bound *= 2
    raise GenericityError(
        "genericity not reached after escalation: " + "; ".join(failures)
    )


def gin_exterior(ideal, seed=0, coeff_bound=1000, trials=2):
    """gin over the exterior algebra (reverse lexicographic order)."""
    if not ideal.ring.is_exterior:
        raise ValueError("exterior ideal expected")
    return gin(ideal, DEGREVLEX, seed, coeff_bound, trials)
