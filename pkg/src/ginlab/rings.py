"""Exact arithmetic in polynomial rings and exterior algebras over QQ.

Monomials are plain tuples: an exponent vector for the polynomial ring,
a strictly increasing tuple of 0-based variable indices for the exterior
algebra.  Elements map monomials to nonzero exact rational coefficients
(int or Fraction).  Everything is immutable after construction and all
operations are pure functions.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

POLY = "poly"
EXT = "ext"

DEGREVLEX = "degrevlex"
DEGLEX = "deglex"
LEX = "lex"

TERM_ORDERS = (DEGREVLEX, DEGLEX, LEX)


@dataclass(frozen=True)
class Ring:
    """A polynomial ring QQ[x1..xn] or exterior algebra over an n-dim space."""

    kind: str
    n: int
    order: str = DEGREVLEX

    def __post_init__(self):
        if self.kind not in (POLY, EXT):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("need at least one variable")
        if self.order not in TERM_ORDERS:
            raise ValueError(f"unknown term order {self.order!r}")

    @property
    def is_exterior(self):
        return self.kind == EXT

    def variable_name(self, i):
        """Display name of the 0-based variable i."""
        return ("e" if self.is_exterior else "x") + str(i + 1)

    def unit_monomial(self):
        return () if self.is_exterior else (0,) * self.n

    def variable(self, i):
        """The i-th variable (0-based) as an Element."""
        if self.is_exterior:
            return Element(self, {(i,): 1})
        exps = [0] * self.n
        exps[i] = 1
        return Element(self, {tuple(exps): 1})

    def monomials(self, d):
        """All monomials of total degree d, descending in the ring order."""
        if self.is_exterior:
            if d > self.n:
                return []
            monos = list(combinations(range(self.n), d))
        else:
            monos = []
            for c in combinations_with_replacement(range(self.n), d):
                exps = [0] * self.n
                for i in c:
                    exps[i] += 1
                monos.append(tuple(exps))
        key = order_key(self)
        monos.sort(key=key, reverse=True)
        return monos

    def dim(self, d):
        """Vector space dimension of the degree-d graded piece."""
        if d < 0:
            return 0
        if self.is_exterior:
            return _binom(self.n, d)
        return _binom(d + self.n - 1, self.n - 1)


def polynomial_ring(n, order=DEGREVLEX):
    return Ring(POLY, n, order)


def exterior_ring(n, order=DEGREVLEX):
    return Ring(EXT, n, order)


def _binom(a, b):
    if b < 0 or a < 0 or b > a:
        return 0
    import math

    return math.comb(a, b)


# ---------------------------------------------------------------------------
# monomial helpers


def monomial_degree(ring, m):
    return len(m) if ring.is_exterior else sum(m)


def max_variable(ring, m):
    """m(u): the largest 1-based variable index dividing u, 0 for the unit."""
    if ring.is_exterior:
        return m[-1] + 1 if m else 0
    for i in range(ring.n - 1, -1, -1):
        if m[i]:
            return i + 1
    return 0


def monomial_mul(a, b):
    """Product of two polynomial-ring exponent vectors."""
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b):
    """Whether exponent vector a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a, b):
    """Quotient a / b of exponent vectors; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def support_divides(s, t):
    """Whether exterior monomial e_s divides e_t, i.e. s is a subset of t."""
    return set(s) <= set(t)


def wedge_supports(s, t):
    """Wedge e_s ^ e_t: (sign, merged support), or (0, None) if they meet.

    The sign is (-1)^inversions for interleaving the two sorted supports.
    Every other exterior sign in the package is derived from this one
    normalization point.
    """
    if set(s) & set(t):
        return 0, None
    merged = sorted(s + t)
    inv = 0
    for i in s:
        for j in t:
            if j < i:
                inv += 1
    return (-1) ** (inv & 1), tuple(merged)


def exterior_multiply(a, b):
    """e_a ^ e_b as (sign, support); (0, None) when the supports meet."""
    return wedge_supports(a, b)


def order_key(ring, order=None):
    """Sort key: larger key means larger monomial in the term order."""
    order = order or ring.order
    n = ring.n
    if ring.is_exterior:

        def exps(m):
            v = [0] * n
            for i in m:
                v[i] = 1
            return v

    else:

        def exps(m):
            return m

    if order == DEGREVLEX:

        def key(m):
            e = exps(m)
            return (sum(e), tuple(-x for x in reversed(e)))

    elif order == DEGLEX:

        def key(m):
            e = exps(m)
            return (sum(e), tuple(e))

    elif order == LEX:

        def key(m):
            return tuple(exps(m))

    else:
        raise ValueError(f"unknown term order {order!r}")
    return key


def compare_monomials(ring, a, b, order=None):
    """Total multiplicative order; returns -1, 0 or 1 for a <, =, > b."""
    if not ring.is_exterior and (len(a) != ring.n or len(b) != ring.n):
        raise ValueError("monomials from a different ring")
    k = order_key(ring, order)
    ka, kb = k(a), k(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# elements


class Element:
    """A ring element: finite map monomial -> nonzero rational coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def monomial(cls, ring, m, coeff=1):
        return cls(ring, {m: coeff})

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree of a homogeneous element; None for zero."""
        if not self.terms:
            return None
        degs = {monomial_degree(self.ring, m) for m in self.terms}
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def is_homogeneous(self):
        degs = {monomial_degree(self.ring, m) for m in self.terms}
        return len(degs) <= 1

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Element(self.ring, out)

    def __neg__(self):
        return Element(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return Element.zero(self.ring)
        return Element(self.ring, {m: c * x for m, x in self.terms.items()})

    def term_mul(self, mono, coeff=1):
        """Multiply by coeff * (monomial); exterior signs handled."""
        ring = self.ring
        out = {}
        if ring.is_exterior:
            for m, c in self.terms.items():
                sgn, merged = wedge_supports(m, mono)
                if sgn:
                    s = out.get(merged, 0) + sgn * c * coeff
                    if s:
                        out[merged] = s
                    else:
                        del out[merged]
        else:
            for m, c in self.terms.items():
                out[monomial_mul(m, mono)] = c * coeff
        return Element(ring, out)

    def __mul__(self, other):
        ring = self.ring
        out = Element.zero(ring)
        for m, c in other.terms.items():
            out = out + self.term_mul(m, c)
        return out

    def leading_monomial(self, order=None):
        if not self.terms:
            return None
        return max(self.terms, key=order_key(self.ring, order))

    def leading_coefficient(self, order=None):
        lm = self.leading_monomial(order)
        return self.terms[lm] if lm is not None else 0

    def monic(self, order=None):
        lc = self.leading_coefficient(order)
        if not lc or lc == 1:
            return self
        return self.scale(Fraction(1, 1) / lc)

    def normalized_integer(self):
        """Scale by a positive rational so coefficients are coprime integers."""
        if not self.terms:
            return self
        from math import gcd

        coeffs = [Fraction(c) for c in self.terms.values()]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        g = 0
        for v in nums:
            g = gcd(g, v)
        out = {m: int(Fraction(c) * den) // g for m, c in self.terms.items()}
        return Element(self.ring, out)

    def __str__(self):
        return render_element(self)

    __repr__ = __str__


def render_monomial(ring, m):
    if ring.is_exterior:
        if not m:
            return "1"
        return "*".join(ring.variable_name(i) for i in m)
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(ring.variable_name(i))
        elif e > 1:
            parts.append(f"{ring.variable_name(i)}^{e}")
    return "*".join(parts) if parts else "1"


def render_element(f):
    if f.is_zero():
        return "0"
    key = order_key(f.ring)
    parts = []
    for m in sorted(f.terms, key=key, reverse=True):
        c = f.terms[m]
        mono = render_monomial(f.ring, m)
        neg = c < 0
        c = abs(Fraction(c))
        if c == 1 and mono != "1":
            body = mono
        elif mono == "1":
            body = str(c)
        else:
            body = f"{c}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# linear changes of coordinates


def matrix_det(g):
    """Exact determinant by fraction-free elimination."""
    n = len(g)
    m = [[Fraction(x) for x in row] for row in g]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def apply_linear_change(f, g):
    """Substitute variable i by sum_j g[j][i] * (variable j) in f.

    g must be an invertible n x n matrix over QQ.  The substitution is a
    graded ring homomorphism for both ring kinds, so degrees are preserved.
    """
    ring = f.ring
    n = ring.n
    if len(g) != n or any(len(row) != n for row in g):
        raise ValueError("matrix size does not match the ring")
    if matrix_det(g) == 0:
        raise ValueError("singular change of coordinates")
    images = []
    for i in range(n):
        terms = {}
        for j in range(n):
            if g[j][i]:
                key = (j,) if ring.is_exterior else tuple(
                    1 if t == j else 0 for t in range(n)
                )
                terms[key] = g[j][i]
        images.append(Element(ring, terms))
    out = Element.zero(ring)
    one = Element.monomial(ring, ring.unit_monomial())
    pow_cache = {}
    for m, c in f.terms.items():
        acc = one
        if ring.is_exterior:
            for i in m:
                acc = acc * images[i]
        else:
            for i, e in enumerate(m):
                if not e:
                    continue
                if (i, e) not in pow_cache:
                    p = one
                    for _ in range(e):
                        p = p * images[i]
                    pow_cache[(i, e)] = p
                acc = acc * pow_cache[(i, e)]
        out = out + acc.scale(c)
    return out
