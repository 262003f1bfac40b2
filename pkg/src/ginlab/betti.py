"""Graded Betti tables by independent routes.

Homological route: Koszul complex on the coordinate forms over S (Cartan
complex over E), exact ranks of the differentials per internal degree.
Closed forms for strongly stable monomial ideals: Eliahou-Kervaire,
Bigatti's count in terms of m_<=q, and the Aramova-Herzog-Hibi formula
over the exterior algebra.  The homological and combinatorial routes stay
independent so they can act as oracles for each other.

Polynomial tables carry a self-certifying window: strands run up to the
top generator degree r of the generic initial ideal, and the strand at r
is computed and required to vanish identically.
"""

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb

from .groebner import gin
from .ideals import MonomialIdeal, is_strongly_stable, m_leq
from .linalg import IntRank
from .rings import max_variable, monomial_degree, wedge_supports

IDEAL = "ideal"
QUOTIENT = "quotient"


class NotStronglyStableError(Exception):
    pass


class WindowError(Exception):
    """The self-certifying degree bound failed; indicates a bug."""


def binom(a, b):
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass
class BettiTable:
    ring: object
    convention: str
    entries: dict
    window: dict = field(default_factory=dict)

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def strand(self, k):
        """betas along j - i = k, as dict i -> value."""
        return {i: b for (i, j), b in self.entries.items() if j - i == k}

    def strands(self):
        return sorted({j - i for (i, j) in self.entries})

    def total(self, i):
        return sum(b for (t, _), b in self.entries.items() if t == i)

    def max_strand(self):
        """Largest nonzero strand; for the ideal convention this is reg."""
        ks = self.strands()
        return max(ks) if ks else None

    def as_convention(self, convention):
        if convention == self.convention:
            return self
        if convention == IDEAL:
            entries = {
                (i - 1, j): b for (i, j), b in self.entries.items() if i >= 1
            }
        else:
            entries = {(i + 1, j): b for (i, j), b in self.entries.items()}
            entries[(0, 0)] = 1
        return BettiTable(self.ring, convention, entries, dict(self.window))

    def __eq__(self, other):
        return (
            isinstance(other, BettiTable)
            and self.ring == other.ring
            and self.convention == other.convention
            and self.entries == other.entries
        )

    def render(self):
        if not self.entries:
            return "(empty Betti table)"
        imax = max(i for i, _ in self.entries)
        ks = self.strands()
        kmin, kmax = min(ks), max(ks)
        width = max(5, max(len(str(b)) for b in self.entries.values()) + 2)
        head = "".join(str(i).rjust(width) for i in range(imax + 1))
        lines = [" " * 7 + head]
        totals = "".join(
            str(self.total(i) or ".").rjust(width) for i in range(imax + 1)
        )
        lines.append("total:".rjust(7) + totals)
        for k in range(kmin, kmax + 1):
            row = [str(k).rjust(6) + ":"]
            for i in range(imax + 1):
                b = self.get(i, i + k)
                row.append(str(b if b else ".").rjust(width))
            lines.append("".join(row))
        return "\n".join(lines)

    def to_json(self):
        return {
            "ring": {
                "kind": self.ring.kind,
                "n": self.ring.n,
            },
            "convention": self.convention,
            "entries": [
                {"i": i, "j": j, "beta": b}
                for (i, j), b in sorted(self.entries.items())
            ],
        }


# ---------------------------------------------------------------------------
# quotient-ring bases and multiplication tables


class QuotientBasis:
    """Standard monomial bases of (R/I)_d with coordinate multiplication."""

    def __init__(self, ideal):
        self.ideal = ideal
        self.ring = ideal.ring
        self._mult = {}

    def basis(self, d):
        if d < 0 or (self.ring.is_exterior and d > self.ring.n):
            return []
        return self.ideal.piece(d).std_monomials

    def index(self, d):
        return self.ideal.piece(d)._std_index

    def dim(self, d):
        return len(self.basis(d))

    def mult_var(self, t, d):
        """Multiplication by variable t: basis(d) -> coords in basis(d+1)."""
        key = (t, d)
        if key in self._mult:
            return self._mult[key]
        ring = self.ring
        if d < 0 or (ring.is_exterior and d + 1 > ring.n):
            cols = [{} for _ in self.basis(d)]
            self._mult[key] = cols
            return cols
        target = self.ideal.piece(d + 1)
        tgt_index = target._std_index
        cols = []
        for u in self.basis(d):
            if ring.is_exterior:
                sgn, merged = wedge_supports(u, (t,))
                if not sgn:
                    cols.append({})
                    continue
                nf = target.nf_monomial(merged)
                cols.append({tgt_index[m]: sgn * c for m, c in nf.items()})
            else:
                up = list(u)
                up[t] += 1
                nf = target.nf_monomial(tuple(up))
                cols.append({tgt_index[m]: c for m, c in nf.items()})
        self._mult[key] = cols
        return cols

    def mult_form(self, coeffs, d):
        """Multiplication by the linear form sum_t coeffs[t] * var_t."""
        out = [dict() for _ in self.basis(d)]
        for t, c in enumerate(coeffs):
            if not c:
                continue
            for col, add in zip(out, self.mult_var(t, d)):
                for idx, v in add.items():
                    s = col.get(idx, 0) + c * v
                    if s:
                        col[idx] = s
                    else:
                        del col[idx]
        return out


# ---------------------------------------------------------------------------
# homological route


def _koszul_rank(qb, subsets_by_size, i, j, cache):
    """Rank of the Koszul differential C_i -> C_{i-1} in internal degree j."""
    key = (i, j)
    if key in cache:
        return cache[key]
    n = qb.ring.n
    dim_src = qb.dim(j - i)
    if i < 1 or i > n or dim_src == 0:
        cache[key] = 0
        return 0
    tgt_sets = {T: idx for idx, T in enumerate(subsets_by_size[i - 1])}
    dim_tgt_block = qb.dim(j - i + 1)
    mult = [qb.mult_var(t, j - i) for t in range(n)]
    eng = IntRank()
    for T in subsets_by_size[i]:
        drops = []
        for pos, t in enumerate(T):
            rest = T[:pos] + T[pos + 1 :]
            drops.append((tgt_sets[rest], (-1) ** pos, mult[t]))
        for u_idx in range(dim_src):
            col = {}
            for block, sgn, mt in drops:
                base = block * dim_tgt_block
                for v_idx, c in mt[u_idx].items():
                    col[base + v_idx] = sgn * c
            if col:
                eng.add(col)
    cache[key] = eng.rank
    return eng.rank


def koszul_betti(ideal, convention=QUOTIENT, reg_bound=None, seed=0):
    """Betti table of R/I from Koszul homology on the coordinate forms.

    The strand window [0, r] comes from the top generator degree r of
    gin(I); the strand at r itself must vanish, which certifies that the
    table is complete.
    """
    ring = ideal.ring
    if ring.is_exterior:
        raise ValueError("use cartan_betti over the exterior algebra")
    if ideal.contains_unit():
        raise ValueError("proper ideal expected")
    n = ring.n
    if reg_bound is None:
        reg_bound = gin(ideal, seed=seed)[0].max_gen_degree()
    qb = QuotientBasis(ideal)
    subsets = [list(combinations(range(n), i)) for i in range(n + 1)]
    cache = {}
    entries = {}
    for i in range(0, n + 1):
        for k in range(0, reg_bound + 1):
            j = i + k
            dim_chain = len(subsets[i]) * qb.dim(j - i)
            r_in = _koszul_rank(qb, subsets, i, j, cache)
            r_out = _koszul_rank(qb, subsets, i + 1, j, cache)
            b = dim_chain - r_in - r_out
            if b < 0:
                raise WindowError("negative homology dimension")
            if b:
                if i >= 1 and k == reg_bound:
                    raise WindowError(
                        f"certification strand {reg_bound} is nonzero at i={i}"
                    )
                entries[(i, j)] = b
    if entries.get((0, 0)) != 1 or any(
        i == 0 and j != 0 for (i, j) in entries
    ):
        raise WindowError("H_0 of the Koszul complex is not K")
    table = BettiTable(
        ring, QUOTIENT, entries, {"strand_max": reg_bound - 1, "i_max": n}
    )
    return table.as_convention(convention)


def _cartan_rank(qb, multi_by_size, i, j, cache):
    key = (i, j)
    if key in cache:
        return cache[key]
    n = qb.ring.n
    dim_src = qb.dim(j - i)
    if i < 1 or dim_src == 0:
        cache[key] = 0
        return 0
    tgt = {a: idx for idx, a in enumerate(multi_by_size[i - 1])}
    dim_tgt_block = qb.dim(j - i + 1)
    mult = [qb.mult_var(t, j - i) for t in range(n)]
    eng = IntRank()
    for a in multi_by_size[i]:
        drops = []
        for t in range(n):
            if a[t]:
                down = list(a)
                down[t] -= 1
                drops.append((tgt[tuple(down)], mult[t]))
        for u_idx in range(dim_src):
            col = {}
            for block, mt in drops:
                base = block * dim_tgt_block
                for v_idx, c in mt[u_idx].items():
                    s = col.get(base + v_idx, 0) + c
                    if s:
                        col[base + v_idx] = s
                    else:
                        del col[base + v_idx]
            if col:
                eng.add(col)
    cache[key] = eng.rank
    return eng.rank


def divided_power_multiindices(n, i):
    """All a in N^n with |a| = i (basis of the divided power degree i)."""
    out = []
    for c in combinations_with_replacement(range(n), i):
        a = [0] * n
        for t in c:
            a[t] += 1
        out.append(tuple(a))
    return out


def cartan_betti(ideal, convention=QUOTIENT, i_max=None, seed=0):
    """Betti table of E/J from Cartan homology, up to homological degree i_max.

    Betti numbers over E live in unbounded homological degree; the window
    in i is a parameter (default n + 3).  Internal degrees j <= n + i are
    complete for each computed i.
    """
    ring = ideal.ring
    if not ring.is_exterior:
        raise ValueError("use koszul_betti over the polynomial ring")
    if ideal.contains_unit():
        raise ValueError("proper ideal expected")
    n = ring.n
    if i_max is None:
        i_max = n + 3
    qb = QuotientBasis(ideal)
    multi = [divided_power_multiindices(n, i) for i in range(i_max + 2)]
    cache = {}
    entries = {}
    for i in range(0, i_max + 1):
        for k in range(0, n + 1):
            j = i + k
            dim_chain = len(multi[i]) * qb.dim(k)
            r_in = _cartan_rank(qb, multi, i, j, cache)
            r_out = _cartan_rank(qb, multi, i + 1, j, cache)
            b = dim_chain - r_in - r_out
            if b < 0:
                raise WindowError("negative homology dimension")
            if b:
                entries[(i, j)] = b
    if entries.get((0, 0)) != 1 or any(
        i == 0 and j != 0 for (i, j) in entries
    ):
        raise WindowError("H_0 of the Cartan complex is not K")
    table = BettiTable(
        ring, QUOTIENT, entries, {"strand_max": n, "i_max": i_max}
    )
    return table.as_convention(convention)


# ---------------------------------------------------------------------------
# closed forms for strongly stable ideals


def _require_strongly_stable(J):
    if not isinstance(J, MonomialIdeal):
        raise TypeError("monomial ideal expected")
    if not is_strongly_stable(J):
        raise NotStronglyStableError(f"{J} is not strongly stable")


def ek_betti(J, convention=IDEAL):
    """Eliahou-Kervaire: beta_{i,i+j}(I) = sum over G(I)_j of C(m(u)-1, i)."""
    _require_strongly_stable(J)
    ring = J.ring
    if ring.is_exterior:
        raise ValueError("polynomial-ring ideal expected")
    entries = {}
    for u in J.gens:
        d = monomial_degree(ring, u)
        m = max_variable(ring, u)
        for i in range(m):
            entries[(i, i + d)] = entries.get((i, i + d), 0) + binom(m - 1, i)
    table = BettiTable(
        ring, IDEAL, entries, {"strand_max": J.max_gen_degree(), "i_max": ring.n}
    )
    return table.as_convention(convention)


def bigatti_betti(J, convention=QUOTIENT):
    """Strongly stable Betti numbers from the m_<=q counts.

    The closed form reads, for s >= 0 and strand k,

        dim J_{k+1} * C(n-1, s)
          - sum_{q=s}^{n-1} m_<=q(J, k+1) * C(q-1, s-1)
          - sum_{q=s+1}^{n} m_<=q(J, k)   * C(q-1, s)

    and counts the minimal-resolution contribution of the degree-(k+1)
    generators at homological position s of the ideal resolution, i.e. the
    quotient-convention entry beta_{s+1, s+1+k}(S/J).
    """
    _require_strongly_stable(J)
    ring = J.ring
    if ring.is_exterior:
        raise ValueError("polynomial-ring ideal expected")
    n = ring.n
    r = J.max_gen_degree()
    mcounts = {}

    def mq(q, k):
        if (q, k) not in mcounts:
            mcounts[(q, k)] = m_leq(J, q, k)
        return mcounts[(q, k)]

    entries = {(0, 0): 1}
    for s in range(0, n):
        for k in range(0, r):
            val = J.dim(k + 1) * binom(n - 1, s)
            val -= sum(
                mq(q, k + 1) * binom(q - 1, s - 1)
                for q in range(max(s, 1), n)
                if binom(q - 1, s - 1)
            )
            val -= sum(
                mq(q, k) * binom(q - 1, s)
                for q in range(s + 1, n + 1)
                if binom(q - 1, s)
            )
            if val < 0:
                raise WindowError("negative Betti number from m-counts")
            if val:
                entries[(s + 1, s + 1 + k)] = val
    table = BettiTable(
        ring, QUOTIENT, entries, {"strand_max": r - 1, "i_max": n}
    )
    return table.as_convention(convention)


def ahh_betti(J, i_max=None, convention=QUOTIENT):
    """Aramova-Herzog-Hibi closed form over the exterior algebra.

    beta_{i,i+k}(E/J) = sum over G(J)_{k+1} of C(m(u)+i-2, i-1), i >= 1.
    """
    _require_strongly_stable(J)
    ring = J.ring
    if not ring.is_exterior:
        raise ValueError("exterior ideal expected")
    if i_max is None:
        i_max = ring.n + 3
    entries = {(0, 0): 1}
    for u in J.gens:
        k = monomial_degree(ring, u) - 1
        m = max_variable(ring, u)
        for i in range(1, i_max + 1):
            c = binom(m + i - 2, i - 1)
            if c:
                entries[(i, i + k)] = entries.get((i, i + k), 0) + c
    table = BettiTable(
        ring, QUOTIENT, entries, {"strand_max": ring.n, "i_max": i_max}
    )
    return table.as_convention(convention)


# ---------------------------------------------------------------------------
# regularity and linearity predicates


def betti_table(ideal, convention=QUOTIENT, seed=0, i_max=None, reg_bound=None):
    """The honest (homological-route) Betti table for either ring kind."""
    if ideal.ring.is_exterior:
        return cartan_betti(ideal, convention, i_max=i_max, seed=seed)
    return koszul_betti(ideal, convention, reg_bound=reg_bound, seed=seed)


def regularity(ideal, seed=0, i_max=None, reg_bound=None):
    """reg(I) = max{k : beta_{i,i+k}(I) != 0}, ideal convention."""
    if ideal.is_zero():
        raise ValueError("regularity of the zero ideal is undefined")
    table = betti_table(ideal, IDEAL, seed=seed, i_max=i_max, reg_bound=reg_bound)
    return table.max_strand()


def has_linear_resolution(ideal, seed=0, i_max=None, reg_bound=None):
    """Equigenerated in degree d with reg = d; the zero ideal passes vacuously."""
    if ideal.is_zero():
        return True
    table = betti_table(ideal, IDEAL, seed=seed, i_max=i_max, reg_bound=reg_bound)
    gen_degrees = {j for (i, j) in table.entries if i == 0}
    return len(gen_degrees) == 1 and table.max_strand() == gen_degrees.pop()


def is_componentwise_linear(ideal, seed=0, i_max=None):
    """Entrywise equality of the Betti tables of I and gin(I)."""
    if ideal.is_zero():
        return True
    J, _ = gin(ideal, seed=seed)
    if ideal.ring.is_exterior:
        a = cartan_betti(ideal, QUOTIENT, i_max=i_max, seed=seed)
        b = cartan_betti(J.to_ideal(), QUOTIENT, i_max=i_max, seed=seed)
    else:
        r = J.max_gen_degree()
        a = koszul_betti(ideal, QUOTIENT, reg_bound=r, seed=seed)
        b = koszul_betti(J.to_ideal(), QUOTIENT, reg_bound=r, seed=seed)
    return a.entries == b.entries
