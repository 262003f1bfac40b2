"""Generic annihilator numbers and partial Koszul/Cartan homology.

For a generic sequence of linear forms y_1..y_n on M = R/I the
annihilator numbers are the graded dimensions

    alpha_{p,k} = dim ((y_1..y_{p-1})M :_M y_p / (y_1..y_{p-1})M)_k

(over the exterior algebra the denominator also contains v_p).  They are
computed directly from colon quotients, and independently from the
max-variable statistics of the generators of gin(I); the two must agree.

The homology workspace computes H_i(y_1..y_p; M) per graded piece
together with the delta numbers: ranks of multiplication by the next form
on Koszul homology, resp. of the connecting map gamma of the Cartan long
exact sequence.  verify_homology_formula evaluates the closed formula for
h_{i,i+k}(p) in terms of alpha and delta, and the degreewise recurrences
it comes from, cell by cell.
"""

import random
from dataclasses import dataclass, field

from .betti import QuotientBasis, binom, divided_power_multiindices
from .groebner import GenericityError, gin
from .linalg import IntRank, left_kernel
from .rings import Element, matrix_det

from itertools import combinations


@dataclass(frozen=True)
class GenericSequence:
    """Linear forms y_1..y_n given by integer coefficient rows (invertible)."""

    ring: object
    rows: tuple
    seed: object
    bound: int

    @classmethod
    def draw(cls, ring, seed, bound=1000):
        rng = random.Random(f"forms:{seed}:{bound}")
        n = ring.n
        while True:
            rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
            if matrix_det(rows) != 0:
                return cls(ring, tuple(tuple(r) for r in rows), seed, bound)

    def coeffs(self, p):
        """Coefficient row of the (p+1)-st form (0-based p)."""
        return self.rows[p]

    def form(self, p):
        ring = self.ring
        terms = {}
        for t, c in enumerate(self.rows[p]):
            if c:
                key = (t,) if ring.is_exterior else tuple(
                    1 if s == t else 0 for s in range(ring.n)
                )
                terms[key] = c
        return Element(ring, terms)


@dataclass
class AnnihilatorTable:
    ring: object
    entries: dict  # (p, k) -> alpha_{p,k}, p 1-based
    provenance: str
    degree_bound: int

    def get(self, p, k):
        return self.entries.get((p, k), 0)

    def same_numbers(self, other):
        return self.entries == other.entries

    def render(self):
        if not self.entries:
            return "(zero annihilator table)"
        kmax = max(k for _, k in self.entries)
        width = max(4, max(len(str(v)) for v in self.entries.values()) + 2)
        lines = ["k:".rjust(6) + "".join(str(k).rjust(width) for k in range(kmax + 1))]
        for p in range(1, self.ring.n + 1):
            row = f"p={p}:".rjust(6)
            for k in range(kmax + 1):
                v = self.get(p, k)
                row += str(v if v else ".").rjust(width)
            lines.append(row)
        return "\n".join(lines)

    def to_json(self):
        return {
            "ring": {"kind": self.ring.kind, "n": self.ring.n},
            "provenance": self.provenance,
            "degree_bound": self.degree_bound,
            "entries": [
                {"p": p, "k": k, "alpha": v}
                for (p, k), v in sorted(self.entries.items())
            ],
        }


def _prefix_dims(ideal, seq, dmax):
    """dims[p][d] = dim (I + (y_1..y_p))_d, one elimination pass per degree."""
    ring = ideal.ring
    n = ring.n
    dims = [[0] * (dmax + 1) for _ in range(n + 1)]
    forms = [seq.form(p) for p in range(n)]
    for d in range(dmax + 1):
        monos = ring.monomials(d)
        if not monos:
            continue
        index = {m: i for i, m in enumerate(monos)}
        eng = IntRank()
        for g in ideal.generators:
            e = g.degree()
            if e > d:
                continue
            for m in ring.monomials(d - e):
                prod = g.term_mul(m)
                if not prod.is_zero():
                    eng.add({index[t]: c for t, c in prod.terms.items()})
        dims[0][d] = eng.rank
        for p in range(1, n + 1):
            if d >= 1:
                for m in ring.monomials(d - 1):
                    prod = forms[p - 1].term_mul(m)
                    if not prod.is_zero():
                        eng.add({index[t]: c for t, c in prod.terms.items()})
            dims[p][d] = eng.rank
    return dims


def _alpha_for_sequence(ideal, seq, degree_bound):
    """Annihilator numbers of R/I along one concrete sequence of forms.

    With J_p = I + (y_1..y_p), the colon-quotient dimension in degree k
    reduces to prefix Hilbert functions:

        alpha_{p,k} = dim R_k - dim (J_p)_{k+1} + dim (J_{p-1})_{k+1}
                      - dim (J_{p-1})_k          (polynomial ring)

    with the last term replaced by dim (J_p)_k over the exterior algebra,
    since there the denominator contains v_p as well.
    """
    ring = ideal.ring
    n = ring.n
    dims = _prefix_dims(ideal, seq, degree_bound + 1)
    entries = {}
    for p in range(1, n + 1):
        for k in range(degree_bound + 1):
            total = ring.dim(k)
            if total == 0:
                continue
            val = total - dims[p][k + 1] + dims[p - 1][k + 1]
            val -= dims[p][k] if ring.is_exterior else dims[p - 1][k]
            if val:
                entries[(p, k)] = val
    return entries


def generic_annihilators_direct(
    ideal, seed=0, degree_bound=None, coeff_bound=1000
):
    """Annihilator numbers by the colon definition, two-seed certified."""
    ring = ideal.ring
    if ideal.contains_unit():
        raise ValueError("proper ideal expected")
    if degree_bound is None:
        if ring.is_exterior:
            degree_bound = ring.n
        else:
            J, _ = gin(ideal, seed=seed)
            degree_bound = J.max_gen_degree() + 2
    bound = coeff_bound
    for escalation in range(5):
        tables = []
        ok = True
        for tag in ("a", "b"):
            seq = GenericSequence.draw(ring, f"{seed}:{escalation}:{tag}", bound)
            entries, good = _alpha_with_band(ideal, seq, degree_bound)
            if not good:
                ok = False
                break
            tables.append(entries)
        if ok and tables[0] == tables[1]:
            return AnnihilatorTable(ring, tables[0], "direct", degree_bound)
        bound *= 2
    raise GenericityError("genericity not reached for annihilator numbers")


def _alpha_with_band(ideal, seq, degree_bound):
    """Alpha table with a zero trailing band of width 2, raising D if needed."""
    ring = ideal.ring
    cap = degree_bound + 8
    D = degree_bound
    while D <= cap:
        entries = _alpha_for_sequence(ideal, seq, D)
        if ring.is_exterior:
            return entries, True  # vanishes beyond n by dimension reasons
        band = {k for (_, k) in entries if k >= D - 1}
        if not band:
            return entries, True
        D += 2
    return {}, False


def annihilators_from_gin(ideal, seed=0, gin_result=None):
    """alpha_{p,k} = #{u in G(gin I) of degree k+1 with m(u) = n-p+1}."""
    ring = ideal.ring
    if gin_result is None:
        gin_result, _ = gin(ideal, seed=seed)
    from .rings import max_variable, monomial_degree

    entries = {}
    for u in gin_result.gens:
        p = ring.n - max_variable(ring, u) + 1
        k = monomial_degree(ring, u) - 1
        entries[(p, k)] = entries.get((p, k), 0) + 1
    bound = gin_result.max_gen_degree() + 2
    return AnnihilatorTable(ring, entries, "from-gin", bound)


# ---------------------------------------------------------------------------
# partial homology and delta numbers


def annihilator_index_set(i, p):
    """The pairs (a, b) with 1 <= b <= p-1, max(i-p+b, 1) <= a <= i."""
    return [
        (a, b)
        for b in range(1, p)
        for a in range(max(i - p + b, 1), i + 1)
    ]


class HomologyWorkspace:
    """Koszul (or Cartan) homology of partial generic sequences on R/I.

    All ranks are exact; cycle spaces come from kernel computations over
    QQ so that images of induced maps can be reduced against boundaries.
    """

    def __init__(self, ideal, seq):
        self.ideal = ideal
        self.ring = ideal.ring
        self.seq = seq
        self.qb = QuotientBasis(ideal)
        self._mult = {}  # (form index, degree) -> columns
        self._sets = {}
        self._rank = {}
        self._bcols = {}
        self._delta = {}
        self._cycles = {}

    def mult(self, t, d):
        key = (t, d)
        if key not in self._mult:
            self._mult[key] = self.qb.mult_form(self.seq.coeffs(t), d)
        return self._mult[key]

    def chain_sets(self, p, i):
        """Index sets for C_i on the first p forms."""
        key = (p, i)
        if key not in self._sets:
            if self.ring.is_exterior:
                self._sets[key] = divided_power_multiindices(p, i)
            else:
                self._sets[key] = list(combinations(range(p), i))
        return self._sets[key]

    def chain_dim(self, p, i, j):
        return len(self.chain_sets(p, i)) * self.qb.dim(j - i)

    def boundary_cols(self, p, i, j):
        """Columns of the differential C_{i,j}(p) -> C_{i-1,j}(p)."""
        key = (p, i, j)
        if key in self._bcols:
            return self._bcols[key]
        cols = []
        src_deg = j - i
        dim_src = self.qb.dim(src_deg)
        if i < 1 or dim_src == 0 or (not self.ring.is_exterior and i > p):
            self._bcols[key] = cols
            return cols
        tgt_sets = {s: idx for idx, s in enumerate(self.chain_sets(p, i - 1))}
        block = self.qb.dim(src_deg + 1)
        for s in self.chain_sets(p, i):
            drops = []
            if self.ring.is_exterior:
                for t in range(p):
                    if s[t]:
                        down = list(s)
                        down[t] -= 1
                        drops.append((tgt_sets[tuple(down)], 1, self.mult(t, src_deg)))
            else:
                for pos, t in enumerate(s):
                    rest = s[:pos] + s[pos + 1 :]
                    drops.append((tgt_sets[rest], (-1) ** pos, self.mult(t, src_deg)))
            for u_idx in range(dim_src):
                col = {}
                for tgt_block, sgn, mt in drops:
                    base = tgt_block * block
                    for v_idx, c in mt[u_idx].items():
                        val = col.get(base + v_idx, 0) + sgn * c
                        if val:
                            col[base + v_idx] = val
                        else:
                            del col[base + v_idx]
                cols.append(col)
        self._bcols[key] = cols
        return cols

    def boundary_rank(self, p, i, j):
        key = (p, i, j)
        if key not in self._rank:
            eng = IntRank()
            for col in self.boundary_cols(p, i, j):
                eng.add(col)
            self._rank[key] = eng.rank
        return self._rank[key]

    def h(self, p, i, j):
        """dim H_i(y_1..y_p; M)_j."""
        if i < 0:
            return 0
        if i == 0:
            return self.qb.dim(j) - self.boundary_rank(p, 1, j)
        return (
            self.chain_dim(p, i, j)
            - self.boundary_rank(p, i, j)
            - self.boundary_rank(p, i + 1, j)
        )

    def cycles(self, p, i, j):
        """Basis of Z_i(p)_j as coefficient dicts over the chain basis."""
        key = (p, i, j)
        if key in self._cycles:
            return self._cycles[key]
        if i == 0:
            out = [{t: 1} for t in range(self.qb.dim(j))]
        else:
            cols = self.boundary_cols(p, i, j)
            tgt_dim = self.chain_dim(p, i - 1, j)
            out = left_kernel(cols, tgt_dim)
        self._cycles[key] = out
        return out

    def _push_cycle(self, p, i, j, z, images_mult):
        """Map a cycle through a degree-raising coefficient map on M."""
        src_sets = self.chain_sets(p, i)
        dim_src = self.qb.dim(j - i)
        block = self.qb.dim(j - i + 1)
        out = {}
        for idx, c in z.items():
            s_idx, u_idx = divmod(idx, dim_src)
            for v_idx, mc in images_mult[u_idx].items():
                key = s_idx * block + v_idx
                val = out.get(key, 0) + c * mc
                if val:
                    out[key] = val
                else:
                    del out[key]
        return out

    def delta(self, p, i, k):
        """Polynomial: rank of multiplication by y_{p+1} on H_i(p) into degree k.

        Exterior: rank of the connecting map gamma_{i,p} : H_i(p+1)_{k-1}
        -> H_i(p)_k (zero for i = 0 by convention).
        """
        if i < 1 or k - 1 - i < 0 or self.qb.dim(k - 1 - i) == 0:
            return 0
        key = (p, i, k)
        if key in self._delta:
            return self._delta[key]
        if self.ring.is_exterior:
            val = self._delta_ext(p, i, k)
            self._delta[key] = val
            return val
        if i > p:
            self._delta[key] = 0
            return 0
        base = IntRank()
        for col in self.boundary_cols(p, i + 1, k):
            base.add(col)
        rank0 = base.rank
        mt = self.mult(p, k - 1 - i)  # y_{p+1} on M in degree (k-1)-i
        for z in self.cycles(p, i, k - 1):
            base.add(self._push_cycle(p, i, k - 1, z, mt))
        self._delta[key] = base.rank - rank0
        return self._delta[key]

    def _delta_ext(self, p, i, k):
        base = IntRank()
        for col in self.boundary_cols(p, i + 1, k):
            base.add(col)
        rank0 = base.rank
        src_sets = self.chain_sets(p + 1, i)
        tgt_sets = {s: idx for idx, s in enumerate(self.chain_sets(p, i))}
        dim_src = self.qb.dim(k - 1 - i)
        block = self.qb.dim(k - i)
        mt = self.mult(p, k - 1 - i)  # wedge with v_{p+1}
        for z in self.cycles(p + 1, i, k - 1):
            out = {}
            for idx, c in z.items():
                s_idx, u_idx = divmod(idx, dim_src)
                a = src_sets[s_idx]
                if a[p]:
                    continue  # gamma keeps only the x_{p+1}-free part
                tgt = tgt_sets[a[:p]]
                for v_idx, mc in mt[u_idx].items():
                    key = tgt * block + v_idx
                    val = out.get(key, 0) + c * mc
                    if val:
                        out[key] = val
                    else:
                        del out[key]
            base.add(out)
        return base.rank - rank0


def partial_homology(ideal, p, seed=0, degree_bound=None, i_max=None, coeff_bound=1000):
    """Slice of the homology profile at p, two-seed certified.

    Returns dict (i, j) -> dim H_i(first p forms; R/I)_j.
    """
    profiles = []
    bound = coeff_bound
    for escalation in range(5):
        profiles = []
        for tag in ("a", "b"):
            seq = GenericSequence.draw(
                ideal.ring, f"{seed}:{escalation}:{tag}", bound
            )
            ws = HomologyWorkspace(ideal, seq)
            profiles.append(_profile_slice(ws, p, degree_bound, i_max, seed))
        if profiles[0] == profiles[1]:
            return profiles[0]
        bound *= 2
    raise GenericityError("genericity not reached for homology profile")


def _default_windows(ideal, degree_bound, i_max, seed):
    ring = ideal.ring
    if ring.is_exterior:
        return (ring.n if degree_bound is None else degree_bound,
                ring.n + 2 if i_max is None else i_max)
    if degree_bound is None:
        J, _ = gin(ideal, seed=seed)
        degree_bound = J.max_gen_degree() + 2
    return degree_bound, ring.n if i_max is None else i_max


def _profile_slice(ws, p, degree_bound, i_max, seed):
    kmax, imax = _default_windows(ws.ideal, degree_bound, i_max, seed)
    out = {}
    top = imax if ws.ring.is_exterior else min(p, imax)
    for i in range(0, top + 1):
        for k in range(0, kmax + 1):
            val = ws.h(p, i, i + k)
            if val:
                out[(i, i + k)] = val
    return out


def partial_delta(ideal, p, seed=0, degree_bound=None, i_max=None, coeff_bound=1000):
    """Slice of the delta profile at p, two-seed certified: (i, k) -> delta."""
    bound = coeff_bound
    for escalation in range(5):
        slices = []
        for tag in ("a", "b"):
            seq = GenericSequence.draw(
                ideal.ring, f"{seed}:{escalation}:{tag}", bound
            )
            ws = HomologyWorkspace(ideal, seq)
            slices.append(_delta_slice(ws, p, degree_bound, i_max, seed))
        if slices[0] == slices[1]:
            return slices[0]
        bound *= 2
    raise GenericityError("genericity not reached for delta profile")


def _delta_slice(ws, p, degree_bound, i_max, seed):
    kmax, imax = _default_windows(ws.ideal, degree_bound, i_max, seed)
    out = {}
    top = imax if ws.ring.is_exterior else min(p, imax)
    for i in range(1, top + 1):
        for k in range(0, i + kmax + 2):
            val = ws.delta(p, i, k)
            if val:
                out[(i, k)] = val
    return out


# ---------------------------------------------------------------------------
# executable verification of the structural formulas


@dataclass
class FormulaReport:
    ring: object
    window: dict
    cells_checked: int = 0
    recurrences_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def describe(self):
        head = (
            f"homology formula over {self.ring.kind} (n={self.ring.n}): "
            f"{self.cells_checked} cells, {self.recurrences_checked} recurrence"
            f" instances, {len(self.failures)} failures"
        )
        return "\n".join([head] + [str(f) for f in self.failures])


def verify_homology_formula(ideal, seed=0, degree_bound=None, i_max=None):
    """Check the alpha/delta expression for h_{i,i+k}(p) on every cell.

    Also checks the first/higher homology recurrences the formula is
    derived from; any inequality is recorded as a failure (it falsifies
    the implementation, not the statement).
    """
    ring = ideal.ring
    kmax, imax = _default_windows(ideal, degree_bound, i_max, seed)
    seq = GenericSequence.draw(ring, f"formula:{seed}", 1000)
    ws = HomologyWorkspace(ideal, seq)
    alpha = _alpha_for_sequence(ideal, seq, kmax + 2)

    def a(p, k):
        return alpha.get((p, k), 0)

    n = ring.n
    report = FormulaReport(ring, {"k_max": kmax, "i_max": imax, "n": n})

    if ring.is_exterior:
        for p in range(1, n + 1):
            for i in range(1, imax + 1):
                for k in range(0, kmax + 1):
                    lhs = ws.h(p, i, i + k)
                    rhs = sum(
                        binom(p - j + i - 1, i - 1) * a(j, k)
                        for j in range(1, p + 1)
                    )
                    rhs -= sum(
                        binom(p - 1 - j + i - s, i - s)
                        * (ws.delta(j, s, s + k) + ws.delta(j, s - 1, s + k))
                        for s in range(1, i + 1)
                        for j in range(1, p)
                    )
                    report.cells_checked += 1
                    if lhs != rhs:
                        report.failures.append(
                            ("formula", p, i, k, lhs, rhs)
                        )
        # degreewise recurrences of the long exact sequence
        for p in range(1, n):
            for k in range(0, kmax + 2):
                lhs = ws.h(p + 1, 1, k)
                rhs = ws.h(p, 1, k) + a(p + 1, k - 1) - ws.delta(p, 1, k)
                report.recurrences_checked += 1
                if lhs != rhs:
                    report.failures.append(("first", p + 1, k, lhs, rhs))
            for i in range(2, imax + 1):
                for k in range(0, kmax + 1):
                    lhs = ws.h(p + 1, i, i + k)
                    rhs = (
                        ws.h(p, i, i + k)
                        + ws.h(p + 1, i - 1, i + k - 1)
                        - ws.delta(p, i, i + k)
                        - ws.delta(p, i - 1, i + k)
                    )
                    report.recurrences_checked += 1
                    if lhs != rhs:
                        report.failures.append(("second", p + 1, i, k, lhs, rhs))
        return report

    for p in range(1, n + 1):
        for i in range(1, p + 1):
            for k in range(0, kmax + 1):
                lhs = ws.h(p, i, i + k)
                rhs = sum(
                    binom(p - j, i - 1) * a(j, k)
                    for j in range(1, p - i + 2)
                )
                rhs -= sum(
                    binom(p - b - 1, i - aa) * ws.delta(b, aa, aa + k)
                    + binom(p - b - 1, i - aa - 1) * ws.delta(b, aa, aa + k + 1)
                    for (aa, b) in annihilator_index_set(i, p)
                )
                report.cells_checked += 1
                if lhs != rhs:
                    report.failures.append(("formula", p, i, k, lhs, rhs))
    for p in range(2, n + 1):
        for k in range(0, kmax + 2):
            lhs = ws.h(p, 1, k)
            rhs = ws.h(p - 1, 1, k) + a(p, k - 1) - ws.delta(p - 1, 1, k)
            report.recurrences_checked += 1
            if lhs != rhs:
                report.failures.append(("first", p, k, lhs, rhs))
        for i in range(2, p + 1):
            for k in range(0, kmax + 1):
                lhs = ws.h(p, i, i + k)
                rhs = (
                    ws.h(p - 1, i, i + k)
                    + ws.h(p - 1, i - 1, i - 1 + k)
                    - ws.delta(p - 1, i, i + k)
                    - ws.delta(p - 1, i - 1, i + k)
                )
                report.recurrences_checked += 1
                if lhs != rhs:
                    report.failures.append(("second", p, i, k, lhs, rhs))
    return report


# ---------------------------------------------------------------------------
# the upper bound for graded Betti numbers


@dataclass
class UpperBoundReport:
    ring: object
    window: dict
    cells_checked: int = 0
    failures: list = field(default_factory=list)
    attained_everywhere: bool = False

    @property
    def ok(self):
        return not self.failures


def upper_bound_check(ideal, seed=0, i_max=None):
    """beta_{i,i+k}(R/I) <= sum_j C(...) alpha_{j,k}, with equality for gin.

    Checks the binomial upper bound cellwise, that the bound value equals
    beta_{i,i+k}(R/gin I) exactly, and (polynomial ring) that the first
    Betti numbers at the initial degree agree with sum_j alpha_{j,d0-1}.
    """
    from .betti import QUOTIENT, cartan_betti, koszul_betti

    ring = ideal.ring
    n = ring.n
    J, _ = gin(ideal, seed=seed)
    alpha = generic_annihilators_direct(ideal, seed=seed)

    if ring.is_exterior:
        imax = n + 2 if i_max is None else i_max
        bI = cartan_betti(ideal, QUOTIENT, i_max=imax, seed=seed)
        bG = cartan_betti(J.to_ideal(), QUOTIENT, i_max=imax, seed=seed)
        kmax = n
    else:
        r = J.max_gen_degree()
        imax = n
        bI = koszul_betti(ideal, QUOTIENT, reg_bound=r, seed=seed)
        bG = koszul_betti(J.to_ideal(), QUOTIENT, reg_bound=r, seed=seed)
        kmax = max(r - 1, 0)

    report = UpperBoundReport(ring, {"i_max": imax, "k_max": kmax})
    attained = True
    for i in range(1, imax + 1):
        for k in range(0, kmax + 1):
            if ring.is_exterior:
                bound = sum(
                    binom(n - j + i - 1, i - 1) * alpha.get(j, k)
                    for j in range(1, n + 1)
                )
            else:
                bound = sum(
                    binom(n - j, i - 1) * alpha.get(j, k)
                    for j in range(1, n - i + 2)
                )
            left = bI.get(i, i + k)
            right = bG.get(i, i + k)
            report.cells_checked += 1
            if left > bound:
                report.failures.append(("bound", i, k, left, bound))
            if bound != right:
                report.failures.append(("gin-equality", i, k, bound, right))
            if left != bound:
                attained = False
    if not ring.is_exterior and not ideal.is_zero():
        d0 = min((j for (i, j) in bI.entries if i == 1), default=None)
        if d0 is not None:
            total = sum(alpha.get(j, d0 - 1) for j in range(1, n + 1))
            if bI.get(1, d0) != total or bG.get(1, d0) != total:
                report.failures.append(
                    ("initial-degree", d0, bI.get(1, d0), total)
                )
    report.attained_everywhere = attained
    return report
