"""Executable verdicts for the Betti-rigidity statements.

Every check compares exact tables: the graded Betti tables of R/I and
R/gin(I), the annihilator numbers, the cancellation numbers.  Statement
windows are finite and recorded in the reports: polynomial tables carry
self-certified strand bounds, exterior checks run to a chosen homological
bound.  A violated verdict means the implementation is falsified (these
are theorems), and carries a reproducible witness.
"""

from dataclasses import dataclass, field

from .annihilators import (
    GenericSequence,
    HomologyWorkspace,
    annihilator_index_set,
    annihilators_from_gin,
    generic_annihilators_direct,
)
from .betti import (
    IDEAL,
    QUOTIENT,
    binom,
    cartan_betti,
    has_linear_resolution,
    koszul_betti,
)
from .groebner import gin
from .ideals import (
    Ideal,
    is_strongly_stable,
    lex_segment_ideal,
    m_leq,
)
from .rings import LEX


class TheoremViolationError(Exception):
    """A proved statement failed on computed tables: implementation falsified."""


@dataclass
class RigidityReport:
    statement: str
    params: dict
    verdict: str  # "holds" or "violated"
    vacuous: bool = False
    hypothesis: dict = field(default_factory=dict)
    conclusion: dict = field(default_factory=dict)
    witness: dict = None
    window: dict = field(default_factory=dict)
    details: str = ""

    @property
    def holds(self):
        return self.verdict == "holds"

    def to_json(self):
        return {
            "statement": self.statement,
            "params": self.params,
            "verdict": self.verdict,
            "vacuous": self.vacuous,
            "hypothesis": _jsonable(self.hypothesis),
            "conclusion": _jsonable(self.conclusion),
            "witness": _jsonable(self.witness),
            "window": _jsonable(self.window),
            "details": self.details,
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


@dataclass
class CancellationTable:
    """The unique nonnegative c with beta(gin) = beta + c_i + c_{i+1} columnwise.

    Ideal-convention indexing; c_{0,j} = 0 and entries vanish for i >= n.
    """

    ring: object
    entries: dict

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def is_zero(self):
        return not self.entries

    def render(self):
        if not self.entries:
            return "(no cancellations)"
        return "\n".join(
            f"c[{i},{j}] = {v}" for (i, j), v in sorted(self.entries.items())
        )

    def to_json(self):
        return {
            "ring": {"kind": self.ring.kind, "n": self.ring.n},
            "convention": "ideal",
            "entries": [
                {"i": i, "j": j, "c": v}
                for (i, j), v in sorted(self.entries.items())
            ],
        }


class RigidityContext:
    """Caches the tables a battery of statement checks keeps reusing."""

    def __init__(self, ideal, seed=0, i_max=None):
        self.ideal = ideal
        self.ring = ideal.ring
        self.seed = seed
        self.i_max = i_max if i_max is not None else (
            ideal.ring.n + 3 if ideal.ring.is_exterior else ideal.ring.n
        )
        self._cache = {}

    def _get(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    @property
    def gin_ideal(self):
        return self._get("gin", lambda: gin(self.ideal, seed=self.seed))[0]

    @property
    def gin_certificate(self):
        return self._get("gin", lambda: gin(self.ideal, seed=self.seed))[1]

    @property
    def reg_bound(self):
        return self.gin_ideal.max_gen_degree()

    @property
    def strand_max(self):
        """Largest strand the tables can support (sweeps go one past it)."""
        if self.ring.is_exterior:
            return self.ring.n
        return max(self.reg_bound, 1)

    def _table(self, ideal_obj, reg_bound):
        if self.ring.is_exterior:
            return cartan_betti(
                ideal_obj, QUOTIENT, i_max=self.i_max, seed=self.seed
            )
        return koszul_betti(
            ideal_obj, QUOTIENT, reg_bound=reg_bound, seed=self.seed
        )

    @property
    def table(self):
        return self._get(
            "table", lambda: self._table(self.ideal, self.reg_bound)
        )

    @property
    def gin_table(self):
        return self._get(
            "gin_table",
            lambda: self._table(self.gin_ideal.to_ideal(), self.reg_bound),
        )

    @property
    def table_ideal_conv(self):
        return self._get("table_i", lambda: self.table.as_convention(IDEAL))

    @property
    def gin_table_ideal_conv(self):
        return self._get(
            "gin_table_i", lambda: self.gin_table.as_convention(IDEAL)
        )

    @property
    def scan_cut(self):
        """Degree through which transfer-target ideals need generators.

        Strand comparisons reach k = strand_max + 1 and the closed-form
        tables read generators of degree k + 1.
        """
        return self.strand_max + 2

    @property
    def lex(self):
        """Lex(I), possibly truncated past every comparison window."""
        return self._get(
            "lex", lambda: lex_segment_ideal(self.ideal, self.scan_cut)[0]
        )

    @property
    def gin_lex(self):
        return self._get(
            "gin_lex",
            lambda: gin(
                self.ideal,
                order=LEX,
                seed=self.seed,
                max_scan_degree=self.scan_cut,
            )[0],
        )

    def stable_table(self, J):
        """Quotient-convention table of a strongly stable monomial ideal.

        Uses the Eliahou-Kervaire (resp. Aramova-Herzog-Hibi) closed form;
        both are cross-validated against the homological route by the
        oracle suite.
        """
        from .betti import ahh_betti, ek_betti

        key = ("stable_table", J.gens)
        if self.ring.is_exterior:
            return self._get(key, lambda: ahh_betti(J, i_max=self.i_max))
        return self._get(key, lambda: ek_betti(J, QUOTIENT))

    def component_gin(self, k):
        """gin(I_<k>) through the truncation identity.

        With I' the subideal generated by the generators of degree <= k,
        the graded pieces of I_<k> and I' agree in every degree >= k, so
        gin(I_<k>) is generated by the degree-k monomials of gin(I')
        together with its generators of higher degree.
        """
        from .ideals import MonomialIdeal, minimal_generators
        from .rings import monomial_degree

        gens = [g for g in self.ideal.generators if g.degree() <= k]
        if not gens:
            return MonomialIdeal(self.ring, [])
        cut = max(g.degree() for g in gens)
        if cut == self.ideal.max_degree():
            J = self.gin_ideal
        else:
            J = self._get(
                ("subgin", cut),
                lambda: gin(Ideal(self.ring, gens), seed=self.seed)[0],
            )
        monos = list(J.monomials(k)) + [
            m for m in J.gens if monomial_degree(self.ring, m) > k
        ]
        return minimal_generators(self.ring, monos)

    def _component_span(self, k):
        """I_<k> presented by the sparse spanning set of I_k."""
        gens = []
        for g in self.ideal.generators:
            e = g.degree()
            if e > k:
                continue
            for m in self.ring.monomials(k - e):
                h = g.term_mul(m)
                if not h.is_zero():
                    gens.append(h)
        gens = list(dict.fromkeys(gens))
        return Ideal(self.ring, gens)

    def component_linear(self, k):
        key = ("complin", k)
        if key not in self._cache:
            comp = self._component_span(k)
            reg_bound = None
            if not self.ring.is_exterior and not comp.is_zero():
                reg_bound = self.component_gin(k).max_gen_degree()
            self._cache[key] = has_linear_resolution(
                comp, seed=self.seed, i_max=self.i_max, reg_bound=reg_bound
            )
        return self._cache[key]

    @property
    def cancellation(self):
        return self._get("cancel", lambda: cancellation_numbers(self))

    @property
    def alpha_direct(self):
        return self._get(
            "alpha_d",
            lambda: generic_annihilators_direct(self.ideal, seed=self.seed),
        )

    @property
    def alpha_from_gin(self):
        return self._get(
            "alpha_g",
            lambda: annihilators_from_gin(
                self.ideal, seed=self.seed, gin_result=self.gin_ideal
            ),
        )


def _ctx(ideal_or_ctx, seed=0, i_max=None):
    if isinstance(ideal_or_ctx, RigidityContext):
        return ideal_or_ctx
    return RigidityContext(ideal_or_ctx, seed=seed, i_max=i_max)


def _imax_window(ctx):
    return ctx.i_max if ctx.ring.is_exterior else ctx.ring.n


# ---------------------------------------------------------------------------
# individual statements


def dominance_check(ideal_or_ctx, seed=0):
    """beta_{ij}(R/I) <= beta_{ij}(R/gin I) entrywise; gate for everything else."""
    ctx = _ctx(ideal_or_ctx, seed)
    bI, bG = ctx.table, ctx.gin_table
    for (i, j), v in bI.entries.items():
        if v > bG.get(i, j):
            return RigidityReport(
                "dominance",
                {},
                "violated",
                witness={"cell": (i, j), "left": v, "right": bG.get(i, j)},
            )
    return RigidityReport("dominance", {}, "holds")


def rigidity_poly(ideal_or_ctx, i, k, seed=0):
    """Strand-k equality of beta(S/I) and beta(S/gin I) at i > 1 persists upward."""
    if i <= 1:
        raise ValueError("the statement requires i > 1")
    ctx = _ctx(ideal_or_ctx, seed)
    if ctx.ring.is_exterior:
        raise ValueError("polynomial-ring statement")
    bI, bG = ctx.table, ctx.gin_table
    hyp = bI.get(i, i + k) == bG.get(i, i + k)
    report = RigidityReport(
        "rigidity-poly",
        {"i": i, "k": k},
        "holds",
        hypothesis={"cell": (i, i + k), "equal": hyp},
        window={"q_max": ctx.ring.n},
    )
    if not hyp:
        report.vacuous = True
        return report
    for q in range(i, ctx.ring.n + 1):
        if bI.get(q, q + k) != bG.get(q, q + k):
            report.verdict = "violated"
            report.witness = {
                "cell": (q, q + k),
                "left": bI.get(q, q + k),
                "right": bG.get(q, q + k),
            }
            return report
    report.conclusion = {"equal_for_q_geq": i}
    return report


def rigidity_ext(ideal_or_ctx, i, k, seed=0, i_max=None):
    """Over E the strand-k equality at some i > 1 forces it at every q >= 1."""
    if i <= 1:
        raise ValueError("the statement requires i > 1")
    ctx = _ctx(ideal_or_ctx, seed, i_max)
    if not ctx.ring.is_exterior:
        raise ValueError("exterior statement")
    bI, bG = ctx.table, ctx.gin_table
    hyp = bI.get(i, i + k) == bG.get(i, i + k)
    report = RigidityReport(
        "rigidity-ext",
        {"i": i, "k": k},
        "holds",
        hypothesis={"cell": (i, i + k), "equal": hyp},
        window={"q_max": ctx.i_max},
    )
    if not hyp:
        report.vacuous = True
        return report
    for q in range(1, ctx.i_max + 1):
        if bI.get(q, q + k) != bG.get(q, q + k):
            report.verdict = "violated"
            report.witness = {
                "cell": (q, q + k),
                "left": bI.get(q, q + k),
                "right": bG.get(q, q + k),
            }
            return report
    report.conclusion = {"equal_for_all_q": True}
    return report


def first_strand_criterion(ideal_or_ctx, k, seed=0, i_max=None):
    """Full strand-k equality iff the two first Betti numbers at k+1, k+2 agree."""
    ctx = _ctx(ideal_or_ctx, seed, i_max)
    bI, bG = ctx.table, ctx.gin_table
    imax = _imax_window(ctx)
    strand = all(
        bI.get(i, i + k) == bG.get(i, i + k) for i in range(1, imax + 1)
    )
    first = bI.get(1, k + 1) == bG.get(1, k + 1) and bI.get(1, k + 2) == bG.get(
        1, k + 2
    )
    verdict = "holds" if strand == first else "violated"
    return RigidityReport(
        "first-strand",
        {"k": k},
        verdict,
        hypothesis={"strand_equal": strand},
        conclusion={"first_betti_equal": first},
        witness=None
        if verdict == "holds"
        else {"strand_equal": strand, "first_betti_equal": first},
        window={"i_max": imax},
    )


def linear_component_criterion(ideal_or_ctx, k, seed=0, i_max=None):
    """I_<k> has a linear resolution iff I and gin(I) have equally many
    minimal generators of degree k+1; cross-checked against the honest
    linear-resolution predicate on the component ideal."""
    ctx = _ctx(ideal_or_ctx, seed, i_max)
    bI, bG = ctx.table, ctx.gin_table
    primary = bI.get(1, k + 1) == bG.get(1, k + 1)
    independent = ctx.component_linear(k)
    verdict = "holds" if primary == independent else "violated"
    return RigidityReport(
        "linear-component",
        {"k": k},
        verdict,
        hypothesis={"first_betti_equal": primary},
        conclusion={"component_linear": independent},
        witness=None
        if verdict == "holds"
        else {"first_betti_equal": primary, "component_linear": independent},
    )


def dlinear_equivalence(ideal_or_ctx, k, seed=0, i_max=None):
    """Three-way equivalence: strand-k equality for all i >= 1, linearity of
    I_<k> and I_<k+1>, and the two first-Betti equalities."""
    ctx = _ctx(ideal_or_ctx, seed, i_max)
    bI, bG = ctx.table, ctx.gin_table
    imax = _imax_window(ctx)
    strand = all(
        bI.get(i, i + k) == bG.get(i, i + k) for i in range(1, imax + 1)
    )
    linear = ctx.component_linear(k) and ctx.component_linear(k + 1)
    first = bI.get(1, k + 1) == bG.get(1, k + 1) and bI.get(1, k + 2) == bG.get(
        1, k + 2
    )
    agree = strand == linear == first
    return RigidityReport(
        "dlinear",
        {"k": k},
        "holds" if agree else "violated",
        hypothesis={"strand_equal": strand},
        conclusion={"components_linear": linear, "first_betti_equal": first},
        witness=None
        if agree
        else {"strand": strand, "linear": linear, "first": first},
        window={"i_max": imax},
    )


def cancellation_numbers(ideal_or_ctx, seed=0):
    """Solve the columnwise recursion for the cancellation numbers.

    Validates nonnegativity and that nothing survives past i = n - 1;
    both failures are uniqueness violations and raise.
    """
    ctx = _ctx(ideal_or_ctx, seed)
    if ctx.ring.is_exterior:
        raise ValueError("cancellation numbers live over the polynomial ring")
    bI = ctx.table_ideal_conv
    bG = ctx.gin_table_ideal_conv
    n = ctx.ring.n
    columns = {j for (_, j) in bI.entries} | {j for (_, j) in bG.entries}
    entries = {}
    for j in sorted(columns):
        prev = 0  # c_{0,j} = 0
        for i in range(0, n + 2):
            c_next = bG.get(i, j) - bI.get(i, j) - prev
            if c_next < 0:
                raise TheoremViolationError(
                    f"negative cancellation number c[{i + 1},{j}] = {c_next}"
                )
            if c_next and i + 1 >= n:
                raise TheoremViolationError(
                    f"cancellation residue c[{i + 1},{j}] = {c_next} past i = n-1"
                )
            if c_next:
                entries[(i + 1, j)] = c_next
            prev = c_next
        if prev:
            raise TheoremViolationError(f"nonzero residue in column {j}")
    return CancellationTable(ctx.ring, entries)


def crigid_check(ideal_or_ctx, i, k, seed=0):
    """c_{i,i+k} = 0 for some i >= 1 forces c_{q,q+k} = 0 for all q >= i."""
    if i < 1:
        raise ValueError("the statement requires i >= 1")
    ctx = _ctx(ideal_or_ctx, seed)
    c = ctx.cancellation
    hyp = c.get(i, i + k) == 0
    report = RigidityReport(
        "crigid",
        {"i": i, "k": k},
        "holds",
        hypothesis={"cell": (i, i + k), "zero": hyp},
        window={"q_max": ctx.ring.n},
    )
    if not hyp:
        report.vacuous = True
        return report
    for q in range(i, ctx.ring.n + 1):
        if c.get(q, q + k) != 0:
            report.verdict = "violated"
            report.witness = {"cell": (q, q + k), "value": c.get(q, q + k)}
            return report
    return report


def clinear_check(ideal_or_ctx, k, seed=0, i_max=None):
    """c_{i,i+k} = 0 for all i >= 1 iff I_<k> has a linear resolution."""
    ctx = _ctx(ideal_or_ctx, seed, i_max)
    c = ctx.cancellation
    all_zero = all(c.get(i, i + k) == 0 for i in range(1, ctx.ring.n + 1))
    linear = ctx.component_linear(k)
    verdict = "holds" if all_zero == linear else "violated"
    return RigidityReport(
        "clinear",
        {"k": k},
        verdict,
        hypothesis={"cancellations_zero": all_zero},
        conclusion={"component_linear": linear},
        witness=None
        if verdict == "holds"
        else {"cancellations_zero": all_zero, "component_linear": linear},
    )


def post_clinear_corollary(ideal_or_ctx, k, q, seed=0, i_max=None):
    """Once I_<k> is linear, strand equalities transfer between the two
    adjacent cells in columns q+k+2 and q+k-1 (ideal convention)."""
    ctx = _ctx(ideal_or_ctx, seed, i_max)
    if not ctx.component_linear(k):
        raise ValueError("requires a component ideal with linear resolution")
    bI = ctx.table_ideal_conv
    bG = ctx.gin_table_ideal_conv

    def eq(i, j):
        return bI.get(i, j) == bG.get(i, j)

    part_i_hyp = eq(q, q + k + 2)
    part_i_ok = (not part_i_hyp) or eq(q + 1, q + k + 2)
    part_ii_hyp = eq(q, q + k - 1)
    part_ii_ok = (not part_ii_hyp) or q == 0 or eq(q - 1, q + k - 1)
    ok = part_i_ok and part_ii_ok
    return RigidityReport(
        "post-clinear",
        {"k": k, "q": q},
        "holds" if ok else "violated",
        vacuous=not (part_i_hyp or part_ii_hyp),
        hypothesis={"up_hyp": part_i_hyp, "down_hyp": part_ii_hyp},
        conclusion={"up_ok": part_i_ok, "down_ok": part_ii_ok},
        witness=None if ok else {"k": k, "q": q},
    )


def _same_hilbert_function(ctx, J, dmax):
    """Dimension agreement with I through dmax (gin(I) carries the HF of I).

    Transfer targets may be truncated past every comparison window, so the
    check is windowed like everything else in the report.
    """
    if ctx.ring.is_exterior:
        dmax = ctx.ring.n
    return all(J.dim(d) == ctx.gin_ideal.dim(d) for d in range(dmax + 1))


def trans_check(ideal_or_ctx, target, i, k, seed=0, i_max=None):
    """Rigidity transfer to Lex(I) or a gin under another order.

    Verifies the hypothesis package (strong stability, equal Hilbert
    function, m_<=q domination by gin(I)) and then the transfer of the
    strand-k equality from homological degree i upward (polynomial ring)
    or to every q >= 1 (exterior algebra).
    """
    if i <= 1:
        raise ValueError("the statement requires i > 1")
    ctx = _ctx(ideal_or_ctx, seed, i_max)
    if target == "lex":
        J = ctx.lex
    elif target == "gin_lex":
        J = ctx.gin_lex
    elif target == "gin_degrevlex":
        J = ctx.gin_ideal
    else:
        raise ValueError(f"unknown transfer target {target!r}")

    dmax = ctx.strand_max + 2
    if ctx.ring.is_exterior:
        dmax = ctx.ring.n
    report = RigidityReport(
        "transfer",
        {"target": target, "i": i, "k": k},
        "holds",
        window={"q_max": _imax_window(ctx), "d_max": dmax},
    )
    if not is_strongly_stable(J):
        report.verdict = "violated"
        report.details = "target ideal is not strongly stable"
        report.witness = {"target": str(J)}
        return report
    if not _same_hilbert_function(ctx, J, dmax):
        report.verdict = "violated"
        report.details = "target ideal has a different Hilbert function"
        report.witness = {"target": str(J)}
        return report
    for q in range(1, ctx.ring.n + 1):
        for d in range(0, dmax + 1):
            if m_leq(J, q, d) > m_leq(ctx.gin_ideal, q, d):
                report.verdict = "violated"
                report.details = "m_<=q domination hypothesis fails"
                report.witness = {"q": q, "d": d}
                return report
    report.hypothesis["domination"] = True

    bI = ctx.table
    bJ = ctx.stable_table(J)
    hyp = bI.get(i, i + k) == bJ.get(i, i + k)
    report.hypothesis["cell_equal"] = hyp
    if not hyp:
        report.vacuous = True
        return report
    qs = (
        range(1, ctx.i_max + 1)
        if ctx.ring.is_exterior
        else range(i, ctx.ring.n + 1)
    )
    for q in qs:
        if bI.get(q, q + k) != bJ.get(q, q + k):
            report.verdict = "violated"
            report.details = "rigidity transfer fails"
            report.witness = {
                "cell": (q, q + k),
                "left": bI.get(q, q + k),
                "right": bJ.get(q, q + k),
            }
            return report
    report.conclusion = {"transfer": True}
    return report


def degree_d_componentwise(ideal_or_ctx, seed=0):
    """Four-way equivalence bounded by the maximal generator degree d:
    componentwise linear; strand equality through d; first-Betti equality
    through d; generator-count equality through d + 1 (ideal convention)."""
    ctx = _ctx(ideal_or_ctx, seed)
    if ctx.ring.is_exterior:
        raise ValueError("polynomial-ring statement")
    bI = ctx.table_ideal_conv
    bG = ctx.gin_table_ideal_conv
    gen_degrees = [j for (i, j) in bI.entries if i == 0]
    if not gen_degrees:
        return RigidityReport(
            "degree-d-componentwise", {}, "holds", vacuous=True
        )
    d = max(gen_degrees)
    n = ctx.ring.n
    cond_full = bI.entries == bG.entries
    cond_strands = all(
        bI.get(i, i + k) == bG.get(i, i + k)
        for i in range(0, n + 1)
        for k in range(0, d + 1)
    )
    cond_first = all(
        bI.get(1, 1 + k) == bG.get(1, 1 + k) for k in range(0, d + 1)
    )
    cond_gens = all(bI.get(0, k) == bG.get(0, k) for k in range(0, d + 2))
    flags = [cond_full, cond_strands, cond_first, cond_gens]
    agree = len(set(flags)) == 1
    return RigidityReport(
        "degree-d-componentwise",
        {"d": d},
        "holds" if agree else "violated",
        hypothesis={"componentwise_linear": cond_full},
        conclusion={
            "strands_through_d": cond_strands,
            "first_betti_through_d": cond_first,
            "generators_through_d1": cond_gens,
        },
        witness=None if agree else {"flags": flags},
    )


def betti_total_ext_check(ideal_or_ctx, i, seed=0, i_max=None):
    """Total Betti number equality at one i iff componentwise linear (over E)."""
    if i < 1:
        raise ValueError("requires i >= 1")
    ctx = _ctx(ideal_or_ctx, seed, i_max)
    if not ctx.ring.is_exterior:
        raise ValueError("exterior statement")
    bI, bG = ctx.table, ctx.gin_table
    eq_total = bI.total(i) == bG.total(i)
    cwl = bI.entries == bG.entries
    verdict = "holds" if eq_total == cwl else "violated"
    return RigidityReport(
        "total-betti-componentwise",
        {"i": i},
        verdict,
        hypothesis={"total_equal": eq_total},
        conclusion={"componentwise_linear": cwl},
        witness=None
        if verdict == "holds"
        else {"total_equal": eq_total, "componentwise_linear": cwl},
        window={"i_max": ctx.i_max},
    )


def lemma_can_check(ideal_or_ctx, seed=0):
    """Cancellation numbers against the Koszul-homology delta expression:
    c_{i,i+k} = sum over (a,b) in A_{i+1,n} of C(n-b-1, i-a) * delta_{a,b,a+k}."""
    ctx = _ctx(ideal_or_ctx, seed)
    if ctx.ring.is_exterior:
        raise ValueError("polynomial-ring statement")
    n = ctx.ring.n
    c = ctx.cancellation
    seq = GenericSequence.draw(ctx.ring, f"can:{ctx.seed}", 1000)
    ws = HomologyWorkspace(ctx.ideal, seq)
    kmax = ctx.reg_bound + 1
    mismatches = []
    for i in range(0, n):
        for k in range(0, kmax + 1):
            rhs = sum(
                binom(n - b - 1, i - a) * ws.delta(b, a, a + k)
                for (a, b) in annihilator_index_set(i + 1, n)
                if binom(n - b - 1, i - a)
            )
            if rhs != c.get(i, i + k):
                mismatches.append(((i, k), c.get(i, i + k), rhs))
    verdict = "holds" if not mismatches else "violated"
    return RigidityReport(
        "cancellation-delta",
        {},
        verdict,
        witness=None if not mismatches else {"mismatches": mismatches[:5]},
        window={"k_max": kmax},
    )


# ---------------------------------------------------------------------------
# the full battery


def battery(ideal_or_ctx, seed=0, i_max=None, include_delta=False):
    """Run every applicable statement over its full finite window."""
    ctx = _ctx(ideal_or_ctx, seed, i_max)
    reports = [dominance_check(ctx)]
    kmax = ctx.strand_max + 1
    imax = _imax_window(ctx)
    n = ctx.ring.n
    if ctx.ring.is_exterior:
        for i in range(2, imax + 1):
            for k in range(0, kmax + 1):
                reports.append(rigidity_ext(ctx, i, k))
        for k in range(0, kmax + 1):
            reports.append(first_strand_criterion(ctx, k))
            reports.append(linear_component_criterion(ctx, k))
            reports.append(dlinear_equivalence(ctx, k))
        for i in range(1, imax + 1):
            reports.append(betti_total_ext_check(ctx, i))
        for target in ("lex", "gin_lex", "gin_degrevlex"):
            for i in range(2, min(imax, n + 1) + 1):
                for k in range(0, kmax + 1):
                    reports.append(trans_check(ctx, target, i, k))
    else:
        for i in range(2, n + 1):
            for k in range(0, kmax + 1):
                reports.append(rigidity_poly(ctx, i, k))
        for k in range(0, kmax + 1):
            reports.append(first_strand_criterion(ctx, k))
            reports.append(linear_component_criterion(ctx, k))
            reports.append(dlinear_equivalence(ctx, k))
        ctx.cancellation  # raises on uniqueness violations
        for i in range(1, n + 1):
            for k in range(0, kmax + 1):
                reports.append(crigid_check(ctx, i, k))
        for k in range(0, kmax + 1):
            reports.append(clinear_check(ctx, k))
            if ctx.component_linear(k):
                for q in range(1, n):
                    reports.append(post_clinear_corollary(ctx, k, q))
        reports.append(degree_d_componentwise(ctx))
        for target in ("lex", "gin_lex", "gin_degrevlex"):
            for i in range(2, n + 1):
                for k in range(0, kmax + 1):
                    reports.append(trans_check(ctx, target, i, k))
        if include_delta:
            reports.append(lemma_can_check(ctx))
    return reports


STATEMENTS = {
    "dominance": (dominance_check, ()),
    "rigidity-poly": (rigidity_poly, ("i", "k")),
    "rigidity-ext": (rigidity_ext, ("i", "k")),
    "first-strand": (first_strand_criterion, ("k",)),
    "linear-component": (linear_component_criterion, ("k",)),
    "dlinear": (dlinear_equivalence, ("k",)),
    "crigid": (crigid_check, ("i", "k")),
    "clinear": (clinear_check, ("k",)),
    "post-clinear": (post_clinear_corollary, ("k", "q")),
    "transfer": (trans_check, ("target", "i", "k")),
    "degree-d-componentwise": (degree_d_componentwise, ()),
    "total-betti-componentwise": (betti_total_ext_check, ("i",)),
    "cancellation-delta": (lemma_can_check, ()),
}
