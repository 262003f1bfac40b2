"""Sparse exact linear algebra over QQ.

Vectors are dicts column -> nonzero coefficient (int or Fraction).  Columns
are plain ints; callers index them so that column 0 is the most significant
(for monomial matrices: the largest monomial in the term order), which makes
echelon pivots coincide with leading monomials.

Two engines: Rref keeps a fully reduced basis (deterministic pivots,
rational tails) and is used wherever actual coordinates matter; IntRank
does fraction-free elimination on integer rows and is used for the many
rank-only queries in homology computations.
"""

import heapq
from fractions import Fraction
from math import gcd


class Rref:
    """Incremental reduced row echelon basis.

    Columns >= pivot_limit never become pivots; they ride along as
    augmentation (used for kernel computations).
    """

    def __init__(self, pivot_limit=None):
        self.pivot_limit = pivot_limit
        self.pivots = {}  # col -> index into rows
        self.rows = []  # each dict col -> coeff, leading coeff 1

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, row):
        """Fully reduce a vector against the current basis."""
        out = {c: v for c, v in row.items() if v}
        heap = list(out)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            v = out.get(c)
            if not v:
                continue
            r = self.pivots.get(c)
            if r is None:
                continue
            for cc, pv in self.rows[r].items():
                s = out.get(cc, 0) - v * pv
                if s:
                    if cc not in out and cc != c:
                        heapq.heappush(heap, cc)
                    out[cc] = s
                else:
                    out.pop(cc, None)
        return out

    def _lead(self, row):
        cands = [
            c
            for c in row
            if self.pivot_limit is None or c < self.pivot_limit
        ]
        return min(cands) if cands else None

    def add(self, row):
        """Insert a vector; returns the new pivot column or None.

        Returns None both for rows already in the span and for rows whose
        reducible part vanished (the residual is available via reduce).
        """
        res = self.reduce(row)
        lead = self._lead(res)
        if lead is None:
            return None
        inv = Fraction(1, 1) / res[lead]
        new = {c: v * inv for c, v in res.items()}
        new[lead] = 1
        idx = len(self.rows)
        # keep the basis fully reduced
        for r in self.rows:
            v = r.get(lead)
            if v:
                for cc, nv in new.items():
                    s = r.get(cc, 0) - v * nv
                    if s:
                        r[cc] = s
                    else:
                        r.pop(cc, None)
        self.rows.append(new)
        self.pivots[lead] = idx
        return lead

    def contains(self, row):
        res = self.reduce(row)
        return self._lead(res) is None


def scale_to_int(row):
    """Clear denominators and strip content; returns dict col -> int."""
    if not row:
        return {}
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            d = v.denominator
            den = den * d // gcd(den, d)
    out = {}
    g = 0
    for c, v in row.items():
        iv = int(v * den)
        if iv:
            out[c] = iv
            g = gcd(g, iv)
    if g > 1:
        for c in out:
            out[c] //= g
    return out


class IntRank:
    """Fraction-free Gaussian elimination for rank-only queries."""

    def __init__(self):
        self.pivots = {}  # col -> row dict with that leading col

    @property
    def rank(self):
        return len(self.pivots)

    def add(self, row):
        """Insert a vector (int or Fraction coeffs); True if rank grew."""
        out = scale_to_int(row)
        while out:
            lead = min(out)
            prow = self.pivots.get(lead)
            if prow is None:
                self.pivots[lead] = out
                return True
            p, v = prow[lead], out[lead]
            g = gcd(p, v)
            pf, vf = p // g, v // g
            nxt = {}
            for c in out.keys() | prow.keys():
                s = pf * out.get(c, 0) - vf * prow.get(c, 0)
                if s:
                    nxt[c] = s
            out = nxt
            if out and max(abs(x) for x in out.values()).bit_length() > 256:
                g2 = 0
                for x in out.values():
                    g2 = gcd(g2, x)
                if g2 > 1:
                    for c in out:
                        out[c] //= g2
        return False


def rank_of(vectors):
    """Exact rank of the span of the given vectors."""
    eng = IntRank()
    for v in vectors:
        eng.add(v)
    return eng.rank


def left_kernel(vectors, ncols):
    """Spanning set of {x : sum_i x_i * vectors[i] = 0} over QQ.

    Returned combos are integer dicts over row indices, scaled by nonzero
    rationals (only their span matters to callers).  ncols bounds the
    column indices used by the vectors; fraction-free throughout.
    """
    pivots = {}  # main col -> integer row over main and augmented cols
    kernel = []
    for i, v in enumerate(vectors):
        den = 1
        for x in v.values():
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        row = {c: int(x * den) for c, x in v.items() if x}
        row[ncols + i] = den
        while True:
            main = [c for c in row if c < ncols]
            if not main:
                kernel.append({c - ncols: x for c, x in row.items()})
                break
            lead = min(main)
            prow = pivots.get(lead)
            if prow is None:
                g = 0
                for x in row.values():
                    g = gcd(g, x)
                if g > 1:
                    row = {c: x // g for c, x in row.items()}
                pivots[lead] = row
                break
            p, w = prow[lead], row[lead]
            g = gcd(p, w)
            pf, wf = p // g, w // g
            nxt = {}
            for c in row.keys() | prow.keys():
                s = pf * row.get(c, 0) - wf * prow.get(c, 0)
                if s:
                    nxt[c] = s
            row = nxt
            if row and max(abs(x) for x in row.values()).bit_length() > 256:
                g2 = 0
                for x in row.values():
                    g2 = gcd(g2, x)
                if g2 > 1:
                    row = {c: x // g2 for c, x in row.items()}
    return kernel
