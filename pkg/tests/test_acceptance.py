"""Acceptance suite: the exit criteria, one test per criterion.

Every criterion prints one [PASS]/[FAIL] line with its runtime (run
pytest with -s to see them), and asserts both the exact values and the
stated time budget.
"""

import subprocess
import sys
import time

import pytest

from ginlab.annihilators import verify_homology_formula
from ginlab.corpus import CorpusSpec, generate
from ginlab.groebner import gin
from ginlab.oracles import alpha_oracle, betti_oracle_exterior, betti_oracle_triple
from ginlab.parsing import parse_ideal
from ginlab.rigidity import (
    RigidityContext,
    battery,
    lemma_can_check,
    rigidity_poly,
)
from ginlab.rings import render_monomial

from conftest import CANCEL_4, STAIRCASE_3, STAIRCASE_GIN, STRAND_4


def _report(name, t0, limit):
    elapsed = time.time() - t0
    status = "PASS" if elapsed < limit else "FAIL"
    print(f"[{status}] {name}: {elapsed:.1f}s (limit {limit:.0f}s)")
    assert elapsed < limit, f"{name} exceeded its {limit}s budget"


# the acceptance corpus: 100 ideals, n <= 4, degrees <= 5, both ring
# kinds, mixed monomial/binomial/dense generators
CORPUS_SPECS = (
    CorpusSpec(kind="poly", n=2, count=10, seed=101, max_degree=5),
    CorpusSpec(kind="poly", n=3, count=26, seed=102, max_degree=5),
    CorpusSpec(kind="poly", n=4, count=28, seed=103, max_degree=5),
    CorpusSpec(kind="ext", n=3, count=16, seed=104, max_degree=5),
    CorpusSpec(kind="ext", n=4, count=20, seed=105, max_degree=5),
)


@pytest.fixture(scope="module")
def corpus():
    ideals = []
    for spec in CORPUS_SPECS:
        ideals += generate(spec)
    assert len(ideals) == 100
    return ideals


def test_criterion_1_staircase_gin():
    """Reproduce the 7 generic initial generators of the staircase ideal."""
    t0 = time.time()
    I = parse_ideal(STAIRCASE_3)
    J, cert = gin(I, seed=0)
    gens = [render_monomial(I.ring, m) for m in J.gens]
    assert gens == STAIRCASE_GIN
    assert cert.strongly_stable
    _report("criterion 1 (gin of the 3-variable staircase)", t0, 10)


def test_criterion_2_cancellation_example():
    """Both Betti tables and the two cancellation numbers, cell for cell."""
    t0 = time.time()
    I = parse_ideal(CANCEL_4)
    ctx = RigidityContext(I, seed=0)
    assert ctx.table_ideal_conv.entries == {
        (0, 3): 6,
        (1, 4): 6,
        (1, 5): 1,
        (2, 5): 1,
        (2, 6): 1,
    }
    assert ctx.gin_table_ideal_conv.entries == {
        (0, 3): 6,
        (0, 4): 1,
        (1, 4): 7,
        (1, 5): 2,
        (2, 5): 2,
        (2, 6): 1,
    }
    assert ctx.cancellation.entries == {(1, 4): 1, (2, 5): 1}
    _report("criterion 2 (4-variable cancellation example)", t0, 30)


def test_criterion_3_strand_example():
    """First-strand gap with rigid higher strands in four variables."""
    t0 = time.time()
    I = parse_ideal(STRAND_4)
    ctx = RigidityContext(I, seed=0)
    bI, bG = ctx.table, ctx.gin_table
    assert bI.get(2, 6) == bG.get(2, 6) == 2
    assert bI.get(3, 7) == bG.get(3, 7) == 1
    assert bI.get(1, 5) == 0 and bG.get(1, 5) == 1
    r = rigidity_poly(ctx, 2, 4)
    assert r.holds and not r.vacuous
    _report("criterion 3 (first-strand counterexample ideal)", t0, 60)


def test_criterion_4_oracle_equivalences(corpus):
    """Three-way and two-way oracle agreement over the 100-ideal corpus."""
    t0 = time.time()
    failures = []
    for ideal in corpus:
        J, _ = gin(ideal, seed=0)
        if ideal.ring.is_exterior:
            res = betti_oracle_exterior(J, i_max=ideal.ring.n + 3, seed=0)
            if not res.ok:
                failures.append(("cartan/ahh", ideal, res.detail))
        elif not ideal.is_zero():
            res = betti_oracle_triple(J, seed=0)
            if not res.ok:
                failures.append(("three-way", ideal, res.detail))
        res = alpha_oracle(ideal, seed=0, gin_result=J)
        if not res.ok:
            failures.append(("alpha", ideal, res.detail))
    assert not failures, failures[:3]
    _report("criterion 4 (oracle equivalences on 100 ideals)", t0, 600)


def test_criterion_5_theorem_battery(corpus):
    """Every rigidity statement holds on every corpus ideal."""
    t0 = time.time()
    violations = []
    for ideal in corpus:
        for r in battery(ideal, seed=0):
            if not r.holds:
                violations.append((ideal, r.statement, r.params, r.witness))
    assert not violations, violations[:3]
    _report("criterion 5 (statement battery on 100 ideals)", t0, 600)


def test_criterion_6_structural_formulas():
    """Homology formula cells, its recurrences, and the cancellation
    delta expression."""
    t0 = time.time()
    rep = verify_homology_formula(parse_ideal(STAIRCASE_3), seed=0)
    assert rep.ok and rep.cells_checked >= 50 and rep.recurrences_checked >= 40

    ext_specs = (
        CorpusSpec(kind="ext", n=3, count=10, seed=601, max_degree=3),
        CorpusSpec(kind="ext", n=4, count=10, seed=602, max_degree=4),
    )
    checked = 0
    for spec in ext_specs:
        for ideal in generate(spec):
            r = verify_homology_formula(ideal, seed=0)
            assert r.ok, (ideal, r.failures[:3])
            checked += 1
    assert checked == 20

    for text in (STAIRCASE_3, CANCEL_4):
        assert lemma_can_check(RigidityContext(parse_ideal(text), seed=0)).holds
    _report("criterion 6 (structural formula verification)", t0, 600)


def test_criterion_7_determinism(tmp_path):
    """Identical seeds and flags give byte-identical command output."""
    t0 = time.time()
    path = tmp_path / "ideal.txt"
    path.write_text(STAIRCASE_3)
    commands = (
        ["gin", str(path), "--seed", "3", "--json"],
        ["betti", str(path), "--seed", "3", "--json"],
        ["alpha", str(path), "--seed", "3", "--json"],
        ["check", str(path), "--statement", "dlinear", "--seed", "3", "--json"],
        ["corpus", "--kind", "poly", "--n", "3", "--count", "4", "--seed", "3"],
    )
    for argv in commands:
        cmd = [sys.executable, "-m", "ginlab.cli"] + argv
        a = subprocess.run(cmd, capture_output=True)
        b = subprocess.run(cmd, capture_output=True)
        assert a.returncode == 0, a.stderr
        assert a.stdout == b.stdout and a.returncode == b.returncode
    _report("criterion 7 (byte-identical reruns)", t0, 120)
