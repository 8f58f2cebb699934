"""Acceptance suite: one test per criterion, each printing a PASS line on
success together with the row-level comparison outcomes it produced."""

import json
import time
from fractions import Fraction

from homcoh import files, fixtures
from homcoh.algebra import validate
from homcoh.cli import main as cli_main
from homcoh.cohomology import (compute_cohomology, connecting_complex,
                               lie_self_cohomology, self_cohomology)
from homcoh.deformation import check_morphism_deformation
from homcoh.expectations import (compare_connecting_h1, compare_h2_self,
                                 g1_h2_expected)
from homcoh.rep import check_morphism
from homcoh.selftest import run_selftest


def _announce(name, started, budget):
    elapsed = time.monotonic() - started
    assert elapsed < budget, f"{name} exceeded its {budget}s budget"
    print(f"ACCEPTANCE {name}: PASS ({elapsed:.2f}s)")


def test_criterion_1_associative_example():
    started = time.monotonic()
    for a, b in ((1, 2), (1, 1)):
        A = fixtures.assoc3(a, b)
        assert validate(A).is_valid
        summary = self_cohomology(A, [2])
        assert summary.record(2).dim_cohomology == 0
    B = fixtures.assoc2()
    assert validate(B).is_valid
    phi = fixtures.phi_assoc()
    assert check_morphism(phi.source, phi.target, phi.matrix).is_valid
    rec = self_cohomology(B, [2]).record(2)
    assert rec.dim_cocycles == 3
    assert rec.dim_coboundaries == 2
    assert rec.dim_cohomology == 1
    _announce("criterion-1 (associative example)", started, 1.0)


def test_criterion_2_four_dimensional_lie_example():
    started = time.monotonic()
    a = b = c = d = Fraction(1)
    assert c + a * d != 0
    L = fixtures.lie4a(a, b, c, d)
    assert validate(L).is_valid
    assert lie_self_cohomology(L, [2]).record(2).dim_cohomology == 0

    for e, expected in ((1, 7), (-1, 6)):
        G = fixtures.lie4b(2, 1, 1, 1, e)
        assert validate(G).is_valid
        summary = lie_self_cohomology(G, [2])
        comparisons = compare_h2_self(G.name, summary)
        assert comparisons, f"no comparison row for {G.name}"
        for comp in comparisons:
            line = (f"  {comp.status}: {comp.subject} {comp.quantity}: "
                    f"expected {comp.expected}, computed {comp.computed}")
            print(line)
            if comp.status == "FINDING":
                bases = [files.cochain_to_json(z, G.basis_names)
                         for z in summary.record(2).cocycle_basis]
                print("    computed cocycle basis: "
                      + json.dumps(bases, sort_keys=True))
            assert comp.expected == expected
    _announce("criterion-2 (four-dimensional Lie example)", started, 5.0)


def test_criterion_3_one_bracket_family_table():
    started = time.monotonic()
    table = [(0, 1), (1, 2), (1, 1), (1, 0), (-1, 2), (-1, 1), (-1, 0),
             (-1, -1), (2, Fraction(1, 2)), (2, 1), (2, 0), (2, -1), (2, 3)]
    statuses = []
    for p1, p2 in table:
        G = fixtures.g1(p1, p2)
        summary = lie_self_cohomology(G, [2])
        expected, note = g1_h2_expected(p1, p2)
        computed = summary.record(2).dim_cohomology
        status = "PASS" if expected == computed else "FINDING"
        statuses.append(status)
        print(f"  {status}: dim H^2 of {G.name}: expected {expected}, "
              f"computed {computed} ({note})")
    assert all(s in ("PASS", "FINDING") for s in statuses)
    assert "PASS" in statuses  # several rows agree exactly
    # generic row pinned by the published text
    idx = table.index((2, 3))
    assert statuses[idx] == "PASS"
    G23 = fixtures.g1(2, 3)
    assert lie_self_cohomology(G23, [2]).record(2).dim_cohomology == 0

    report = validate(fixtures.g2())
    assert not report.is_valid
    names, defect = report.witness
    assert names == ("f1", "f2", "f3")
    assert defect == (Fraction(1), Fraction(-4), Fraction(-1))
    print("  FINDING: companion algebra fails the twisted Jacobi identity "
          f"at {names} with defect {tuple(str(x) for x in defect)} "
          "(expected finding)")
    _announce("criterion-3 (one-bracket family table)", started, 10.0)


def test_criterion_4_morphism_connecting_cohomology():
    started = time.monotonic()
    for builder, expected in ((fixtures.phi12_2, 2), (fixtures.phi12_1, 6)):
        phi = builder()
        summary = compute_cohomology(connecting_complex(phi), [1])
        rec = summary.record(1)
        comparisons = compare_connecting_h1(phi.source.name, phi.target.name,
                                            rec.dim_cohomology)
        assert comparisons
        for comp in comparisons:
            print(f"  {comp.status}: {comp.subject} {comp.quantity}: "
                  f"expected {comp.expected}, computed {comp.computed}")
            assert comp.expected == expected
            reps = [files.cochain_to_json(r, phi.target.basis_names)
                    for r in rec.representatives]
            print("    representatives: " + json.dumps(reps, sort_keys=True))
        # the run tolerates the invalid companion target (degraded path)
        assert not validate(phi.target).is_valid
    # the first family computes to the published count exactly
    phi2 = fixtures.phi12_2()
    rec = compute_cohomology(connecting_complex(phi2), [1]).record(1)
    assert rec.dim_cohomology == 2
    _announce("criterion-4 (connecting-component cohomology)", started, 5.0)


def test_criterion_5_morphism_deformation_fixture():
    started = time.monotonic()
    md = fixtures.mdef_2()
    report = check_morphism_deformation(md)
    assert report.family_ok("algebra_a"), "source deformation check failed"
    assert report.family_ok("morphism_eq"), "morphism equation check failed"
    assert report.family_ok("twist_eq"), "twist equation check failed"
    target_verdict = report.family_ok("algebra_b")
    verdict_text = ("ok" if target_verdict else
                    "fails (expected finding: the companion target algebra "
                    "is invalid as printed)")
    print(f"  target-deformation verdict: {verdict_text}")
    assert not target_verdict
    for rec in report.orders:
        assert rec.algebra_a.ok and rec.morphism_eq.ok and rec.twist_eq.ok
    _announce("criterion-5 (morphism deformation fixture)", started, 1.0)


def test_criterion_6_property_suite():
    started = time.monotonic()
    result = run_selftest()
    by_name = {s["name"]: s for s in result["suites"]}
    assert result["ok"], [f for s in result["suites"] for f in s["failures"]]
    assert by_name["delta_squared"]["ok"]          # (i)
    assert by_name["bracket_detection"]["ok"]      # (ii)
    assert by_name["yau_twist"]["ok"]              # (iii)
    assert by_name["face_operators"]["ok"]         # (iv)
    assert by_name["deformations"]["ok"]           # (v) and (vi)
    _announce("criterion-6 (property suite)", started, 60.0)


def test_criterion_7_selftest_determinism(capsys):
    code1 = cli_main(["selftest", "--json"])
    out1 = capsys.readouterr().out
    code2 = cli_main(["selftest", "--json"])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2
    print("ACCEPTANCE criterion-7 (selftest determinism): PASS")
