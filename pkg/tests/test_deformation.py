from fractions import Fraction

import pytest

from homcoh import fixtures
from homcoh.algebra import LIE, HomAlgebra
from homcoh.cochain import MorphismCochain, MultilinearMap
from homcoh.cohomology import delta_hom_self, delta_morphism
from homcoh.deformation import (FormalAutomorphismPair, FormalDeformation,
                                MorphismDeformation, algebra_obstruction,
                                apply_equivalence, check_algebra_deformation,
                                check_morphism_deformation, coefficient_cochain,
                                extend_algebra_deformation, extend_deformation,
                                infinitesimal, infinitesimal_report, obstruction)
from homcoh.errors import UsageError
from homcoh.exact import Matrix


def vec(*xs):
    return tuple(Fraction(x) for x in xs)


def test_trivial_algebra_deformation_passes(a3):
    d = FormalDeformation.from_terms(a3, 1, {})
    assert check_algebra_deformation(d).overall_ok


def test_def_g1_passes_all_orders():
    report = check_algebra_deformation(fixtures.def_g1())
    assert report.overall_ok
    assert [r.order for r in report.orders] == [0, 1, 2]


def test_skewness_violation_reported():
    G = fixtures.g1(2, 0)
    bad = MultilinearMap.from_values(2, 3, 3, {(0, 2): vec(0, 1, 0)})
    d = FormalDeformation.from_terms(G, 1, {1: bad})
    report = check_algebra_deformation(d)
    assert not report.overall_ok
    rec = report.orders[1]
    assert not rec.algebra_a.ok
    assert rec.algebra_a.witness is not None


def test_mdef_2_verdicts():
    report = check_morphism_deformation(fixtures.mdef_2())
    assert report.family_ok("algebra_a")
    assert report.family_ok("morphism_eq")
    assert report.family_ok("twist_eq")
    assert not report.family_ok("algebra_b")


def test_corrupt_phi_term_fails_twist_equation():
    md = fixtures.mdef_2()
    corrupt = Matrix.from_columns([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    bad = MorphismDeformation.build(md.phi, md.def_a, md.def_b,
                                    {1: corrupt}, 1)
    report = check_morphism_deformation(bad)
    assert not report.family_ok("twist_eq")
    rec = report.orders[1]
    assert rec.twist_eq.witness[0] == "e1"


def test_infinitesimal_trivial_deformation(phi):
    trivial = MorphismDeformation.build(
        phi, FormalDeformation.from_terms(phi.source, 1, {}),
        FormalDeformation.from_terms(phi.target, 1, {}), {}, 1)
    theta = infinitesimal(trivial)
    assert theta.is_zero()


def test_infinitesimal_mdef_2_slotwise():
    theta, verdicts, warnings = infinitesimal_report(fixtures.mdef_2())
    assert verdicts["source"] and verdicts["morphism"]
    assert not verdicts["target"]
    assert warnings
    # the extraction returns exactly the degree-1 coefficients
    assert theta.comp_A == fixtures.def_g1().term(1)
    assert theta.comp_B == fixtures.def_g2().term(1)


def test_padded_leading_coefficient_is_again_a_cocycle():
    md = fixtures.mdef_2()
    padded = MorphismDeformation.build(
        md.phi,
        FormalDeformation.from_terms(md.phi.source, 2,
                                     {2: md.def_a.term(1)}),
        FormalDeformation.from_terms(md.phi.target, 2,
                                     {2: md.def_b.term(1)}),
        {2: md.phi_term(1)}, 2)
    theta2 = coefficient_cochain(padded, 2)
    image = delta_morphism(md.phi, theta2, "lie")
    assert image.comp_A.is_zero()
    assert image.comp_AB.is_zero()


def test_apply_equivalence_identity_pair_is_noop():
    md = fixtures.mdef_2()
    psi = FormalAutomorphismPair(source=md.phi.source, target=md.phi.target,
                                 psi_a_terms=(), psi_b_terms=(), order=1)
    out = apply_equivalence(md, psi)
    assert out.def_a.terms == md.def_a.terms
    assert out.def_b.terms == md.def_b.terms
    assert out.phi_terms == md.phi_terms


def test_apply_equivalence_shifts_infinitesimal_by_coboundary():
    md = fixtures.mdef_2()
    N = Matrix.from_rows([[0, 0, 0], [0, 0, 0], [0, 1, 0]])
    psi = FormalAutomorphismPair(source=md.phi.source, target=md.phi.target,
                                 psi_a_terms=((1, N),), psi_b_terms=(),
                                 order=1)
    out = apply_equivalence(md, psi)
    before = check_morphism_deformation(md)
    after = check_morphism_deformation(out)
    for family in ("algebra_a", "algebra_b", "morphism_eq", "twist_eq"):
        assert before.family_ok(family) == after.family_ok(family)
    t_old = coefficient_cochain(md, 1)
    t_new = coefficient_cochain(out, 1)
    one = MorphismCochain(MultilinearMap.from_matrix(N),
                          MultilinearMap.zero(1, 3, 3),
                          MultilinearMap.constant(3, vec(0, 0, 0)))
    shift = delta_morphism(md.phi, one, "lie")
    assert t_old.comp_A - t_new.comp_A == shift.comp_A
    assert t_old.comp_B - t_new.comp_B == shift.comp_B
    assert t_old.comp_AB - t_new.comp_AB == shift.comp_AB


def test_apply_equivalence_requires_twist_commuting_terms():
    md = fixtures.mdef_2()
    bad = Matrix.from_rows([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(UsageError):
        FormalAutomorphismPair(source=md.phi.source, target=md.phi.target,
                               psi_a_terms=((1, bad),), psi_b_terms=(),
                               order=1)


def test_series_inverse_exact():
    md = fixtures.mdef_2()
    N = Matrix.from_rows([[0, 0, 0], [0, 0, 0], [0, 1, 0]])
    psi = FormalAutomorphismPair(source=md.phi.source, target=md.phi.target,
                                 psi_a_terms=((1, N),), psi_b_terms=(),
                                 order=3)
    inv = psi.inverse_terms("a", 3)
    # coefficient of each order of psi_t o psi_t^{-1} must vanish
    for s in range(1, 4):
        acc = Matrix.zero(3, 3)
        for i in range(s + 1):
            acc = acc + psi.term("a", i) @ inv[s - i]
        assert acc.is_zero()


def test_obstruction_trivial_is_zero(phi):
    trivial = MorphismDeformation.build(
        phi, FormalDeformation.from_terms(phi.source, 1, {}),
        FormalDeformation.from_terms(phi.target, 1, {}), {}, 1)
    assert obstruction(trivial).is_zero()


def test_trivial_deformation_extends_with_zero_term(phi):
    trivial = MorphismDeformation.build(
        phi, FormalDeformation.from_terms(phi.source, 1, {}),
        FormalDeformation.from_terms(phi.target, 1, {}), {}, 1)
    extended = extend_deformation(trivial)
    assert extended is not None
    assert extended.order == 2
    assert extended.def_a.term(2).is_zero()
    assert extended.def_b.term(2).is_zero()
    assert extended.phi_term(2).is_zero()


def test_obstruction_def_g1():
    ob = algebra_obstruction(fixtures.def_g1())
    assert ob.is_zero()  # only cross terms with the annihilated directions


def test_obstruction_mdef_2_is_cocycle_in_valid_slots():
    md = fixtures.mdef_2()
    ob = obstruction(md)
    image = delta_morphism(md.phi, ob, "lie")
    assert image.comp_A.is_zero()
    assert image.comp_AB.is_zero()


def test_rigid_extension_from_coboundary_term(a3):
    g = MultilinearMap.from_values(1, 3, 3, {(0,): vec(1, 0, 0)})
    mu1 = delta_hom_self(a3, g)
    d = FormalDeformation.from_terms(a3, 1, {1: mu1})
    assert check_algebra_deformation(d, up_to=1).overall_ok
    extended = extend_algebra_deformation(d)
    assert extended is not None
    assert extended.order == 2
    assert check_algebra_deformation(extended, up_to=2).overall_ok


def test_rigid_extension_second_coboundary_term(a3):
    g = MultilinearMap.from_values(1, 3, 3, {(1,): vec(1, 1, 0)})
    mu1 = delta_hom_self(a3, g)
    d = FormalDeformation.from_terms(a3, 1, {1: mu1})
    assert extend_algebra_deformation(d) is not None


def test_non_coboundary_obstruction_blocks_extension():
    # abelian base: anything skew deforms to order one, the coboundary
    # space is zero, and a bracket violating the Jacobi identity at order
    # two is a genuine obstruction
    n = 3
    mul = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    L = HomAlgebra("abelian3", LIE, n, mul, Matrix.identity(n))
    term = MultilinearMap.from_values(2, 3, 3, {
        (0, 1): vec(0, 0, 1), (1, 0): vec(0, 0, -1),
        (1, 2): vec(1, 0, 0), (2, 1): vec(-1, 0, 0),
        (0, 2): vec(1, 0, 0), (2, 0): vec(-1, 0, 0)})
    d = FormalDeformation.from_terms(L, 1, {1: term})
    assert check_algebra_deformation(d, up_to=1).overall_ok
    ob = algebra_obstruction(d)
    assert not ob.is_zero()
    assert extend_algebra_deformation(d) is None

    from homcoh.rep import HomMorphism
    ident = HomMorphism(L, L, Matrix.identity(3))
    md = MorphismDeformation.build(ident, d, d, {}, 1)
    assert extend_deformation(md) is None


def test_extend_morphism_deformation_of_mdef_2():
    md = fixtures.mdef_2()
    extended = extend_deformation(md)
    if extended is not None:
        assert extended.order == 2
        after = check_morphism_deformation(extended, up_to=2)
        assert after.family_ok("algebra_a")
        assert after.family_ok("morphism_eq")
        assert after.family_ok("twist_eq")
        # second-order obstruction of the extension is again a cocycle in
        # the slots whose underlying algebras are valid
        ob2 = obstruction(extended)
        image = delta_morphism(extended.phi, ob2, "lie")
        assert image.comp_A.is_zero()
        assert image.comp_AB.is_zero()
