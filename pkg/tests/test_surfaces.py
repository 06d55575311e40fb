import pytest

from ruledsurf.errors import RetryBudgetExceeded
from ruledsurf.groebner.ideal import (Ideal, dim_degree, hilbert_values, ideal_intersection,
                                      saturate_by_variable)
from ruledsurf.modules import GradedModule, direct_sum, dual_of_divisor_ideal
from ruledsurf.recipes import (FIXED_CUBIC, POINT_P, POINT_Q, POINT_Q1, _fixed_setup, sectional_genus)
from ruledsurf.rng import SeedStream
from ruledsurf.surfaces import analysis as an
from ruledsurf.surfaces.bundles import divisor, image_of_fibre, k_bundle_ideal
from ruledsurf.surfaces.curves import (CurveModel, coordinate_ring, plane_cubic, point_ideal,
                                       random_genus2_curve, random_plane_cubic, random_points,
                                       rational_points, smoothness_check)
from ruledsurf.surfaces.scroll import pullback_ideal, quotient_form_basis, scroll_ideal


@pytest.fixture(scope="module")
def genus2():
    return random_genus2_curve(3)


@pytest.fixture(scope="module")
def elliptic_scroll():
    C = plane_cubic(FIXED_CUBIC)
    D = random_points(C, 3, 2)
    DS = dual_of_divisor_ideal(C.to_S(D.ideal))
    return scroll_ideal(direct_sum(DS, DS), C)


@pytest.fixture(scope="module", params=[2, 3], ids=["conic", "cubic"])
def k_bundle(request):
    k = request.param
    C, cfg = _fixed_setup(0, 101, k, [POINT_Q] if k == 2 else [])
    return k, C, k_bundle_ideal(cfg, report=False)


# -- curves and points ------------------------------------------------------

def test_genus2_curve(genus2):
    C = genus2
    assert dim_degree(C.ideal) == (2, 5)
    assert hilbert_values(C.ideal, 6)[1:] == [5 * t - 1 for t in range(1, 7)]
    assert C.ideal.generator_degrees() == [2, 3, 3]
    assert smoothness_check(C.ideal, 2)


def test_random_plane_cubic():
    C = random_plane_cubic(4)
    assert hilbert_values(C.ideal, 5)[1:] == [3 * t for t in range(1, 6)]
    assert smoothness_check(C.ideal, 1)


def test_fixed_cubic_and_singular_rejection():
    C = plane_cubic(FIXED_CUBIC)
    assert an.is_smooth_plane_cubic(C.ideal)
    for pt in (POINT_P, POINT_Q, POINT_Q1):
        assert all(g.evaluate(pt) == 0 for g in C.ideal.gens)
    with pytest.raises(ValueError):
        plane_cubic("x_0^3")
    with pytest.raises(ValueError):
        plane_cubic("x_0*x_1*x_2")


def test_singular_quadric_cone_is_not_smooth():
    R = coordinate_ring(4)
    assert not smoothness_check(Ideal(["x_0*x_1-x_2^2"], R), 1)
    assert smoothness_check(Ideal(["x_0*x_1-x_2*x_3"], R), 1)


@pytest.mark.parametrize("seed", range(4))
def test_random_points_lie_on_curve(genus2, seed):
    D = random_points(genus2, 1, seed)
    assert dim_degree(D.ideal) == (1, 1)
    assert genus2.ideal.is_subset(D.ideal)


def test_points_accumulate(genus2):
    D2 = random_points(genus2, 2, 10)
    D3 = random_points(genus2, 3, 11, avoid=D2.points)
    assert not set(D2.points) & set(D3.points)
    both = ideal_intersection(D2.ideal, D3.ideal)
    assert dim_degree(both) == (1, 5)


def test_divisor_multiplicity_and_rational_points():
    C = plane_cubic(FIXED_CUBIC)
    D = divisor(C, [POINT_Q, POINT_Q])
    assert dim_degree(D.ideal) == (1, 2)
    assert C.ideal.is_subset(D.ideal)
    pts = rational_points(ideal_intersection(point_ideal(C.ring, POINT_P), point_ideal(C.ring, POINT_Q1)))
    assert sorted(pts) == sorted([(1, 0, 0), (1, 100, 0)])


def test_point_search_budget():
    R = coordinate_ring(3)
    # with an empty budget no hyperplane section is ever tried
    C = plane_cubic("x_0^3+x_1^3+x_2^3", R)
    with pytest.raises(RetryBudgetExceeded):
        random_points(C, 1, 0, retries=0)


# -- scrolls ----------------------------------------------------------------

def test_cubic_scroll_over_the_line():
    R = coordinate_ring(2)
    line = CurveModel(R, Ideal([], R), 0, 1, _S=R)
    emb = scroll_ideal(GradedModule.free(R, [-1, -2]), line)
    J = emb.ideal
    assert dim_degree(J) == (3, 3)
    assert J.generator_degrees() == [2, 2, 2]
    # h^0(Sym^t(O(1) + O(2))) on P^1
    assert hilbert_values(J, 6) == [(t + 1) * (3 * t + 2) // 2 for t in range(7)]


def test_scroll_generators_come_from_incidence(elliptic_scroll):
    emb = elliptic_scroll
    sat = saturate_by_variable(emb.IS, emb.TR.nvars - 1)
    for g in emb.ideal.gens:
        assert sat.contains(emb.TR.convert(g))
    for g in emb.ideal.gens:
        assert all(exp[n] == 0 for exp, _ in emb.TR.convert(g).exponent_items()
                   for n in emb.x_block)


@pytest.mark.parametrize("seed", range(3))
def test_scroll_fibres_are_lines(elliptic_scroll, seed):
    C = elliptic_scroll.curve
    pt = random_points(C, 1, SeedStream(seed).child("fibre")).points[0]
    F = pullback_ideal(elliptic_scroll, point_ideal(C.ring, pt))
    assert dim_degree(F) == (2, 1)
    assert elliptic_scroll.ideal.is_subset(F)


def test_quotient_form_basis_requires_room(elliptic_scroll):
    J = elliptic_scroll.ideal
    with pytest.raises(ValueError):
        quotient_form_basis(J, J, 2)


# -- k-bundles ----------------------------------------------------------------

@pytest.mark.parametrize("seed", range(3))
def test_k_bundle_fibres_have_degree_k(k_bundle, seed):
    k, C, out = k_bundle
    pt = random_points(C, 1, SeedStream(seed).child("fibre")).points[0]
    assert dim_degree(image_of_fibre(out, pt)) == (2, k)


def test_k_bundle_kernel_substitutes_to_zero(k_bundle):
    _, _, out = k_bundle
    J = out.scroll.ideal
    for g in out.ideal.gens:
        assert J.contains(g.substitute(out.forms, J.ring))


def test_fibre_divisor_must_be_effective():
    C, cfg = _fixed_setup(0, 101, 1, [POINT_P])
    with pytest.raises(ValueError):
        cfg.fibre_divisor()


# -- quadric and report helpers -------------------------------------------

def test_hessian_and_rank():
    R = coordinate_ring(4, name="y")
    f = R("y_0*y_1")
    H = an.hessian(f)
    assert H[0][1] == H[1][0] != 0 and H[0][0] == 0
    assert an.quadric_rank(f) == 2
    assert an.quadric_rank(R("y_0^2+y_1^2+y_2^2+y_3^2")) == 4
    L = an.singular_locus_of_quadric(R("y_0*y_1-y_2^2"))
    assert dim_degree(L) == (1, 1)


def test_unit_ideal_report_is_degenerate():
    R = coordinate_ring(3)
    rep = an.surface_report(Ideal([R.one()], R))
    assert rep.degenerate


def test_normality_needs_enough_values():
    R = coordinate_ring(3)
    with pytest.raises(ValueError):
        an.k_normality_report(Ideal(["x_0"], R), [1, 2], 5)


def test_sectional_genus_of_plane_cubic_cone():
    # cone over a plane cubic in P^3: hyperplane sections are plane cubics (genus 1)
    R = coordinate_ring(4)
    I = Ideal(["x_0^3+x_1^3+x_2^3"], R)
    assert sectional_genus(hilbert_values(I, 8), 3) == 1
