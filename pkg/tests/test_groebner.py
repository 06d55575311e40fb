import random

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import homogeneous
from oracles import (as_dict, exponents_of_degree, in_ideal, quotient_hilbert,
                     random_graded_matrix, slice_dimension, spoly, sympy_reduced_gb,
                     syzygies_complete)
from ruledsurf.core.matrix import RingMatrix
from ruledsurf.core.ring import PolyRing
from ruledsurf.groebner.ideal import (Ideal, dim_degree, eliminate, groebner_basis, hilbert_values,
                                      ideal_intersection, ideal_quotient, ring_map_kernel, saturation,
                                      squarefree_part)
from ruledsurf.groebner.modgb import syzygy_matrix
from ruledsurf.groebner.resolution import betti_table, minimal_free_resolution
from ruledsurf.groebner.univariate import univariate_roots

R3 = PolyRing(["x0", "x1", "x2"])
R4 = PolyRing(["x0", "x1", "x2", "x3"])


def ideals(ring, max_gens=3, max_terms=3):
    return st.lists(homogeneous(ring, max_terms=max_terms), min_size=1, max_size=max_gens).map(
        lambda gs: Ideal(gs, ring))


def twisted_cubic():
    return Ideal(["x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"], R4)


# -- Gröbner bases --------------------------------------------------------

@given(ideals(R4))
def test_s_pairs_reduce_to_zero(I):
    G = groebner_basis(I)
    gb = I.gb()
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            assert gb.normal_form(spoly(G[i], G[j])).is_zero()
    leads = [g.lead_exponents() for g in G]
    for i, a in enumerate(leads):
        for j, b in enumerate(leads):
            if i != j:
                assert not all(x <= y for x, y in zip(a, b))


@settings(max_examples=25)
@given(ideals(R3))
def test_gb_matches_sympy(I):
    G = groebner_basis(I)
    mine = {frozenset(as_dict(g.monic()).items()) for g in G}
    assert mine == sympy_reduced_gb([as_dict(g) for g in I.gens], 3)


@given(ideals(R4), st.data())
def test_membership_matches_slice_linear_algebra(I, data):
    gens = [as_dict(g) for g in I.gens]
    for d in range(1, 5):
        f = data.draw(homogeneous(R4, degree=d, max_terms=5))
        assert I.contains(f) == in_ideal(as_dict(f), gens, 4)
        # a random combination of generators is always a member
        combo = R4.zero()
        for g in I.gens:
            if g.degree() <= d:
                m = data.draw(homogeneous(R4, degree=d - g.degree(), max_terms=2)) if d > g.degree() else R4.one()
                combo = combo + m * g
        assert I.contains(combo)
        assert I.normal_form(I.normal_form(f)) == I.normal_form(f)


@given(ideals(R4))
def test_hilbert_function_matches_slice_ranks(I):
    gens = [as_dict(g) for g in I.gens]
    values = hilbert_values(I, 4)
    assert values == [quotient_hilbert(gens, 4, t) for t in range(5)]


def test_twisted_cubic_membership_and_hilbert():
    I = twisted_cubic()
    gens = [as_dict(g) for g in I.gens]
    for d in range(1, 4):
        for e in exponents_of_degree(4, d):
            f = R4.monomial(e) + R4.monomial(tuple(reversed(e)))
            assert I.contains(f) == in_ideal(as_dict(f), gens, 4)
    assert dim_degree(I) == (2, 3)
    assert hilbert_values(I, 5) == [3 * t + 1 for t in range(6)]
    assert not I.contains(R4.one())


def test_unit_membership():
    assert not Ideal(["x0"], R3).contains(R3.one())
    assert Ideal(["x0"], R3).normal_form(R3.one()) == R3.one()


# -- syzygies ------------------------------------------------------------

def test_syzygies_annihilate_and_are_complete():
    rng = random.Random(20240)
    for _ in range(50):
        M = random_graded_matrix(rng, R3)
        S = syzygy_matrix(M)
        assert (M * S).is_zero()
        assert syzygies_complete(M, S, range(max(M.col_twists), max(M.col_twists) + 3))


def test_koszul_syzygy():
    R = PolyRing(["x0", "x1"])
    M = RingMatrix(R, [[R("x0"), R("x1")]])
    S = syzygy_matrix(M)
    assert S.ncols == 1
    col = S.column(0)
    assert col[0] * R("x0") + col[1] * R("x1") == R.zero()
    assert {c.degree() for c in col} == {1}


# -- colon, intersection, saturation ------------------------------------------

def _same_ideal(I, J):
    return I.is_subset(J) and J.is_subset(I)


def test_quotient_examples():
    I = Ideal(["x0^2"], R3)
    assert _same_ideal(ideal_quotient(I, Ideal(["x0"], R3)), Ideal(["x0"], R3))
    assert _same_ideal(ideal_quotient(I, Ideal([R3.one()], R3)), I)
    f, g = R3("x0^2+x1*x2"), R3("x1^3-x2^2*x0")
    assert _same_ideal(ideal_quotient(Ideal([f * g], R3), Ideal([f], R3)), Ideal([g], R3))


@given(ideals(R3, max_gens=2), ideals(R3, max_gens=2))
def test_intersection_matches_slice_dimensions(I, J):
    K = ideal_intersection(I, J)
    a = [as_dict(g) for g in I.gens]
    b = [as_dict(g) for g in J.gens]
    for d in range(1, 5):
        expected = slice_dimension(a, 3, d) + slice_dimension(b, 3, d) - slice_dimension(a + b, 3, d)
        assert slice_dimension([as_dict(g) for g in K.gens], 3, d) == expected


def test_saturation_example():
    # x0^2 * (x1, x2) has no component supported at the irrelevant ideal...
    I = Ideal(["x0^2*x1", "x0^2*x2"], R3)
    assert _same_ideal(saturation(I), I)
    # ...while saturating by (x1, x2) strips the embedded point.
    assert _same_ideal(saturation(I, Ideal(["x1", "x2"], R3)), Ideal(["x0^2"], R3))
    J = Ideal(["x0^2", "x0*x1", "x0*x2"], R3)
    assert _same_ideal(saturation(J), Ideal(["x0"], R3))
    I = twisted_cubic()
    assert _same_ideal(saturation(I), I)


@given(ideals(R3, max_gens=3))
def test_saturation_is_fixed_point(I):
    sat = saturation(I)
    m = Ideal(["x0", "x1", "x2"], R3)
    assert I.is_subset(sat)
    assert _same_ideal(saturation(sat), sat)
    assert _same_ideal(ideal_quotient(sat, m), sat)


# -- elimination, kernels and univariate tools -----------------------------

def test_veronese_graph_elimination():
    R = PolyRing(["x0", "x1", "z0", "z1", "z2"], weights=[1, 1, 2, 2, 2])
    I = Ideal(["z0-x0^2", "z1-x0*x1", "z2-x1^2"], R)
    E = eliminate(I, [0, 1])
    assert len(E.gens) == 1
    g = E.gens[0]
    assert g.monic() == E.ring("z0*z2-z1^2").monic()


@given(ideals(R4, max_gens=3))
def test_elimination_drops_variables_and_stays_inside(I):
    E = eliminate(I, [0])
    names = E.ring.names
    assert "x0" not in names
    for g in E.gens:
        lifted = R4.convert(g, [R4.index[n] for n in names])
        assert I.contains(lifted)


def test_ring_map_kernel_veronese():
    T = PolyRing(["t0", "t1"])
    forms = T.monomials_of_degree(2)
    K = ring_map_kernel(Ideal([], T), forms)
    assert len(K.gens) == 1 and K.gens[0].degree() == 2
    assert dim_degree(K) == (2, 2)
    for g in K.gens:
        assert g.substitute(forms, T).is_zero()


def test_ring_map_kernel_modulo_relations():
    J = twisted_cubic()
    rng = random.Random(7)
    forms = [sum((m.scale(rng.randint(1, 100)) for m in rng.sample(R4.monomials_of_degree(1), 2)), R4.zero())
             for _ in range(3)]
    K = ring_map_kernel(J, forms)
    assert K.gens
    for g in K.gens:
        assert J.contains(g.substitute(forms, R4))


def test_squarefree_part():
    R = PolyRing(["x", "y"])
    f = R("x^3*y^2-x^2*y^3")
    assert squarefree_part(f).monic() == R("x^2*y-x*y^2").monic()


def test_univariate_roots():
    assert univariate_roots([100, 0, 1], 101) == [1, 100]
    R = PolyRing(["t"])
    f = R("(t-3)*(t-5)*(t^2+1)")
    roots = univariate_roots(f)
    assert {3, 5} <= set(roots)
    assert all(f.evaluate([r]) == 0 for r in roots)


# -- resolutions --------------------------------------------------------

def _check_resolution(I, nvars, tmax=6):
    res = minimal_free_resolution(I)
    assert res.composes_to_zero()
    assert not res.has_unit_entries()
    b = res.betti
    assert b.ranks[(0, 0)] == 1
    gens = [as_dict(g) for g in I.gens]
    for t in range(tmax + 1):
        assert b.hilbert_value(t, nvars) == quotient_hilbert(gens, nvars, t)
    return b


def test_koszul_betti():
    b = betti_table(Ideal(["x0", "x1", "x2"], R3))
    assert b.totals() == [1, 3, 3, 1]


def test_twisted_cubic_resolution():
    b = _check_resolution(twisted_cubic(), 4)
    assert b.totals() == [1, 3, 2]
    assert b.rows()[1] == [0, 3, 2]


@settings(max_examples=20)
@given(ideals(R3, max_gens=3))
def test_resolution_exact_and_minimal(I):
    _check_resolution(I, 3)


def test_betti_render_layout():
    b = betti_table(twisted_cubic())
    assert b.render().splitlines() == ["total: 1 3 2", "    0: 1 . .", "    1: . 3 2"]
