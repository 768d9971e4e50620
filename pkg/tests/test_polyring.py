"""Sparse four-variable polynomial scalars: arithmetic, text format, evaluation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasimod import Poly, evaluate, format_poly, generators, parse_poly
from quasimod.endo import endo_add, endo_compose, identity_map, zero_map
from quasimod.errors import DegreeCapExceeded, ImagesNotCommuting, Malformed
from quasimod.polyring import poly_add, poly_mul, poly_neg, zero_poly

X, Y, U, V = generators()


# --- construction and normalization ------------------------------------------


def test_generators_are_the_four_variables():
    assert format_poly(X) == "x"
    assert format_poly(Y) == "y"
    assert format_poly(U) == "u"
    assert format_poly(V) == "v"


def test_zero_coefficients_are_dropped():
    p = poly_add(X, poly_neg(X))
    assert p == zero_poly()
    assert format_poly(p) == "0"


def test_constant_terms_are_rejected():
    with pytest.raises(Malformed):
        Poly({(0, 0, 0, 0): 1})


def test_degree_cap_enforced():
    p = X
    with pytest.raises(DegreeCapExceeded):
        for _ in range(13):
            p = poly_mul(p, X)


def test_term_order_is_input_independent():
    a = Poly({(1, 0, 0, 0): 2, (0, 1, 0, 1): -1, (2, 0, 1, 0): 2})
    b = Poly({(0, 1, 0, 1): -1, (2, 0, 1, 0): 2, (1, 0, 0, 0): 2})
    assert a == b
    assert a.terms == b.terms


def test_formatting_fixed_example():
    p = Poly({(2, 0, 1, 0): 2, (0, 1, 0, 1): -1, (1, 0, 0, 0): 3})
    assert format_poly(p) == "2*x^2*u - y*v + 3*x"


def test_graded_lex_descending_order():
    p = poly_add(poly_add(X, poly_mul(Y, Y)), poly_mul(X, Y))
    # degree-2 terms first (x*y before y^2 in lex), then degree 1
    assert format_poly(p) == "x*y + y^2 + x"


# --- parsing -------------------------------------------------------------------


def test_parse_format_roundtrip_fixed():
    for text in ("x", "0", "x + y", "2*x^2*u - y*v + 3*x", "-x*y*u*v"):
        assert format_poly(parse_poly(text)) == text


def test_parse_accepts_spacing_variants():
    assert parse_poly("2 * x ^ 2") == parse_poly("2*x^2")
    assert parse_poly("x+y") == parse_poly("x + y")


def test_parse_merges_repeated_monomials():
    assert parse_poly("x + x") == parse_poly("2*x")
    assert parse_poly("x - x") == zero_poly()


def test_parse_rejects_malformed_input():
    for bad in ("", "3", "x + 3", "w", "x**2", "x^", "2*", "x^0"):
        with pytest.raises(Malformed):
            parse_poly(bad)


@st.composite
def polys(draw, max_terms=4, max_deg=2, max_coeff=9):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        exps = tuple(draw(st.integers(0, max_deg)) for _ in range(4))
        if sum(exps) == 0:
            exps = (1, 0, 0, 0)
        coeff = draw(st.integers(-max_coeff, max_coeff))
        if coeff:
            terms[exps] = terms.get(exps, 0) + coeff
    return Poly({e: c for e, c in terms.items() if c})


@settings(max_examples=120, deadline=None)
@given(polys())
def test_parse_after_format_is_identity(p):
    assert parse_poly(format_poly(p)) == p


@settings(max_examples=60, deadline=None)
@given(polys(max_deg=1), polys(max_deg=1), polys(max_deg=1))
def test_ring_axioms_hold(p, q, r):
    assert poly_add(p, q) == poly_add(q, p)
    assert poly_add(poly_add(p, q), r) == poly_add(p, poly_add(q, r))
    assert poly_mul(p, q) == poly_mul(q, p)
    assert poly_mul(p, poly_add(q, r)) == poly_add(poly_mul(p, q), poly_mul(p, r))
    assert poly_add(p, poly_neg(p)) == zero_poly()


# --- evaluation ------------------------------------------------------------------


def _abelian_images(L):
    double = tuple(L.mul(x, x) for x in range(L.n))
    return (identity_map(L.n), double, double, identity_map(L.n))


def test_evaluate_single_variables(group_map):
    L = group_map["z5"]
    images = _abelian_images(L)
    assert evaluate(X, images, L) == images[0]
    assert evaluate(Y, images, L) == images[1]
    assert evaluate(U, images, L) == images[2]
    assert evaluate(V, images, L) == images[3]


def test_evaluate_sum_and_product(group_map):
    L = group_map["z5"]
    images = _abelian_images(L)
    got = evaluate(poly_add(X, Y), images, L)
    assert got == tuple(L.mul(images[0][t], images[1][t]) for t in range(5))
    got = evaluate(poly_mul(X, Y), images, L)
    assert got == endo_compose(images[0], images[1])


def test_evaluate_coefficient_reduces_mod_exponent(group_map):
    L = group_map["z4"]
    images = (identity_map(4),) * 4
    assert evaluate(parse_poly("5*x"), images, L) == identity_map(4)
    assert evaluate(parse_poly("4*x"), images, L) == zero_map(L)
    assert evaluate(parse_poly("-x"), images, L) == (0, 3, 2, 1)


def test_evaluate_is_additive_and_multiplicative(group_map):
    L = group_map["z4x2"]
    images = _abelian_images(L)
    import itertools

    for p, q in itertools.product(
            (X, Y, poly_add(X, U), poly_mul(X, Y), parse_poly("2*x - v")),
            repeat=2):
        ep, eq = evaluate(p, images, L), evaluate(q, images, L)
        assert evaluate(poly_add(p, q), images, L) == endo_add(L, ep, eq)
        assert evaluate(poly_mul(p, q), images, L) == endo_compose(ep, eq)


def test_evaluate_rejects_non_commuting_images(group_map):
    L = group_map["z2x2"]
    swap = (0, 2, 1, 3)
    shear = (0, 1, 3, 2)
    assert endo_compose(swap, shear) != endo_compose(shear, swap)
    with pytest.raises(ImagesNotCommuting):
        evaluate(X, (swap, shear, swap, shear), L)


def test_evaluate_on_nonabelian_carrier_requires_special_images(group_map):
    from quasimod.errors import ImagesNotSpecial

    s3 = group_map["s3"]
    with pytest.raises(ImagesNotSpecial):
        evaluate(X, (identity_map(6),) * 4, s3)


@settings(max_examples=40, deadline=None)
@given(polys(max_terms=3, max_deg=1), polys(max_terms=3, max_deg=1))
def test_evaluate_ring_homomorphism_property(p, q):
    from quasimod.corpus import group_tables

    L = dict(group_tables())["z6"]
    triple = tuple(3 * x % 6 for x in range(6))
    images = (identity_map(6), triple, triple, identity_map(6))
    ep, eq = evaluate(p, images, L), evaluate(q, images, L)
    assert evaluate(poly_add(p, q), images, L) == endo_add(L, ep, eq)
    assert evaluate(poly_mul(p, q), images, L) == endo_compose(ep, eq)
