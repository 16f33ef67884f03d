import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from isodual.errors import (
    CoefficientNotInBaseField,
    DivisionByZero,
    FieldMismatch,
    InvalidPermutation,
    NotInvariant,
    NotMonic,
    ZeroConstantTerm,
)
from isodual.gf import field_of_order, parse_pin, root_of_unity
from isodual.polyring import (
    Polynomial,
    alternating,
    coset_polynomial,
    defining_polynomial,
    factor_xn1,
    format_coeffs,
    format_poly,
    image_defining_polynomial,
    isometry_substitute,
    monic_reciprocal,
    parse_coeffs,
    poly_arith,
    poly_gcd,
    poly_mod_xn1,
    x_n_minus_1,
)
from isodual.zn import all_qperms, cyclotomic_cosets

F3, F5 = field_of_order(3), field_of_order(5)


def P_(F, *c):
    return Polynomial.from_ints(F, c)


@pytest.fixture(scope="module")
def root58():
    return root_of_unity(F5, 8, parse_pin("theta^2=2", F5))


@pytest.fixture(scope="module")
def root310():
    return root_of_unity(F3, 10)


def test_arith_basics():
    a, b = P_(F5, 1, 2, 3), P_(F5, 4, 0, 1)
    assert poly_arith(a, b, "add") == P_(F5, 0, 2, 4)
    assert poly_arith(a, b, "sub") == P_(F5, 2, 2, 2)
    q, r = poly_arith(a * b + P_(F5, 1), b, "divmod")
    assert q == a and r == P_(F5, 1)
    assert P_(F5, 0, 0, 0).is_zero() and P_(F5, 0, 0).degree == -1
    with pytest.raises(ValueError):
        poly_arith(a, b, "pow")


def test_gcd_with_zero_is_monic():
    f = x_n_minus_1(F5, 6).scale(3)
    assert poly_gcd(f, Polynomial.zero(F5)) == x_n_minus_1(F5, 6)


def test_division_by_zero_and_field_mismatch():
    with pytest.raises(DivisionByZero):
        divmod(P_(F5, 1, 1), Polynomial.zero(F5))
    with pytest.raises(FieldMismatch):
        P_(F5, 1) + P_(F3, 1)


def test_product_of_four_factors_is_x10_minus_1():
    prod = P_(F3, -1, 1) * P_(F3, 1, 1) * P_(F3, 1, 1, 1, 1, 1) * P_(F3, 1, -1, 1, -1, 1)
    assert prod == x_n_minus_1(F3, 10)


def test_worked_product_over_f5():
    assert P_(F5, -1, 1) * P_(F5, 1, 1) * P_(F5, -2, 0, 1) == P_(F5, 2, 0, 2, 0, 1)


def test_coset_polynomials(root58, root310):
    assert coset_polynomial((0,), root58) == P_(F5, -1, 1)
    assert coset_polynomial((1, 5), root58) == P_(F5, -2, 0, 1)
    # {1, 3, 7, 9} are the exponents of the primitive 10th roots: the 10th cyclotomic polynomial
    assert coset_polynomial((1, 3, 7, 9), root310) == P_(F3, 1, -1, 1, -1, 1)
    assert coset_polynomial((2, 4, 6, 8), root310) == P_(F3, 1, 1, 1, 1, 1)
    with pytest.raises(CoefficientNotInBaseField):
        coset_polynomial((1,), root58)


def test_defining_polynomials(root58):
    assert defining_polynomial(range(8), root58) == x_n_minus_1(F5, 8)
    assert defining_polynomial([0, 1, 4, 5], root58) == P_(F5, 2, 0, 2, 0, 1)
    root6 = root_of_unity(F5, 6, parse_pin("theta^3=-1", F5))
    assert defining_polynomial([0, 1, 5], root6) == P_(F5, -1, 2, -2, 1)
    with pytest.raises(NotInvariant):
        defining_polynomial([0, 1], root58)


def test_isometry_substitute_examples(root58):
    a = P_(F5, 2, 0, 2, 0, 1)
    assert isometry_substitute(a, 1, 0, root58) == a
    w = P_(F5, 1, 2, 3, 4, 0, 1, 2, 3)
    rev = isometry_substitute(w, -1, 0, root58)
    assert rev.vector(8) == [1, 3, 2, 1, 0, 4, 3, 2]
    # theta^(t|P|) f_P(theta^-t X) with t = 2, |P| = 4
    sub = isometry_substitute(a, 1, 2, root58)
    assert sub.scale(root58.to_base(root58.power(8))) == P_(F5, 2, 0, -2, 0, 1)
    assert sub.monic() == P_(F5, 2, 0, -2, 0, 1)
    with pytest.raises(InvalidPermutation):
        isometry_substitute(a, 2, 0, root58)
    with pytest.raises(InvalidPermutation):
        isometry_substitute(a, 1, 1, root58)


def test_image_defining_polynomial_examples(root58):
    fP = P_(F5, 2, 0, 2, 0, 1)
    assert image_defining_polynomial(fP, 1, 0, root58) == fP
    assert image_defining_polynomial(fP, 1, 2, root58) == P_(F5, 2, 0, -2, 0, 1)
    assert image_defining_polynomial(fP, -1, 2, root58) == P_(F5, -2, 0, -1, 0, 1)


def test_alternating():
    assert alternating(P_(F3, 1, 1, 1, 1, 1)) == P_(F3, 1, -1, 1, -1, 1)
    assert alternating(P_(F3, -1, 1)) == P_(F3, 1, 1)
    with pytest.raises(NotMonic):
        alternating(P_(F5, 1, 2))


def test_monic_reciprocal():
    assert monic_reciprocal(P_(F5, 1, 1)) == P_(F5, 1, 1)
    h = P_(F3, 1, 2, 2, 2, 2, 1)
    assert monic_reciprocal(h) == h
    assert monic_reciprocal(P_(F5, -1, 2, -2, 1)) == P_(F5, -1, 2, -2, 1)
    with pytest.raises(ZeroConstantTerm):
        monic_reciprocal(P_(F5, 0, 1))
    with pytest.raises(NotMonic):
        monic_reciprocal(P_(F5, 1, 2))


def test_text_formats():
    f = parse_coeffs("2,0,2,0,1", F5)
    assert f == P_(F5, 2, 0, 2, 0, 1)
    assert format_coeffs(f) == "2,0,2,0,1"
    assert format_poly(P_(F5, 2, 0, 3, 0, 1)) == "X^4 - 2X^2 + 2"
    assert format_poly(P_(F5, 2, 0, 3, 0, 1), balanced=False) == "X^4 + 3X^2 + 2"
    assert format_poly(P_(F3, -1, 1)) == "X - 1"
    assert format_poly(Polynomial.zero(F3)) == "0"


def test_mod_xn1_folds_exponents():
    a = Polynomial.monomial(F5, 9, 3) + P_(F5, 1)
    assert poly_mod_xn1(a, 8) == P_(F5, 1, 3)


def test_factor_order_matches_cosets(root310):
    factors = factor_xn1(root310)
    assert [f.degree for f in factors] == [1, 4, 4, 1]
    assert factors == [P_(F3, -1, 1), P_(F3, 1, -1, 1, -1, 1), P_(F3, 1, 1, 1, 1, 1), P_(F3, 1, 1)]


# -- properties over a grid of (q, n) ------------------------------------------------

GRID = [
    (q, n)
    for q in (3, 5, 7, 9)
    for n in range(1, 13)
    if math.gcd(q, n) == 1 and (q, n) not in {(7, 11), (9, 11)}
]


def _all_supports(cp):
    for r in range(len(cp) + 1):
        for ids in itertools.combinations(range(len(cp)), r):
            yield cp.union(ids)


@pytest.mark.parametrize("q,n", GRID)
def test_cosets_factor_xn1(q, n):
    root = root_of_unity(field_of_order(q), n)
    prod = Polynomial.one(root.base)
    for f in factor_xn1(root):
        assert f.is_monic()
        prod = prod * f
    assert prod == x_n_minus_1(root.base, n)


@pytest.mark.parametrize("q,n", GRID)
def test_support_and_complement_multiply_to_xn1(q, n):
    root = root_of_unity(field_of_order(q), n)
    cp = cyclotomic_cosets(q, n)
    for P in itertools.islice(_all_supports(cp), 128):
        comp = [i for i in range(n) if i not in P]
        fP = defining_polynomial(P, root)
        assert fP.degree == len(P) and fP.is_monic()
        assert fP * defining_polynomial(comp, root) == x_n_minus_1(root.base, n)
        if fP.coeffs[0]:
            assert monic_reciprocal(fP) == defining_polynomial([-i for i in P], root)


@pytest.mark.parametrize("q,n", [(3, 8), (5, 8), (3, 10), (5, 6), (7, 12), (9, 10)])
def test_gcd_identity_small(q, n):
    root = root_of_unity(field_of_order(q), n)
    cp = cyclotomic_cosets(q, n)
    for P in _all_supports(cp):
        fP = defining_polynomial(P, root)
        for rho in all_qperms(q, n):
            assert image_defining_polynomial(fP, rho.s, rho.t, root) == defining_polynomial(rho.image(P), root)


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from([(5, 8), (3, 10), (7, 12), (9, 8), (13, 14)]),
    st.lists(st.integers(0, 12), min_size=1, max_size=14),
    st.data(),
)
def test_substitution_preserves_weight(qn, coeffs, data):
    q, n = qn
    root = root_of_unity(field_of_order(q), n)
    a = Polynomial.from_ints(root.base, coeffs[:n])
    rho = data.draw(st.sampled_from(list(all_qperms(q, n))))
    assert isometry_substitute(a, rho.s, rho.t, root).weight() == a.weight()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5, 9, 25]), st.lists(st.integers(0, 24), min_size=1, max_size=8))
def test_transforms_are_involutions(q, coeffs):
    F = field_of_order(q)
    a = Polynomial(F, [c % q for c in coeffs] + [1])
    assert alternating(alternating(a)) == a
    if a.coeffs[0]:
        assert monic_reciprocal(monic_reciprocal(a)) == a


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from([3, 5, 9]),
    st.lists(st.integers(0, 8), max_size=7),
    st.lists(st.integers(0, 8), min_size=1, max_size=5),
)
def test_divmod_and_gcd(q, xs, ys):
    F = field_of_order(q)
    a = Polynomial(F, [x % q for x in xs])
    b = Polynomial(F, [y % q for y in ys])
    if b.is_zero():
        return
    quo, rem = divmod(a, b)
    assert quo * b + rem == a and rem.degree < b.degree
    g = poly_gcd(a, b)
    assert g.is_monic() and (a % g).is_zero() and (b % g).is_zero()
