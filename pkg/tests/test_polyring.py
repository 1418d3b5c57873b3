"""Ring arithmetic, substitution, division and evaluation checks.

Products are verified against a naive double-loop convolution oracle that
shares no code with the package, and the ring axioms are property-tested
on random small polynomials.
"""

import cmath

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trident.polyring import (DivisionByZeroPolynomial, MultiPoly, NotDivisible,
                              SpecMap, UniPoly, mp_divide_exact, poly_mul,
                              poly_substitute, up_divide_exact, up_eval_complex,
                              up_gcd, up_square_free)
from trident.specialize import SpecId


# ---------------------------------------------------------------- oracles

def naive_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """O(mn) convolution over term pairs, accumulated independently."""
    acc: dict = {}
    for ta in a.terms():
        for tb in b.terms():
            key = (ta.exp_w + tb.exp_w, ta.exp_x + tb.exp_x,
                   ta.exp_y + tb.exp_y, ta.exp_z + tb.exp_z)
            acc[key] = acc.get(key, 0) + ta.coeff * tb.coeff
    return MultiPoly(acc)


def naive_substitute(p: MultiPoly, s: SpecMap) -> UniPoly:
    """Term-wise substitution without shared power caches."""
    total = UniPoly.zero()
    for t in p.terms():
        term = UniPoly.constant(t.coeff)
        for image, e in zip(s.images, (t.exp_w, t.exp_x, t.exp_y, t.exp_z)):
            for _ in range(e):
                term = term * image
        total = total + term
    return total


# ------------------------------------------------------------- strategies

exponents = st.integers(min_value=0, max_value=4)
coeffs = st.integers(min_value=-9, max_value=9)

multi_polys = st.lists(
    st.tuples(exponents, exponents, exponents, exponents, coeffs),
    min_size=0, max_size=6,
).map(MultiPoly)

uni_polys = st.lists(coeffs, min_size=0, max_size=7).map(UniPoly)

V = {name: MultiPoly.variable(name) for name in "wxyz"}


# ------------------------------------------------------------- MultiPoly

class TestMultiPolyBasics:
    def test_mul_identity(self):
        p = V["w"] + V["x"] + V["y"]
        assert poly_mul(p, MultiPoly.one()) == p

    def test_square_expansion_by_hand(self):
        p = V["w"] + V["x"] + V["y"]
        expected = MultiPoly([
            (2, 0, 0, 0, 1), (1, 1, 0, 0, 2), (1, 0, 1, 0, 2),
            (0, 2, 0, 0, 1), (0, 1, 1, 0, 2), (0, 0, 2, 0, 1),
        ])
        assert poly_mul(p, p) == expected

    def test_product_against_naive_convolution(self):
        s1 = V["w"] + V["x"] + V["y"]
        s2 = V["w"] * V["x"] + V["w"] * V["y"] + V["x"] * V["y"] + V["z"]
        assert poly_mul(s1, s2) == naive_mul(s1, s2)
        # the product contains the wxy term with coefficient 1 + 1 + 1 = 3
        assert poly_mul(s1, s2).coefficient((1, 1, 1, 0)) == 3

    def test_terms_strictly_increasing_graded_lex(self):
        p = MultiPoly([(0, 0, 0, 1, 7), (2, 0, 0, 0, 1), (1, 1, 0, 0, -2)])
        keys = [(sum(m.exponents), m.exponents) for m in p.terms()]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_zero_coefficients_never_stored(self):
        p = MultiPoly([(1, 0, 0, 0, 5), (1, 0, 0, 0, -5)])
        assert p.is_zero() and len(p) == 0

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            MultiPoly([(-1, 0, 0, 0, 1)])

    def test_serialization_records(self):
        p = MultiPoly([(1, 1, 0, 1, 3), (0, 0, 0, 0, -2)])
        assert p.to_records() == [[0, 0, 0, 0, "-2"], [1, 1, 0, 1, "3"]]

    def test_evaluate_at_ones_is_coefficient_sum(self):
        p = MultiPoly([(1, 2, 0, 1, 4), (0, 0, 3, 0, -1)])
        assert p.evaluate(1, 1, 1, 1) == 3

    def test_power(self):
        p = V["w"] + 1
        assert p**0 == MultiPoly.one()
        assert p**3 == p * p * p


@settings(max_examples=150)
@given(multi_polys, multi_polys)
def test_mul_matches_naive_oracle(a, b):
    assert poly_mul(a, b) == naive_mul(a, b)


@settings(max_examples=100)
@given(multi_polys, multi_polys, multi_polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100)
@given(multi_polys)
def test_additive_cancellation_is_canonical(p):
    assert (p + (-p)).terms() == ()


@settings(max_examples=60)
@given(multi_polys, multi_polys, st.sampled_from(list(SpecId)))
def test_substitution_is_ring_homomorphism(a, b, spec_id):
    s = spec_id.spec_map
    assert poly_substitute(a * b, s) == poly_substitute(a, s) * poly_substitute(b, s)
    assert poly_substitute(a + b, s) == poly_substitute(a, s) + poly_substitute(b, s)


@settings(max_examples=60)
@given(multi_polys, st.sampled_from([SpecId.Z1, SpecId.Z2, SpecId.P6]))
def test_substitution_matches_naive(p, spec_id):
    s = spec_id.spec_map
    assert poly_substitute(p, s) == naive_substitute(p, s)


def test_substitute_all_ones_is_evaluation():
    p = MultiPoly([(1, 1, 0, 0, 2), (0, 0, 1, 2, 5)])
    image = poly_substitute(p, SpecId.Z0.spec_map)
    assert image == UniPoly.constant(p.evaluate(1, 1, 1, 1))


def test_mp_divide_exact_round_trip():
    a = V["w"] * V["x"] + 2 * V["z"] + 3
    b = V["w"] ** 2 - V["y"] * V["z"] + 1
    assert mp_divide_exact(a * b, b) == a
    with pytest.raises(NotDivisible):
        mp_divide_exact(a * b + V["w"], b)
    with pytest.raises(DivisionByZeroPolynomial):
        mp_divide_exact(a, MultiPoly.zero())


# -------------------------------------------------------------- UniPoly

class TestUniPolyDivision:
    def test_constant_quotient(self):
        assert up_divide_exact(UniPoly((4, 2)), UniPoly((2, 1))) == UniPoly.constant(2)

    def test_not_divisible_carries_degree(self):
        with pytest.raises(NotDivisible) as err:
            up_divide_exact(UniPoly((1, 0, 1)), UniPoly((1, 1)))
        assert err.value.remainder_degree == 0

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZeroPolynomial):
            up_divide_exact(UniPoly((1,)), UniPoly.zero())

    def test_zero_numerator(self):
        assert up_divide_exact(UniPoly.zero(), UniPoly((1, 2))) == UniPoly.zero()

    def test_non_integer_quotient_rejected(self):
        # (2z)(z) = 2z^2 but 2z^2 / 4z has no integer quotient
        with pytest.raises(NotDivisible):
            up_divide_exact(UniPoly((0, 0, 2)), UniPoly((0, 4)))


@settings(max_examples=150)
@given(uni_polys, uni_polys)
def test_divide_round_trip(den, q):
    if den.is_zero():
        return
    assert up_divide_exact(den * q, den) == q


def test_eval_complex_fixtures():
    assert up_eval_complex(UniPoly((2, 1)), -2) == 0
    # z^2 + 4z + 5 has zeros -2 +/- i (quadratic formula)
    root = complex(-2, 1)
    assert abs(up_eval_complex(UniPoly((5, 4, 1)), root)) < 1e-12
    # 13z^2 + 11z + 4 has zeros (-11 +/- i sqrt(87)) / 26
    root = (-11 + cmath.sqrt(-87)) / 26
    assert abs(up_eval_complex(UniPoly((4, 11, 13)), root)) < 1e-12


def test_palindrome_predicate():
    assert UniPoly((3, 10, 3)).is_palindromic()
    assert UniPoly((1,)).is_palindromic()
    assert not UniPoly((1, 2)).is_palindromic()
    assert not UniPoly.zero().is_palindromic()


@settings(max_examples=100)
@given(uni_polys)
def test_palindrome_matches_reversal(p):
    assert p.is_palindromic() == (bool(p.coeffs) and list(p.coeffs) == list(reversed(p.coeffs)))


def test_compose_and_shift():
    square = UniPoly((1, 2, 1))        # (z+1)^2
    assert square.shift_argument(-1) == UniPoly((0, 0, 1))
    inner = UniPoly((1, 0, 1))         # z^2 + 1
    assert UniPoly((0, 0, 1)).compose(inner) == inner * inner


def test_degree_and_normalization():
    assert UniPoly((0, 0, 0)).degree() == -1
    assert UniPoly((5, 0, 0)).degree() == 0
    assert UniPoly((0, 1)).degree() == 1


def test_serialization_strings():
    assert UniPoly((13, 12, 3)).to_strings() == ["13", "12", "3"]
    assert UniPoly.zero().to_strings() == []


# -------------------------------------------------- gcd and square-free

def test_gcd_of_shared_factor():
    z_plus_1 = UniPoly((1, 1))
    a = z_plus_1 * z_plus_1 * UniPoly((2, 1))
    b = z_plus_1 * UniPoly((3, 1))
    assert up_gcd(a, b) == z_plus_1


def test_gcd_coprime_is_constant():
    assert up_gcd(UniPoly((1, 1)), UniPoly((3, 1))).degree() == 0


def test_square_free_strips_multiplicity():
    z_plus_1 = UniPoly((1, 1))
    p = z_plus_1 ** 3 * UniPoly((1, 0, 1))
    sf = up_square_free(p)
    assert sf == z_plus_1 * UniPoly((1, 0, 1))


def test_square_free_of_square_free_is_primitive_self():
    p = UniPoly((2, 0, 2))   # 2(z^2 + 1)
    assert up_square_free(p) == UniPoly((1, 0, 1))
