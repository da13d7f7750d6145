from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cauchymle.numerics import (
    ComplexPoly,
    RationalPoly,
    RootFindingError,
    aberth_roots,
    compose_rational,
    poly_arith,
    poly_gcd,
)
from cauchymle.numerics.polynomial import _certified_coprime, _subresultant_gcd

X = RationalPoly.x()
small_ints = st.integers(-6, 6)
polys = st.lists(small_ints, min_size=1, max_size=6).map(RationalPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_divrem_factor():
    q, r = poly_arith(X**2 - 1, X - 1, "divrem")
    assert q == X + 1 and r.is_zero()


def test_mul_square():
    p = X**2 + 1
    assert poly_arith(p, p, "mul") == RationalPoly((1, 0, 2, 0, 1))


def test_add_sub():
    a, b = X**2 + 3, 2 * X - 1
    assert poly_arith(a, b, "add") == RationalPoly((2, 2, 1))
    assert poly_arith(a, b, "sub") == RationalPoly((4, -2, 1))


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_arith(X, RationalPoly(), "divrem")


def test_unknown_op():
    with pytest.raises(ValueError):
        poly_arith(X, X, "pow")


def test_zero_polynomial_normalisation():
    z = RationalPoly((0, 0, 0))
    assert z.is_zero() and z.degree == -1 and z.coeffs == ()
    assert RationalPoly((1, 2, 0, 0)).degree == 1


def test_coefficients_are_reduced_fractions():
    p = RationalPoly((Fraction(2, 4), Fraction(-3, 6)))
    assert p.coeffs == (Fraction(1, 2), Fraction(-1, 2))
    assert all(c.denominator > 0 for c in p.coeffs)


def test_exact_div_remainder_raises():
    with pytest.raises(ArithmeticError):
        (X**2 + 1).exact_div(X - 1)


def test_gcd_examples():
    assert poly_gcd(X**2 - 1, X - 1) == X - 1
    assert poly_gcd(X**2 + 1, X**2 + 2) == RationalPoly.constant(1)
    h = RationalPoly.from_roots([-3, -1, 2], leading=-1)
    g = poly_gcd(h * (X**2 + 3), h)
    assert g == X**3 + 2 * X**2 - 5 * X - 6
    assert g * h.leading == h


def test_gcd_of_zero_pair():
    with pytest.raises(ValueError):
        poly_gcd(RationalPoly(), RationalPoly())


def test_gcd_with_zero_argument_is_monic_other():
    assert poly_gcd(2 * X + 4, RationalPoly()) == X + 2


def test_coprimality_certificate_never_lies():
    f = RationalPoly.from_roots([1, 2, 3]).integer_coefficients()
    g = RationalPoly.from_roots([3, 5]).integer_coefficients()
    assert not _certified_coprime(f, g)
    assert _certified_coprime(f, RationalPoly.from_roots([4, 5]).integer_coefficients())


def test_subresultant_path_matches_certificate_path():
    a = RationalPoly.from_roots([Fraction(1, 3), 2, -5])
    b = RationalPoly.from_roots([Fraction(1, 3), 7])
    _, ia = a.to_integers()
    _, ib = b.to_integers()
    g = RationalPoly(_subresultant_gcd(ia, ib)).monic()
    assert g == X - Fraction(1, 3) == poly_gcd(a, b)


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys)
def test_mul_divrem_round_trip(a, b):
    q, r = poly_arith(poly_arith(a, b, "mul"), b, "divrem")
    assert q == a and r.is_zero()


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys)
def test_divrem_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=40, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert divmod(a, g)[1].is_zero()
    assert divmod(b, g)[1].is_zero()


@settings(max_examples=30, deadline=None)
@given(
    st.lists(small_ints, min_size=1, max_size=3, unique=True),
    st.lists(st.integers(7, 12), min_size=1, max_size=3, unique=True),
    st.lists(st.integers(-12, -7), min_size=1, max_size=2, unique=True),
)
def test_gcd_recovers_common_factor(common, ra, rb):
    g = RationalPoly.from_roots(common)
    a = RationalPoly.from_roots(ra) * g
    b = RationalPoly.from_roots(rb) * g
    assert poly_gcd(a, b) == g.monic()


def test_compose_square_at_mobius():
    A, B = compose_rational(X**2, RationalPoly.constant(1), X + 1, X)
    assert A == (X + 1) ** 2 and B == X**2


def test_compose_unreduced_then_reduced():
    f_n, f_d = X, X + 1
    A, B = compose_rational(f_n, f_d, X, X + 1)
    # Same rational function as x(x+1) / ((x+1)**2 + x(x+1)).
    assert A * ((X + 1) ** 2 + X * (X + 1)) == B * (X * (X + 1))
    g = poly_gcd(A, B)
    lead = B.exact_div(g).leading / 2
    assert A.exact_div(g) * (1 / lead) == X and B.exact_div(g) * (1 / lead) == 2 * X + 1


def test_compose_q_matches_float_evaluation():
    from cauchymle.algebraic import q_numerator_denominator
    from cauchymle.iterative import Q_map

    U, V = q_numerator_denominator([-1, 0, 1])
    A, B = compose_rational(U, V, U, V)
    z = 1 + 2j
    assert abs(A(z) / B(z) - Q_map([-1, 0, 1], z)) < 1e-12


@settings(max_examples=20, deadline=None)
@given(nonzero_polys, nonzero_polys, nonzero_polys, nonzero_polys)
def test_compose_agrees_pointwise(fn, fd, gn, gd):
    A, B = compose_rational(fn, fd, gn, gd)
    rng = np.random.default_rng(0)
    for z in rng.normal(size=20) + 1j * rng.normal(size=20):
        gnz, gdz = gn(z), gd(z)
        if abs(gdz) < 1e-3:
            continue
        w = gnz / gdz
        if abs(fd(w)) < 1e-3 or abs(B(z)) < 1e-6:
            continue
        expected = fn(w) / fd(w)
        assert abs(A(z) / B(z) - expected) <= 1e-10 * max(1.0, abs(expected))


def test_taylor_shift():
    p = X**3 - 2 * X + 5
    shifted = p.taylor_shift(Fraction(1, 2), 3)
    for w in (Fraction(0), Fraction(1), Fraction(-2, 3)):
        assert shifted(w) == p(Fraction(1, 2) + 3 * w)


def test_primitive_and_integer_coefficients():
    p = RationalPoly((Fraction(-3, 2), 0, Fraction(9, 4)))
    assert p.primitive().integer_coefficients() == [-2, 0, 3]
    assert (-p).primitive().integer_coefficients() == [-2, 0, 3]


def test_complex_poly_trims_and_evaluates():
    p = ComplexPoly(np.array([1, 0, 1, 0, 0], dtype=complex))
    assert p.degree == 2
    assert abs(p(1j)) == 0


def test_aberth_examples():
    r = aberth_roots(ComplexPoly(np.array([1, 0, 1], dtype=complex)))
    assert np.allclose(sorted(r, key=lambda z: z.imag), [-1j, 1j], atol=1e-12)
    r = aberth_roots(np.array([-1, 0, 0, 1], dtype=complex))
    unity = np.exp(2j * np.pi * np.arange(3) / 3)
    for u in unity:
        assert np.min(np.abs(r - u)) < 1e-12


def test_aberth_r5_root():
    from cauchymle.algebraic import build_Rn

    r = aberth_roots(build_Rn([-2, -1, 0, 1, 2]))
    expected = np.sqrt((np.sqrt(53 / 5) - 1) / 2) * 1j
    assert np.min(np.abs(r - expected)) < 1e-10


def test_aberth_residual_bound():
    p = ComplexPoly(np.array([3, -1, 4, -1, 5, -9, 2], dtype=complex))
    tol = 1e-13
    for z in aberth_roots(p, tol=tol):
        assert abs(p(z)) <= max(tol, 4 * 6 * np.finfo(float).eps) * p.magnitude_scale(z)


def test_aberth_extended_precision():
    R = RationalPoly.from_roots([Fraction(1, 10**6), 1, 10**6, -3])
    r = aberth_roots(R, precision=50)
    for t in (1e-6, 1.0, 1e6, -3.0):
        assert np.min(np.abs(r - t)) <= 1e-12 * max(1.0, abs(t))


def test_aberth_reports_non_convergence():
    p = RationalPoly.from_roots([1, 2, 3, 4, 5, 6, 7, 8])
    with pytest.raises(RootFindingError):
        aberth_roots(p, max_iter=1)


def test_aberth_rejects_constant():
    with pytest.raises(ValueError):
        aberth_roots(np.array([1.0 + 0j]))


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.complex_numbers(min_magnitude=0.1, max_magnitude=5, allow_nan=False, allow_infinity=False),
        min_size=1,
        max_size=8,
    )
)
def test_aberth_recovers_known_roots(roots):
    roots = np.array(roots)
    # Well-separated roots keep the conditioning bounded.
    if len(roots) > 1:
        d = np.abs(roots[:, None] - roots[None, :]) + np.eye(len(roots)) * 10
        if d.min() < 0.3:
            return
    c = np.array([1.0 + 0j])
    for z in roots:
        c = np.convolve(c, np.array([-z, 1.0]))
    found = aberth_roots(ComplexPoly(c))
    remaining = list(found)
    for z in roots:
        k = int(np.argmin([abs(w - z) for w in remaining]))
        assert abs(remaining.pop(k) - z) < 1e-8
