import math

import pytest

from fracineq import DomainError, beta, beta_inc, gamma, hyp2f1
from fracineq.quad import integrate_singular
from fracineq.specfun import beta_inc_result, hyp2f1_result


# --- gamma ---------------------------------------------------------------

@pytest.mark.parametrize("x", [0.1, 0.25, 0.5, 0.9, 1.0, 1.5, 2.0, 2.5,
                               3.7, 5.0, 7.3, 10.0, 20.5])
def test_gamma_against_libm(x):
    assert abs(gamma(x) - math.gamma(x)) <= 1e-13 * math.gamma(x)


def test_gamma_half_integer():
    assert abs(gamma(0.5) - math.sqrt(math.pi)) <= 1e-14
    assert abs(gamma(2.5) - 0.75 * math.sqrt(math.pi)) <= 1e-14


def test_gamma_integers_exact_values():
    for n, fact in ((1, 1.0), (2, 1.0), (3, 2.0), (4, 6.0), (5, 24.0), (6, 120.0)):
        assert abs(gamma(float(n)) - fact) <= 1e-12 * fact


@pytest.mark.parametrize("x", [0.15, 0.5, 1.0, 1.7, 2.3, 4.9, 8.5])
def test_gamma_recursion(x):
    assert abs(gamma(x + 1.0) - x * gamma(x)) <= 1e-12 * gamma(x + 1.0)


def test_gamma_quadrature_oracle():
    # int_0^1 (-ln s)^(x-1) ds = Gamma(x); the log singularity at s = 0
    # decays faster than any weight, so plain adaptive quadrature copes
    # once we cut the last sliver off and bound its contribution.
    for x in (1.5, 2.5, 3.0):
        res = integrate_singular(lambda s: (-math.log(s)) ** (x - 1.0),
                                 1e-14, 1.0, 0.0, 0.0)
        assert abs(res.value - gamma(x)) <= 1e-8


def test_gamma_domain():
    with pytest.raises(DomainError):
        gamma(0.0)
    with pytest.raises(DomainError):
        gamma(-1.5)


# --- beta ----------------------------------------------------------------

def test_beta_pinned():
    assert abs(beta(2.0, 3.0) - 1.0 / 12.0) <= 1e-15
    assert abs(beta(0.5, 0.5) - math.pi) <= 1e-13
    assert abs(beta(3.0, 3.0) - 1.0 / 30.0) <= 1e-15


@pytest.mark.parametrize("x,y", [(0.3, 2.7), (1.0, 1.0), (1.5, 4.0), (2.25, 0.5)])
def test_beta_symmetry(x, y):
    bx = beta(x, y)
    assert abs(bx - beta(y, x)) <= 1e-14 * abs(bx)


def test_beta_gamma_consistency():
    for x, y in ((1.5, 2.5), (0.7, 3.1), (4.0, 4.0)):
        expect = gamma(x) * gamma(y) / gamma(x + y)
        assert abs(beta(x, y) - expect) <= 1e-13 * expect


# --- incomplete beta -----------------------------------------------------

def test_beta_inc_pinned():
    # int_0^0.3 t (1-t) dt = 0.045 - 0.009
    assert abs(beta_inc(0.3, 2.0, 2.0) - 0.036) <= 1e-13
    # half-range symmetric case: B(1/2; y, y) = B(y, y) / 2
    assert abs(beta_inc(0.5, 3.0, 3.0) - 1.0 / 60.0) <= 1e-13


def test_beta_inc_limits():
    assert beta_inc(0.0, 2.0, 5.0) == 0.0
    with pytest.raises(DomainError):
        beta_inc(1.0, 2.0, 2.0)  # complete case lives in beta()
    with pytest.raises(DomainError):
        beta_inc(1.2, 2.0, 2.0)
    with pytest.raises(DomainError):
        beta_inc(0.5, 0.0, 2.0)


def test_beta_inc_reflection():
    # B(a; x, y) + B(1-a; y, x) = B(x, y)  (split the defining integral at a)
    for (a, x, y) in ((0.3, 2.5, 3.5), (0.62, 1.25, 0.75), (0.5, 4.0, 2.0)):
        total = beta_inc(a, x, y) + beta_inc(1.0 - a, y, x)
        assert abs(total - beta(x, y)) <= 1e-12 * max(1.0, beta(x, y))


def test_beta_inc_monotone_in_a():
    vals = [beta_inc(a, 2.5, 3.0) for a in (0.1, 0.3, 0.5, 0.7, 0.9)]
    assert all(u < v for u, v in zip(vals, vals[1:]))


def test_beta_inc_result_error_estimate():
    res = beta_inc_result(0.3, 2.5, 3.5)
    assert res.abs_error_estimate < 1e-10
    assert abs(res.value - beta_inc(0.3, 2.5, 3.5)) == 0.0


# --- 2F1 -----------------------------------------------------------------

def test_hyp2f1_at_zero_is_exactly_one():
    assert hyp2f1(1.3, 2.0, 3.7, 0.0) == 1.0
    res = hyp2f1_result(0.5, 1.0, 2.0, 0.0)
    assert res.value == 1.0 and res.abs_error_estimate == 0.0


def test_hyp2f1_pinned_closed_forms():
    # 2F1(1,1;2;z) = -ln(1-z)/z
    assert abs(hyp2f1(1.0, 1.0, 2.0, 0.5) - 2.0 * math.log(2.0)) <= 1e-14
    # 2F1(1/2,1;2;z) = 2 (1 - sqrt(1-z)) / z
    assert abs(hyp2f1(0.5, 1.0, 2.0, 0.75) - 4.0 / 3.0) <= 1e-13


def test_hyp2f1_terminating_series():
    # a = -2 terminates after three terms: 1 - 2*(1/4)*(1/3)*2... pinned 38/45
    assert abs(hyp2f1(-2.0, 1.0, 4.0, 1.0 / 3.0) - 38.0 / 45.0) <= 1e-15


@pytest.mark.parametrize("a,b,c,z", [
    (0.5, 1.5, 3.0, 0.3),
    (-1.5, 1.0, 3.5, 0.6),
    (2.0, 1.0, 4.0, 0.9),
    (0.25, 2.0, 2.5, 0.94),
])
def test_hyp2f1_euler_integral_oracle(a, b, c, z):
    # 2F1(a,b;c;z) = 1/B(b, c-b) int_0^1 t^(b-1) (1-t)^(c-b-1) (1-z t)^(-a) dt
    res = integrate_singular(lambda t: (1.0 - z * t) ** (-a),
                             0.0, 1.0, b - 1.0, c - b - 1.0)
    expect = res.value / beta(b, c - b)
    assert abs(hyp2f1(a, b, c, z) - expect) <= 1e-10 * max(1.0, abs(expect))


def test_hyp2f1_domain():
    with pytest.raises(DomainError):
        hyp2f1(1.0, 2.0, 2.0, 0.5)   # needs c > b
    with pytest.raises(DomainError):
        hyp2f1(1.0, 0.0, 2.0, 0.5)   # needs b > 0
    with pytest.raises(DomainError):
        hyp2f1(1.0, 1.0, 2.0, 1.0)   # series domain is z < 1
    with pytest.raises(DomainError):
        hyp2f1(1.0, 1.0, 2.0, -0.1)
