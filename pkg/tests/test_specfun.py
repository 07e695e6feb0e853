import math

import numpy as np
import pytest

from optocool import specfun
from optocool.errors import DomainError

from conftest import oracle_bessel_j, oracle_first_j1_maximum


def test_j0_at_origin():
    assert specfun.bessel_j(0, 0.0) == 1.0


def test_j1_at_origin():
    assert specfun.bessel_j(1, 0.0) == 0.0


def test_j1_at_one_against_series_oracle():
    # 25-term ascending series, summed exactly and rounded once
    expected = oracle_bessel_j(1, 1.0, terms=25)
    assert expected == pytest.approx(0.4400505857449335, abs=1e-15)
    assert specfun.bessel_j(1, 1.0) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("k", range(7))
def test_series_oracle_agreement(k):
    for x in np.linspace(-30.0, 30.0, 41):
        ours = specfun.bessel_j(k, float(x))
        ref = oracle_bessel_j(k, float(x))
        if abs(ref) > 1e-13:
            assert abs(ours - ref) <= 1e-12 * abs(ref)
        else:
            assert abs(ours - ref) <= 1e-13


@pytest.mark.parametrize("k", range(7))
def test_parity(k):
    for x in (0.3, 1.7, 4.2, 9.5, 21.0, 30.0):
        assert specfun.bessel_j(k, -x) == (-1) ** k * specfun.bessel_j(k, x)


def test_vector_matches_scalar():
    xs = np.linspace(-6.0, 6.0, 101)
    vec = specfun.bessel_j(2, xs)
    for x, v in zip(xs, vec):
        assert v == specfun.bessel_j(2, float(x))


def test_scaled_values_at_origin():
    for k in range(7):
        assert specfun.bessel_j_scaled(k, 0.0) == pytest.approx(
            1.0 / (2.0**k * math.factorial(k)), rel=1e-15
        )


def test_scaled_consistency():
    for k in range(1, 7):
        for x in (0.5, 2.0, 7.0):
            assert specfun.bessel_j_scaled(k, x) * x**k == pytest.approx(
                specfun.bessel_j(k, x), rel=1e-12
            )


def test_domain_errors():
    with pytest.raises(DomainError):
        specfun.bessel_j(0, 30.5)
    with pytest.raises(DomainError):
        specfun.bessel_j(7, 1.0)
    with pytest.raises(DomainError):
        specfun.bessel_j(-1, 1.0)
    with pytest.raises(DomainError):
        specfun.bessel_j(0, float("nan"))


@pytest.mark.parametrize("x", [1.0, 2.0, 10.0])
def test_recurrence_identities_examples(x):
    res_a, res_b = specfun.bessel_identity_residuals(x)
    assert res_a <= 1e-10
    assert res_b <= 1e-10


def test_recurrence_identities_log_grid():
    for x in np.geomspace(1e-3, 30.0, 40):
        res_a, res_b = specfun.bessel_identity_residuals(float(x))
        assert res_a <= 1e-10
        assert res_b <= 1e-10


def test_recurrence_at_zero_rejected():
    with pytest.raises(DomainError):
        specfun.bessel_identity_residuals(0.0)


def test_rwa_series_nbar_zero():
    # only the k = 0 term survives, so the partial sum equals the limit phi0
    assert specfun.rwa_series_check(0.06, 0.0, 1) == 0.0


def test_rwa_series_converged():
    assert specfun.rwa_series_check(0.06, 100.0, 20) <= 1e-12


def test_rwa_series_truncation_decreases():
    coarse = specfun.rwa_series_check(0.2, 25.0, 2)
    fine = specfun.rwa_series_check(0.2, 25.0, 10)
    assert fine < coarse


def test_rwa_series_monotone_until_floor():
    values = [specfun.rwa_series_check(0.2, 25.0, k) for k in range(1, 14)]
    floor = 1e-15
    for a, b in zip(values, values[1:]):
        if a <= floor:
            break
        assert b <= a


def test_rwa_series_domain():
    with pytest.raises(DomainError):
        specfun.rwa_series_check(-0.1, 1.0, 3)
    with pytest.raises(DomainError):
        specfun.rwa_series_check(0.5, 1e6, 3)
    with pytest.raises(DomainError):
        specfun.rwa_series_check(0.1, 1.0, 0)


def test_first_j1_maximum_location():
    # bracketed root of J0 - J2 = 2 J1', re-derived with the series oracle
    expected = oracle_first_j1_maximum()
    assert abs(expected - 1.8411837813406593) < 1e-12
    assert specfun.first_j1_maximum() == pytest.approx(expected, abs=1e-12)


def test_j1_extrema_in_range():
    roots = specfun.j1_extrema(6.0)
    assert len(roots) == 2
    assert roots[0] == pytest.approx(1.8411837813406593, abs=1e-10)
    assert roots[1] == pytest.approx(5.3314427735250325, abs=1e-8)
