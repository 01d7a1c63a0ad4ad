import math

import pytest

import anhosc


def test_harmonic_limit():
    p = anhosc.ModelParams(a=0.0, b=0.5, beta=1.0, x_f=0.0)
    r = anhosc.full_propagator(p)
    assert r.status == "ok"
    assert r.value == pytest.approx(1 / math.sqrt(2 * math.pi * math.sinh(1.0)), rel=1e-12)
    assert r.polynomial_factor == 1.0


def test_propagator_pieces_multiply():
    p = anhosc.ModelParams(a=0.1, b=1.0, beta=0.5, x_f=0.3)
    r = anhosc.full_propagator(p, anhosc.TruncationPolicy(p_max=2))
    v = r.harmonic_prefactor * math.exp(r.harmonic_exponent + r.universal_exponent) * r.polynomial_factor
    assert r.value == pytest.approx(v, rel=1e-14)
    assert len(r.tail_estimates) == 3


def test_lattice_oracle():
    p = anhosc.ModelParams(a=0.1, b=1.0, beta=0.3, x_f=0.2)
    for n in (2, 3):
        assert anhosc.wn_series_exact(p, n) == pytest.approx(anhosc.wn_quadrature(p, n), rel=1e-9)


def test_closed_form_ratio():
    p = anhosc.ModelParams(a=1.0, b=0.5, beta=1.0, x_f=1.0)
    assert anhosc.quartic_ratio_closed_form(p) == pytest.approx(0.168338863558060, rel=1e-10)


def test_shuffle_from_python():
    comb = anhosc.shuffle_pair(0, [0, 0])
    assert comb == {(0, 0, 0): (3, 1)}
    red = anhosc.reduce_against_zeros("alpha_a", 3, 2, 0, 0)
    assert red[(2, 0, 0)] == (2, 1)


def test_matrix_matches_symbol():
    p = anhosc.ModelParams(a=0.1, b=1.0, beta=1.0, x_f=0.5)
    assert anhosc.lambda_from_matrix(4, 2, 1, p, 8) == pytest.approx(anhosc.lambda_symbol(4, 2, 3, p, 8), rel=1e-12)


def test_poles():
    found = anhosc.locate_poles_numeric(1.0, 4.0)
    assert found[2:] == pytest.approx([0.5, 2.5], abs=1e-10)
    with pytest.raises(anhosc.PoleHitError):
        anhosc.gamma_product(0.5, 1.0)


def test_errors_map_to_python():
    with pytest.raises(anhosc.SingularFrequencyError):
        anhosc.full_propagator(anhosc.ModelParams(a=0.1, b=-4.9348))
    with pytest.raises(anhosc.DomainError):
        anhosc.full_propagator(anhosc.ModelParams(a=0.1), anhosc.TruncationPolicy(poincare_order=3, p_max=9))
    assert issubclass(anhosc.DomainError, anhosc.Error)


def test_validation_suite():
    checks = anhosc.run_suite("spectral")
    assert checks and all(c["passed"] for c in checks)
