import math

import pytest

import casimir_landau as cl


def test_reduce_electron_at_one_tesla():
    pt = cl.electron(1.0, 0)
    assert pt.alpha * pt.x == pytest.approx(1.653e-12, rel=1e-3)
    assert pt.omega_c == pytest.approx(1.75882001076e11, rel=1e-9)
    assert not pt.nonrelativistic_warning


def test_zero_field_is_a_domain_error():
    with pytest.raises(cl.DomainError, match="x = 0"):
        cl.reduce(cl.PhysicalSetup(field=0.0))
    with pytest.raises(ValueError):
        cl.electron(0.0)


def test_budget_channels_add_up():
    for n in (0, 3, 20):
        b = cl.assemble(cl.make_point(cl.fine_structure, 1e-6, n))
        assert cl.channel_sum(b) == pytest.approx(b.total_qv, rel=1e-12)
        assert b.lenz == pytest.approx(2 * b.spin, rel=1e-15)


def test_rates_and_crossover():
    assert cl.rate_ledger(cl.electron(1.0, 0)).A_n == 0.0
    ledger = cl.rate_ledger(cl.electron(1.0, 1))
    assert ledger.conservation_sum() == 0.0
    assert ledger.A_n == pytest.approx(0.3877, rel=1e-3)
    assert cl.crossover_level(cl.electron(1.0, 0)) == pytest.approx(111.5, abs=0.1)
    assert cl.crossover_level(cl.make_point(cl.fine_structure, 2 / math.e, 0)) == \
        pytest.approx(math.sqrt(6), rel=1e-8)


def test_mode_integrals():
    spin = cl.spin_integral(1.0)
    assert spin.converged
    assert spin.value == pytest.approx(2 - math.pi / 2, rel=1e-10)
    assert cl.recoil_orbital_integral().value == pytest.approx(1.0, abs=1e-8)

    xs = [1e-4, 1e-5, 1e-6, 1e-7, 1e-8]
    fit = cl.fit_log_asymptote(xs, [cl.spin_integral(x).value for x in xs])
    assert fit.slope == pytest.approx(1.0, abs=1e-2)

    longitudinal = [cl.longitudinal_value(n, 1e-6).value for n in range(6)]
    assert max(longitudinal) - min(longitudinal) < 1e-2 * max(longitudinal)
    assert cl.longitudinal_raw(0, 1e-6).divergent


def test_ladder_oracles():
    for f in (lambda e: 1.0, lambda e: e, lambda e: 1 / (e + 3)):
        for n in (0, 1, 2, 5):
            assert cl.ladder.eps_identity_residual(f, n) < 1e-12
    assert cl.ladder.dipole_identity_residual(2, 3, 8) < 1e-12
    assert cl.ladder.lenz_diagonal(2, 1) == pytest.approx(4.0)
    assert cl.ladder.orbital_transition_weight(3, 4) == pytest.approx(-4.0)
    value = cl.ladder.resolvent_sequence(1, 1e10, "c H c H c+ H c+")
    assert abs(value.real) * 1e30 == pytest.approx(6.0, rel=1e-9)
