"""Coherent-state calculus, the lifted group action, and the vacuum structure."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from qcurrent import (CoherentCombo, CurrentElement, DeformationParam,
                      DirectIntegralVector, apply_pi, apply_u,
                      build_classical_generators, build_disk_mesh,
                      check_highest_weight, dense_crosscheck, exp_current,
                      isometry_residual, phi, pi_finite_difference, vacuum)
from qcurrent import test_function_preset as preset
from qcurrent.fock import dense_inner, dense_tail_bound
from qcurrent.suites import seeded_one_particle, seeded_su11_current

MESH = build_disk_mesh(2, 4)
DEG = 8


def _vec(seed, norm=0.8):
    return seeded_one_particle(MESH, np.random.default_rng(seed), DEG, norm=norm)


def test_exp_inner_closed_forms():
    zero = DirectIntegralVector.zeros(MESH, DEG)
    vac = CoherentCombo.exp_vector(zero)
    assert vac.inner(vac) == 1.0
    h = _vec(1)
    eh = CoherentCombo.exp_vector(h)
    assert_allclose(eh.inner(eh), np.exp(h.norm_sq()), rtol=1e-13)
    h2 = _vec(2)
    assert_allclose(eh.inner(CoherentCombo.exp_vector(h2)),
                    np.exp(h.inner(h2)), rtol=1e-13)


def test_ray_inner_at_the_origin_is_one_particle():
    zero = DirectIntegralVector.zeros(MESH, DEG)
    v, w = _vec(3), _vec(4)
    rv = CoherentCombo.ray_vector(v, zero)
    rw = CoherentCombo.ray_vector(w, zero)
    assert rv.inner(CoherentCombo.exp_vector(zero)) == 0.0
    assert_allclose(rv.inner(rw), v.inner(w), rtol=1e-13)


def test_inner_is_conjugate_symmetric_on_combos():
    h, h2, v = _vec(5), _vec(6), _vec(7)
    x = CoherentCombo.exp_vector(h, 0.3 - 0.4j) + CoherentCombo.ray_vector(v, h2, 1.1j)
    y = CoherentCombo.ray_vector(h, v) - CoherentCombo.exp_vector(h2, 0.25)
    assert_allclose(x.inner(y), np.conj(y.inner(x)), rtol=1e-12)
    assert x.norm_sq() >= 0 and y.norm_sq() >= 0


def test_apply_u_identity_current():
    ident = exp_current(CurrentElement.from_entries(MESH), 1.0)
    h = _vec(8)
    out = apply_u(ident, CoherentCombo.exp_vector(h))
    assert len(out.terms) == 1
    assert out.terms[0].weight == 1.0
    assert np.array_equal(out.terms[0].h.coeffs, h.coeffs)


def test_apply_u_upper_current_fixes_vacuum():
    # zero lower-left entries: b vanishes, the vacuum is fixed with weight 1
    up = exp_current(CurrentElement.from_entries(MESH, beta=0.3), 1.0)
    out = apply_u(up, vacuum(MESH, DEG))
    assert out.terms[0].weight == 1.0
    assert not np.any(out.terms[0].h.coeffs)


def test_apply_u_isometry_seeded():
    # needs headroom above the occupied modes: the lifted action spreads a
    # degree-6 profile well past degree 8, so the check runs at degree 32
    rng = np.random.default_rng(99)
    for _ in range(5):
        f = exp_current(seeded_su11_current(MESH, rng, 0.25), 1.0)
        h = seeded_one_particle(MESH, rng, 32, max_mode=6, norm=0.8)
        assert isometry_residual(f, h) < 1e-9


def test_apply_u_ray_product_rule():
    # Ray(v, h) is the s-derivative of Exp[h + s v]; the image under the
    # group action must match the finite difference of the Exp images
    rng = np.random.default_rng(13)
    f = exp_current(seeded_su11_current(MESH, rng, 0.25), 1.0)
    v, h = _vec(14, norm=0.5), _vec(15)
    out = apply_u(f, CoherentCombo.ray_vector(v, h))
    s = 1e-5
    fd = (apply_u(f, CoherentCombo.exp_vector(h + v * s))
          - apply_u(f, CoherentCombo.exp_vector(h + v * (-s)))) * (1.0 / (2 * s))
    assert out.distance(fd) < 1e-8


def test_apply_pi_zero_current_is_zero():
    zero_cur = CurrentElement.from_entries(MESH)
    out = apply_pi(zero_cur, _vec(16))
    assert out.norm() < 1e-15


def test_apply_pi_matches_finite_difference():
    sigma = seeded_su11_current(MESH, np.random.default_rng(17), 0.4)
    h = _vec(18)
    ref = apply_pi(sigma, h, include_phase=False, exact_theta=True)
    d1 = pi_finite_difference(sigma, h, 5e-2).distance(ref)
    d2 = pi_finite_difference(sigma, h, 2.5e-2).distance(ref)
    assert d1 / d2 == pytest.approx(4.0, rel=0.15)


def test_phase_gap_is_exactly_phi():
    # the finite difference can never see the -i*phi term; its cost on a
    # coherent state is |phi| * exp(||h||^2 / 2) on the nose
    xi = preset("constant:1")
    _, _, h_cur = build_classical_generators(xi, MESH)
    h = _vec(19)
    a = apply_pi(h_cur, h, include_phase=True, exact_theta=True)
    b = apply_pi(h_cur, h, include_phase=False, exact_theta=True)
    want = abs(phi(h_cur)) * np.exp(0.5 * h.norm_sq())
    assert_allclose(a.distance(b), want, rtol=1e-12)


def test_highest_weight_constant_function():
    rep = check_highest_weight(preset("constant:1"), DeformationParam(2.0), MESH, DEG)
    assert rep.e_norm == 0.0
    assert rep.f_exp_weight == 0.0
    assert rep.f_node_deviation < 1e-15
    assert rep.h_ray_norm == 0.0
    assert_allclose(rep.f_one_particle_norm_sq, np.pi ** 2, atol=1e-10)
    assert_allclose(rep.h_eigenvalue, -0.5j * np.pi, atol=1e-13)
    assert_allclose(rep.character_value, -0.5j * np.pi, atol=1e-13)
    # the alternative reading deforms the test function; at xi = 1 it is -i*pi
    assert_allclose(rep.comparison_value, -1j * np.pi, atol=1e-12)


def test_highest_weight_over_grid():
    for spec in ("constant:1", "radial_sq", "gaussian"):
        for q in (0.5, 0.9, 1.1, 2.0):
            rep = check_highest_weight(preset(spec), DeformationParam(q), MESH, DEG)
            assert rep.e_norm < 1e-10
            assert rep.f_exp_weight < 1e-12
            assert rep.f_node_deviation < 1e-12
            assert rep.h_ray_norm < 1e-10


def test_highest_weight_zero_function():
    rep = check_highest_weight(preset("constant:0"), DeformationParam(2.0), MESH, DEG)
    assert rep.e_norm == 0.0
    assert rep.f_one_particle_norm_sq == 0.0
    assert rep.h_eigenvalue == 0.0


def test_mu_scaling():
    rep1 = check_highest_weight(preset("gaussian"), DeformationParam(2.0), MESH, DEG)
    rep2 = check_highest_weight(preset("gaussian"), DeformationParam(2.0),
                                MESH.scaled(2.0), DEG)
    assert_allclose(rep2.character_value, 2 * rep1.character_value, rtol=1e-12)
    assert_allclose(rep2.f_one_particle_norm_sq, 2 * rep1.f_one_particle_norm_sq,
                    rtol=1e-12)


def test_classical_limit_of_the_report():
    xi = preset("radial_sq")
    small = check_highest_weight(xi, DeformationParam.from_gamma(1e-3), MESH, DEG)
    classical = check_highest_weight(xi, DeformationParam(1.0), MESH, DEG)
    gap = abs(small.f_one_particle_norm_sq - classical.f_one_particle_norm_sq)
    assert gap < 1e-5
    assert_allclose(small.h_eigenvalue, classical.h_eigenvalue, rtol=1e-12)


DENSE_MESH = build_disk_mesh(1, 2)
DENSE_DEG = 3


def _dense_vec(seed, norm):
    return seeded_one_particle(DENSE_MESH, np.random.default_rng(seed),
                               DENSE_DEG, max_mode=DENSE_DEG, norm=norm)


def test_dense_backend_vacuum_is_exact():
    vac = vacuum(DENSE_MESH, DENSE_DEG)
    assert dense_inner(vac, vac, 4) == 1.0
    dev, tail = dense_crosscheck(vac, vac, max_level=4)
    assert dev == 0.0 and tail == 0.0


def test_dense_backend_exp_and_ray_pairs():
    h, h2 = _dense_vec(20, 0.5), _dense_vec(21, 0.5)
    v, v2 = _dense_vec(22, 1.0), _dense_vec(23, 1.0)
    pairs = [
        (CoherentCombo.exp_vector(h), CoherentCombo.exp_vector(h2)),
        (CoherentCombo.ray_vector(v, h), CoherentCombo.exp_vector(h2)),
        (CoherentCombo.ray_vector(v, h), CoherentCombo.ray_vector(v2, h2)),
    ]
    for a, b in pairs:
        dev, tail = dense_crosscheck(a, b, max_level=4)
        assert dev <= tail + 1e-12


def test_dense_backend_group_images():
    f = exp_current(seeded_su11_current(DENSE_MESH, np.random.default_rng(24), 0.1), 1.0)
    a = apply_u(f, CoherentCombo.exp_vector(_dense_vec(25, 0.5)))
    b = apply_u(f, CoherentCombo.exp_vector(_dense_vec(26, 0.5)))
    dev, tail = dense_crosscheck(a, b, max_level=4)
    assert dev <= tail + 1e-12


def test_dense_tail_bound_shrinks_with_level():
    h, h2 = _dense_vec(27, 0.5), _dense_vec(28, 0.5)
    a, b = CoherentCombo.exp_vector(h), CoherentCombo.exp_vector(h2)
    t3 = dense_tail_bound(a, b, 3)
    t4 = dense_tail_bound(a, b, 4)
    assert 0 < t4 < t3
