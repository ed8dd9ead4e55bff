"""Direct-integral vectors/operators and the three derivative functionals."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from qcurrent import (CurrentElement, DirectIntegralVector, DomainError,
                      build_disk_mesh, cocycle_vector, exp_current, lift_cocycle,
                      lift_operator, mobius_operator, nu, nu_finite_difference,
                      phi, theta, theta_exact)
from qcurrent import test_function_preset as preset
from qcurrent.suites import seeded_one_particle, seeded_su11_current

MESH = build_disk_mesh(2, 4)
DEG = 8


def _rand_vec(seed, norm=1.0):
    return seeded_one_particle(MESH, np.random.default_rng(seed), DEG, norm=norm)


def test_inner_is_weighted_and_conjugate_symmetric():
    u, v = _rand_vec(1), _rand_vec(2)
    direct = sum(w * np.vdot(vr, ur)  # vdot conjugates its first argument
                 for w, ur, vr in zip(MESH.weights, u.coeffs, v.coeffs))
    assert_allclose(u.inner(v), direct, rtol=1e-13)
    assert_allclose(u.inner(v), np.conj(v.inner(u)), rtol=1e-13)
    assert u.norm_sq() > 0


def test_vector_shape_validation():
    with pytest.raises(DomainError):
        DirectIntegralVector(MESH, np.zeros((3, DEG + 1), dtype=complex))


def test_lift_operator_is_block_diagonal():
    f = exp_current(seeded_su11_current(MESH, np.random.default_rng(3), 0.3), 1.0)
    op = lift_operator(f, DEG)
    # a vector supported at one node stays supported at that node
    one = DirectIntegralVector.zeros(MESH, DEG)
    one.coeffs[2, 0] = 1.0
    out = op.apply(one)
    mask = np.ones(MESH.n_nodes, dtype=bool)
    mask[2] = False
    assert np.count_nonzero(out.coeffs[mask]) == 0


def test_lift_matches_single_site_operator():
    from qcurrent.bergman import BergmanVector, GroupElement2x2
    f = exp_current(seeded_su11_current(MESH, np.random.default_rng(4), 0.3), 1.0)
    op = lift_operator(f, DEG)
    v = _rand_vec(5)
    out = op.apply(v)
    for i in (0, MESH.n_nodes - 1):
        gi = GroupElement2x2(*f.mats[i].ravel())
        site = mobius_operator(gi, DEG).apply(BergmanVector(v.coeffs[i]))
        assert_allclose(out.coeffs[i], site.coeffs, rtol=1e-12)


def test_lift_cocycle_rows():
    from qcurrent.bergman import GroupElement2x2
    f = exp_current(seeded_su11_current(MESH, np.random.default_rng(6), 0.3), 1.0)
    vec = lift_cocycle(f, DEG)
    gi = GroupElement2x2(*f.mats[1].ravel())
    assert_allclose(vec.coeffs[1], cocycle_vector(gi, DEG).coeffs, rtol=1e-12)


def test_lift_errors_name_the_node():
    mats = np.broadcast_to(np.eye(2), (MESH.n_nodes, 2, 2)).copy()
    mats[3] = [[0.6, 0.0], [0.0, 1.0 / 0.6]]  # fine
    mats[5] = [[1.0, 0.0], [1.5, 1.0]]
    mats[5, 0, 0] = 0.5  # |c/a| = 3, outside the expansion disk; det fixed below
    mats[5, 1, 1] = 2.0
    from qcurrent.current import GroupCurrent
    with pytest.raises(DomainError, match="node 5"):
        lift_operator(GroupCurrent(MESH, mats), DEG)


def test_theta_closed_form_matches_finite_difference():
    sigma = seeded_su11_current(MESH, np.random.default_rng(7), 0.4)
    fd = theta(sigma, DEG, step=1e-3, richardson=True)
    assert (fd - theta_exact(sigma, DEG)).max_abs() < 1e-9


def test_theta_is_linear():
    rng = np.random.default_rng(8)
    s1 = seeded_su11_current(MESH, rng, 0.4)
    s2 = seeded_su11_current(MESH, rng, 0.4)
    lin = theta_exact(0.7 * s1 + (-1.3) * s2, DEG) \
        - (0.7 * theta_exact(s1, DEG) + (-1.3) * theta_exact(s2, DEG))
    assert lin.max_abs() < 1e-12


def test_theta_requires_trace_free():
    bad = CurrentElement.from_entries(MESH, alpha=1.0, delta=0.0)
    with pytest.raises(DomainError, match="node"):
        theta(bad, DEG)
    with pytest.raises(DomainError, match="node"):
        theta_exact(bad, DEG)


def test_nu_closed_form():
    # unit lower-left entry: nu is sqrt(pi) * lambda on the constant mode
    unit = CurrentElement.from_entries(MESH, lambda_lower=1.0)
    v = nu(unit, DEG)
    assert_allclose(v.coeffs[:, 0], np.sqrt(np.pi), rtol=1e-15)
    assert np.count_nonzero(v.coeffs[:, 1:]) == 0
    assert_allclose(v.norm_sq(), np.pi ** 2, atol=1e-12)


def test_nu_finite_difference_converges_at_second_order():
    sigma = seeded_su11_current(MESH, np.random.default_rng(9), 0.4)
    ref = nu(sigma, DEG)
    d1 = (nu_finite_difference(sigma, DEG, 2e-2) - ref).norm()
    d2 = (nu_finite_difference(sigma, DEG, 1e-2) - ref).norm()
    assert d1 / d2 == pytest.approx(4.0, rel=0.1)


def test_phi_is_the_weighted_alpha_integral():
    xi = preset("constant:1")
    half = CurrentElement.from_entries(MESH, alpha=xi.sample(MESH) / 2,
                                       delta=-xi.sample(MESH) / 2)
    assert_allclose(phi(half), np.pi / 2, atol=1e-12)
    sigma = seeded_su11_current(MESH, np.random.default_rng(10), 0.4)
    assert_allclose(phi(sigma), MESH.integrate(sigma.alpha), rtol=1e-13)


def test_operator_algebra():
    s = seeded_su11_current(MESH, np.random.default_rng(11), 0.4)
    t1 = theta_exact(s, DEG)
    v = _rand_vec(12)
    assert_allclose((2.0 * t1).apply(v).coeffs, (t1.apply(v) * 2.0).coeffs, rtol=1e-14)
    assert_allclose(t1.compose(t1).apply(v).coeffs, t1.apply(t1.apply(v)).coeffs,
                    rtol=1e-12)
