"""Coherent-vector calculus over the symmetric Fock space of a direct integral.

Vectors are finite combinations of two kinds of terms built from one-particle
vectors h, v:

    Exp[h]    = sum_n h^(x n) / sqrt(n!)
    Ray(v, h) = d/ds Exp[h + s v] at s = 0

All inner products reduce to closed forms in the one-particle pairings
(conjugate-linear in the second argument throughout):

    <Exp h, Exp h'>       = exp <h, h'>
    <Ray(v,h), Exp h'>    = <v, h'> exp <h, h'>
    <Ray(v,h), Ray(v',h')> = (<v, v'> + <v, h'> <h, v'>) exp <h, h'>

so nothing here ever materializes a tensor power.  The dense_* functions do
materialize them, level by level up to a cutoff, as an independent
cross-check with an explicit tail bound.

apply_u implements the group action

    u(g) Exp[h] = exp(-|b|^2/2 - <O h, b>) Exp[O h + b]

for the lifted Mobius operator O and lifted cocycle b of a group-valued
current; apply_pi is its derivative along exp(t*sigma) plus the central
phase -i*phi(sigma), which the finite difference of apply_u cannot see
(the phase multiplies u(g) only at second order in the flow parameter).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .current import CurrentElement, DiskMesh, GroupCurrent, exp_current
from .directint import (DirectIntegralVector, lift_cocycle, lift_operator,
                        nu, phi, theta, theta_exact)
from .errors import DomainError


@dataclass(frozen=True)
class FockTerm:
    """weight * Exp[h] when v is None, else weight * Ray(v, h)."""

    weight: complex
    h: DirectIntegralVector
    v: DirectIntegralVector | None = None


@dataclass(frozen=True)
class CoherentCombo:
    terms: tuple[FockTerm, ...]

    @classmethod
    def exp_vector(cls, h: DirectIntegralVector, weight: complex = 1.0) -> "CoherentCombo":
        return cls((FockTerm(weight, h),))

    @classmethod
    def ray_vector(cls, v: DirectIntegralVector, h: DirectIntegralVector,
                   weight: complex = 1.0) -> "CoherentCombo":
        return cls((FockTerm(weight, h, v),))

    def __add__(self, other: "CoherentCombo") -> "CoherentCombo":
        return CoherentCombo(self.terms + other.terms)

    def __sub__(self, other: "CoherentCombo") -> "CoherentCombo":
        return self + (-1.0) * other

    def __mul__(self, scalar) -> "CoherentCombo":
        return CoherentCombo(tuple(FockTerm(t.weight * scalar, t.h, t.v)
                                   for t in self.terms))

    __rmul__ = __mul__

    def inner(self, other: "CoherentCombo") -> complex:
        total = 0.0 + 0.0j
        for t1 in self.terms:
            for t2 in other.terms:
                total += t1.weight * np.conj(t2.weight) * _pair_inner(t1, t2)
        return complex(total)

    def norm_sq(self) -> float:
        val = self.inner(self)
        # exact zero combinations can land epsilon-negative
        return max(float(val.real), 0.0)

    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq()))

    def distance(self, other: "CoherentCombo") -> float:
        return (self - other).norm()


def vacuum(mesh: DiskMesh, degree: int) -> CoherentCombo:
    return CoherentCombo.exp_vector(DirectIntegralVector.zeros(mesh, degree))


def _pair_inner(t1: FockTerm, t2: FockTerm) -> complex:
    base = np.exp(t1.h.inner(t2.h))
    if t1.v is None and t2.v is None:
        factor = 1.0
    elif t1.v is not None and t2.v is None:
        factor = t1.v.inner(t2.h)
    elif t1.v is None and t2.v is not None:
        factor = t1.h.inner(t2.v)
    else:
        factor = t1.v.inner(t2.v) + t1.v.inner(t2.h) * t1.h.inner(t2.v)
    return factor * base


def apply_u(f: GroupCurrent, combo: CoherentCombo, degree: int | None = None) -> CoherentCombo:
    """Group action on a coherent combination.

    On an exponential vector it is the weighted substitution quoted in the
    module docstring; Ray terms pick up the product-rule correction
    -<O v, b> Exp[O h + b] + Ray(O v, O h + b) under the same weight.
    """
    if degree is None:
        degree = combo.terms[0].h.degree
    op = lift_operator(f, degree)
    bvec = lift_cocycle(f, degree)
    b_norm_sq = bvec.norm_sq()
    out: list[FockTerm] = []
    for t in combo.terms:
        oh = op.apply(t.h)
        w = t.weight * np.exp(-0.5 * b_norm_sq - oh.inner(bvec))
        if t.v is None:
            out.append(FockTerm(w, oh + bvec))
        else:
            ov = op.apply(t.v)
            out.append(FockTerm(-w * ov.inner(bvec), oh + bvec))
            out.append(FockTerm(w, oh + bvec, ov))
    return CoherentCombo(tuple(out))


def apply_pi(sigma: CurrentElement, h: DirectIntegralVector, *,
             step: float = 1e-3, include_phase: bool = True,
             theta_op=None, exact_theta: bool = False) -> CoherentCombo:
    """Derived action on Exp[h]:

        pi(sigma) Exp[h] = (-i phi - <h, nu>) Exp[h] + Ray(theta h + nu, h),

    with phi dropped when include_phase is False (matching what a finite
    difference of apply_u produces).  theta defaults to the Richardson
    difference at `step`; pass exact_theta=True for the closed form, or
    theta_op to reuse a precomputed operator.  A zero h never needs theta.
    """
    degree = h.degree
    nu_vec = nu(sigma, degree)
    if np.any(h.coeffs):
        if theta_op is None:
            theta_op = theta_exact(sigma, degree) if exact_theta else theta(
                sigma, degree, step=step)
        ray_dir = theta_op.apply(h) + nu_vec
    else:
        ray_dir = nu_vec
    weight = -h.inner(nu_vec)
    if include_phase:
        weight = weight - 1j * phi(sigma)
    return (CoherentCombo.exp_vector(h, weight)
            + CoherentCombo.ray_vector(ray_dir, h))


def pi_finite_difference(sigma: CurrentElement, h: DirectIntegralVector,
                         step: float = 1e-3) -> CoherentCombo:
    """Central difference of the group action along exp(t*sigma) at t = 0."""
    combo = CoherentCombo.exp_vector(h)
    plus = apply_u(exp_current(sigma, step), combo)
    minus = apply_u(exp_current(sigma, -step), combo)
    return (plus - minus) * (1.0 / (2.0 * step))


def isometry_residual(f: GroupCurrent, h: DirectIntegralVector) -> float:
    """Relative defect | ||u(f) Exp h|| / ||Exp h|| - 1 |.

    Exact invariance of the norm under the lifted action holds only in the
    untruncated space; the residual measures what degree truncation loses.
    """
    image = apply_u(f, CoherentCombo.exp_vector(h))
    expected = np.exp(0.5 * h.norm_sq())
    return float(abs(image.norm() / expected - 1.0))


# --- highest-weight structure -------------------------------------------------

@dataclass(frozen=True)
class HighestWeightReport:
    """Residuals and values for one test function and deformation."""

    e_norm: float
    f_exp_weight: float
    f_node_deviation: float
    f_one_particle_norm_sq: float
    h_ray_norm: float
    h_eigenvalue: complex
    character_value: complex
    comparison_value: complex


def check_highest_weight(xi, p, mesh: DiskMesh, degree: int) -> HighestWeightReport:
    """Act with the deformed generator triple on the vacuum.

    The raising field must kill it, the lowering field must produce a pure
    one-particle vector with node profile sqrt(pi) * sinh-ratio of the test
    function, and the Cartan field must reproduce the scalar eigenvalue
    -i * integral of xi/2.  character_value repeats that eigenvalue;
    comparison_value is -i * integral of the deformed test function, reported
    alongside without a pass gate (the two differ once the deformation is
    switched on).
    """
    from .current import build_deformed_generators
    from .qnum import sinh_ratio

    e_cur, f_cur, h_cur = build_deformed_generators(xi, mesh, p)
    zero = DirectIntegralVector.zeros(mesh, degree)

    e_image = apply_pi(e_cur, zero)
    f_image = apply_pi(f_cur, zero)
    h_image = apply_pi(h_cur, zero)

    # lowering field: split Exp and Ray parts
    f_exp_weight = sum(abs(t.weight) for t in f_image.terms if t.v is None)
    ray_terms = [t for t in f_image.terms if t.v is not None]
    ray_vec = ray_terms[0].v * ray_terms[0].weight
    expected = np.zeros_like(ray_vec.coeffs)
    expected[:, 0] = np.sqrt(np.pi) * sinh_ratio(xi.sample(mesh), p)
    f_node_deviation = float(np.max(np.abs(ray_vec.coeffs - expected)))
    f_one_particle_norm_sq = ray_vec.norm_sq()

    # Cartan field: scalar multiple of the vacuum plus a Ray part that must vanish
    h_ray = CoherentCombo(tuple(t for t in h_image.terms if t.v is not None))
    h_eigenvalue = sum(t.weight for t in h_image.terms if t.v is None)

    xi_vals = xi.sample(mesh)
    character = -1j * mesh.integrate(xi_vals / 2.0)
    comparison = -1j * mesh.integrate(sinh_ratio(xi_vals, p))

    return HighestWeightReport(
        e_norm=e_image.norm(),
        f_exp_weight=float(f_exp_weight),
        f_node_deviation=f_node_deviation,
        f_one_particle_norm_sq=f_one_particle_norm_sq,
        h_ray_norm=h_ray.norm(),
        h_eigenvalue=complex(h_eigenvalue),
        character_value=complex(character),
        comparison_value=complex(comparison),
    )


# --- dense cross-check ---------------------------------------------------------

def _flatten(vec: DirectIntegralVector) -> np.ndarray:
    """Quadrature-weighted flattening: plain dot products reproduce inner()."""
    return (np.sqrt(vec.mesh.weights)[:, None] * vec.coeffs).ravel()


def _exp_sectors(h: np.ndarray, max_level: int) -> list[np.ndarray]:
    out = [np.array([1.0 + 0.0j])]
    power = np.array([1.0 + 0.0j])
    for n in range(1, max_level + 1):
        power = np.multiply.outer(power, h).ravel()
        out.append(power / np.sqrt(factorial(n)))
    return out


def _ray_sectors(v: np.ndarray, h: np.ndarray, max_level: int) -> list[np.ndarray]:
    out = [np.zeros(1, dtype=complex)]
    for n in range(1, max_level + 1):
        sector = np.zeros(h.size ** n, dtype=complex)
        for k in range(n):
            factors = [h] * n
            factors[k] = v
            acc = factors[0]
            for fcts in factors[1:]:
                acc = np.multiply.outer(acc, fcts).ravel()
            sector += acc
        out.append(sector / np.sqrt(factorial(n)))
    return out


def dense_inner(a: CoherentCombo, b: CoherentCombo, max_level: int) -> complex:
    """Inner product with tensor powers materialized up to the cutoff level."""
    total = 0.0 + 0.0j
    for t1 in a.terms:
        h1 = _flatten(t1.h)
        s1 = _exp_sectors(h1, max_level) if t1.v is None else _ray_sectors(
            _flatten(t1.v), h1, max_level)
        for t2 in b.terms:
            h2 = _flatten(t2.h)
            s2 = _exp_sectors(h2, max_level) if t2.v is None else _ray_sectors(
                _flatten(t2.v), h2, max_level)
            val = sum(np.sum(u * np.conj(w)) for u, w in zip(s1, s2))
            total += t1.weight * np.conj(t2.weight) * val
    return complex(total)


def _exp_tail(x: float, start: int) -> float:
    """sum_{m >= start} x^m / m! for x >= 0."""
    if start < 0:
        start = 0
    term = x ** start / factorial(start)
    total = term
    m = start
    while term > 1e-30 and m < start + 200:
        m += 1
        term *= x / m
        total += term
    return total


def dense_tail_bound(a: CoherentCombo, b: CoherentCombo, max_level: int) -> float:
    """Bound on what dense_inner misses above the cutoff level."""
    bound = 0.0
    for t1 in a.terms:
        for t2 in b.terms:
            x = abs(t1.h.inner(t2.h))
            scale = abs(t1.weight) * abs(t2.weight)
            if t1.v is None and t2.v is None:
                bound += scale * _exp_tail(x, max_level + 1)
            elif t1.v is not None and t2.v is not None:
                bound += scale * (abs(t1.v.inner(t2.v)) * _exp_tail(x, max_level)
                                  + abs(t1.v.inner(t2.h)) * abs(t1.h.inner(t2.v))
                                  * _exp_tail(x, max_level - 1))
            else:
                cross = abs(t1.v.inner(t2.h)) if t1.v is not None else abs(
                    t1.h.inner(t2.v))
                bound += scale * cross * _exp_tail(x, max_level)
    return bound


def dense_crosscheck(a: CoherentCombo, b: CoherentCombo,
                     max_level: int = 4) -> tuple[float, float]:
    """(deviation, tail_bound) between closed-form and dense inner products."""
    closed = a.inner(b)
    dense = dense_inner(a, b, max_level)
    return abs(closed - dense), dense_tail_bound(a, b, max_level)
