"""Direct integrals of Bergman spaces over the disk mesh.

A vector assigns a truncated Bergman coefficient vector to every mesh node;
the inner product is the quadrature pairing

    <u, v> = sum_i w_i <u_i, v_i>,

conjugate-linear in the second argument.  Operators are node-diagonal blocks.
lift_operator / lift_cocycle push a group-valued current through the
single-node Mobius machinery.  theta, nu, phi are the derived infinitesimal
pieces: the generator of the lifted action, the cocycle derivative, and the
scalar phase density integral.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bergman import cocycle_vector, mobius_operator
from .current import CurrentElement, DiskMesh, GroupCurrent, exp_current
from .errors import DomainError

_TRACE_TOL = 1e-12


@dataclass(frozen=True)
class DirectIntegralVector:
    mesh: DiskMesh
    coeffs: np.ndarray  # (n_nodes, degree + 1)

    def __post_init__(self):
        if self.coeffs.ndim != 2 or self.coeffs.shape[0] != self.mesh.n_nodes:
            raise DomainError(
                f"coefficient array shape {self.coeffs.shape} does not match mesh")

    @property
    def degree(self) -> int:
        return self.coeffs.shape[1] - 1

    @classmethod
    def zeros(cls, mesh: DiskMesh, degree: int) -> "DirectIntegralVector":
        return cls(mesh, np.zeros((mesh.n_nodes, degree + 1), dtype=complex))

    def inner(self, other: "DirectIntegralVector") -> complex:
        node_pairs = np.sum(self.coeffs * np.conj(other.coeffs), axis=1)
        return complex(np.sum(self.mesh.weights * node_pairs))

    def norm_sq(self) -> float:
        return float(np.sum(self.mesh.weights * np.sum(np.abs(self.coeffs) ** 2, axis=1)))

    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq()))

    def __add__(self, other: "DirectIntegralVector") -> "DirectIntegralVector":
        return DirectIntegralVector(self.mesh, self.coeffs + other.coeffs)

    def __sub__(self, other: "DirectIntegralVector") -> "DirectIntegralVector":
        return DirectIntegralVector(self.mesh, self.coeffs - other.coeffs)

    def __mul__(self, scalar) -> "DirectIntegralVector":
        return DirectIntegralVector(self.mesh, self.coeffs * scalar)

    __rmul__ = __mul__


@dataclass(frozen=True)
class DirectIntegralOperator:
    mesh: DiskMesh
    blocks: np.ndarray  # (n_nodes, degree + 1, degree + 1)

    def __post_init__(self):
        if self.blocks.ndim != 3 or self.blocks.shape[0] != self.mesh.n_nodes:
            raise DomainError(f"block array shape {self.blocks.shape} does not match mesh")

    @property
    def degree(self) -> int:
        return self.blocks.shape[1] - 1

    def apply(self, vec: DirectIntegralVector) -> DirectIntegralVector:
        if vec.degree != self.degree:
            raise DomainError("operator and vector degrees differ")
        return DirectIntegralVector(self.mesh,
                                    np.einsum("nij,nj->ni", self.blocks, vec.coeffs))

    def compose(self, other: "DirectIntegralOperator") -> "DirectIntegralOperator":
        return DirectIntegralOperator(self.mesh,
                                      np.einsum("nij,njk->nik", self.blocks, other.blocks))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.blocks)))

    def __add__(self, other: "DirectIntegralOperator") -> "DirectIntegralOperator":
        return DirectIntegralOperator(self.mesh, self.blocks + other.blocks)

    def __sub__(self, other: "DirectIntegralOperator") -> "DirectIntegralOperator":
        return DirectIntegralOperator(self.mesh, self.blocks - other.blocks)

    def __mul__(self, scalar) -> "DirectIntegralOperator":
        return DirectIntegralOperator(self.mesh, self.blocks * scalar)

    __rmul__ = __mul__


def lift_operator(gcur: GroupCurrent, degree: int) -> DirectIntegralOperator:
    """Node-wise Mobius operator of a group-valued current."""
    from .bergman import GroupElement2x2

    n = gcur.mesh.n_nodes
    blocks = np.empty((n, degree + 1, degree + 1), dtype=complex)
    for i in range(n):
        m = gcur.mats[i]
        g = GroupElement2x2(m[0, 0], m[0, 1], m[1, 0], m[1, 1])
        try:
            blocks[i] = mobius_operator(g, degree).matrix
        except DomainError as exc:
            raise DomainError(f"node {i}: {exc}") from exc
    return DirectIntegralOperator(gcur.mesh, blocks)


def lift_cocycle(gcur: GroupCurrent, degree: int) -> DirectIntegralVector:
    """Node-wise one-cocycle of a group-valued current."""
    from .bergman import GroupElement2x2

    n = gcur.mesh.n_nodes
    coeffs = np.empty((n, degree + 1), dtype=complex)
    for i in range(n):
        m = gcur.mats[i]
        g = GroupElement2x2(m[0, 0], m[0, 1], m[1, 0], m[1, 1])
        try:
            coeffs[i] = cocycle_vector(g, degree).coeffs
        except DomainError as exc:
            raise DomainError(f"node {i}: {exc}") from exc
    return DirectIntegralVector(gcur.mesh, coeffs)


def _require_trace_free(sigma: CurrentElement) -> None:
    tr = np.abs(sigma.trace())
    bad = np.nonzero(tr > _TRACE_TOL)[0]
    if bad.size:
        raise DomainError(
            f"node {bad[0]}: trace {sigma.trace()[bad[0]]} != 0; the lifted "
            "flow needs a trace-free current")


def theta(sigma: CurrentElement, degree: int, step: float = 1e-3,
          richardson: bool = True) -> DirectIntegralOperator:
    """Generator of the lifted flow, d/dt O(exp(t sigma)) at t = 0.

    Central difference at the given step; with richardson=True the h and h/2
    -stencils are combined, cancelling the leading O(h^2) error.
    """
    _require_trace_free(sigma)

    def central(h: float) -> DirectIntegralOperator:
        plus = lift_operator(exp_current(sigma, h), degree)
        minus = lift_operator(exp_current(sigma, -h), degree)
        return (plus - minus) * (1.0 / (2.0 * h))

    d1 = central(step)
    if not richardson:
        return d1
    d2 = central(step / 2.0)
    return (4.0 / 3.0) * d2 - (1.0 / 3.0) * d1


def theta_exact(sigma: CurrentElement, degree: int) -> DirectIntegralOperator:
    """Closed form of the flow generator; tri-diagonal in the monomial ladder.

    For sigma(x) = [[alpha, beta], [lam, -alpha]] the action on e_n has
    components

        theta[n-1, n] = -n beta sqrt((n+1)/n)
        theta[n, n]   = -2 (n+1) alpha
        theta[n+1, n] = (n+2) lam sqrt((n+1)/(n+2))
    """
    _require_trace_free(sigma)
    n_nodes = sigma.mesh.n_nodes
    alpha, beta, lam = sigma.alpha, sigma.beta, sigma.lambda_lower
    blocks = np.zeros((n_nodes, degree + 1, degree + 1), dtype=complex)
    n = np.arange(degree + 1, dtype=float)
    diag = -2.0 * (n + 1.0)
    for i in range(n_nodes):
        np.fill_diagonal(blocks[i], diag * alpha[i])
    if degree >= 1:
        m = np.arange(1, degree + 1, dtype=float)
        upper = -m * np.sqrt((m + 1.0) / m)         # entry (n-1, n), n = m
        lower = (m + 1.0) * np.sqrt(m / (m + 1.0))  # entry (n+1, n), n = m-1
        rows = np.arange(degree + 1)
        for i in range(n_nodes):
            blocks[i, rows[:-1], rows[1:]] = upper * beta[i]
            blocks[i, rows[1:], rows[:-1]] = lower * lam[i]
    return DirectIntegralOperator(sigma.mesh, blocks)


def nu(sigma: CurrentElement, degree: int) -> DirectIntegralVector:
    """Cocycle derivative d/dt b(exp(t sigma)) at t = 0.

    Only the constant mode survives: sqrt(pi) times the lower-left entry.
    """
    coeffs = np.zeros((sigma.mesh.n_nodes, degree + 1), dtype=complex)
    coeffs[:, 0] = np.sqrt(np.pi) * sigma.lambda_lower
    return DirectIntegralVector(sigma.mesh, coeffs)


def nu_finite_difference(sigma: CurrentElement, degree: int,
                         step: float = 1e-3) -> DirectIntegralVector:
    """Central-difference check of nu; agrees to O(step^2)."""
    _require_trace_free(sigma)
    plus = lift_cocycle(exp_current(sigma, step), degree)
    minus = lift_cocycle(exp_current(sigma, -step), degree)
    return (plus - minus) * (1.0 / (2.0 * step))


def phi(sigma: CurrentElement) -> complex:
    """Scalar density integral of the upper-left entry."""
    return sigma.mesh.integrate(sigma.alpha)
