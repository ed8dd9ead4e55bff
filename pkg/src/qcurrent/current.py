"""Currents over a discretized unit disk.

The disk carries the measure r dr dtheta, discretized by a Gauss-Legendre
rule in r against the weight r and a uniform periodic rule in theta.  A
current assigns a 2x2 complex matrix to every node; the four entries are
named alpha (upper left), beta (upper right), lambda_lower (lower left, the
lower-triangular slot) and delta (lower right).

Generator fields for a scalar test function xi:

    e0(xi) = [[0, xi], [0, 0]]      f0(xi) = [[0, 0], [xi, 0]]
    h0(xi) = diag(xi/2, -xi/2)      center(xi) = diag(xi, xi)

The deformed generators replace xi by sinh(gamma*xi)/sinh(gamma) in e and f
and leave h alone.  deform_current instead pushes an arbitrary per-node
triple through the irrep deformation map with a per-node center value; the
two routes agree only for the halved center reading (see the tests).
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import roots_legendre

from .errors import DomainError
from .qnum import DeformationParam, qratio, sinh_ratio

# 2x2 exponential: below this |t*Delta| the sinh(z)/z factor switches to its
# even series; the direct quotient is fine above it.
_SINHC_CUTOFF = 1e-4


@dataclass(frozen=True)
class DiskMesh:
    """Quadrature nodes z = r*exp(i*theta) on the open unit disk."""

    nodes: np.ndarray
    weights: np.ndarray
    r: np.ndarray
    theta: np.ndarray
    radial_order: int
    angular_order: int

    @property
    def n_nodes(self) -> int:
        return self.nodes.size

    def integrate(self, values) -> complex:
        return complex(np.sum(self.weights * np.asarray(values)))

    def scaled(self, s: float) -> "DiskMesh":
        """Same nodes with all weights multiplied by s.

        Deliberately breaks the total-mass-pi invariant; used to test that
        reported functionals scale linearly with the measure.
        """
        return replace(self, weights=self.weights * s)


def build_disk_mesh(radial_order: int, angular_order: int,
                    min_poly_degree: int | None = None) -> DiskMesh:
    """Tensor quadrature on the disk, exact total mass pi.

    Exactness: r^(2p) * exp(i*k*theta) integrates exactly for
    p <= radial_order - 1 and |k| <= angular_order - 1.  If min_poly_degree
    is given and exceeds either bound a warning is emitted (not an error).
    """
    if radial_order < 1 or angular_order < 1:
        raise DomainError("quadrature orders must be at least 1")
    if min_poly_degree is not None:
        if min(radial_order, angular_order) - 1 < min_poly_degree:
            warnings.warn(
                f"orders ({radial_order}, {angular_order}) are too small to integrate "
                f"degree {min_poly_degree} exactly", stacklevel=2)
    t, wt = roots_legendre(radial_order)
    r = 0.5 * (t + 1.0)
    wr = 0.5 * wt * r  # measure r dr on (0, 1)
    th = 2.0 * np.pi * np.arange(angular_order) / angular_order
    wth = np.full(angular_order, 2.0 * np.pi / angular_order)
    rr, tt = np.meshgrid(r, th, indexing="ij")
    ww = np.outer(wr, wth)
    return DiskMesh(
        nodes=(rr * np.exp(1j * tt)).ravel(),
        weights=ww.ravel(),
        r=rr.ravel(),
        theta=tt.ravel(),
        radial_order=radial_order,
        angular_order=angular_order,
    )


class TestFunction:
    """Scalar function on the disk, either closed-form or sampled."""

    def __init__(self, name: str, fn=None, samples: np.ndarray | None = None):
        if (fn is None) == (samples is None):
            raise DomainError("give exactly one of fn or samples")
        self.name = name
        self._fn = fn
        self._samples = samples

    def sample(self, mesh: DiskMesh) -> np.ndarray:
        if self._fn is not None:
            return np.asarray(self._fn(mesh.nodes))
        if self._samples.shape != mesh.nodes.shape:
            raise DomainError("sampled test function does not match this mesh")
        return self._samples

    @classmethod
    def constant(cls, c: float) -> "TestFunction":
        return cls(f"constant:{c:g}", fn=lambda z: np.full(z.shape, c, dtype=float))

    @classmethod
    def coordinate(cls) -> "TestFunction":
        return cls("coordinate", fn=lambda z: z)

    @classmethod
    def radial_sq(cls) -> "TestFunction":
        return cls("radial_sq", fn=lambda z: np.abs(z) ** 2)

    @classmethod
    def gaussian(cls) -> "TestFunction":
        # smooth bump, 1 at the origin, -> 0 at the rim
        return cls("gaussian", fn=lambda z: np.exp(-np.abs(z) ** 2 / (1.0 - np.abs(z) ** 2)))


def test_function_preset(spec: str) -> TestFunction:
    """Parse 'constant:C' | 'coordinate' | 'radial_sq' | 'gaussian'."""
    name, _, arg = spec.partition(":")
    if name == "constant":
        return TestFunction.constant(float(arg) if arg else 1.0)
    if name == "coordinate":
        return TestFunction.coordinate()
    if name == "radial_sq":
        return TestFunction.radial_sq()
    if name == "gaussian":
        return TestFunction.gaussian()
    raise DomainError(f"unknown test function preset {spec!r}")


class _NodeMatrixField:
    """Shared array plumbing for node-indexed 2x2 matrix fields."""

    def __init__(self, mesh: DiskMesh, mats: np.ndarray):
        mats = np.asarray(mats, dtype=complex)
        if mats.shape != (mesh.n_nodes, 2, 2):
            raise DomainError(f"expected shape {(mesh.n_nodes, 2, 2)}, got {mats.shape}")
        self.mesh = mesh
        self.mats = mats

    @property
    def alpha(self) -> np.ndarray:
        return self.mats[:, 0, 0]

    @property
    def beta(self) -> np.ndarray:
        return self.mats[:, 0, 1]

    @property
    def lambda_lower(self) -> np.ndarray:
        return self.mats[:, 1, 0]

    @property
    def delta(self) -> np.ndarray:
        return self.mats[:, 1, 1]

    def trace(self) -> np.ndarray:
        return self.mats[:, 0, 0] + self.mats[:, 1, 1]


class CurrentElement(_NodeMatrixField):
    """Algebra-valued current: one 2x2 matrix per node, linear structure."""

    @classmethod
    def from_entries(cls, mesh: DiskMesh, alpha=0.0, beta=0.0,
                     lambda_lower=0.0, delta=0.0) -> "CurrentElement":
        n = mesh.n_nodes
        mats = np.zeros((n, 2, 2), dtype=complex)
        mats[:, 0, 0] = alpha
        mats[:, 0, 1] = beta
        mats[:, 1, 0] = lambda_lower
        mats[:, 1, 1] = delta
        return cls(mesh, mats)

    def __add__(self, other: "CurrentElement") -> "CurrentElement":
        if other.mesh.n_nodes != self.mesh.n_nodes:
            raise DomainError("cannot add currents over different meshes")
        return CurrentElement(self.mesh, self.mats + other.mats)

    def __sub__(self, other: "CurrentElement") -> "CurrentElement":
        return self + (-1.0) * other

    def __mul__(self, scalar) -> "CurrentElement":
        return CurrentElement(self.mesh, self.mats * scalar)

    __rmul__ = __mul__


class GroupCurrent(_NodeMatrixField):
    """Group-valued current, normally produced by exp_current."""

    def det(self) -> np.ndarray:
        m = self.mats
        return m[:, 0, 0] * m[:, 1, 1] - m[:, 0, 1] * m[:, 1, 0]

    def matmul(self, other: "GroupCurrent") -> "GroupCurrent":
        if other.mesh.n_nodes != self.mesh.n_nodes:
            raise DomainError("cannot compose currents over different meshes")
        return GroupCurrent(self.mesh, np.einsum("nij,njk->nik", self.mats, other.mats))


def build_classical_generators(xi: TestFunction, mesh: DiskMesh):
    """(e0(xi), f0(xi), h0(xi)) as CurrentElements."""
    v = xi.sample(mesh)
    e0 = CurrentElement.from_entries(mesh, beta=v)
    f0 = CurrentElement.from_entries(mesh, lambda_lower=v)
    h0 = CurrentElement.from_entries(mesh, alpha=v / 2.0, delta=-v / 2.0)
    return e0, f0, h0


def build_center_current(xi: TestFunction, mesh: DiskMesh) -> CurrentElement:
    """The central field diag(xi, xi)."""
    v = xi.sample(mesh)
    return CurrentElement.from_entries(mesh, alpha=v, delta=v)


def build_deformed_generators(xi: TestFunction, mesh: DiskMesh, p: DeformationParam):
    """(e(xi), f(xi), h(xi)): deformed test function in e and f, h untouched."""
    v = xi.sample(mesh)
    dv = sinh_ratio(v, p)
    e = CurrentElement.from_entries(mesh, beta=dv)
    f = CurrentElement.from_entries(mesh, lambda_lower=dv)
    h = CurrentElement.from_entries(mesh, alpha=v / 2.0, delta=-v / 2.0)
    return e, f, h


def deform_current(e0: CurrentElement, f0: CurrentElement, h0: CurrentElement,
                   center, p: DeformationParam):
    """Irrep deformation map applied node by node with a given center value.

    center may be a CurrentElement of the form diag(j, j) or a per-node array
    (or scalar) of center values j(x).  h must be diagonal at every node.
    Column k of e(x) is scaled by ratio(j(x) - h_kk(x)), column k of f(x) by
    ratio(j(x) + h_kk(x)); h passes through.
    """
    if isinstance(center, CurrentElement):
        off = max(np.max(np.abs(center.beta)), np.max(np.abs(center.lambda_lower)))
        if off > 1e-12 or np.max(np.abs(center.alpha - center.delta)) > 1e-12:
            raise DomainError("center field is not central (must be diag(j, j))")
        jv = center.alpha
    else:
        jv = np.broadcast_to(np.asarray(center, dtype=complex), (e0.mesh.n_nodes,))
    offdiag = np.abs(h0.mats[:, 0, 1]) + np.abs(h0.mats[:, 1, 0])
    bad = np.nonzero(offdiag > 1e-12)[0]
    if bad.size:
        raise DomainError(f"h is not diagonal at node index {bad[0]}")
    hdiag = np.stack([h0.mats[:, 0, 0], h0.mats[:, 1, 1]], axis=1)  # (n, 2)
    ge = qratio(jv[:, None] - hdiag, p)  # column scalings for e
    gf = qratio(jv[:, None] + hdiag, p)
    e = CurrentElement(e0.mesh, e0.mats * ge[:, None, :])
    f = CurrentElement(f0.mesh, f0.mats * gf[:, None, :])
    h = CurrentElement(h0.mesh, h0.mats.copy())
    return e, f, h


def exp_current(sigma: CurrentElement, t: float) -> GroupCurrent:
    """Pointwise exponential exp(t*sigma(x)) in closed form.

    For the trace-free part A0 with Delta^2 = alpha0^2 + beta*lambda_lower:

        exp(t*A0) = cosh(t*Delta) I + t * sinhc(t*Delta) A0,

    any branch of the square root (both factors are even in Delta).  A scalar
    exp(t*trace/2) carries the trace.
    """
    m = sigma.mats
    tr = sigma.trace()
    alpha0 = (m[:, 0, 0] - m[:, 1, 1]) / 2.0
    delta_sq = alpha0 ** 2 + m[:, 0, 1] * m[:, 1, 0]
    z = t * np.sqrt(delta_sq.astype(complex))
    small = np.abs(z) < _SINHC_CUTOFF
    z_safe = np.where(small, 1.0, z)
    sinhc = np.where(small, 1.0 + z ** 2 / 6.0 + z ** 4 / 120.0, np.sinh(z_safe) / z_safe)
    a0 = m.copy()
    a0[:, 0, 0] = alpha0
    a0[:, 1, 1] = -alpha0
    eye = np.broadcast_to(np.eye(2), m.shape)
    out = np.cosh(z)[:, None, None] * eye + (t * sinhc)[:, None, None] * a0
    out = out * np.exp(t * tr / 2.0)[:, None, None]
    return GroupCurrent(sigma.mesh, out)


def dump_mesh_csv(mesh: DiskMesh, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["node_re", "node_im", "weight"])
        for z, wt in zip(mesh.nodes, mesh.weights):
            w.writerow([repr(z.real), repr(z.imag), repr(wt)])


def dump_current_csv(field: _NodeMatrixField, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["node_re", "node_im", "weight",
                    "alpha_re", "alpha_im", "beta_re", "beta_im",
                    "lambda_re", "lambda_im", "delta_re", "delta_im"])
        for z, wt, mat in zip(field.mesh.nodes, field.mesh.weights, field.mats):
            row = [repr(z.real), repr(z.imag), repr(wt)]
            for entry in (mat[0, 0], mat[0, 1], mat[1, 0], mat[1, 1]):
                row += [repr(entry.real), repr(entry.imag)]
            w.writerow(row)
