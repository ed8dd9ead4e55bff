"""Finite-dimensional spin irreps and their q-deformation.

The classical triple for spin j acts on the weight basis m = j, j-1, ..., -j:

    e0 |m> = sqrt((j-m)(j+m+1)) |m+1>,   f0 = e0^T,   h0 = diag(j, ..., -j),

so [h0,e0]=e0, [h0,f0]=-f0, [e0,f0]=2h0.  The deformation substitutes

    e = e0 * g(j*I - h0),   f = f0 * g(j*I + h0),   h = h0,

with g(y) = [y]_q / y applied by spectral calculus on the diagonal argument.
The function factor multiplies on the right, in the written order; the left
order does not close the deformed bracket (see the regression test).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .qnum import DeformationParam, qnumber, qratio

DIM_CAP = 64


@dataclass(frozen=True)
class SpinIrrep:
    """Classical spin-j triple with its center value."""

    j: float
    dim: int
    e0: np.ndarray
    f0: np.ndarray
    h0: np.ndarray

    @property
    def center_value(self) -> float:
        return self.j

    @property
    def weights(self) -> np.ndarray:
        return np.diag(self.h0)


@dataclass(frozen=True)
class DeformedTriple:
    """Deformed generators together with the parameter that produced them."""

    e: np.ndarray
    f: np.ndarray
    h: np.ndarray
    param: DeformationParam
    j: float


def build_spin_irrep(j: float, dim_cap: int = DIM_CAP) -> SpinIrrep:
    """Ladder matrices for spin j (j a non-negative half-integer).

    Built in extended precision: the bracket residuals compare products of
    entries that reach ~1e7 at the dimension cap for q near 2, and double
    rounding alone would swamp the 1e-10 closure tolerance.  Half-integers
    and their sums are exact in any binary format, so only the sqrt and the
    later ratio factors round at all.
    """
    two_j = 2.0 * j
    if j < 0 or two_j != round(two_j):
        raise DomainError(f"spin must be a non-negative half-integer, got j = {j}")
    dim = int(round(two_j)) + 1
    if dim > dim_cap:
        raise DomainError(f"spin j = {j} needs dimension {dim}, cap is {dim_cap}")
    m = np.longdouble(j) - np.arange(dim, dtype=np.longdouble)
    e0 = np.zeros((dim, dim), dtype=np.longdouble)
    for k in range(1, dim):
        # raises weight m_k = j - k by one step
        e0[k - 1, k] = np.sqrt(np.longdouble(k) * (np.longdouble(two_j) + 1 - k))
    return SpinIrrep(j=float(j), dim=dim, e0=e0, f0=e0.T.copy(), h0=np.diag(m))


def deform(irrep: SpinIrrep, p: DeformationParam) -> DeformedTriple:
    """Apply the deformation map on one spin irrep.

    h is untouched; e and f pick up the ratio factor evaluated on the
    diagonal matrices j*I -/+ h0.  At q = 1 this is the identity map, and for
    spin 1/2 it is the identity at every q (the only ratio arguments are 0
    and 1).
    """
    m = irrep.weights
    e = irrep.e0 * qratio(irrep.j - m, p)[np.newaxis, :]
    f = irrep.f0 * qratio(irrep.j + m, p)[np.newaxis, :]
    return DeformedTriple(e=e, f=f, h=irrep.h0.copy(), param=p, j=irrep.j)


def q_bracket_of_cartan(h: np.ndarray, scale: float, p: DeformationParam) -> np.ndarray:
    """Elementwise x -> [scale*x]_q on the spectrum of a diagonal matrix."""
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {h.shape}")
    if np.count_nonzero(h - np.diag(np.diag(h))):
        raise DomainError("q-bracket of the Cartan element needs a diagonal matrix")
    return np.diag(qnumber(scale * np.diag(h), p))


@dataclass(frozen=True)
class CommutatorResiduals:
    he_minus_e: float
    hf_plus_f: float
    ef_minus_bracket: float

    @property
    def max(self) -> float:
        return max(self.he_minus_e, self.hf_plus_f, self.ef_minus_bracket)


def _maxabs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


def commutator_residual(t: DeformedTriple) -> CommutatorResiduals:
    """Max-norm residuals of the three deformed bracket relations."""
    e, f, h = t.e, t.f, t.h
    comm_ef = e @ f - f @ e
    return CommutatorResiduals(
        he_minus_e=_maxabs(h @ e - e @ h - e),
        hf_plus_f=_maxabs(h @ f - f @ h + f),
        ef_minus_bracket=_maxabs(comm_ef - q_bracket_of_cartan(h, 2.0, t.param)),
    )
