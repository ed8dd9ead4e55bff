"""Weighted Mobius action on the Bergman space of the unit disk.

The Bergman space A^2(D) carries the orthonormal basis
e_n = sqrt((n+1)/pi) z^n.  A unimodular 2x2 matrix g = [[a, b], [c, d]]
acts on monomials by

    O(g) z^n = (d z - b)^n (a - c z)^(-(n+2)),

which composes under the ordinary matrix product, O(g g') = O(g) O(g'),
and is unitary when g lies in the pseudo-unitary group
[[a, conj(c)], [c, conj(a)]], |a|^2 - |c|^2 = 1.  The associated affine
shift is the one-cocycle

    b(g)(z) = c / (a - c z),

satisfying b(g g') = b(g) + O(g) b(g').

Everything here is degree-truncated at N; entries in column n decay like
|c/a|^m past m = n, so comparisons are made on the low-degree window with a
geometric tail estimate attached.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import DomainError

_UNIMODULAR_TOL = 1e-10
_PSEUDO_UNITARY_TOL = 1e-10


@dataclass(frozen=True)
class GroupElement2x2:
    a: complex
    b: complex
    c: complex
    d: complex

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def require_unimodular(self) -> None:
        if abs(self.det - 1.0) > _UNIMODULAR_TOL:
            raise DomainError(f"matrix is not unimodular: det = {self.det}")

    def require_expansion_ok(self) -> None:
        """The monomial action needs a != 0 and the series ratio inside the disk."""
        if self.a == 0:
            raise DomainError("a = 0: Mobius image of the origin is not in the disk")
        if abs(self.c / self.a) >= 1.0:
            raise DomainError(
                f"|c/a| = {abs(self.c / self.a):.3g} >= 1: expansion diverges on the disk")

    @property
    def is_pseudo_unitary(self) -> bool:
        return (abs(self.d - np.conj(self.a)) <= _PSEUDO_UNITARY_TOL
                and abs(self.b - np.conj(self.c)) <= _PSEUDO_UNITARY_TOL
                and abs(abs(self.a) ** 2 - abs(self.c) ** 2 - 1.0) <= _PSEUDO_UNITARY_TOL)

    def __matmul__(self, other: "GroupElement2x2") -> "GroupElement2x2":
        return GroupElement2x2(
            a=self.a * other.a + self.b * other.c,
            b=self.a * other.b + self.b * other.d,
            c=self.c * other.a + self.d * other.c,
            d=self.c * other.b + self.d * other.d,
        )

    @classmethod
    def identity(cls) -> "GroupElement2x2":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def diagonal(cls, a: complex) -> "GroupElement2x2":
        if a == 0:
            raise DomainError("diagonal element needs a != 0")
        return cls(a, 0.0, 0.0, 1.0 / a)

    @classmethod
    def upper(cls, b: complex) -> "GroupElement2x2":
        return cls(1.0, b, 0.0, 1.0)

    @classmethod
    def lower(cls, c: complex) -> "GroupElement2x2":
        return cls(1.0, 0.0, c, 1.0)

    @classmethod
    def pseudo_unitary(cls, s: float, phi_a: float = 0.0,
                       phi_c: float = 0.0) -> "GroupElement2x2":
        a = np.exp(1j * phi_a) * np.cosh(s)
        c = np.exp(1j * phi_c) * np.sinh(s)
        return cls(a, np.conj(c), c, np.conj(a))


def seeded_pseudo_unitary(rng: np.random.Generator, max_ratio: float) -> GroupElement2x2:
    """Random pseudo-unitary element with |c/a| = tanh(s) <= max_ratio."""
    s = rng.uniform(0.0, np.arctanh(max_ratio))
    return GroupElement2x2.pseudo_unitary(s, rng.uniform(0.0, 2 * np.pi),
                                          rng.uniform(0.0, 2 * np.pi))


@dataclass(frozen=True)
class BergmanVector:
    """Coefficients against the orthonormal basis e_n, degrees 0..N."""

    coeffs: np.ndarray

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def inner(self, other: "BergmanVector") -> complex:
        # conjugate-linear in the second argument
        return complex(np.sum(self.coeffs * np.conj(other.coeffs)))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def __add__(self, other: "BergmanVector") -> "BergmanVector":
        return BergmanVector(self.coeffs + other.coeffs)

    def __sub__(self, other: "BergmanVector") -> "BergmanVector":
        return BergmanVector(self.coeffs - other.coeffs)

    def __mul__(self, scalar) -> "BergmanVector":
        return BergmanVector(self.coeffs * scalar)

    __rmul__ = __mul__


@dataclass(frozen=True)
class BergmanOperator:
    matrix: np.ndarray

    @property
    def degree(self) -> int:
        return self.matrix.shape[0] - 1

    def apply(self, vec: BergmanVector) -> BergmanVector:
        return BergmanVector(self.matrix @ vec.coeffs)

    def matmul(self, other: "BergmanOperator") -> "BergmanOperator":
        return BergmanOperator(self.matrix @ other.matrix)


def constant_vector(value: complex, degree: int) -> BergmanVector:
    """The constant function `value`, coefficient value*sqrt(pi) on e_0."""
    coeffs = np.zeros(degree + 1, dtype=complex)
    coeffs[0] = value * np.sqrt(np.pi)
    return BergmanVector(coeffs)


def mobius_operator(g: GroupElement2x2, degree: int) -> BergmanOperator:
    """Matrix of O(g) on degrees 0..N against the orthonormal basis."""
    g.require_unimodular()
    g.require_expansion_ok()
    n_max = degree
    ratio = g.c / g.a
    mat = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    # (a - c z)^(-(n+2)) = a^(-(n+2)) * sum_k C(n+1+k, k) ratio^k z^k
    for n in range(n_max + 1):
        top = np.array([comb(n, i) * g.d ** i * (-g.b) ** (n - i)
                        for i in range(n + 1)], dtype=complex)
        geom = np.empty(n_max + 1, dtype=complex)
        geom[0] = g.a ** (-(n + 2))
        for k in range(1, n_max + 1):
            geom[k] = geom[k - 1] * ratio * (n + 1 + k) / k
        col = np.convolve(top, geom)[: n_max + 1]
        mat[:, n] = col
    # monomial coefficients -> orthonormal-basis matrix
    deg = np.arange(n_max + 1, dtype=float)
    mat *= np.sqrt((deg[None, :] + 1.0) / (deg[:, None] + 1.0))
    return BergmanOperator(mat)


def cocycle_vector(g: GroupElement2x2, degree: int) -> BergmanVector:
    """b(g) = c/(a - c z) expanded on the orthonormal basis, degrees 0..N."""
    g.require_unimodular()
    g.require_expansion_ok()
    ratio = g.c / g.a
    k = np.arange(degree + 1)
    if ratio == 0:
        coeffs = np.zeros(degree + 1, dtype=complex)
    else:
        coeffs = ratio ** (k + 1) * np.sqrt(np.pi / (k + 1))
    return BergmanVector(coeffs)


def tail_estimate(*elements: GroupElement2x2, degree: int) -> float:
    """Geometric bound |c/a|^(N//2) on what truncation hides from the window."""
    worst = max(abs(g.c / g.a) for g in elements)
    return float(worst ** (degree // 2))


def _window(degree: int) -> int:
    return degree // 2 + 1


def verify_cocycle_identity(g: GroupElement2x2, gp: GroupElement2x2,
                            degree: int) -> tuple[float, float]:
    """|| b(g g') - b(g) - O(g) b(g') || on the low-degree window.

    Returns (residual, tail_estimate).
    """
    w = _window(degree)
    lhs = cocycle_vector(g @ gp, degree)
    rhs = cocycle_vector(g, degree) + mobius_operator(g, degree).apply(
        cocycle_vector(gp, degree))
    resid = float(np.linalg.norm(lhs.coeffs[:w] - rhs.coeffs[:w]))
    return resid, tail_estimate(g, gp, degree=degree)


def verify_homomorphism(g: GroupElement2x2, gp: GroupElement2x2,
                        degree: int) -> tuple[float, float]:
    """|| O(g) O(g') - O(g g') ||_F on the low-degree window."""
    w = _window(degree)
    prod = mobius_operator(g, degree).matmul(mobius_operator(gp, degree))
    direct = mobius_operator(g @ gp, degree)
    resid = float(np.linalg.norm(prod.matrix[:w, :w] - direct.matrix[:w, :w]))
    return resid, tail_estimate(g, gp, degree=degree)


def verify_unitary(g: GroupElement2x2, degree: int) -> tuple[float, float]:
    """|| O(g)* O(g) - I ||_F on the low-degree window; g must be pseudo-unitary."""
    if not g.is_pseudo_unitary:
        raise DomainError("unitarity check needs a pseudo-unitary element")
    w = _window(degree)
    u = mobius_operator(g, degree).matrix
    gram = u.conj().T @ u
    resid = float(np.linalg.norm(gram[:w, :w] - np.eye(w)))
    return resid, tail_estimate(g, degree=degree)
