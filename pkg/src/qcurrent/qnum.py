"""Scalar q-number arithmetic.

Everything downstream deforms through the single ratio

    [x]_q = sinh(gamma*x) / sinh(gamma),   gamma = log q,

evaluated in forms that stay finite at q -> 1 and at the removable zero of
[x]_q / x.  The naive power form (q^x - q^{-x})/(q - q^{-1}) is kept only as a
shadow for cross-checks; the sinh form is the production path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

# Below this |x| the ratio [x]_q/x switches to its two-term even series around
# the removable zero; direct division loses digits to cancellation there.
QRATIO_SERIES_CUTOFF = 1e-8


@dataclass(frozen=True)
class DeformationParam:
    """Deformation scalar q > 0 with its log gamma cached.

    q == 1 is the classical point: gamma == 0 exactly, and every operation
    dispatches to its exact classical limit instead of dividing by sinh(0).
    """

    q: float
    gamma: float = field(init=False)

    def __post_init__(self) -> None:
        q = self.q
        if not isinstance(q, (int, float)) or isinstance(q, bool):
            raise DomainError(f"deformation parameter must be a real scalar, got {q!r}")
        if not math.isfinite(q) or q <= 0.0:
            raise DomainError(f"deformation parameter must satisfy q > 0, got q = {q}")
        object.__setattr__(self, "q", float(q))
        object.__setattr__(self, "gamma", math.log(self.q))

    @property
    def is_classical(self) -> bool:
        return self.q == 1.0

    @classmethod
    def from_gamma(cls, gamma: float) -> "DeformationParam":
        return cls(math.exp(gamma))


def _sinh_gamma(p: DeformationParam, x: np.ndarray):
    """sinh(gamma) at the working precision of x.

    Extended-precision inputs must divide by an extended-precision sinh, or
    the denominator rounding re-enters every q-number at double level.  The
    gamma VALUE stays the float64 one in all dtypes, so every code path
    deforms by the same q.
    """
    if x.dtype == np.longdouble:
        return np.sinh(np.longdouble(p.gamma))
    return math.sinh(p.gamma)


def qnumber(x, p: DeformationParam):
    """[x]_q = sinh(gamma*x)/sinh(gamma); equals x itself at q == 1.

    Accepts real or complex scalars and arrays, vectorized elementwise;
    longdouble input stays longdouble throughout.
    """
    x = np.asarray(x)
    if p.is_classical:
        out = x + 0.0
    else:
        out = np.sinh(p.gamma * x) / _sinh_gamma(p, x)
    return out[()] if out.ndim == 0 else out


def qratio(x, p: DeformationParam):
    """[x]_q / x with the removable singularity at x = 0 filled in.

    The limit value is gamma/sinh(gamma); for |x| below the series cutoff the
    two-term even expansion gamma/sinh(gamma) * (1 + (gamma*x)^2/6) is used,
    which is exact to machine precision in that range.
    """
    x = np.asarray(x)
    if p.is_classical:
        out = np.ones_like(x, dtype=complex if np.iscomplexobj(x) else float)
        return out[()] if out.ndim == 0 else out
    g = p.gamma
    sg = _sinh_gamma(p, x)
    small = np.abs(x) < QRATIO_SERIES_CUTOFF
    x_safe = np.where(small, 1.0, x)
    series = (g / sg) * (1.0 + (g * x) ** 2 / 6.0)
    direct = np.sinh(g * x_safe) / (sg * x_safe)
    out = np.where(small, series, direct)
    return out[()] if out.ndim == 0 else out


def sinh_ratio(xi, p: DeformationParam):
    """Deformed test-function values sinh(gamma*xi)/sinh(gamma).

    Same closed form as qnumber; named separately because it is applied to
    whole sampled fields rather than single algebra labels.
    """
    return qnumber(xi, p)


def qnumber_direct(x, p: DeformationParam):
    """Naive power form (q^x - q^{-x})/(q - q^{-1}).

    Shadow implementation for tests only; undefined at q == 1.
    """
    if p.is_classical:
        raise DomainError("naive q-number form divides by q - 1/q, undefined at q = 1")
    q = p.q
    x = np.asarray(x)
    out = (np.power(q, x) - np.power(q, -x)) / (q - 1.0 / q)
    return out[()] if out.ndim == 0 else out
