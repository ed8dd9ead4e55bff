"""Arbitrary-precision twin of the truncated coherent-vector pipeline.

The derivative-consistency identity (finite difference of the group action
converging at second order to the derived action) holds exactly for any
degree truncation and any quadrature weights, so it can be checked far below
double-precision noise by replaying the same formulas in mpmath on a small
mesh.  Float inputs convert exactly; only the arithmetic gains digits.

Everything here is deliberately plain Python over small lists: the point is
fidelity to the formulas, not speed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from mpmath import mp

from .current import CurrentElement
from .directint import DirectIntegralVector
from .errors import DomainError


def _to_mpc(z) -> mp.mpc:
    return mp.mpc(complex(z).real, complex(z).imag)


def _inner_1p(u, v, wts):
    # conjugate-linear in the second argument, quadrature-weighted
    total = mp.mpc(0)
    for wi, ui, vi in zip(wts, u, v):
        total += wi * mp.fsum(a * mp.conj(b) for a, b in zip(ui, vi))
    return total


def _vec_add(u, v, cu=1, cv=1):
    return [[cu * a + cv * b for a, b in zip(ur, vr)] for ur, vr in zip(u, v)]


def _pair(t1, t2, wts):
    w1, h1, v1 = t1
    w2, h2, v2 = t2
    base = mp.exp(_inner_1p(h1, h2, wts))
    if v1 is None and v2 is None:
        factor = mp.mpc(1)
    elif v1 is not None and v2 is None:
        factor = _inner_1p(v1, h2, wts)
    elif v1 is None and v2 is not None:
        factor = _inner_1p(h1, v2, wts)
    else:
        factor = _inner_1p(v1, v2, wts) + _inner_1p(v1, h2, wts) * _inner_1p(h1, v2, wts)
    return w1 * mp.conj(w2) * factor * base


def _combo_norm(terms, wts):
    total = mp.mpc(0)
    for t1 in terms:
        for t2 in terms:
            total += _pair(t1, t2, wts)
    re = mp.re(total)
    return mp.sqrt(re if re > 0 else mp.mpf(0))


def _exp2x2(mat, t):
    """exp(t * mat) for a trace-free 2x2 over mpc."""
    a, b = mat[0]
    c, d = mat[1]
    if mp.fabs(a + d) > mp.mpf(10) ** (-mp.dps + 5):
        raise DomainError("high-precision exponential expects a trace-free matrix")
    delta = mp.sqrt(a * a + b * c)
    z = t * delta
    ch = mp.cosh(z)
    sc = mp.sinh(z) / z if z != 0 else mp.mpc(1)
    return [[ch + t * sc * a, t * sc * b], [t * sc * c, ch - t * sc * a]]


def _mobius_matrix(g, degree):
    a, b = g[0]
    c, d = g[1]
    if a == 0 or mp.fabs(c / a) >= 1:
        raise DomainError("element outside the expansion domain")
    ratio = c / a
    cols = []
    for n in range(degree + 1):
        top = [mp.binomial(n, i) * d ** i * (-b) ** (n - i) for i in range(n + 1)]
        geom = [a ** (-(n + 2))]
        for k in range(1, degree + 1):
            geom.append(geom[-1] * ratio * (n + 1 + k) / k)
        col = []
        for m in range(degree + 1):
            s = mp.mpc(0)
            for i in range(max(0, m - degree), min(n, m) + 1):
                s += top[i] * geom[m - i]
            col.append(s * mp.sqrt(mp.mpf(n + 1) / (m + 1)))
        cols.append(col)
    return [[cols[n][m] for n in range(degree + 1)] for m in range(degree + 1)]


def _cocycle(g, degree):
    a, _ = g[0]
    c, _ = g[1]
    ratio = c / a
    return [ratio ** (k + 1) * mp.sqrt(mp.pi / (k + 1)) for k in range(degree + 1)]


def _theta_exact_node(mat, degree):
    alpha, beta = mat[0]
    lam = mat[1][0]
    out = [[mp.mpc(0)] * (degree + 1) for _ in range(degree + 1)]
    for n in range(degree + 1):
        out[n][n] = -2 * (n + 1) * alpha
        if n >= 1:
            out[n - 1][n] = -n * beta * mp.sqrt(mp.mpf(n + 1) / n)
        if n + 1 <= degree:
            out[n + 1][n] = (n + 2) * lam * mp.sqrt(mp.mpf(n + 1) / (n + 2))
    return out


def _matvec(mat, vec):
    return [mp.fsum(mij * vj for mij, vj in zip(row, vec)) for row in mat]


def _apply_u_exp(gmats, h, wts, degree):
    """(weight, O h + b) for the group action on Exp[h], node-wise."""
    oh, bv = [], []
    for gm, hrow in zip(gmats, h):
        oh.append(_matvec(_mobius_matrix(gm, degree), hrow))
        bv.append(_cocycle(gm, degree))
    b_norm_sq = _inner_1p(bv, bv, wts)
    weight = mp.exp(-b_norm_sq / 2 - _inner_1p(oh, bv, wts))
    return weight, _vec_add(oh, bv)


@dataclass(frozen=True)
class FDScan:
    steps: list
    distances: list
    slope: float
    richardson_step: float
    richardson_residual: float


def fd_consistency_scan(sigma: CurrentElement, h: DirectIntegralVector,
                        steps=(1e-2, 5e-3, 2.5e-3, 1.25e-3), dps: int = 40) -> FDScan:
    """Distance of the two-sided difference quotient of the group action from
    the derived action (phase omitted), per step, plus a Richardson combination
    of the two smallest steps.

    Returns float summaries; all intermediate arithmetic runs at `dps` digits.
    """
    with mp.workdps(dps):
        wts = [mp.mpf(float(w)) for w in sigma.mesh.weights]
        smats = [[[_to_mpc(sigma.mats[i, r, c]) for c in range(2)] for r in range(2)]
                 for i in range(sigma.mesh.n_nodes)]
        degree = h.degree
        hv = [[_to_mpc(z) for z in row] for row in h.coeffs]

        nu_vec = [[mp.sqrt(mp.pi) * m[1][0]] + [mp.mpc(0)] * degree for m in smats]
        theta_h = [_matvec(_theta_exact_node(m, degree), hrow)
                   for m, hrow in zip(smats, hv)]
        ray_dir = _vec_add(theta_h, nu_vec)
        exp_weight = -_inner_1p(hv, nu_vec, wts)
        pi_terms = [(exp_weight, hv, None), (mp.mpc(1), hv, ray_dir)]

        def fd_terms(s):
            sp = mp.mpf(s)
            wp, hp = _apply_u_exp([_exp2x2(m, sp) for m in smats], hv, wts, degree)
            wm, hm = _apply_u_exp([_exp2x2(m, -sp) for m in smats], hv, wts, degree)
            return [(wp / (2 * sp), hp, None), (-wm / (2 * sp), hm, None)]

        def dist(terms):
            diff = terms + [(-w, hh, vv) for (w, hh, vv) in pi_terms]
            return _combo_norm(diff, wts)

        fd_cache = {s: fd_terms(s) for s in steps}
        distances = [float(dist(fd_cache[s])) for s in steps]

        s_min = min(steps)
        half = s_min / 2.0
        coarse = fd_cache[s_min]
        fine = fd_terms(half)
        combined = ([(4 * w / 3, hh, vv) for (w, hh, vv) in fine]
                    + [(-w / 3, hh, vv) for (w, hh, vv) in coarse])
        rich = float(dist(combined))

    slope = float(np.polyfit(np.log(np.asarray(steps, dtype=float)),
                             np.log(np.maximum(distances, 1e-300)), 1)[0])
    return FDScan(steps=list(steps), distances=distances, slope=slope,
                  richardson_step=float(half), richardson_residual=rich)
