"""Inner and strong inner non-degeneracy certificates.

Every face function is weighted homogeneous, so its critical points come in
orbits of the weighted scaling ``(u, v) -> (rho^p1 u, rho^p2 v)``.  Each orbit
meets the weighted sphere ``|u| = cos(theta)^p1, |v| = sin(theta)^p2``
exactly once, so searching ``(theta, phi, t)`` with ``u = |u| e^{i phi}`` and
``v = |v| e^{i t}`` covers everything.

A mixed map ``C^2 -> C`` with Wirtinger partials ``a_j = df/dz_j`` and
``b_j = df/dconj(z_j)`` has real Jacobian singular values
``sqrt(alpha +- |beta|)`` with ``alpha = sum |a_j|^2 + |b_j|^2`` and
``beta = 2 sum a_j b_j``.  A point is critical exactly when
``conj(a_j) eta + b_j conj(eta) = 0`` for all ``j`` and some unit ``eta``;
witnesses are refined on that system.

Semiholomorphic faces skip the search: weak non-degeneracy is simplicity of
the roots of the g-polynomial and strong non-degeneracy is monotonicity of
the argument of its critical values.
"""

from __future__ import annotations

import numpy as np
from scipy.optimize import least_squares

from . import config
from .certificate import FAIL, INCONCLUSIVE, PASS, Certificate, combine
from .looppoly import (
    BranchCollision,
    DegenerateCriticalPoint,
    LoopPoly,
    MarginViolated,
    SolverDiverged,
    arg_certificate,
    arg_speed,
    leading_certificate,
    simple_root_margin,
)
from .mixedpoly import (
    MixedPoly,
    WeightVector,
    face_function,
    g_polynomial,
    gradient,
    newton,
    vertex_function,
    vertex_nonvanishing,
)

__all__ = [
    "check_inner_nondegenerate",
    "check_strongly_inner_nondegenerate",
    "critical_search",
    "axis_certificate",
    "face_certificate",
]

HALF_PI = np.pi / 2


# ---------------------------------------------------------------------------
# weighted-sphere search for general mixed faces
# ---------------------------------------------------------------------------


def _sphere_point(theta, phi, t, P):
    p1, p2 = P
    u = np.cos(theta) ** p1 * np.exp(1j * phi)
    v = np.sin(theta) ** p2 * np.exp(1j * t)
    return u, v


def _lipschitz(f: MixedPoly, P) -> np.ndarray:
    """Bounds on ``|d/dtheta|, |d/dphi|, |d/dt|`` of ``f`` over the weighted sphere."""
    p1, p2 = P
    L = np.zeros(3)
    for (a1, a2, b1, b2), c in f.items():
        c = abs(c)
        L += c * np.array([max(p1 * (a1 + a2), p2 * (b1 + b2)), abs(a1 - a2), abs(b1 - b2)])
    return L


def _partials(f: MixedPoly) -> list:
    """The four Wirtinger partials as mixed polynomials."""
    out = [dict(), dict(), dict(), dict()]
    for (a1, a2, b1, b2), c in f.items():
        for idx, (e, shift) in enumerate(((a1, (1, 0, 0, 0)), (a2, (0, 1, 0, 0)),
                                          (b1, (0, 0, 1, 0)), (b2, (0, 0, 0, 1)))):
            if e:
                key = (a1 - shift[0], a2 - shift[1], b1 - shift[2], b2 - shift[3])
                out[idx][key] = out[idx].get(key, 0j) + c * e
    return [MixedPoly(d) for d in out]


def _sigma_min(grads):
    au, aub, av, avb = grads
    alpha = np.abs(au) ** 2 + np.abs(aub) ** 2 + np.abs(av) ** 2 + np.abs(avb) ** 2
    beta = 2 * (au * aub + av * avb)
    return np.sqrt(np.maximum(alpha - np.abs(beta), 0.0)), beta


def _residual(x, f, P, weak, scale):
    theta, phi, t, psi = x
    u, v = _sphere_point(theta, phi, t, P)
    au, aub, av, avb = gradient(f, u, v)
    eta = np.exp(1j * psi)
    r = [np.conj(au) * eta + aub * np.conj(eta), np.conj(av) * eta + avb * np.conj(eta)]
    if weak:
        r.append(complex(f(u, v)))
    r = np.array(r) / scale
    return np.concatenate([r.real, r.imag])


def critical_search(f: MixedPoly, P, region=(0.0, HALF_PI), weak: bool = True,
                    check: str = "critical_points") -> Certificate:
    """Search the weighted sphere for critical points of ``f`` (zeros only when ``weak``).

    ``region`` is ``(lo, hi[, keep_lo, keep_hi])`` bounding ``theta``; 0 is the
    u-axis (``v = 0``) and pi/2 the v-axis (``u = 0``).  Witnesses at an
    endpoint count only when that endpoint is kept.
    PASS when at every grid point either ``|f|`` (weak only) or the smallest
    Jacobian singular value exceeds twice its Lipschitz slack over the cell.
    FAIL only with a refined witness whose defect is below ``witness_defect``.
    """
    P = tuple(WeightVector(*P))
    lo, hi = region[0], region[1]
    nt = config.get("critical_radial_grid")
    n = config.get("critical_seed_grid")
    steps = config.get("newton_steps")
    defect_tol = config.get("witness_defect")
    tol = {"radial_grid": nt, "seed_grid": n, "newton_steps": steps, "witness_defect": defect_tol,
           "theta_range": [float(lo), float(hi)], "weak": weak}
    if f.is_zero():
        return Certificate(check, FAIL, 0.0, 0.0, n, [{"reason": "face function is zero"}], tol)
    scale = max(f.coeff_sum(), 1e-300)
    dth = (hi - lo) / nt
    thetas = lo + (np.arange(nt) + 0.5) * dth
    ang = np.linspace(0.0, 2 * np.pi, n, endpoint=False)
    dang = 2 * np.pi / n
    half = np.array([dth / 2, dang / 2, dang / 2])
    parts = _partials(f)
    slack_f = float(_lipschitz(f, P) @ half)
    slack_s = float(np.sqrt(2) * sum(_lipschitz(p, P) @ half for p in parts))
    PHI, T = np.meshgrid(ang, ang, indexing="ij")
    worst = np.inf
    seeds = []
    for th in thetas:
        u, v = _sphere_point(th, PHI, T, P)
        grads = gradient(f, u, v)
        sig, beta = _sigma_min(grads)
        q = sig / slack_s if slack_s > 0 else np.where(sig > 0, np.inf, 0.0)
        merit = sig / scale
        if weak:
            fv = np.abs(f(u, v))
            qf = fv / slack_f if slack_f > 0 else np.where(fv > 0, np.inf, 0.0)
            q = np.maximum(q, qf)
            merit = merit + fv / scale
        worst = min(worst, float(q.min()))
        flat = np.argsort(merit, axis=None)[:8]
        for idx in flat:
            i, j = np.unravel_index(idx, merit.shape)
            psi = (np.angle(beta[i, j]) + np.pi) / 2
            seeds.append((float(merit[i, j]), th, PHI[i, j], T[i, j], psi))
    details = {"q_min": worst, "slack_f": slack_f, "slack_sigma": slack_s}
    if worst > 2:
        return Certificate(check, PASS, margin=worst - 1, slack=1.0, grid=n, tolerances=tol, details=details)
    seeds.sort(key=lambda s: s[0])
    for _, th, ph, tt, psi in seeds[:16]:
        res = least_squares(_residual, [th, ph, tt, psi], args=(f, P, weak, scale),
                            bounds=([lo, -np.inf, -np.inf, -np.inf], [hi, np.inf, np.inf, np.inf]),
                            max_nfev=steps * 5, xtol=1e-15, ftol=1e-15, gtol=1e-15)
        defect = float(np.abs(res.fun).max())
        th_w = res.x[0]
        interior = _in_region(th_w, region)
        if defect < defect_tol and interior:
            u, v = _sphere_point(*res.x[:3], P)
            wit = {"u": complex(u), "v": complex(v), "defect": defect,
                   "value": complex(f(u, v)), "theta": float(th_w)}
            return Certificate(check, FAIL, margin=0.0, slack=1.0, grid=n, witnesses=[wit],
                               tolerances=tol, details=details)
    details["hint"] = "refine critical_seed_grid or critical_radial_grid"
    return Certificate(check, INCONCLUSIVE, margin=worst - 1, slack=1.0, grid=n, tolerances=tol, details=details)


def _in_region(theta: float, region) -> bool:
    lo, hi = region[0], region[1]
    keep_lo, keep_hi = (region[2], region[3]) if len(region) > 2 else (True, True)
    eps = 1e-9
    if theta < lo - eps or theta > hi + eps:
        return False
    if theta <= lo + eps:
        return keep_lo
    if theta >= hi - eps:
        return keep_hi
    return True


# ---------------------------------------------------------------------------
# semiholomorphic faces
# ---------------------------------------------------------------------------


def axis_certificate(face: MixedPoly, strong: bool) -> Certificate:
    """Points ``(u, 0)`` with ``u != 0`` for the last face.

    Near ``v = 0`` the lowest v-degree terms dominate.  Degree 0 terms give
    ``c u^s`` and no critical points; degree 1 terms ``a u^mu v + b u^mu conj(v)``
    (plus ``u`` and ``conj(u)`` variants) are regular iff ``|a| != |b|``; degree
    two or more makes the whole axis critical.
    """
    nu_min = min(b1 + b2 for _, _, b1, b2 in face.terms)
    if nu_min == 0:
        if face.is_semiholomorphic or not strong:
            return Certificate("axis_v0", PASS, margin=float("inf"), details={"nu_min": 0})
        low = face.restrict(lambda k: k[2] + k[3] == 0)
        return critical_search(low, (1, 1), weak=False, check="axis_v0")
    if nu_min >= 2:
        return Certificate("axis_v0", FAIL, witnesses=[{"reason": "face vanishes to order >= 2 along v = 0"}],
                           details={"nu_min": nu_min})
    low = face.restrict(lambda k: k[2] + k[3] == 1)
    a = sum(c for k, c in low.terms.items() if k[2] == 1)
    b = sum(c for k, c in low.terms.items() if k[3] == 1)
    if len({(k[0], k[1]) for k in low.terms}) > 1:
        return critical_search(low, (1, 1), weak=not strong, check="axis_v0")
    gap = abs(abs(a) - abs(b))
    status = PASS if gap > 1e-12 * max(abs(a), abs(b), 1.0) else FAIL
    wit = [] if status == PASS else [{"reason": "|a| = |b| for the v and conj(v) terms", "a": a, "b": b}]
    return Certificate("axis_v0", status, margin=gap, witnesses=wit, details={"nu_min": 1})


def face_certificate(face: MixedPoly, P: WeightVector, first: bool, last: bool, strong: bool) -> Certificate:
    """Certificate for one compact face.

    ``first`` faces must be regular wherever ``v != 0`` (including ``u = 0``),
    ``last`` faces wherever ``u != 0`` (including ``v = 0``); other faces only
    on ``(C*)^2``.
    """
    name = f"face_{P.p1}_{P.p2}"
    if not face.is_semiholomorphic:
        return critical_search(face, P, region=(0.0, HALF_PI, last, first), weak=not strong, check=name)
    G = g_polynomial(face, P)
    parts = []
    if strong:
        parts.append(_strong_loop(G, first, name))
    else:
        parts.append(simple_root_margin(G, include_zero=first)[1])
    if last:
        parts.append(axis_certificate(face, strong))
    out = combine(name, parts)
    out.details["g_polynomial"] = G.to_json()
    return out


def _strong_loop(G: LoopPoly, first: bool, name: str) -> Certificate:
    lead = leading_certificate(G)
    if not lead.passed:
        return Certificate(name + "_arg", FAIL, parts=[lead], witnesses=lead.witnesses)
    m = G.u_order
    if first and m >= 2:
        return Certificate(name + "_arg", FAIL, witnesses=[{"reason": f"u^{m} divides the face: u = 0 is critical"}])
    try:
        data = arg_speed(G)
    except BranchCollision as err:
        return Certificate(name + "_arg", FAIL, witnesses=[{"reason": str(err)}])
    except (DegenerateCriticalPoint, MarginViolated, SolverDiverged) as err:
        return Certificate(name + "_arg", INCONCLUSIVE, details={"reason": str(err)})
    return arg_certificate(data, check=name + "_arg")


# ---------------------------------------------------------------------------
# vertices
# ---------------------------------------------------------------------------


def _vertex_certificate(fv: MixedPoly, vertex, strong: bool) -> Certificate:
    name = f"vertex_{vertex[0]}_{vertex[1]}"
    nice = vertex_nonvanishing(fv, check=name + "_nonvanishing")
    if nice.passed and (not strong or (fv.is_semiholomorphic and vertex[0] >= 1)):
        # no zeros in (C*)^2, and for semiholomorphic vertices the u-derivative
        # mu u^(mu-1) Phi never vanishes there either
        return Certificate(name, PASS, nice.margin, nice.slack, nice.grid, parts=[nice])
    return critical_search(fv, (1, 1), region=(0.0, HALF_PI, False, False), weak=not strong, check=name)


def _single_vertex(f: MixedPoly, vertex, strong: bool) -> Certificate:
    fv = vertex_function(f, vertex)
    return critical_search(fv, (1, 1), region=(0.0, HALF_PI, True, True), weak=not strong,
                           check=f"vertex_{vertex[0]}_{vertex[1]}")


def _check(f: MixedPoly, strong: bool) -> Certificate:
    nd = newton(f)
    name = "strongly_inner_nondegenerate" if strong else "inner_nondegenerate"
    if nd.n_faces == 0:
        c = _single_vertex(f, nd.boundary_vertices[0], strong)
        out = combine(name, [c])
    else:
        parts = []
        N = nd.n_faces
        for i, F in enumerate(nd.faces):
            parts.append(face_certificate(face_function(f, F.weight), F.weight, i == 0, i == N - 1, strong))
        for vert in nd.interior_vertices():
            parts.append(_vertex_certificate(vertex_function(f, vert), vert, strong))
        out = combine(name, parts)
    out.details["faces"] = [list(F.weight) for F in nd.faces]
    out.details["vertices"] = [list(v) for v in nd.boundary_vertices]
    return out


def check_inner_nondegenerate(f: MixedPoly) -> Certificate:
    """Face functions have no critical zeros away from the relevant axes."""
    return _check(f, strong=False)


def check_strongly_inner_nondegenerate(f: MixedPoly) -> Certificate:
    """Face functions have no critical points at all away from the relevant axes."""
    return _check(f, strong=True)
