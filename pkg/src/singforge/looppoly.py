"""Loops of polynomials ``g(u, t) = sum_j A_j(t) u^j`` with trigonometric coefficients.

This module connects braids and polynomials.  It synthesizes loops from
sampled strands, recovers strands by root continuation, certifies that roots
stay simple along the whole loop, and studies the critical values of
``u -> G(u, t)`` that decide whether ``arg G`` is a fibration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import config
from .braid import TWO_PI, GeometricBraid, SymmetryReport, _cycles
from .certificate import FAIL, INCONCLUSIVE, PASS, Certificate
from .trigpoly import ANY, EVEN, ODD, ZERO, ResidualTooLarge, TrigPoly, approximate, conforms, spectral_knee

__all__ = [
    "LoopPoly", "SolverDiverged", "MarginViolated", "RootDriftTooLarge", "ResidualTooLarge",
    "DegenerateCriticalPoint", "BranchCollision", "batch_roots", "roots_at", "track",
    "simple_root_margin", "leading_certificate", "from_braid", "substitute_power",
    "parity_pattern", "ArgSpeed", "arg_speed", "arg_certificate",
]


class SolverDiverged(RuntimeError):
    """Polynomial roots could not be computed to the required residual."""


class MarginViolated(RuntimeError):
    """Roots come too close to be followed; the loop is not a braid."""


class RootDriftTooLarge(RuntimeError):
    """Projected coefficients moved the roots too far from the input strands."""


class DegenerateCriticalPoint(RuntimeError):
    """Critical points of ``u -> G(u, t)`` collide somewhere on the loop."""


class BranchCollision(RuntimeError):
    """A critical value reaches zero, so its argument is undefined."""


def _as_trig(c) -> TrigPoly:
    if isinstance(c, TrigPoly):
        return c
    if isinstance(c, dict):
        return TrigPoly(c)
    return TrigPoly.constant(complex(c))


class LoopPoly:
    """Polynomial in ``u`` whose coefficients ``A_0 .. A_s`` are :class:`TrigPoly`.

    Trailing zero coefficients are stripped, so ``A_s`` is the true leading
    coefficient.
    """

    __slots__ = ("_A",)

    def __init__(self, coeffs: Sequence):
        A = [_as_trig(c) for c in coeffs]
        while len(A) > 1 and A[-1].is_zero():
            A.pop()
        if not A or (len(A) == 1 and A[0].is_zero()):
            raise ValueError("the zero loop has no degree")
        self._A = tuple(A)

    @classmethod
    def monomial(cls, j: int, c=1.0) -> "LoopPoly":
        return cls([TrigPoly()] * j + [_as_trig(c)])

    @classmethod
    def from_roots_const(cls, roots) -> "LoopPoly":
        """Monic loop with constant roots."""
        coeffs = np.poly(np.asarray(roots, dtype=complex))[::-1]
        return cls([TrigPoly.constant(c) for c in coeffs])

    # -- structure -------------------------------------------------------
    @property
    def coeffs(self) -> tuple:
        return self._A

    @property
    def degree(self) -> int:
        return len(self._A) - 1

    @property
    def leading(self) -> TrigPoly:
        return self._A[-1]

    @property
    def lowest(self) -> TrigPoly:
        return self._A[0]

    def __getitem__(self, j: int) -> TrigPoly:
        return self._A[j] if 0 <= j < len(self._A) else TrigPoly()

    @property
    def is_monic(self) -> bool:
        return self.leading == TrigPoly.constant(1.0)

    @property
    def u_order(self) -> int:
        """Exponent of the largest power of ``u`` dividing the loop."""
        for j, a in enumerate(self._A):
            if not a.is_zero():
                return j
        return 0

    @property
    def max_freq(self) -> int:
        return max(a.degree for a in self._A)

    def coeff_bound(self) -> float:
        return float(sum(a.coeff_sum() for a in self._A))

    # -- evaluation ------------------------------------------------------
    def coeff_values(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        return np.array([a(ts) for a in self._A]).reshape(len(self._A), *ts.shape)

    def __call__(self, u, t):
        u = np.asarray(u, dtype=complex)
        t = np.asarray(t, dtype=float)
        u, t = np.broadcast_arrays(u, t)
        out = np.zeros(u.shape, dtype=complex)
        for a in reversed(self._A):
            out = out * u + a(t)
        return out if out.ndim else complex(out)

    def eval_grid(self, U: np.ndarray, ts: np.ndarray, C: np.ndarray | None = None) -> np.ndarray:
        """Evaluate at points ``U`` of shape ``(r, T)`` with times ``ts`` of shape ``(T,)``."""
        if C is None:
            C = self.coeff_values(ts)
        out = np.zeros(U.shape, dtype=complex)
        for j in range(C.shape[0] - 1, -1, -1):
            out = out * U + C[j][None, :]
        return out

    # -- algebra ---------------------------------------------------------
    def du(self) -> "LoopPoly":
        return _zero_safe([a * j for j, a in enumerate(self._A)][1:])

    def dt(self) -> "LoopPoly":
        return _zero_safe([a.derivative() for a in self._A])

    def mul_u(self, m: int = 1) -> "LoopPoly":
        return LoopPoly([TrigPoly()] * m + list(self._A))

    def divide_u(self, m: int) -> "LoopPoly":
        if m > self.u_order:
            raise ValueError(f"loop is not divisible by u^{m}")
        return LoopPoly(self._A[m:])

    def scale(self, a) -> "LoopPoly":
        a = _as_trig(a)
        return LoopPoly([c * a for c in self._A])

    def __add__(self, other: "LoopPoly") -> "LoopPoly":
        n = max(len(self._A), len(other._A))
        return _zero_safe([self[j] + other[j] for j in range(n)])

    def __sub__(self, other: "LoopPoly") -> "LoopPoly":
        n = max(len(self._A), len(other._A))
        return _zero_safe([self[j] - other[j] for j in range(n)])

    def __mul__(self, other):
        if isinstance(other, (TrigPoly, int, float, complex)):
            return self.scale(other)
        out = [TrigPoly()] * (self.degree + other.degree + 1)
        for i, a in enumerate(self._A):
            for j, b in enumerate(other._A):
                out[i + j] = out[i + j] + a * b
        return LoopPoly(out)

    def substitute_power(self, p: int) -> "LoopPoly":
        return LoopPoly([a.substitute(p) for a in self._A])

    def shift_freq(self, freq: int) -> "LoopPoly":
        return LoopPoly([a.shift(freq) for a in self._A])

    def __eq__(self, other):
        return isinstance(other, LoopPoly) and self._A == other._A

    def __hash__(self):
        return hash(self._A)

    def max_coeff_diff(self, other: "LoopPoly") -> float:
        n = max(len(self._A), len(other._A))
        return max(self[j].max_coeff_diff(other[j]) for j in range(n))

    def allclose(self, other: "LoopPoly", tol: float = 1e-10) -> bool:
        return self.max_coeff_diff(other) <= tol

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [a.to_json() for a in self._A]}

    @classmethod
    def from_json(cls, obj: dict) -> "LoopPoly":
        return cls([TrigPoly.from_json(c) for c in obj["coeffs"]])

    def __repr__(self):
        terms = [f"({a!r})*u^{j}" for j, a in enumerate(self._A) if not a.is_zero()]
        return "LoopPoly(" + " + ".join(terms) + ")"


def _zero_safe(A: list) -> LoopPoly:
    if all(a.is_zero() for a in A):
        return _ZeroLoop()
    return LoopPoly(A)


class _ZeroLoop(LoopPoly):
    """The zero loop, produced only by differentiation."""

    def __init__(self):
        self._A = (TrigPoly(),)

    @property
    def degree(self) -> int:
        return -1


def substitute_power(g: LoopPoly, p: int) -> LoopPoly:
    """``t -> p t`` in every coefficient."""
    return g.substitute_power(p)


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------


def _roots_from_values(C: np.ndarray) -> np.ndarray:
    """Roots for coefficient columns ``C`` of shape ``(s + 1, T)``, lowest degree first."""
    s = C.shape[0] - 1
    T = C.shape[1]
    if s == 0:
        return np.zeros((T, 0), dtype=complex)
    lead = C[-1]
    if np.any(lead == 0):
        raise SolverDiverged("leading coefficient vanishes on the grid")
    if s == 1:
        return (-C[0] / lead)[:, None]
    comp = np.zeros((T, s, s), dtype=complex)
    comp[:, 0, :] = -(C[-2::-1] / lead).T
    idx = np.arange(s - 1)
    comp[:, idx + 1, idx] = 1.0
    R = np.linalg.eigvals(comp)
    # two Newton polishing steps, kept only where they help
    for _ in range(2):
        val = np.zeros_like(R)
        der = np.zeros_like(R)
        for j in range(s, -1, -1):
            der = der * R + val
            val = val * R + C[j][:, None]
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(der != 0, val / der, 0)
        cand = R - step
        cv = np.zeros_like(R)
        for j in range(s, -1, -1):
            cv = cv * cand + C[j][:, None]
        better = np.isfinite(cand) & (np.abs(cv) < np.abs(val))
        R = np.where(better, cand, R)
    return R


def batch_roots(g: LoopPoly, ts) -> np.ndarray:
    """Roots of ``g(., t)`` for every ``t`` in ``ts``: array of shape ``(T, s)``."""
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    C = g.coeff_values(ts)
    R = _roots_from_values(C)
    if R.shape[1]:
        res = np.zeros_like(R)
        for j in range(C.shape[0] - 1, -1, -1):
            res = res * R + C[j][:, None]
        bound = 1e-10 * (1 + g.coeff_bound()) * np.maximum(1.0, np.abs(R).max()) ** g.degree
        if np.abs(res).max() > bound:
            raise SolverDiverged(f"root residual {np.abs(res).max():.2e} exceeds {bound:.2e}")
    return R


def roots_at(g: LoopPoly, t: float) -> np.ndarray:
    """The ``s`` roots of ``g(., t)``."""
    return batch_roots(g, [t])[0]


def _pairwise_min(R: np.ndarray) -> np.ndarray:
    """Minimum pairwise distance per row of ``R`` (shape ``(T, s)``)."""
    T, s = R.shape
    if s < 2:
        return np.full(T, np.inf)
    d = np.abs(R[:, :, None] - R[:, None, :])
    d[:, np.arange(s), np.arange(s)] = np.inf
    return d.min(axis=(1, 2))


def _with_zero(g: LoopPoly):
    m = g.u_order
    return g.divide_u(m) if m else g, m


def _match_sequence(R: np.ndarray, sep: np.ndarray):
    """Follow roots along rows of ``R``; returns index array or None when unresolved."""
    T, s = R.shape
    order = np.empty((T, s), dtype=int)
    order[0] = np.arange(s)
    if s == 0:
        return order
    if s == 1:
        order[:] = 0
        moves = np.abs(np.diff(R[:, 0]))
        return order if np.all(moves < sep[:-1] / 4) else None
    D = np.abs(R[:-1, :, None] - R[1:, None, :])
    nearest = D.argmin(axis=2)
    ok = np.all(np.sort(nearest, axis=1) == np.arange(s), axis=1)
    cur = order[0]
    for k in range(T - 1):
        if ok[k]:
            step = nearest[k]
        else:
            _, step = linear_sum_assignment(D[k])
        moved = D[k][np.arange(s), step]
        if moved.max() >= sep[k] / 4:
            return None
        cur = step[cur]
        order[k + 1] = cur
    return order


def track(g: LoopPoly, n: int | None = None) -> GeometricBraid:
    """Continue the roots of ``g`` around the loop and return them as a braid."""
    n = n or config.get("track_grid")
    nmax = config.get("track_grid_max")
    H, m = _with_zero(g)
    if m > 1:
        raise MarginViolated(f"root u = 0 has multiplicity {m}")
    while True:
        ts = np.linspace(0.0, TWO_PI, n + 1)
        R = batch_roots(H, ts)
        full = np.hstack([R, np.zeros((R.shape[0], 1))]) if m else R
        sep = _pairwise_min(full)
        if R.shape[1] and sep.min() <= 1e-12 * (1 + np.abs(R).max()):
            raise MarginViolated("roots collide on the grid")
        order = _match_sequence(R, sep)
        if order is not None:
            samples = np.take_along_axis(R, order, axis=1).T
            if samples.shape[0] == 0:
                samples = np.zeros((0, n + 1), dtype=complex)
            return GeometricBraid(samples, zero_strand=bool(m))
        if 2 * n > nmax:
            raise MarginViolated("root motion could not be resolved on the finest grid")
        n *= 2


def leading_certificate(g: LoopPoly, n: int | None = None) -> Certificate:
    """Certify that the leading coefficient never vanishes."""
    n = n or config.get("loop_grid")
    ts = np.linspace(0.0, TWO_PI, n, endpoint=False)
    a = g.leading
    vals = np.abs(a(ts))
    h = TWO_PI / n
    slack = a.lipschitz() * h / 2
    low = float(vals.min())
    status = PASS if low > slack else FAIL
    wit = [] if status == PASS else [{"t": float(ts[vals.argmin()]), "value": low}]
    return Certificate("leading_nonvanishing", status, margin=low - slack, slack=slack, grid=n, witnesses=wit)


def simple_root_margin(g: LoopPoly, n: int | None = None, include_zero: bool = True):
    """Certified lower bound on root separation over the whole loop.

    The grid minimum of pairwise root distances is reduced by ``2 h V`` where
    ``V`` is the largest root speed ``|g_t / g_u|`` seen on the grid.  With
    ``include_zero=False`` any power of ``u`` dividing ``g`` is ignored (roots
    at ``u = 0`` are then outside the region of interest).
    Returns ``(margin, certificate)``; the margin is 0 when the check fails.
    """
    n = n or config.get("loop_grid")
    lead = leading_certificate(g, n)
    tol = {"grid": n, "speed_factor": 2.0}
    if not lead.passed:
        return 0.0, Certificate("simple_roots", FAIL, 0.0, 0.0, n, lead.witnesses, tol, [lead])
    H, m = _with_zero(g)
    if include_zero and m > 1:
        wit = [{"reason": f"root u = 0 has multiplicity {m}"}]
        return 0.0, Certificate("simple_roots", FAIL, 0.0, 0.0, n, wit, tol, [lead])
    ts = np.linspace(0.0, TWO_PI, n, endpoint=False)
    h = TWO_PI / n
    R = batch_roots(H, ts)
    if R.shape[1]:
        Hu, Ht = H.du(), H.dt()
        gu = Hu.eval_grid(R.T, ts) if Hu.degree >= 0 else np.zeros(R.T.shape)
        gt = Ht.eval_grid(R.T, ts) if Ht.degree >= 0 else np.zeros(R.T.shape)
        with np.errstate(divide="ignore", invalid="ignore"):
            speed = np.where(np.abs(gu) > 0, np.abs(gt) / np.abs(gu), np.inf)
        vmax = float(np.max(speed)) if speed.size else 0.0
    else:
        vmax = 0.0
    full = np.hstack([R, np.zeros((R.shape[0], 1))]) if (include_zero and m == 1) else R
    sep = _pairwise_min(full)
    dmin = float(sep.min()) if sep.size else float("inf")
    slack = 2 * h * vmax
    margin = dmin - slack
    k = int(sep.argmin()) if np.isfinite(dmin) else 0
    if np.isfinite(dmin) and not margin > 0:
        wit = [{"t": float(ts[k]), "min_distance": dmin}]
        return 0.0, Certificate("simple_roots", FAIL, 0.0, slack, n, wit, tol, [lead], {"min_distance": dmin})
    return float(margin), Certificate("simple_roots", PASS, float(margin), slack, n, [], tol, [lead],
                                      {"min_distance": dmin, "max_root_speed": vmax})


# ---------------------------------------------------------------------------
# synthesis from braids
# ---------------------------------------------------------------------------


def _elementary(samples: np.ndarray) -> np.ndarray:
    """Coefficients (lowest first) of ``prod_j (u - z_j)`` per column of ``samples``."""
    s, T = samples.shape
    C = np.zeros((s + 1, T), dtype=complex)
    C[0] = 1.0  # highest-first accumulation, reversed at the end
    for j in range(s):
        z = samples[j]
        C[1: j + 2] = C[1: j + 2] - z[None, :] * C[0: j + 1]
    return C[::-1]


def parity_pattern(s: int, sym) -> list:
    """Frequency constraint for each coefficient ``A_0 .. A_s`` of a monic degree-``s`` loop.

    ``sym`` is ``None`` (no constraint), ``"u_even"``, ``"odd"`` or ``"k<2^K>"``
    (an integer is accepted too).  For ``k = 2^K`` (``k = 1`` is the odd case)
    ``A_j`` vanishes unless ``k`` divides ``s - j`` and then its frequencies
    have the parity of ``(s - j) / k``.
    """
    if sym is None or sym == ANY:
        return [ANY] * (s + 1)
    if sym == "u_even":
        return [EVEN] * (s + 1)
    if sym == "odd":
        k = 1
    elif isinstance(sym, str) and sym.startswith("k"):
        k = int(sym[1:])
    else:
        k = int(sym)
    if k < 1 or k & (k - 1):
        raise ValueError(f"symmetry order must be a power of two, got {k}")
    out = []
    for j in range(s + 1):
        if (s - j) % k:
            out.append(ZERO)
        else:
            out.append(EVEN if ((s - j) // k) % 2 == 0 else ODD)
    return out


def _default_max_freq(C: np.ndarray, cap: int) -> int:
    knee = max(spectral_knee(c, 1e-10) for c in C)
    p = 1
    while p <= knee:
        p *= 2
    return min(4 * p, cap)


def from_braid(B: GeometricBraid, sym=None, max_freq: int | None = None, tol: float | None = None) -> LoopPoly:
    """Monic loop whose roots trace ``B``, with coefficient spectra forced by ``sym``.

    Elementary symmetric functions of the strands are sampled, projected
    with :func:`approximate` under the parity pattern of ``sym``, and the
    roots of the result are checked against the strands.  ``max_freq`` is
    doubled (up to the configured cap) when the projection is too coarse.
    """
    if isinstance(sym, SymmetryReport):
        raise TypeError("pass one symmetry tag, e.g. 'u_even' or 'k2', not a whole report")
    cap = config.get("max_freq_cap")
    n = B.n
    ts = B.ts[:-1]
    s = B.s_tilde
    drift_tol = B.min_sep / 4 if np.isfinite(B.min_sep) else max(B.max_modulus(), 1.0) / 4
    if tol is None:
        tol = drift_tol
    pattern = parity_pattern(s, sym)
    C = _elementary(B.samples[:, :-1]) if s else np.ones((1, n), dtype=complex)
    limit = (n - 2) // 2
    mf = max_freq if max_freq is not None else _default_max_freq(C, cap)
    mf = min(mf, limit)
    cscale = float(np.abs(C).max())
    last_err = None
    while True:
        try:
            A = [approximate(ts, C[j], pattern[j], mf, tol, scale=cscale) for j in range(s)] + [TrigPoly.constant(1.0)]
        except ResidualTooLarge as err:
            last_err = err
            A = None
        if A is not None:
            for j, a in enumerate(A[:-1]):
                if not conforms(a, pattern[j]):
                    raise AssertionError("projected coefficient violates its parity pattern")
            g = LoopPoly(A)
            if s:
                R = batch_roots(g, B.ts)
                drift = _hausdorff_rows(R.T, B.samples)
            else:
                drift = 0.0
            if drift < drift_tol:
                return g.mul_u(1) if B.zero_strand else g
            last_err = RootDriftTooLarge(f"roots drift {drift:.3e} >= {drift_tol:.3e} at max_freq={mf}")
        if mf >= min(cap, limit):
            raise last_err
        mf = min(2 * mf, cap, limit)


def _hausdorff_rows(A: np.ndarray, B: np.ndarray) -> float:
    d = np.abs(A[:, None, :] - B[None, :, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


# ---------------------------------------------------------------------------
# critical values and argument speed
# ---------------------------------------------------------------------------


@dataclass
class ArgSpeed:
    """Critical points ``c_j(t)`` of ``u -> G(u, t)`` (zero excluded when ``G`` has a
    factor ``u^m``, ``m >= 1``), critical values ``V_j = G(c_j, t)``, their
    derivatives ``V_j' = G_t(c_j, t)`` and the argument speed
    ``w_j = Im(conj(V_j) V_j') / |V_j|^2``."""

    ts: np.ndarray
    points: np.ndarray
    values: np.ndarray
    derivs: np.ndarray
    speed: np.ndarray
    closure: tuple
    windings: list

    @property
    def n(self) -> int:
        return self.ts.size - 1

    def branch_range(self):
        if self.speed.size == 0:
            return (0.0, 0.0)
        return float(self.speed.min()), float(self.speed.max())


def _critical_loop(G: LoopPoly) -> LoopPoly:
    H, m = _with_zero(G)
    if m == 0:
        return G.du()
    return H.scale(float(m)) + H.du().mul_u(1) if H.degree > 0 else H.scale(float(m))


def arg_speed(G: LoopPoly, n: int | None = None) -> ArgSpeed:
    """Track the critical values of ``u -> G(u, t)`` and their argument speed."""
    n = n or config.get("pfiber_grid")
    N = _critical_loop(G)
    if N.degree <= 0:
        ts = np.linspace(0.0, TWO_PI, n + 1)
        empty = np.zeros((0, n + 1), dtype=complex)
        return ArgSpeed(ts, empty, empty, empty, np.zeros((0, n + 1)), (), [])
    try:
        Bc = track(N, n)
    except MarginViolated as err:
        raise DegenerateCriticalPoint(str(err)) from err
    pts = Bc.all_samples()
    ts = Bc.ts
    C = G.coeff_values(ts)
    V = G.eval_grid(pts, ts, C)
    Gt = G.dt()
    dV = Gt.eval_grid(pts, ts) if Gt.degree >= 0 else np.zeros_like(V)
    scale = 1 + np.abs(C).max()
    if np.abs(V).min() <= 1e-12 * scale:
        raise BranchCollision("a critical value vanishes: two roots of G meet")
    w = np.imag(np.conj(V) * dV) / np.abs(V) ** 2
    closure = Bc.full_closure()
    windings = []
    for cyc in _cycles(closure):
        tot = sum(np.sum(np.angle(V[j, 1:] / V[j, :-1])) for j in cyc)
        windings.append(int(np.rint(tot / TWO_PI)))
    return ArgSpeed(ts, pts, V, dV, w, closure, windings)


def arg_certificate(data: ArgSpeed, check: str = "arg_fibration", offset=None) -> Certificate:
    """Decide whether every critical-value branch turns monotonically.

    ``offset`` (array over the grid) is added to every branch speed; it is
    how a coefficient ``a(t)`` enters.  PASS needs the grid margin to exceed
    twice the slack (largest change of any branch speed between neighbouring
    grid points); the reported margin is the grid margin minus the slack.
    A branch whose speed changes sign or vanishes is a FAIL with witness.
    """
    w = data.speed if offset is None else data.speed + np.asarray(offset)[None, :]
    n = data.n
    tol = {"grid": n, "slack_factor": 2.0}
    if w.shape[0] == 0:
        return Certificate(check, PASS, margin=float("inf"), slack=0.0, grid=n, tolerances=tol,
                           details={"branches": 0})
    tiny = 1e-9 * (1 + np.abs(w).max())
    slack = float(np.abs(np.diff(w, axis=1)).max()) if w.shape[1] > 1 else 0.0
    raw = float(np.abs(w).min())
    witnesses = []
    for j in range(w.shape[0]):
        wj = w[j]
        if wj.max() > tiny and wj.min() < -tiny or np.abs(wj).min() <= tiny:
            k = int(np.abs(wj).argmin())
            witnesses.append({"branch": j, "t": float(data.ts[k]), "speed": float(wj[k]),
                              "critical_point": complex(data.points[j, k]),
                              "critical_value": complex(data.values[j, k]),
                              "constant_value": bool(np.abs(wj).max() <= tiny)})
    lo, hi = float(w.min()), float(w.max())
    details = {"branches": int(w.shape[0]), "speed_min": lo, "speed_max": hi,
               "windings": data.windings, "raw_margin": raw}
    if witnesses:
        return Certificate(check, FAIL, margin=0.0, slack=slack, grid=n, witnesses=witnesses,
                           tolerances=tol, details=details)
    status = PASS if raw > 2 * slack else INCONCLUSIVE
    return Certificate(check, status, margin=raw - slack, slack=slack, grid=n, tolerances=tol, details=details)
