"""P-fibered geometric braids with O-multiplicity and coefficient.

A monic loop ``g`` on ``s`` strands is P-fibered with O-multiplicity ``m``
and coefficient ``a(t)`` when ``arg(a(t) u^m g(u, t))`` has no critical
points on the complement of the braid.  Critical points of the argument
sit over critical points ``c_j(t)`` of ``u -> u^m g(u, t)``, and a branch
of critical values ``V_j(t) = a(t) c_j^m g(c_j, t)`` produces one exactly
when ``d arg V_j / dt`` vanishes.  Everything here reduces to tracking
those branch speeds over a grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import config
from .braid import (
    TWO_PI,
    BraidWord,
    GeometricBraid,
    _cycles,
    circle,
    detect_symmetry,
    from_word,
    nest,
    same_invariants,
    torus_word,
)
from .certificate import FAIL, PASS, Certificate, combine
from .looppoly import (
    ArgSpeed,
    BranchCollision,
    DegenerateCriticalPoint,
    LoopPoly,
    MarginViolated,
    _elementary,
    _match_sequence,
    _pairwise_min,
    _roots_from_values,
    arg_certificate,
    arg_speed,
    from_braid,
    simple_root_margin,
    track,
)
from .mixedpoly import MixedPoly, WeightVector, face_from_loop, face_function, g_polynomial, glue, newton
from .nondegeneracy import check_strongly_inner_nondegenerate
from .trigpoly import TrigPoly

__all__ = [
    "PFiberData", "HypothesisFailed", "WeightSelectionFailed", "critical_values", "certify",
    "minimal_coefficient_speed", "minimal_power", "MinimalPower", "verify_compatible",
    "CompatibilityReport", "realize", "Realization", "proposition_T", "PropositionT",
    "coefficient_speed",
]

ONE = TrigPoly.constant(1.0)


class HypothesisFailed(ValueError):
    """The loop is not P-fibered with constant coefficient, so no power bound exists."""


class WeightSelectionFailed(ValueError):
    """No strictly decreasing sequence of admissible weights was found under the cap."""


@dataclass
class PFiberData:
    braid_loop: LoopPoly
    o_mult: int = 0
    coefficient: TrigPoly = field(default_factory=lambda: ONE)
    multiplicities: tuple | None = None

    def __post_init__(self):
        if not self.braid_loop.is_monic:
            raise ValueError("the braid loop must be monic")
        if self.o_mult < 0:
            raise ValueError("O-multiplicity must be nonnegative")
        if not isinstance(self.coefficient, TrigPoly):
            self.coefficient = TrigPoly.constant(complex(self.coefficient))
        if self.coefficient.is_zero():
            raise ValueError("the coefficient must not vanish")
        if self.multiplicities is not None:
            mult = tuple(int(k) for k in self.multiplicities)
            if any(k <= 0 for k in mult):
                raise ValueError("multiplicities must be positive")
            self.multiplicities = mult

    @property
    def strands(self) -> int:
        return self.braid_loop.degree

    def to_json(self) -> dict:
        out = {"loop": self.braid_loop.to_json(), "o_mult": self.o_mult,
               "coefficient": self.coefficient.to_json()}
        if self.multiplicities is not None:
            out["multiplicities"] = list(self.multiplicities)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "PFiberData":
        coef = obj.get("coefficient")
        return cls(LoopPoly.from_json(obj["loop"]), int(obj.get("o_mult", 0)),
                   TrigPoly.from_json(coef) if coef is not None else ONE, obj.get("multiplicities"))


def coefficient_speed(a: TrigPoly, ts) -> np.ndarray:
    """``d arg a / dt = Im(conj(a) a') / |a|^2`` on ``ts``."""
    ts = np.asarray(ts, dtype=float)
    if a.is_constant():
        return np.zeros(ts.shape)
    v = a(ts)
    dv = a.derivative()(ts)
    return np.imag(np.conj(v) * dv) / np.abs(v) ** 2


def _nonvanishing(a: TrigPoly, check: str, n: int) -> Certificate:
    ts = np.linspace(0.0, TWO_PI, n, endpoint=False)
    vals = np.abs(a(ts))
    slack = a.lipschitz() * (TWO_PI / n) / 2
    low = float(vals.min())
    if low > slack:
        return Certificate(check, PASS, margin=low - slack, slack=slack, grid=n)
    return Certificate(check, FAIL, margin=0.0, slack=slack, grid=n,
                       witnesses=[{"t": float(ts[vals.argmin()]), "value": low}])


# ---------------------------------------------------------------------------
# weighted loops (multiplicities)
# ---------------------------------------------------------------------------


def _strand_weights(B, mults: tuple) -> np.ndarray:
    comps = B.components()
    if len(comps) != len(mults):
        raise ValueError(f"{len(mults)} multiplicities given for {len(comps)} closure components")
    w = np.zeros(B.strands)
    for comp, mk in zip(comps, mults):
        w[list(comp)] = mk
    return w


def _weighted_numerator(R: np.ndarray, w: np.ndarray, m: int) -> np.ndarray:
    """Coefficients of ``m prod(u - u_k) + u sum_k w_k prod_{l != k}(u - u_l)`` per column."""
    s, T = R.shape
    S = np.zeros((s, T), dtype=complex)
    for k in range(s):
        S += w[k] * _elementary(np.delete(R, k, axis=0))
    if m == 0:
        return S
    return m * _elementary(R) + np.vstack([np.zeros((1, T)), S])


def _weighted_speed(g: LoopPoly, m: int, mults: tuple, n: int) -> ArgSpeed:
    """Critical-value branches of ``u^m prod (u - u_k)^{w_k}`` built from tracked roots."""
    nmax = config.get("track_grid_max")
    B = track(g, n)
    w = _strand_weights(B, mults)
    gu, gt = g.du(), g.dt()
    while True:
        R = B.all_samples()
        ts = B.ts
        N = _weighted_numerator(R, w, m)
        crit = _roots_from_values(N)
        if crit.shape[1] == 0:
            empty = np.zeros((0, ts.size), dtype=complex)
            return ArgSpeed(ts, empty, empty, empty, np.zeros((0, ts.size)), (), [])
        sep = _pairwise_min(crit)
        if sep.min() <= 1e-12 * (1 + np.abs(crit).max()):
            raise DegenerateCriticalPoint("critical points of the weighted loop collide")
        order = _match_sequence(crit, sep)
        if order is not None:
            break
        if 2 * B.n > nmax:
            raise DegenerateCriticalPoint("critical points could not be followed on the finest grid")
        B = track(g, 2 * B.n)
    pts = np.take_along_axis(crit, order, axis=1).T
    speeds = -gt.eval_grid(R, ts) / gu.eval_grid(R, ts) if gt.degree >= 0 else np.zeros(R.shape)
    diff = pts[:, None, :] - R[None, :, :]
    if np.abs(diff).min() <= 1e-12 * (1 + np.abs(R).max()):
        raise BranchCollision("a critical point meets a strand")
    logs = np.sum(w[None, :, None] * np.log(diff), axis=1)
    if m:
        logs = logs + m * np.log(pts)
    V = np.exp(logs)
    L = np.sum(-w[None, :, None] * speeds[None, :, :] / diff, axis=1)
    closure = GeometricBraid(pts).closure
    windings = []
    for cyc in _cycles(closure):
        tot = sum(np.sum(np.angle(V[j, 1:] / V[j, :-1])) for j in cyc)
        windings.append(int(np.rint(tot / TWO_PI)))
    return ArgSpeed(ts, pts, V, V * L, np.imag(L), closure, windings)


# ---------------------------------------------------------------------------
# critical values and certification
# ---------------------------------------------------------------------------


def _critical_numerator(g: LoopPoly, m: int) -> LoopPoly:
    return g.du() if m == 0 else g.scale(float(m)) + g.du().mul_u(1)


def critical_values(data: PFiberData, t: float) -> np.ndarray:
    """Nonzero critical points' values ``a(t) c^m g(c, t)`` of ``u -> a u^m g`` at ``t``.

    There are ``s`` of them when ``m >= 1`` and ``s - 1`` when ``m = 0``
    (for ``m = 0`` a critical point at ``u = 0`` is kept).
    """
    g, m, a = data.braid_loop, data.o_mult, data.coefficient
    ts = np.array([float(t)])
    if data.multiplicities is not None:
        B = track(g)
        w = _strand_weights(B, data.multiplicities)
        base = B.all_samples()[:, int(np.rint(t / TWO_PI * B.n)) % B.n]
        R = np.atleast_1d(np.roots(g.coeff_values(ts)[::-1, 0]))
        idx = np.array([np.abs(R - z).argmin() for z in base])
        R = R[idx][:, None]
        crit = _roots_from_values(_weighted_numerator(R, w, m))[0]
        vals = np.exp(np.sum(w[:, None] * np.log(crit[None, :] - R), axis=0))
        if m:
            vals = vals * crit ** m
        return a(ts)[0] * vals
    N = _critical_numerator(g, m)
    if N.degree <= 0:
        return np.zeros(0, dtype=complex)
    crit = _roots_from_values(N.coeff_values(ts))[0]
    if crit.size > 1:
        d = np.abs(crit[:, None] - crit[None, :]) + np.eye(crit.size) * np.inf
        if d.min() <= 1e-9 * (1 + np.abs(crit).max()):
            raise DegenerateCriticalPoint(f"multiple critical point at t = {t}")
    G = g.mul_u(m) if m else g
    return a(ts)[0] * G.eval_grid(crit[:, None], ts)[:, 0]


def certify(data: PFiberData, n: int | None = None) -> Certificate:
    """Certify that ``arg(a u^m g)`` has no critical points.

    The margin is the smallest ``|d arg V_j / dt|`` over the grid and all
    branches minus the slack; ``details["windings"]`` lists the winding
    number of each closed branch of critical values around 0.
    """
    n = n or config.get("pfiber_grid")
    g, m, a = data.braid_loop, data.o_mult, data.coefficient
    parts = [_nonvanishing(a, "coefficient_nonvanishing", n)]
    _, simple = simple_root_margin(g, include_zero=True)
    parts.append(simple)
    if m >= 1:
        parts.append(_nonvanishing(g.lowest, "avoids_zero", n))
    details = {"o_mult": m, "strands": g.degree}
    if not all(p.passed for p in parts):
        out = combine("pfibered", parts, details=details)
        out.margin = 0.0
        return out
    try:
        if data.multiplicities is None:
            speed = arg_speed(g.mul_u(m) if m else g, n)
        else:
            speed = _weighted_speed(g, m, data.multiplicities, n)
    except (BranchCollision, DegenerateCriticalPoint, MarginViolated) as err:
        parts.append(Certificate("pfibered_arg", FAIL, witnesses=[{"reason": str(err)}], grid=n))
        out = combine("pfibered", parts, details=details)
        out.margin = 0.0
        return out
    arg = arg_certificate(speed, "pfibered_arg", coefficient_speed(a, speed.ts))
    parts.append(arg)
    out = combine("pfibered", parts, details=dict(details, **arg.details))
    out.margin, out.slack, out.grid = arg.margin, arg.slack, arg.grid
    out.details["windings"] = speed.windings
    return out


# ---------------------------------------------------------------------------
# searches
# ---------------------------------------------------------------------------


def _speed_range(g: LoopPoly, m: int, n: int | None = None):
    data = arg_speed(g.mul_u(m) if m else g, n)
    if data.speed.size == 0:
        return None
    return data.branch_range(), float(np.abs(data.speed).min())


def _by_modulus(start: int):
    k = start
    while True:
        yield from ((k, -k) if k else (0,))
        k += 1


def minimal_coefficient_speed(g: LoopPoly, m: int, n: int | None = None, cap: int | None = None):
    """Smallest ``|n|`` with ``a(t) = e^{int}`` making ``u^m g`` P-fibered.

    Candidates start at the smallest integer outside ``[-hi, -lo]`` where
    ``[lo, hi]`` is the tracked range of branch speeds; ties go to the
    positive sign.  Returns ``(n, certificate)``.
    """
    rng = _speed_range(g, m, n)
    if rng is None:
        return 0, certify(PFiberData(g, m, ONE), n)
    (lo, hi), _ = rng
    cap = cap or int(math.ceil(max(abs(lo), abs(hi)))) + 64

    def outside(k):
        return k > -lo or k < -hi

    start = min(abs(k) for k in (0, math.floor(-lo) + 1, math.ceil(-hi) - 1) if outside(k))
    for k in _by_modulus(start):
        if abs(k) > cap:
            break
        if not outside(k):
            continue
        cert = certify(PFiberData(g, m, TrigPoly.monomial(k)), n)
        if cert.passed:
            return k, cert
    raise HypothesisFailed(f"no coefficient speed up to {cap} certifies")


@dataclass
class MinimalPower:
    q: int
    observed: int
    certificates: dict

    def to_json(self) -> dict:
        return {"q": self.q, "observed": self.observed,
                "certificates": {str(p): c.to_json() for p, c in sorted(self.certificates.items())}}


def minimal_power(g: LoopPoly, m: int, a: TrigPoly, scan: int = 0, n: int | None = None) -> MinimalPower:
    """Bound ``q`` such that ``g(u, e^{ipt})`` is P-fibered with coefficient ``a`` for all ``p > q``.

    ``q = ceil(sup |d arg a/dt| / inf |d arg v_j/dt|)``.  The certificate for
    ``p = q + 1`` is always computed and ``scan`` more values of ``p`` are
    certified on request.  ``observed`` is the smallest ``p >= 1`` from which
    every ``p`` up to ``q + 1`` certifies.
    """
    base = certify(PFiberData(g, m, ONE), n)
    if not base.passed:
        raise HypothesisFailed(f"loop is not P-fibered with O-multiplicity {m} ({base.status})")
    rng = _speed_range(g, m, n)
    grid = config.get("loop_grid")
    sup_a = float(np.abs(coefficient_speed(a, np.linspace(0.0, TWO_PI, grid, endpoint=False))).max())
    if rng is None or sup_a == 0.0:
        q = 0
    else:
        q = max(0, math.ceil(sup_a / rng[1] - 1e-9))
    certs = {}
    for p in range(1, q + 2 + scan):
        certs[p] = certify(PFiberData(g.substitute_power(p), m, a), n)
    observed = q + 1
    while observed > 1 and certs[observed - 1].passed:
        observed -= 1
    return MinimalPower(q, observed, certs)


# ---------------------------------------------------------------------------
# compatible sequences
# ---------------------------------------------------------------------------


@dataclass
class CompatibilityReport:
    ok: bool
    lines: list
    certificates: list

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"compatible": self.ok, "lines": list(self.lines),
                "certificates": [c.to_json() for c in self.certificates]}


def verify_compatible(seq: Sequence[PFiberData], tol: float | None = None) -> CompatibilityReport:
    """Check the O-multiplicity ladder, ``a_N = 1``, ``a_{i-1} = b_i a_i`` and every certificate."""
    tol = config.get("compat_tol") if tol is None else tol
    if not seq:
        raise ValueError("empty sequence")
    lines, ok = [], True
    total = 0
    for i, d in enumerate(seq, start=1):
        if d.o_mult != total:
            ok = False
            lines.append(f"FAIL O-multiplicity of B_{i} is {d.o_mult}, expected {total}")
        total += d.strands
    if ok:
        lines.append("ok O-multiplicity ladder")
    diff = seq[-1].coefficient.max_coeff_diff(ONE)
    if diff > tol:
        ok = False
        lines.append(f"FAIL a_N ≠ 1 (difference {diff:.3g})")
    else:
        lines.append("ok a_N = 1")
    for i in range(1, len(seq)):
        b = seq[i].braid_loop.lowest
        diff = seq[i - 1].coefficient.max_coeff_diff(b * seq[i].coefficient)
        if diff > tol:
            ok = False
            lines.append(f"FAIL a_{{i-1}} ≠ b_i a_i at i = {i + 1} (difference {diff:.3g})")
        else:
            lines.append(f"ok a_{i} = b_{i + 1} a_{i + 1}")
    certs = []
    for i, d in enumerate(seq, start=1):
        c = certify(d)
        certs.append(c)
        if c.passed:
            lines.append(f"ok B_{i} P-fibered, margin {c.margin:.6g}")
        else:
            ok = False
            lines.append(f"FAIL B_{i} not certified P-fibered ({c.status})")
    return CompatibilityReport(ok, lines, certs)


@dataclass
class Realization:
    poly: MixedPoly
    weights: list
    loops: list
    report: CompatibilityReport
    certificate: Certificate
    symmetry: list

    def to_json(self) -> dict:
        return {"poly": self.poly.to_json(), "weights": [w.to_json() for w in self.weights],
                "loops": [g.to_json() for g in self.loops], "report": self.report.to_json(),
                "certificate": self.certificate.to_json(), "symmetry": self.symmetry}


def _admissible(G: LoopPoly, q: int, s: int, m_hi: int, v_hi: int) -> bool:
    for j, A in enumerate(G.coeffs):
        if A.is_zero():
            continue
        num = q * (m_hi - j)
        if num % s:
            return False
        nu = v_hi + num // s
        for ell in A.freqs:
            if nu < abs(ell) or (nu - ell) % 2:
                return False
    return True


def _select_weights(loops: list, strands: list, cap: int):
    """Vertex v-degrees from the tail: face ``i`` drops by ``q_i`` with ``q_i / s_i`` strictly increasing."""
    N = len(loops)
    ms = [sum(strands[:i]) for i in range(N)] + [sum(strands)]
    v_hi, k_next = 0, None
    weights = [None] * N
    degrees = [None] * N
    for i in range(N - 1, -1, -1):
        s = strands[i]
        found = None
        for q in range(1, cap + 1):
            if k_next is not None and q * k_next[1] <= k_next[0] * s:
                continue
            if _admissible(loops[i], q, s, ms[i + 1], v_hi):
                found = q
                break
        if found is None:
            raise WeightSelectionFailed(f"no admissible weight for face {i + 1} below {cap}")
        P = WeightVector(found, s)
        weights[i] = P
        degrees[i] = P.alpha(ms[i + 1], v_hi)
        k_next = (found, s)
        v_hi += found
    return weights, degrees


def realize(seq: Sequence[PFiberData], cap: int | None = None) -> Realization:
    """Strongly inner non-degenerate semiholomorphic polynomial with one face per braid.

    Face ``i`` has g-polynomial ``a_i u^{m_i} g_i``; the weights decrease strictly
    from the first face to the last and neighbouring faces share their vertex.
    """
    report = verify_compatible(seq)
    if not report.ok:
        raise ValueError("sequence is not compatible: " + "; ".join(l for l in report.lines if l.startswith("FAIL")))
    symmetry = []
    for i, d in enumerate(seq, start=1):
        rep = detect_symmetry(track(d.braid_loop))
        tags = sorted(rep.tags)
        symmetry.append(tags)
        if "u_even" not in rep.tags and "divisor_symmetric" not in rep.tags:
            raise ValueError(f"B_{i} is neither u-even nor divisor-symmetric (tags {tags})")
    loops = [(d.braid_loop.mul_u(d.o_mult) if d.o_mult else d.braid_loop).scale(d.coefficient) for d in seq]
    cap = cap or 4 * config.get("max_freq_cap")
    weights, degrees = _select_weights(loops, [d.strands for d in seq], cap)
    parts = [face_from_loop(G, P, dd) for G, P, dd in zip(loops, weights, degrees)]
    f = glue(parts) if len(parts) > 1 else parts[0]
    strong = check_strongly_inner_nondegenerate(f)
    trips = []
    for i, (G, P) in enumerate(zip(loops, weights), start=1):
        back = g_polynomial(face_function(f, P), P)
        diff = back.max_coeff_diff(G) if isinstance(back, LoopPoly) else float("inf")
        status = PASS if diff <= config.get("compat_tol") else FAIL
        trips.append(Certificate(f"round_trip_{i}", status, margin=-diff, details={"difference": diff}))
    cert = combine("realize", [strong] + trips, details={"faces": newton(f).n_faces})
    cert.margin = strong.margin
    return Realization(f, weights, loops, report, cert, symmetry)


# ---------------------------------------------------------------------------
# the family T^{2m} i_s(B^2)
# ---------------------------------------------------------------------------


@dataclass
class PropositionT:
    M: int
    dominance: bool
    certificates: dict
    outer_certificates: dict
    word: BraidWord
    structure_ok: bool
    realization: Realization | None
    speed_range: tuple

    def to_json(self) -> dict:
        return {
            "M": self.M, "dominance": self.dominance, "word": str(self.word),
            "structure_ok": self.structure_ok, "speed_range": list(self.speed_range),
            "certificates": {str(m): c.to_json() for m, c in sorted(self.certificates.items())},
            "outer_certificates": {str(m): c.to_json() for m, c in sorted(self.outer_certificates.items())},
            "realization": self.realization.to_json() if self.realization is not None else None,
        }


def family_sequence(g_sq: LoopPoly, s: int, m: int) -> list:
    """``[B^2 with coefficient -e^{2imt}, circle e^{2imt} with O-multiplicity s]``."""
    b2 = TrigPoly.monomial(2 * m, -1.0)
    outer = LoopPoly([b2, ONE])
    return [PFiberData(g_sq, 0, b2), PFiberData(outer, s, ONE)]


def proposition_T(word: BraidWord, ms: Sequence[int] = (1, 2, 3), realize_family: bool = True) -> PropositionT:
    """Threshold ``M`` with ``T^{2m} i_s(B^2)`` realized through a compatible pair for all ``m > M``.

    The coefficient ``-e^{2imt}`` adds the constant ``2m`` to every branch
    speed of the ``B^2`` loop and the slack does not depend on ``m``, so once
    ``2m + lo > 2 slack`` every larger ``m`` passes as well.
    """
    s = word.strands
    g_sq = from_braid(from_word(word)).substitute_power(2)
    if g_sq.degree <= 1:
        lo, hi, slack = 0.0, 0.0, 0.0
    else:
        data = arg_speed(g_sq)
        base = arg_certificate(data, "pfibered_arg")
        lo, hi = data.branch_range()
        slack = base.slack
    M = 0
    while 2 * (M + 1) + lo <= 2 * slack:
        M += 1
    dominance = 2 * (M + 1) + lo > 2 * slack
    certs, outer = {}, {}
    for m in ms:
        seq = family_sequence(g_sq, s, m)
        certs[m] = certify(seq[0])
        outer[m] = certify(seq[1])
    m_real = M + 1
    realization = realize(family_sequence(g_sq, s, m_real)) if realize_family else None
    fam = torus_word(s, m_real) * BraidWord(s + 1, word.power(2).gens)
    inner = track(g_sq)
    structure = same_invariants(nest(inner, circle(2 * m_real)), from_word(fam))
    return PropositionT(M, dominance, certs, outer, fam, bool(structure), realization, (lo, hi))
