"""Mixed polynomials in ``u, conj(u), v, conj(v)`` and their Newton geometry.

A term ``c u^a1 conj(u)^a2 v^b1 conj(v)^b2`` is stored under the exponent
quadruple ``(a1, a2, b1, b2)``.  Its lattice point is ``(a1 + a2, b1 + b2)``.
Newton polygons are computed exactly in integers.

Radially weighted homogeneous polynomials correspond to loops of
polynomials through :func:`g_polynomial` and :func:`from_loop`.  Several
such pieces with matching vertices are combined by :func:`glue`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import config
from .certificate import FAIL, PASS, Certificate, combine
from .looppoly import LoopPoly
from .trigpoly import TrigPoly

TAU_U = "tau_u"
TAU_V = "tau_v"
TAU_1 = "tau_1"


class InadmissibleK(ValueError):
    """The requested weight cannot carry one of the loop's frequencies."""

    def __init__(self, j: int, freq: int, smallest_odd, smallest_even):
        self.j = j
        self.freq = freq
        self.smallest_odd = smallest_odd
        self.smallest_even = smallest_even
        super().__init__(
            f"coefficient of u^{j} has frequency {freq} that the weight cannot carry; "
            f"smallest admissible odd k: {smallest_odd}, even k: {smallest_even}"
        )


class NonIntegerFrequency(ValueError):
    """The polynomial is not weighted homogeneous for the given weight vector."""


class VertexMismatch(ValueError):
    """Consecutive parts do not share their common vertex term for term."""


class WeightOrderViolation(ValueError):
    """Parts are not ordered by strictly decreasing weight vectors."""


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def _clean(terms: Mapping, scale: float | None = None) -> dict:
    tol = config.get("poly_drop_tol")
    out = {}
    for key, c in terms.items():
        key = tuple(int(e) for e in key)
        if len(key) != 4 or min(key) < 0:
            raise ValueError(f"exponent quadruple must have four nonnegative entries, got {key}")
        c = complex(c)
        if c != 0:
            out[key] = out.get(key, 0j) + c
    if not out:
        return {}
    if scale is None:
        scale = max(abs(c) for c in out.values())
    return {k: c for k, c in out.items() if abs(c) > tol * scale}


class MixedPoly:
    """Immutable sparse mixed polynomial.

    >>> f = MixedPoly({(2, 0, 0, 0): 1, (0, 0, 2, 0): -1})
    >>> f.support()
    [(0, 2), (2, 0)]
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping | None = None, *, scale: float | None = None):
        self._t = _clean(terms or {}, scale)

    @classmethod
    def monomial(cls, a1=0, a2=0, b1=0, b2=0, c=1.0) -> "MixedPoly":
        return cls({(a1, a2, b1, b2): c})

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def __getitem__(self, key) -> complex:
        return self._t.get(tuple(key), 0j)

    def __len__(self):
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def support(self) -> list:
        return sorted({(a1 + a2, b1 + b2) for a1, a2, b1, b2 in self._t})

    @property
    def is_semiholomorphic(self) -> bool:
        return all(a2 == 0 for _, a2, _, _ in self._t)

    def coeff_sum(self) -> float:
        return float(sum(abs(c) for c in self._t.values()))

    # -- algebra ---------------------------------------------------------
    def _scale(self) -> float:
        return max((abs(c) for c in self._t.values()), default=0.0)

    def __add__(self, other):
        if not isinstance(other, MixedPoly):
            return NotImplemented
        out = dict(self._t)
        for k, c in other._t.items():
            out[k] = out.get(k, 0j) + c
        return MixedPoly(out, scale=max(self._scale(), other._scale()) or None)

    def __neg__(self):
        return MixedPoly({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, MixedPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return MixedPoly({k: c * other for k, c in self._t.items()})
        if not isinstance(other, MixedPoly):
            return NotImplemented
        out: dict = {}
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0j) + c1 * c2
        return MixedPoly(out, scale=(self._scale() * other._scale()) or None)

    __rmul__ = __mul__

    def shift(self, da1=0, da2=0, db1=0, db2=0) -> "MixedPoly":
        d = (da1, da2, db1, db2)
        return MixedPoly({tuple(e + s for e, s in zip(k, d)): c for k, c in self._t.items()})

    def restrict(self, keep) -> "MixedPoly":
        """Terms whose exponent quadruple satisfies ``keep``."""
        return MixedPoly({k: c for k, c in self._t.items() if keep(k)})

    def __eq__(self, other):
        return isinstance(other, MixedPoly) and self._t == other._t

    def __hash__(self):
        return hash(tuple(sorted(self._t.items())))

    def max_coeff_diff(self, other: "MixedPoly") -> float:
        keys = set(self._t) | set(other._t)
        return max((abs(self[k] - other[k]) for k in keys), default=0.0)

    def allclose(self, other: "MixedPoly", tol: float = 1e-12) -> bool:
        return self.max_coeff_diff(other) <= tol

    # -- evaluation ------------------------------------------------------
    def __call__(self, u, v):
        return eval_poly(self, u, v)

    # -- io --------------------------------------------------------------
    def to_json(self) -> dict:
        return {"terms": [[*k, c.real, c.imag] for k, c in self.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "MixedPoly":
        return cls({tuple(int(e) for e in row[:4]): complex(row[4], row[5]) for row in obj["terms"]})

    def __str__(self):
        if not self._t:
            return "0"
        out = ""
        for (a1, a2, b1, b2), c in self.items():
            mono = "*".join(
                f"{name}^{e}" if e > 1 else name
                for name, e in (("u", a1), ("ubar", a2), ("v", b1), ("vbar", b2))
                if e
            )
            negative = (c.imag == 0 and c.real < 0) or (c.real == 0 and c.imag < 0)
            coef = _fmt(-c if negative else c)
            body = coef if not mono else (mono if coef == "1" else f"{coef}*{mono}")
            if not out:
                out = "-" + body if negative else body
            else:
                out += (" - " if negative else " + ") + body
        return out

    def __repr__(self):
        return f"MixedPoly({self})"


def _fmt(c: complex) -> str:
    if c.imag == 0:
        return f"{c.real:.12g}"
    if c.real == 0:
        return f"{c.imag:.12g}j"
    return f"({c.real:.12g}{c.imag:+.12g}j)"


def _powers(z: np.ndarray, e: int) -> np.ndarray:
    return z ** e if e else np.ones_like(z)


def eval_poly(f: MixedPoly, u, v):
    """Direct summation of ``f`` at (arrays of) points."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    u, v = np.broadcast_arrays(u, v)
    ub, vb = np.conj(u), np.conj(v)
    out = np.zeros(u.shape, dtype=complex)
    for (a1, a2, b1, b2), c in f.items():
        out = out + c * _powers(u, a1) * _powers(ub, a2) * _powers(v, b1) * _powers(vb, b2)
    return out if out.ndim else complex(out)


def gradient(f: MixedPoly, u, v):
    """Partials with respect to ``u, conj(u), v, conj(v)`` (Wirtinger convention)."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    u, v = np.broadcast_arrays(u, v)
    ub, vb = np.conj(u), np.conj(v)
    outs = [np.zeros(u.shape, dtype=complex) for _ in range(4)]
    for (a1, a2, b1, b2), c in f.items():
        pu, pub, pv, pvb = _powers(u, a1), _powers(ub, a2), _powers(v, b1), _powers(vb, b2)
        if a1:
            outs[0] = outs[0] + c * a1 * _powers(u, a1 - 1) * pub * pv * pvb
        if a2:
            outs[1] = outs[1] + c * a2 * pu * _powers(ub, a2 - 1) * pv * pvb
        if b1:
            outs[2] = outs[2] + c * b1 * pu * pub * _powers(v, b1 - 1) * pvb
        if b2:
            outs[3] = outs[3] + c * b2 * pu * pub * pv * _powers(vb, b2 - 1)
    if u.ndim == 0:
        return tuple(complex(o) for o in outs)
    return tuple(outs)


def multiply_by_u(f: MixedPoly) -> MixedPoly:
    return f.shift(da1=1)


def multiply_by_v(f: MixedPoly) -> MixedPoly:
    return f.shift(db1=1)


# ---------------------------------------------------------------------------
# Newton geometry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightVector:
    """Positive primitive weight ``(p1, p2)``; ``P > Q`` when ``p1/p2 > q1/q2``."""

    p1: int
    p2: int

    def __post_init__(self):
        if self.p1 <= 0 or self.p2 <= 0:
            raise ValueError("weights must be positive")
        g = math.gcd(self.p1, self.p2)
        if g != 1:
            object.__setattr__(self, "p1", self.p1 // g)
            object.__setattr__(self, "p2", self.p2 // g)

    @classmethod
    def from_ratio(cls, k) -> "WeightVector":
        k = Fraction(k)
        return cls(k.numerator, k.denominator)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.p1, self.p2)

    def alpha(self, mu: int, nu: int) -> int:
        return self.p1 * mu + self.p2 * nu

    def __gt__(self, other):
        return self.p1 * other.p2 > other.p1 * self.p2

    def __lt__(self, other):
        return other > self

    def __iter__(self):
        return iter((self.p1, self.p2))

    def to_json(self):
        return [self.p1, self.p2]


@dataclass(frozen=True)
class Face:
    weight: WeightVector
    degree: int
    support: tuple
    vertices: tuple


@dataclass
class NewtonData:
    boundary_vertices: list
    faces: list = field(default_factory=list)
    u_convenient: bool = False
    v_convenient: bool = False
    semiholomorphic: bool = False
    radially_weighted_homogeneous: bool = False

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def interior_vertices(self) -> list:
        return self.boundary_vertices[1:-1]

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.boundary_vertices],
            "faces": [
                {"weight": F.weight.to_json(), "degree": F.degree, "support": [list(p) for p in F.support]}
                for F in self.faces
            ],
            "u_convenient": self.u_convenient,
            "v_convenient": self.v_convenient,
            "semiholomorphic": self.semiholomorphic,
            "radially_weighted_homogeneous": self.radially_weighted_homogeneous,
        }


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def boundary_vertices(points: Iterable) -> list:
    """Vertices of the compact faces of ``conv(points) + R_+^2``, from the v-axis side down."""
    pts = sorted(set((int(a), int(b)) for a, b in points))
    if not pts:
        raise ValueError("empty support")
    best = {}
    for a, b in pts:
        best[a] = min(best.get(a, b), b)
    cols = sorted(best.items())
    nu_min = min(b for _, b in cols)
    end = min(a for a, b in cols if b == nu_min)
    chain = [(a, b) for a, b in cols if a <= end]
    hull: list = []
    for p in chain:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


def newton(f: MixedPoly) -> NewtonData:
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polygon")
    supp = f.support()
    verts = boundary_vertices(supp)
    faces = []
    for (a0, b0), (a1, b1) in zip(verts[:-1], verts[1:]):
        P = WeightVector(b0 - b1, a1 - a0)
        d = P.alpha(a0, b0)
        on = tuple(p for p in supp if P.alpha(*p) == d)
        faces.append(Face(P, d, on, ((a0, b0), (a1, b1))))
    return NewtonData(
        boundary_vertices=verts,
        faces=faces,
        u_convenient=verts[-1][1] == 0,
        v_convenient=verts[0][0] == 0,
        semiholomorphic=f.is_semiholomorphic,
        radially_weighted_homogeneous=len(faces) == 1 and all(
            faces[0].weight.alpha(*p) == faces[0].degree for p in supp
        ),
    )


def face_function(f: MixedPoly, which) -> MixedPoly:
    """Terms of ``f`` on which the weight ``which`` is minimal.

    Use :func:`vertex_function` for the terms on a single lattice point.
    """
    if isinstance(which, Face):
        which = which.weight
    if isinstance(which, tuple) and len(which) == 2:
        which = WeightVector(*which)
    if isinstance(which, WeightVector):
        d = min(which.alpha(*p) for p in f.support())
        return f.restrict(lambda k: which.alpha(k[0] + k[1], k[2] + k[3]) == d)
    raise TypeError("pass a WeightVector; use vertex_function for lattice points")


def vertex_function(f: MixedPoly, vertex) -> MixedPoly:
    mu, nu = vertex
    return f.restrict(lambda k: k[0] + k[1] == mu and k[2] + k[3] == nu)


def weighted_degree(f: MixedPoly, P: WeightVector) -> int:
    return min(P.alpha(*p) for p in f.support())


# ---------------------------------------------------------------------------
# loops <-> polynomials
# ---------------------------------------------------------------------------


class MixedLoop:
    """Restriction of a non-holomorphic face: ``sum x^a conj(x)^b C_ab(t)``."""

    def __init__(self, terms: Mapping):
        self.terms = {tuple(k): v for k, v in terms.items() if not v.is_zero()}

    def __call__(self, x, t):
        x = np.asarray(x, dtype=complex)
        t = np.asarray(t, dtype=float)
        x, t = np.broadcast_arrays(x, t)
        out = np.zeros(x.shape, dtype=complex)
        for (a, b), C in self.terms.items():
            out = out + C(t) * x ** a * np.conj(x) ** b
        return out

    def __eq__(self, other):
        return isinstance(other, MixedLoop) and self.terms == other.terms

    def to_json(self) -> dict:
        return {"terms": [[a, b, C.to_json()] for (a, b), C in sorted(self.terms.items())]}


def _restriction(f: MixedPoly, P: WeightVector, swap: bool):
    if f.is_zero():
        raise NonIntegerFrequency("empty face")
    d = weighted_degree(f, P)
    out: dict = {}
    for (a1, a2, b1, b2), c in f.items():
        if P.alpha(a1 + a2, b1 + b2) != d:
            raise NonIntegerFrequency(f"term {(a1, a2, b1, b2)} is not on the face of {tuple(P)}")
        key, freq = ((b1, b2), a1 - a2) if swap else ((a1, a2), b1 - b2)
        out[key] = out.get(key, TrigPoly()) + TrigPoly.monomial(freq, c)
    if all(b == 0 for _, b in out):
        deg = max(a for a, _ in out)
        return LoopPoly([out.get((j, 0), TrigPoly()) for j in range(deg + 1)])
    return MixedLoop(out)


def g_polynomial(f: MixedPoly, P: WeightVector):
    """``f(rho^p1 u, rho^p2 e^{it}) / rho^d`` for the face function ``f`` of ``P``.

    A :class:`LoopPoly` in ``u`` when the face is holomorphic in ``u``, a
    :class:`MixedLoop` otherwise.
    """
    return _restriction(f, WeightVector(*P), swap=False)


def h_polynomial(f: MixedPoly, P: WeightVector):
    """``f(rho^p1 e^{it}, rho^p2 v) / rho^d``; the roles of ``u`` and ``v`` are swapped."""
    return _restriction(f, WeightVector(*P), swap=True)


def _nu_at(j: int, d: int, P: WeightVector):
    num = d - P.p1 * j
    if num % P.p2:
        return None
    return num // P.p2


def _first_violation(G: LoopPoly, P: WeightVector, d: int):
    for j, A in enumerate(G.coeffs):
        if A.is_zero():
            continue
        nu = _nu_at(j, d, P)
        for ell in A.freqs:
            if nu is None or nu < abs(ell) or (nu - ell) % 2:
                return j, ell
    return None


def face_from_loop(G: LoopPoly, P: WeightVector, d: int) -> MixedPoly:
    """Semiholomorphic face with weight ``P`` and degree ``d`` whose g-polynomial is ``G``.

    ``c e^{i l t} u^j`` becomes ``c u^j v^a conj(v)^b`` with ``p1 j + p2 (a + b) = d``
    and ``a - b = l``.
    """
    P = WeightVector(*P)
    bad = _first_violation(G, P, d)
    if bad is not None:
        j, ell = bad
        raise InadmissibleK(j, ell, *_smallest_k(G))
    terms = {}
    for j, A in enumerate(G.coeffs):
        nu = _nu_at(j, d, P)
        for ell, c in A.items():
            terms[(j, 0, (nu + ell) // 2, (nu - ell) // 2)] = c
    return MixedPoly(terms)


def _smallest_k(G: LoopPoly):
    """Smallest admissible integer ``k`` of each parity for the weight ``(k, 1)``."""
    s = G.degree
    res = []
    for parity in (1, 0):
        ok = True
        need = 1
        for j, A in enumerate(G.coeffs):
            for ell in A.freqs:
                if j == s:
                    ok = ok and ell == 0
                    continue
                if parity == 1 and (s - j - ell) % 2:
                    ok = False
                if parity == 0 and ell % 2:
                    ok = False
                need = max(need, -(-abs(ell) // (s - j)))
        if not ok:
            res.append(None)
            continue
        k = need if need % 2 == parity else need + 1
        res.append(max(k, 2 if parity == 0 else 1))
    return tuple(res)


def admissible_weights(g: LoopPoly):
    """Smallest admissible ``k`` of each parity, as ``(odd, even)`` (``None`` if impossible)."""
    return _smallest_k(g)


def from_loop(g: LoopPoly, k=None, p2: int = 1) -> MixedPoly:
    """Radially weighted homogeneous semiholomorphic polynomial with g-polynomial ``g``.

    The weight vector is ``(k, p2)``; its face degree is ``k s`` (``s`` the degree of
    ``g``) so the term ``u^s`` has no ``v``.  Without ``k`` the minimal admissible
    integer ``k`` is used, falling back to ``p2 = 2, 4, ...`` when no integer
    weight ``(k, 1)`` can carry the frequencies.
    """
    s = g.degree
    if k is not None:
        P = WeightVector(int(k), int(p2))
        return face_from_loop(g, P, P.p1 * s)
    P = minimal_weight(g)
    return face_from_loop(g, P, P.p1 * s)


def minimal_weight(g: LoopPoly, cap: int | None = None) -> WeightVector:
    """Smallest ``k / p2`` (``p2`` a power of two, tried in increasing order) admissible for ``g``."""
    s = g.degree
    cap = cap or 4 * config.get("max_freq_cap")
    odd, even = _smallest_k(g)
    cands = [k for k in (odd, even) if k is not None]
    if cands:
        return WeightVector(min(cands), 1)
    p2 = 2
    while p2 <= max(s, 1) * 2:
        for k in range(1, cap, 2):
            P = WeightVector(k, p2)
            if P.p2 == p2 and _first_violation(g, P, P.p1 * s) is None:
                return P
        p2 *= 2
    raise InadmissibleK(*_first_violation(g, WeightVector(1, 1), s), odd, even)


# ---------------------------------------------------------------------------
# gluing
# ---------------------------------------------------------------------------


def _single_face(f: MixedPoly) -> Face:
    nd = newton(f)
    if nd.n_faces != 1 or not nd.radially_weighted_homogeneous:
        raise ValueError("every part must be radially weighted homogeneous with one compact face")
    return nd.faces[0]


def glue(parts: Sequence[MixedPoly], tol: float | None = None) -> MixedPoly:
    """Combine radially weighted homogeneous parts into one polynomial with one face per part.

    ``parts`` are ordered by strictly decreasing weight vector.  The lowest
    vertex of each part (largest u-exponent) must coincide, term for term, with
    the highest vertex of the next part (smallest u-exponent).  The shared
    vertex is counted once, so every face function of the result is exactly
    the corresponding part.
    """
    tol = config.get("glue_tol") if tol is None else tol
    if not parts:
        raise ValueError("nothing to glue")
    faces = [_single_face(p) for p in parts]
    for F1, F2 in zip(faces[:-1], faces[1:]):
        if not F1.weight > F2.weight:
            raise WeightOrderViolation(f"{tuple(F1.weight)} is not greater than {tuple(F2.weight)}")
    result = parts[-1]
    for i in range(len(parts) - 2, -1, -1):
        hat, F_hat = parts[i], faces[i]
        low = F_hat.vertices[1]
        high = faces[i + 1].vertices[0]
        shared_hat = vertex_function(hat, low)
        shared_tilde = vertex_function(result, high)
        if low != high or not shared_hat.allclose(shared_tilde, tol):
            raise VertexMismatch(f"vertex {low} of part {i} does not match vertex {high} of part {i + 1}")
        result = hat + result - shared_hat
    check = newton(result)
    if check.n_faces != len(parts):
        raise WeightOrderViolation("glued polynomial does not have one face per part")
    return result


def glue_product(hat: MixedPoly, tilde: MixedPoly) -> MixedPoly:
    """``tilde_D * hat + hat_D' * tilde - tilde_D * hat_D'`` for parts with unrelated vertices.

    ``D`` is the vertex of ``tilde`` closest to the v-axis and ``D'`` the vertex
    of ``hat`` closest to the u-axis.  Faces of the result are products of a
    part's face with the other part's vertex function.
    """
    vh = newton(hat).boundary_vertices
    vt = newton(tilde).boundary_vertices
    hat_d = vertex_function(hat, vh[-1])
    tilde_d = vertex_function(tilde, vt[0])
    return tilde_d * hat + hat_d * tilde - tilde_d * hat_d


# ---------------------------------------------------------------------------
# symmetries
# ---------------------------------------------------------------------------


def _sign(key, tau) -> int:
    a1, a2, b1, b2 = key
    if tau == TAU_U:
        e = b1 + b2
    elif tau == TAU_V:
        e = a1 + a2
    elif tau == TAU_1:
        e = a1 + a2 + b1 + b2
    else:
        raise ValueError(f"unknown symmetry {tau!r}")
    return -1 if e % 2 else 1


def apply_symmetry(f: MixedPoly, tau) -> MixedPoly:
    """``tau_u``: v -> -v; ``tau_v``: u -> -u; ``tau_1``: both."""
    return MixedPoly({k: c * _sign(k, tau) for k, c in f.items()})


def symmetry_sign(f: MixedPoly, tau):
    """``lam`` with ``apply_symmetry(f, tau) == lam * f`` exactly, else ``None``."""
    if f.is_zero():
        return 1
    signs = {_sign(k, tau) for k in f.terms}
    return signs.pop() if len(signs) == 1 else None


# ---------------------------------------------------------------------------
# niceness
# ---------------------------------------------------------------------------


def vertex_phase_function(f_vertex: MixedPoly):
    """``Phi(phi, t)`` with ``f_D(R e^{i phi}, r e^{it}) = R^mu r^nu Phi(phi, t)``."""
    items = [((a1 - a2), (b1 - b2), c) for (a1, a2, b1, b2), c in f_vertex.items()]

    def Phi(phi, t):
        phi = np.asarray(phi, dtype=float)
        t = np.asarray(t, dtype=float)
        out = np.zeros(np.broadcast(phi, t).shape, dtype=complex)
        for x, y, c in items:
            out = out + c * np.exp(1j * (x * phi + y * t))
        return out

    lip_phi = sum(abs(c) * abs(x) for x, _, c in items)
    lip_t = sum(abs(c) * abs(y) for _, y, c in items)
    return Phi, lip_phi, lip_t


def vertex_nonvanishing(f_vertex: MixedPoly, n: int | None = None, check: str = "vertex_nonvanishing") -> Certificate:
    """Certify ``min |Phi| > 0`` on the torus with Lipschitz slack."""
    n = n or config.get("nice_grid")
    Phi, lp, lt = vertex_phase_function(f_vertex)
    g = np.linspace(0.0, 2 * np.pi, n, endpoint=False)
    vals = np.abs(Phi(g[:, None], g[None, :]))
    h = 2 * np.pi / n
    slack = (lp + lt) * h / 2
    k = np.unravel_index(vals.argmin(), vals.shape)
    low = float(vals[k])
    tol = {"grid": n}
    if low > 2 * slack:
        return Certificate(check, PASS, low - slack, slack, n, [], tol)
    wit = [{"phi": float(g[k[0]]), "t": float(g[k[1]]), "abs_phi": low}]
    status = FAIL if low <= 1e-10 * max(f_vertex.coeff_sum(), 1.0) else "INCONCLUSIVE"
    return Certificate(check, status, low - slack, slack, n, wit, tol)


def is_nice(f: MixedPoly, n: int | None = None) -> Certificate:
    """Every non-extreme vertex function has no zeros in ``(C*)^2``."""
    nd = newton(f)
    parts = []
    for vert in nd.interior_vertices():
        c = vertex_nonvanishing(vertex_function(f, vert), n)
        c.details["vertex"] = list(vert)
        for w in c.witnesses:
            w["vertex"] = list(vert)
        parts.append(c)
    out = combine("nice", parts)
    out.details["vertices_checked"] = [list(v) for v in nd.interior_vertices()]
    return out
