"""Braid words and sampled geometric braids in C x [0, 2pi].

A :class:`GeometricBraid` stores its nonzero strands as an array of shape
``(s_tilde, n + 1)`` sampled on the uniform grid ``t_k = 2 pi k / n``
(both endpoints included).  A strand that is identically zero is kept as a
flag so that strand counts stay exact.

Conventions
-----------
* ``from_word`` starts strand ``j`` (0-based) at ``exp(2 pi i j / s)``.  The
  generator ``sigma_i`` turns the points in slots ``i`` and ``i + 1``
  counterclockwise by ``pi`` about their midpoint; ``sigma_i^-1`` turns them
  clockwise.  Each letter gets an equal share of ``[0, 2 pi]``.
* ``to_word`` reads crossings from the order of real parts.  A crossing is
  positive when the strand moving from left to right has the smaller
  imaginary part, so ``to_word(from_word(w))`` is conjugate to ``w``.
* Permutations are 0-based tuples: ``closure[j]`` is the strand whose value
  at ``t = 0`` equals the value of strand ``j`` at ``t = 2 pi``.
"""

from __future__ import annotations

import csv
import io
import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import config

TWO_PI = 2.0 * np.pi


class NonGenericPosition(ValueError):
    """Two strands meet in the real-part projection in a way the sweep cannot resolve."""


class Overlap(ValueError):
    """An outer strand enters the tube that holds the nested inner braid."""


class BraidError(ValueError):
    """Malformed braid data."""


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"^s(\d+)(\^(-?\d+))?$")


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators ``sigma_1 .. sigma_{s-1}``.

    ``gens`` holds pairs ``(i, sign)`` with ``1 <= i <= s - 1`` and ``sign = +-1``.
    """

    strands: int
    gens: tuple = field(default=())

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError("a braid needs at least one strand")
        gens = tuple((int(i), int(e)) for i, e in self.gens)
        for i, e in gens:
            if not 1 <= i <= self.strands - 1:
                raise BraidError(f"generator index {i} out of range for {self.strands} strands")
            if e not in (1, -1):
                raise BraidError(f"generator sign must be +-1, got {e}")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Parse ``"s=3: s1 s1 s2^-1"``.  Exponents other than +-1 expand to repeats."""
        head, sep, body = text.partition(":")
        m = re.fullmatch(r"\s*s\s*=\s*(\d+)\s*", head)
        if not sep or m is None:
            raise BraidError(f"expected 's=<strands>: <letters>', got {text!r}")
        s = int(m.group(1))
        gens = []
        for tok in body.split():
            tm = _TOKEN.match(tok)
            if tm is None:
                raise BraidError(f"bad braid letter {tok!r}")
            i = int(tm.group(1))
            e = int(tm.group(3)) if tm.group(3) is not None else 1
            if e == 0:
                continue
            gens.extend([(i, 1 if e > 0 else -1)] * abs(e))
        return cls(s, tuple(gens))

    def __str__(self):
        letters = " ".join(f"s{i}" if e == 1 else f"s{i}^-1" for i, e in self.gens)
        return f"s={self.strands}: {letters}".rstrip()

    def __len__(self):
        return len(self.gens)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise BraidError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.gens + other.gens)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -e) for i, e in reversed(self.gens)))

    def power(self, p: int) -> "BraidWord":
        base = self if p >= 0 else self.inverse()
        return BraidWord(self.strands, base.gens * abs(p))

    def include(self, strands: int) -> "BraidWord":
        """The inclusion into a braid group on more strands (new strands on the right)."""
        if strands < self.strands:
            raise BraidError("inclusion must not decrease the strand count")
        return BraidWord(strands, self.gens)

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.gens)

    def closure_permutation(self) -> tuple:
        """``perm[j]`` is the final slot of the strand that starts in slot ``j``."""
        slot_of = list(range(self.strands))
        occupant = list(range(self.strands))
        for i, _ in self.gens:
            a, b = occupant[i - 1], occupant[i]
            occupant[i - 1], occupant[i] = b, a
            slot_of[a], slot_of[b] = i, i - 1
        return tuple(slot_of)


def torus_word(s: int, m: int) -> BraidWord:
    """``T^(2m)`` on ``s + 1`` strands where ``T = sigma_s ... sigma_1 sigma_1 ... sigma_s``."""
    if s < 1 or m < 1:
        raise BraidError("torus_word needs s >= 1 and m >= 1")
    t = [(i, 1) for i in range(s, 0, -1)] + [(i, 1) for i in range(1, s + 1)]
    return BraidWord(s + 1, tuple(t) * (2 * m))


# ---------------------------------------------------------------------------
# geometric braids
# ---------------------------------------------------------------------------


def _cycles(perm: Sequence[int]) -> list:
    seen, out = set(), []
    for j in range(len(perm)):
        if j in seen:
            continue
        cyc, k = [], j
        while k not in seen:
            seen.add(k)
            cyc.append(k)
            k = perm[k]
        out.append(cyc)
    return out


class GeometricBraid:
    """Sampled closed braid.

    Parameters
    ----------
    samples : array (s_tilde, n + 1)
        Nonzero strands on the grid ``linspace(0, 2 pi, n + 1)``.
    zero_strand : bool
        Whether ``{0} x S^1`` is an additional strand.
    closure : permutation, optional
        Computed from endpoint matching when omitted.
    """

    __slots__ = ("samples", "zero_strand", "closure", "_min_sep")

    def __init__(self, samples, zero_strand: bool = False, closure: Sequence[int] | None = None):
        arr = np.array(samples, dtype=complex, copy=True)
        if arr.ndim == 1:
            arr = arr[None, :]
        if arr.ndim != 2 or arr.shape[1] < 3:
            raise BraidError("samples must have shape (strands, n + 1) with n >= 2")
        arr.setflags(write=False)
        self.samples = arr
        self.zero_strand = bool(zero_strand)
        if closure is None:
            closure = _match_endpoints(arr)
        closure = tuple(int(c) for c in closure)
        if sorted(closure) != list(range(arr.shape[0])):
            raise BraidError("closure is not a permutation")
        if arr.shape[0]:
            gap = np.abs(arr[:, -1] - arr[list(closure), 0]).max()
            if gap > 1e-9:
                raise BraidError(f"endpoints do not match the closure (gap {gap:.2e})")
        self.closure = closure
        self._min_sep = None

    # -- basic data ----------------------------------------------------------
    @property
    def n(self) -> int:
        """Number of grid intervals."""
        return self.samples.shape[1] - 1

    @property
    def ts(self) -> np.ndarray:
        return np.linspace(0.0, TWO_PI, self.n + 1)

    @property
    def s_tilde(self) -> int:
        return self.samples.shape[0]

    @property
    def strands(self) -> int:
        return self.s_tilde + int(self.zero_strand)

    def all_samples(self) -> np.ndarray:
        """Every strand including the zero strand (last row) when present."""
        if self.zero_strand:
            return np.vstack([self.samples, np.zeros((1, self.n + 1), dtype=complex)])
        return self.samples

    def full_closure(self) -> tuple:
        if self.zero_strand:
            return self.closure + (self.s_tilde,)
        return self.closure

    @property
    def min_sep(self) -> float:
        """Minimum distance between distinct strands (zero strand included) over the grid."""
        if self._min_sep is None:
            self._min_sep = _min_pairwise(self.all_samples())
        return self._min_sep

    def min_modulus(self) -> float:
        if self.s_tilde == 0:
            return float("inf")
        return float(np.abs(self.samples).min())

    def max_modulus(self) -> float:
        if self.s_tilde == 0:
            return 0.0
        return float(np.abs(self.samples).max())

    def max_step(self) -> float:
        if self.s_tilde == 0:
            return 0.0
        return float(np.abs(np.diff(self.samples, axis=1)).max())

    def is_resolved(self) -> bool:
        """Consecutive samples move less than a quarter of the strand separation."""
        return self.max_step() < self.min_sep / 4

    def components(self) -> list:
        """Closure cycles over all strands (the zero strand is last when present)."""
        return _cycles(self.full_closure())

    def __repr__(self):
        return (f"GeometricBraid(s={self.strands}, s_tilde={self.s_tilde}, n={self.n}, "
                f"zero_strand={self.zero_strand}, closure={self.closure})")

    # -- invariants ----------------------------------------------------------
    def linking_matrix(self) -> np.ndarray:
        """Integer matrix indexed by components: linking numbers off the diagonal,
        signed self-crossing counts on the diagonal."""
        allp = self.all_samples()
        comps = self.components()
        owner = np.empty(allp.shape[0], dtype=int)
        for c, cyc in enumerate(comps):
            owner[cyc] = c
        total = np.zeros((len(comps), len(comps)))
        for i, j in itertools.permutations(range(allp.shape[0]), 2):
            d = allp[i] - allp[j]
            total[owner[i], owner[j]] += np.sum(np.angle(d[1:] / d[:-1]))
        total /= TWO_PI
        out = np.rint(total).astype(int)
        if np.abs(total - out).max() > 1e-6:
            raise BraidError("winding numbers are not integral; sampling is too coarse")
        return out

    def strand_set_distance(self, other: "GeometricBraid") -> float:
        """Largest Hausdorff distance between the strand sets at common grid times."""
        if self.n != other.n or self.strands != other.strands:
            return float("inf")
        a, b = self.all_samples(), other.all_samples()
        if a.shape[0] == 0:
            return 0.0
        d = np.abs(a[:, None, :] - b[None, :, :])
        return float(max(d.min(axis=1).max(), d.min(axis=0).max()))

    # -- io ------------------------------------------------------------------
    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "strand_id", "re", "im"])
        ts = self.ts
        allp = self.all_samples()
        for j in range(allp.shape[0]):
            for t, z in zip(ts, allp[j]):
                w.writerow([f"{t:.17g}", j, f"{z.real:.17g}", f"{z.imag:.17g}"])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "GeometricBraid":
        rows = list(csv.DictReader(io.StringIO(text)))
        if not rows:
            raise BraidError("empty strand file")
        by_id: dict = {}
        for r in rows:
            by_id.setdefault(int(r["strand_id"]), []).append((float(r["t"]), complex(float(r["re"]), float(r["im"]))))
        strands, zero = [], False
        lengths = set()
        for sid in sorted(by_id):
            pts = sorted(by_id[sid])
            ts = np.array([p[0] for p in pts])
            zs = np.array([p[1] for p in pts])
            lengths.add(len(ts))
            if not np.allclose(ts, np.linspace(0, TWO_PI, len(ts)), atol=1e-9):
                raise BraidError("strand samples must lie on the uniform grid over [0, 2pi]")
            if np.all(zs == 0):
                if zero:
                    raise BraidError("two zero strands")
                zero = True
            else:
                strands.append(zs)
        if len(lengths) != 1:
            raise BraidError("strands have different sample counts")
        n1 = lengths.pop()
        samples = np.array(strands) if strands else np.zeros((0, n1), dtype=complex)
        return cls(samples, zero_strand=zero)


def _min_pairwise(arr: np.ndarray) -> float:
    m = arr.shape[0]
    if m < 2:
        return float("inf")
    best = np.inf
    for i in range(m - 1):
        d = np.abs(arr[i + 1:] - arr[i]).min()
        best = min(best, d)
    return float(best)


def _match_endpoints(arr: np.ndarray) -> tuple:
    if arr.shape[0] == 0:
        return ()
    d = np.abs(arr[:, -1][:, None] - arr[:, 0][None, :])
    perm = tuple(int(k) for k in d.argmin(axis=1))
    if sorted(perm) != list(range(arr.shape[0])):
        raise BraidError("strand endpoints do not match a permutation of the start points")
    return perm


def empty_braid(n: int | None = None) -> GeometricBraid:
    n = n or config.get("braid_grid")
    return GeometricBraid(np.zeros((0, n + 1), dtype=complex))


def from_function(fn, strands: int, n: int | None = None, zero_strand: bool = False) -> GeometricBraid:
    """Sample ``fn(t) -> array of strands`` on the grid, refining until resolved."""
    n = n or config.get("braid_grid")
    nmax = config.get("braid_grid_max")
    while True:
        ts = np.linspace(0.0, TWO_PI, n + 1)
        arr = np.asarray(fn(ts), dtype=complex).reshape(strands, n + 1)
        b = GeometricBraid(arr, zero_strand=zero_strand)
        if b.is_resolved() or 2 * n > nmax:
            return b
        n *= 2


# ---------------------------------------------------------------------------
# words -> geometry
# ---------------------------------------------------------------------------


def _word_positions(w: BraidWord, ts: np.ndarray) -> np.ndarray:
    s = w.strands
    slots = np.exp(2j * np.pi * np.arange(s) / s)
    out = np.empty((s, ts.size), dtype=complex)
    L = len(w.gens)
    if L == 0:
        out[:] = slots[:, None]
        return out
    seg = np.minimum((ts * L / TWO_PI).astype(int), L - 1)
    frac = ts * L / TWO_PI - seg
    occupant = list(range(s))
    for g, (i, e) in enumerate(w.gens):
        mask = seg == g
        slot_of = np.empty(s, dtype=int)
        slot_of[occupant] = np.arange(s)
        out[:, mask] = slots[slot_of][:, None]
        a, b = i - 1, i
        mid = 0.5 * (slots[a] + slots[b])
        rot = np.exp(1j * e * np.pi * frac[mask])
        for sl in (a, b):
            out[occupant[sl], mask] = mid + (slots[sl] - mid) * rot
        occupant[a], occupant[b] = occupant[b], occupant[a]
    return out


def from_word(w: BraidWord, n: int | None = None) -> GeometricBraid:
    """Realize ``w`` by half-turns of neighbouring slots on the unit circle."""
    if isinstance(w, str):
        w = BraidWord.parse(w)
    n = n or config.get("braid_grid")
    if len(w.gens):
        n = max(n, 16 * len(w.gens))
    n += n % 2
    nmax = config.get("braid_grid_max")
    while True:
        ts = np.linspace(0.0, TWO_PI, n + 1)
        arr = _word_positions(w, ts)
        perm = w.closure_permutation()
        arr[:, -1] = arr[list(perm), 0]
        b = GeometricBraid(arr, closure=perm)
        if b.is_resolved() or 2 * n > nmax:
            return b
        n *= 2


def _inverse(perm: Sequence[int]) -> tuple:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


# ---------------------------------------------------------------------------
# geometry -> words
# ---------------------------------------------------------------------------


def to_word(B: GeometricBraid, auto_rotate: bool = False, seed: int = 0) -> BraidWord:
    """Read a braid word from real-part crossings of the piecewise-linear strands.

    With ``auto_rotate`` the strands are turned by a pseudo-random angle and
    the sweep is retried when the projection is not generic.
    """
    try:
        return _sweep(B.all_samples())
    except NonGenericPosition:
        if not auto_rotate:
            raise
    rng = np.random.default_rng(seed)
    for _ in range(8):
        theta = rng.uniform(0, TWO_PI)
        try:
            return _sweep(B.all_samples() * np.exp(1j * theta))
        except NonGenericPosition:
            continue
    raise NonGenericPosition("no generic rotation found")


def _sweep(arr: np.ndarray) -> BraidWord:
    s, n1 = arr.shape
    if s == 0:
        raise BraidError("cannot read a word from an empty braid")
    scale = max(1.0, float(np.abs(arr).max()))
    eps = 1e-12 * scale
    X, Y = arr.real, arr.imag
    order = list(np.lexsort((Y[:, 0], X[:, 0])))
    for p in range(s - 1):
        a, b = order[p], order[p + 1]
        if abs(X[a, 0] - X[b, 0]) <= 1e-9 * scale:
            # the initial order of the pair would be decided by rounding
            raise NonGenericPosition("strands share a real part at t = 0")
    gens = []
    for k in range(n1 - 1):
        x0, x1 = X[:, k], X[:, k + 1]
        pos = {sid: p for p, sid in enumerate(order)}
        events = []
        for p in range(s):
            a = order[p]
            for q in range(p + 1, s):
                b = order[q]
                d1 = x1[b] - x1[a]
                if d1 < -eps:
                    d0 = x0[b] - x0[a]
                    tau = 0.0 if d0 <= 0 else d0 / (d0 - d1)
                    events.append((tau, a, b))
        if not events:
            continue
        events.sort()
        for tau, a, b in events:
            pa, pb = pos[a], pos[b]
            if pb != pa + 1:
                raise NonGenericPosition(f"non-adjacent crossing near sample {k}")
            ya = Y[a, k] + tau * (Y[a, k + 1] - Y[a, k])
            yb = Y[b, k] + tau * (Y[b, k + 1] - Y[b, k])
            if abs(ya - yb) <= 1e-9 * scale:
                raise NonGenericPosition(f"strands collide near sample {k}")
            gens.append((pa + 1, 1 if ya < yb else -1))
            order[pa], order[pb] = b, a
            pos[a], pos[b] = pb, pa
    return BraidWord(s, tuple(gens))


# ---------------------------------------------------------------------------
# invariants and comparison
# ---------------------------------------------------------------------------


def invariants(B) -> tuple:
    """Cycle lengths and linking matrix of a braid word or geometric braid."""
    if isinstance(B, BraidWord):
        B = from_word(B)
    comps = B.components()
    return [len(c) for c in comps], B.linking_matrix()


def same_invariants(A, B) -> bool:
    """Whether two braids have equal component sizes and linking data up to relabeling."""
    la, ma = invariants(A)
    lb, mb = invariants(B)
    if sorted(la) != sorted(lb):
        return False
    c = len(la)
    if c > 8:
        def key(lens, m):
            return sorted((lens[i], m[i, i], tuple(sorted(m[i]))) for i in range(c))

        return key(la, ma) == key(lb, mb)
    for perm in itertools.permutations(range(c)):
        if all(la[i] == lb[perm[i]] for i in range(c)) and np.array_equal(ma, mb[np.ix_(perm, perm)]):
            return True
    return False


# ---------------------------------------------------------------------------
# symmetries
# ---------------------------------------------------------------------------

TAU_U = "tau_u"
TAU_1 = "tau_1"


def tau_k(k: int) -> tuple:
    if k < 1:
        raise ValueError("k must be positive")
    return ("tau_k", int(k))


def _rotation(tau) -> complex:
    if tau == TAU_U:
        return 1.0 + 0j
    if tau == TAU_1:
        return -1.0 + 0j
    if isinstance(tau, tuple) and tau[0] == "tau_k":
        return complex(np.exp(1j * np.pi / tau[1]))
    raise ValueError(f"unknown symmetry {tau!r}")


def symmetry_transform(B: GeometricBraid, tau) -> GeometricBraid:
    """Apply ``(u, t) -> (w u, t + pi)`` with ``w = 1`` (tau_u), ``-1`` (tau_1) or ``exp(i pi / k)``."""
    n = B.n
    if n % 2:
        raise BraidError("symmetry transforms need an even number of grid intervals")
    w = _rotation(tau)
    h = n // 2
    if B.s_tilde == 0:
        return GeometricBraid(B.samples, zero_strand=B.zero_strand)
    arr = B.samples
    perm = list(B.closure)
    new = np.empty_like(arr)
    new[:, : h + 1] = arr[:, h:]
    new[:, h:] = arr[perm, : h + 1]
    return GeometricBraid(w * new, zero_strand=B.zero_strand)


def _set_distance(a: np.ndarray, b: np.ndarray) -> float:
    if a.shape[0] == 0:
        return 0.0
    d = np.abs(a[:, None, :] - b[None, :, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


@dataclass(frozen=True)
class SymmetryReport:
    u_even: bool
    k_symmetric: tuple
    divisor_symmetric: bool
    odd: bool
    s_tilde: int
    distances: dict = field(default_factory=dict, compare=False)

    @property
    def tags(self) -> frozenset:
        out = set()
        if self.u_even:
            out.add("u_even")
        if self.odd:
            out.add("odd")
        out.update(f"k{k}" for k in self.k_symmetric)
        if self.divisor_symmetric:
            out.add("divisor_symmetric")
        return frozenset(out)

    def __contains__(self, tag) -> bool:
        return tag in self.tags

    def largest_divisor_k(self) -> int | None:
        ks = [k for k in self.k_symmetric if self.s_tilde % k == 0]
        return max(ks) if ks else None

    def to_json(self) -> dict:
        return {
            "u_even": self.u_even,
            "odd": self.odd,
            "k_symmetric": list(self.k_symmetric),
            "divisor_symmetric": self.divisor_symmetric,
            "s_tilde": self.s_tilde,
            "tags": sorted(self.tags),
        }


def detect_symmetry(B: GeometricBraid) -> SymmetryReport:
    """Test ``tau_u``, ``tau_1`` and ``tau_k(2^K)`` for ``2^K <= s_tilde``."""
    sep = B.min_sep
    if not np.isfinite(sep):
        sep = B.max_modulus() if B.s_tilde else 1.0
    tol = sep / 4
    s = B.s_tilde
    arr = B.samples
    n = B.n
    if n % 2:
        raise BraidError("symmetry detection needs an even number of grid intervals")
    h = n // 2
    shifted = np.concatenate([arr[:, h:], arr[list(B.closure), 1: h + 1]], axis=1)
    dist = {}
    dist[TAU_U] = _set_distance(shifted, arr)
    dist[TAU_1] = _set_distance(-shifted, arr)
    k = 2
    while k <= max(s, 1):
        dist[tau_k(k)] = _set_distance(np.exp(1j * np.pi / k) * shifted, arr)
        k *= 2
    u_even = dist[TAU_U] < tol
    odd = dist[TAU_1] < tol
    ks = ([1] if odd else []) + sorted(key[1] for key, d in dist.items() if isinstance(key, tuple) and d < tol)
    divisor = any(s % kk == 0 for kk in ks) if s else bool(ks)
    return SymmetryReport(u_even, tuple(ks), divisor, odd, s, dist)


# ---------------------------------------------------------------------------
# powers and nesting
# ---------------------------------------------------------------------------


def _perm_power(perm: Sequence[int], c: int) -> np.ndarray:
    p = np.asarray(perm, dtype=int)
    if c < 0:
        p = np.asarray(_inverse(perm), dtype=int)
        c = -c
    out = np.arange(len(perm))
    for _ in range(c):
        out = p[out]
    return out


def power(B: GeometricBraid, p: int) -> GeometricBraid:
    """Reparametrize ``t -> p t``; the grid grows by ``|p|`` so no interpolation is needed."""
    if p == 0:
        raise ValueError("power must be nonzero")
    n = B.n
    nn = n * abs(p)
    if B.s_tilde == 0:
        return GeometricBraid(np.zeros((0, nn + 1), dtype=complex), zero_strand=B.zero_strand)
    idx = (1 if p > 0 else -1) * np.arange(nn + 1)
    c = np.floor_divide(idx, n)
    r = idx - c * n
    out = np.empty((B.s_tilde, nn + 1), dtype=complex)
    for cc in np.unique(c):
        mask = c == cc
        rows = _perm_power(B.closure, int(cc))
        out[:, mask] = B.samples[rows][:, r[mask]]
    return GeometricBraid(out, zero_strand=B.zero_strand)


def resample(B: GeometricBraid, n: int) -> GeometricBraid:
    """Piecewise-linear resampling onto ``n`` grid intervals."""
    if n == B.n:
        return B
    if n % B.n == 0:
        ts_old = B.ts
        ts = np.linspace(0.0, TWO_PI, n + 1)
        arr = np.array([np.interp(ts, ts_old, z.real) + 1j * np.interp(ts, ts_old, z.imag) for z in B.samples])
        arr = arr.reshape(B.s_tilde, n + 1)
        return GeometricBraid(arr, zero_strand=B.zero_strand, closure=B.closure)
    raise BraidError("resampling only refines by an integer factor")


def nest(inner: GeometricBraid, outer: GeometricBraid, eps: float | None = None) -> GeometricBraid:
    """Place ``eps * inner`` inside a tube around the axis of ``outer``."""
    if outer.zero_strand:
        raise Overlap("outer braid contains the zero strand")
    n = int(np.lcm(inner.n, outer.n))
    inner, outer = resample(inner, n), resample(outer, n)
    rin = inner.max_modulus()
    rout = outer.min_modulus()
    if eps is None:
        eps = 1.0 if rin == 0 or outer.s_tilde == 0 else rout / (4 * rin)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if outer.s_tilde and rin > 0 and not rout > 2 * eps * rin:
        raise Overlap(f"outer strands reach modulus {rout:.3g} inside the tube of radius {2 * eps * rin:.3g}")
    samples = np.vstack([eps * inner.samples, outer.samples])
    k = inner.s_tilde
    closure = tuple(inner.closure) + tuple(k + c for c in outer.closure)
    return GeometricBraid(samples, zero_strand=inner.zero_strand, closure=closure)


def nest_all(braids: Sequence[GeometricBraid], eps: float | None = None) -> GeometricBraid:
    """Right fold ``B(B_1, B(B_2, ... B_N))``."""
    if not braids:
        raise ValueError("need at least one braid")
    out = braids[-1]
    for b in reversed(braids[:-1]):
        out = nest(b, out, eps)
    return out


def circle(winding: int, radius: float = 1.0, n: int | None = None) -> GeometricBraid:
    """One strand ``radius * exp(i winding t)``."""
    n = n or config.get("braid_grid")
    ts = np.linspace(0.0, TWO_PI, n + 1)
    return GeometricBraid(radius * np.exp(1j * winding * ts)[None, :])


def constant(points: Iterable[complex], n: int | None = None, zero_strand: bool = False) -> GeometricBraid:
    pts = np.asarray(list(points), dtype=complex)
    n = n or config.get("braid_grid")
    return GeometricBraid(np.repeat(pts[:, None], n + 1, axis=1).reshape(pts.size, n + 1), zero_strand=zero_strand)
