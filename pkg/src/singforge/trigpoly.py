"""Finite Fourier series ``t -> sum_l c_l exp(i l t)`` with complex coefficients.

These are the coefficient functions of every loop of polynomials in the
package.  Frequencies are stored sparsely as signed integers; nothing assumes
conjugate symmetry.
"""

from __future__ import annotations

import numbers
from typing import Iterable, Mapping

import numpy as np

from . import config

EVEN = "even"
ODD = "odd"
ZERO = "zero"
MIXED = "mixed"
ANY = "any"


class ResidualTooLarge(ValueError):
    """The samples are not approximable under the requested frequency constraint."""

    def __init__(self, residual: float, tol: float):
        super().__init__(f"approximation residual {residual:.3e} exceeds tolerance {tol:.3e}")
        self.residual = residual
        self.tol = tol


def _clean(coeffs: Mapping[int, complex], scale: float | None = None, tol: float | None = None) -> dict:
    if tol is None:
        tol = config.get("trig_drop_tol")
    items = {int(l): complex(c) for l, c in coeffs.items() if c != 0}
    if not items:
        return {}
    if scale is None:
        scale = max(abs(c) for c in items.values())
    cut = tol * scale
    return {l: c for l, c in items.items() if abs(c) > cut}


class TrigPoly:
    """Immutable sparse trigonometric polynomial.

    >>> p = TrigPoly({-1: 1j, 1: 1j})
    >>> complex(p(np.pi / 3))  # doctest: +ELLIPSIS
    1j...
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, complex] | None = None, *, scale: float | None = None):
        self._c = _clean(coeffs or {}, scale)

    @classmethod
    def constant(cls, c: complex) -> "TrigPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, freq: int, c: complex = 1.0) -> "TrigPoly":
        return cls({freq: c})

    @classmethod
    def _raw(cls, coeffs: dict) -> "TrigPoly":
        obj = cls.__new__(cls)
        obj._c = coeffs
        return obj

    # -- access -------------------------------------------------------------
    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    @property
    def freqs(self) -> tuple:
        return tuple(sorted(self._c))

    def __getitem__(self, freq: int) -> complex:
        return self._c.get(freq, 0j)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return all(l == 0 for l in self._c)

    @property
    def degree(self) -> int:
        """Largest ``|l|`` among stored frequencies (0 for the zero series)."""
        return max((abs(l) for l in self._c), default=0)

    def coeff_sum(self) -> float:
        """``sum |c_l|``, a bound for ``sup |p|``."""
        return float(sum(abs(c) for c in self._c.values()))

    def c1_norm(self) -> float:
        """``sum |c_l| (1 + |l|)``, a bound for ``sup|p| + sup|p'|``."""
        return float(sum(abs(c) * (1 + abs(l)) for l, c in self._c.items()))

    def lipschitz(self) -> float:
        """``sum |l| |c_l|``, a bound for ``sup |p'|``."""
        return float(sum(abs(c) * abs(l) for l, c in self._c.items()))

    # -- evaluation ----------------------------------------------------------
    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape, dtype=complex)
        for l, c in self._c.items():
            out = out + c * np.exp(1j * l * t)
        if out.ndim == 0:
            return complex(out)
        return out

    eval = __call__

    # -- algebra -------------------------------------------------------------
    def _maxabs(self) -> float:
        return max((abs(c) for c in self._c.values()), default=0.0)

    def __add__(self, other):
        if isinstance(other, numbers.Number):
            other = TrigPoly.constant(other)
        if not isinstance(other, TrigPoly):
            return NotImplemented
        out = dict(self._c)
        for l, c in other._c.items():
            out[l] = out.get(l, 0j) + c
        return TrigPoly(out, scale=max(self._maxabs(), other._maxabs()))

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly._raw({l: -c for l, c in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, numbers.Number):
            other = TrigPoly.constant(other)
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return self.scale(other)
        if not isinstance(other, TrigPoly):
            return NotImplemented
        out: dict = {}
        for l1, c1 in self._c.items():
            for l2, c2 in other._c.items():
                out[l1 + l2] = out.get(l1 + l2, 0j) + c1 * c2
        return TrigPoly(out, scale=self._maxabs() * other._maxabs())

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: complex) -> "TrigPoly":
        c = complex(c)
        if c == 0:
            return TrigPoly()
        return TrigPoly._raw({l: c * v for l, v in self._c.items()})

    def derivative(self) -> "TrigPoly":
        return TrigPoly._raw({l: 1j * l * c for l, c in self._c.items() if l != 0})

    def substitute(self, p: int) -> "TrigPoly":
        """``t -> p t``: every frequency ``l`` becomes ``p l``."""
        if p == 0:
            raise ValueError("substitution factor must be nonzero")
        return TrigPoly._raw({p * l: c for l, c in self._c.items()})

    def shift(self, freq: int) -> "TrigPoly":
        """Multiply by ``exp(i freq t)``."""
        return TrigPoly._raw({l + freq: c for l, c in self._c.items()})

    def conjugate(self) -> "TrigPoly":
        """The series ``conj(p(t))``."""
        return TrigPoly._raw({-l: c.conjugate() for l, c in self._c.items()})

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, numbers.Number):
            other = TrigPoly.constant(other)
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(sorted(self._c.items(), key=lambda kv: kv[0])))

    def max_coeff_diff(self, other: "TrigPoly") -> float:
        keys = set(self._c) | set(other._c)
        return max((abs(self[l] - other[l]) for l in keys), default=0.0)

    def allclose(self, other: "TrigPoly", tol: float = 1e-10) -> bool:
        return self.max_coeff_diff(other) <= tol

    def frequency_parity(self) -> str:
        return frequency_parity(self)

    # -- io ------------------------------------------------------------------
    def to_json(self) -> dict:
        return {"freqs": [[l, c.real, c.imag] for l, c in self.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "TrigPoly":
        return cls({int(l): complex(re, im) for l, re, im in obj["freqs"]})

    def __repr__(self):
        if not self._c:
            return "TrigPoly({})"
        body = ", ".join(f"{l}: {_fmt(c)}" for l, c in self.items())
        return f"TrigPoly({{{body}}})"


def _fmt(c: complex) -> str:
    if c.imag == 0:
        return f"{c.real:.6g}"
    if c.real == 0:
        return f"{c.imag:.6g}j"
    return f"({c.real:.6g}{c.imag:+.6g}j)"


def frequency_parity(p: TrigPoly) -> str:
    """Classify the stored frequencies as ``even``, ``odd``, ``zero`` or ``mixed``."""
    if p.is_zero():
        return ZERO
    parities = {l % 2 for l in p.freqs}
    if parities == {0}:
        return EVEN
    if parities == {1}:
        return ODD
    return MIXED


def conforms(p: TrigPoly, parity: str) -> bool:
    """Whether ``p`` satisfies the frequency constraint ``parity``."""
    cls = frequency_parity(p)
    if parity == ANY or cls == ZERO:
        return True
    return cls == parity


def _allowed(freqs: Iterable[int], parity: str) -> list:
    if parity == ANY:
        return list(freqs)
    if parity == EVEN:
        return [l for l in freqs if l % 2 == 0]
    if parity == ODD:
        return [l for l in freqs if l % 2 == 1]
    if parity == ZERO:
        return []
    raise ValueError(f"unknown parity constraint {parity!r}")


def approximate(ts, values, parity: str = ANY, max_freq: int = 16, tol: float = 1e-8,
                scale: float | None = None) -> TrigPoly:
    """Project uniform samples onto the trigonometric polynomials allowed by ``parity``.

    ``ts`` must be a uniform grid covering one period (``N`` points with
    spacing ``2 pi / N``, any offset) and ``N > 2 max_freq + 1``.  The
    discrete Fourier coefficients of non-conforming frequencies are dropped.
    Coefficients below the drop tolerance relative to ``scale`` (default:
    the largest sample modulus) are discarded.
    Raises :class:`ResidualTooLarge` if the sup-error on the grid exceeds ``tol``.
    """
    ts = np.asarray(ts, dtype=float)
    values = np.asarray(values, dtype=complex)
    n = ts.size
    if values.shape != ts.shape or ts.ndim != 1:
        raise ValueError("ts and values must be 1-d arrays of equal length")
    if max_freq < 0:
        raise ValueError("max_freq must be nonnegative")
    if n <= 2 * max_freq + 1:
        raise ValueError(f"grid of {n} samples cannot resolve max_freq={max_freq}")
    h = 2 * np.pi / n
    if not np.allclose(np.diff(ts), h, rtol=0, atol=1e-9):
        raise ValueError("samples must lie on a uniform grid covering one period")
    t0 = ts[0]
    spectrum = np.fft.fft(values) / n
    coeffs = {}
    for l in _allowed(range(-max_freq, max_freq + 1), parity):
        coeffs[l] = spectrum[l % n] * np.exp(-1j * l * t0)
    if scale is None:
        scale = float(np.max(np.abs(values))) if n else 0.0
    p = TrigPoly(coeffs, scale=scale if scale > 0 else None)
    residual = float(np.max(np.abs(p(ts) - values))) if n else 0.0
    if residual > tol:
        raise ResidualTooLarge(residual, tol)
    return p


def spectral_knee(values, fraction: float = 1e-6) -> int:
    """Smallest ``L`` such that the energy beyond frequency ``L`` is below ``fraction`` of the total."""
    values = np.asarray(values, dtype=complex)
    n = values.size
    spec = np.abs(np.fft.fft(values) / n) ** 2
    total = spec.sum()
    if total == 0:
        return 0
    freqs = np.fft.fftfreq(n, d=1.0 / n).astype(int)
    mags = np.abs(freqs)
    for L in range(0, n // 2 + 1):
        if spec[mags > L].sum() <= fraction * total:
            return L
    return n // 2
