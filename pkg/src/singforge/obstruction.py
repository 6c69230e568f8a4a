"""Alexander-polynomial tests for 2-periodic and freely 2-periodic knots.

Both tests give necessary conditions only.  ``possible`` never claims that a
symmetry exists.  ``obstructed`` means the polynomial rules the symmetry
out.

* Murasugi: a 2-periodic knot with quotient knot Alexander polynomial
  ``f`` satisfies ``Delta = f^2 (1 + t + ... + t^(lambda-1))`` mod 2 up to
  powers of ``t``, for some odd ``lambda``.
* Hartley: a freely 2-periodic knot satisfies ``Delta(t^2) = f(t) f(-t)``
  up to units for some integer polynomial ``f``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import config
from . import factor as zf

__all__ = [
    "IntLaurentPoly", "GF2Poly", "SearchExhausted", "CheckResult", "murasugi_check",
    "hartley_check", "symmetry_report", "POSSIBLE", "OBSTRUCTED", "EXCLUDED_VERDICT",
]

POSSIBLE = "possible"
OBSTRUCTED = "obstructed"
EXCLUDED_VERDICT = "excluded"
OPEN_VERDICT = "no obstruction"


class SearchExhausted(RuntimeError):
    """The factor search went past its configured degree bound; no verdict is given."""


class IntLaurentPoly:
    """Integer Laurent polynomial ``t^offset * sum c_k t^k``.

    ``normalized()`` divides out the power of ``t`` and fixes the sign so the
    leading coefficient is positive; Alexander polynomials are only defined
    up to such units.
    """

    __slots__ = ("coeffs", "offset")

    def __init__(self, coeffs, offset: int = 0):
        c = [int(a) for a in coeffs]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        c = zf.trim(c[lo:])
        if not c:
            raise ValueError("the zero polynomial is not allowed")
        self.coeffs = tuple(c)
        self.offset = int(offset) + lo

    @classmethod
    def parse(cls, text: str) -> "IntLaurentPoly":
        """Whitespace or comma separated coefficients, lowest degree first."""
        return cls([int(tok) for tok in text.replace(",", " ").split()])

    def normalized(self) -> "IntLaurentPoly":
        sign = 1 if self.coeffs[-1] > 0 else -1
        return IntLaurentPoly([sign * a for a in self.coeffs])

    @property
    def span(self) -> int:
        return len(self.coeffs) - 1

    def reciprocal(self) -> "IntLaurentPoly":
        """``Delta(1/t)``."""
        return IntLaurentPoly(self.coeffs[::-1], -(self.offset + self.span))

    def shift(self, k: int) -> "IntLaurentPoly":
        return IntLaurentPoly(self.coeffs, self.offset + k)

    def is_palindromic(self) -> bool:
        c = self.coeffs
        return c == c[::-1] or c == tuple(-a for a in c[::-1])

    def at_square(self) -> list:
        """Coefficients of ``Delta(t^2)`` after normalization."""
        out = [0] * (2 * self.span + 1)
        for k, a in enumerate(self.normalized().coeffs):
            out[2 * k] = a
        return out

    def mod2(self) -> "GF2Poly":
        return GF2Poly(sum(1 << k for k, a in enumerate(self.coeffs) if a % 2))

    def __eq__(self, other):
        return isinstance(other, IntLaurentPoly) and (self.coeffs, self.offset) == (other.coeffs, other.offset)

    def __hash__(self):
        return hash((self.coeffs, self.offset))

    def __repr__(self):
        return f"IntLaurentPoly({list(self.coeffs)}, offset={self.offset})"

    def __str__(self):
        return _format(self.coeffs, self.offset)


def _format(coeffs, offset: int = 0) -> str:
    terms = []
    for k, a in enumerate(coeffs):
        if a == 0:
            continue
        e = k + offset
        mon = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
        if mon and abs(a) == 1:
            body = mon
        else:
            body = f"{abs(a)}{'*' + mon if mon else ''}"
        terms.append(("-" if a < 0 else "+", body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {s} {b}" for s, b in terms[1:])


class GF2Poly:
    """Polynomial over GF(2) stored as a bitset: bit ``k`` is the coefficient of ``t^k``."""

    __slots__ = ("bits",)

    def __init__(self, bits: int):
        if bits < 0:
            raise ValueError("bitset must be nonnegative")
        self.bits = int(bits)

    @classmethod
    def from_coeffs(cls, coeffs) -> "GF2Poly":
        return cls(sum(1 << k for k, a in enumerate(coeffs) if a % 2))

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other):
        return GF2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other):
        a, b, out = self.bits, other.bits, 0
        while b:
            if b & 1:
                out ^= a
            a <<= 1
            b >>= 1
        return GF2Poly(out)

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r, q = self.bits, 0
        dv = other.degree
        while r and r.bit_length() - 1 >= dv:
            shift = r.bit_length() - 1 - dv
            q |= 1 << shift
            r ^= other.bits << shift
        return GF2Poly(q), GF2Poly(r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __eq__(self, other):
        return isinstance(other, GF2Poly) and self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def gcd(self, other) -> "GF2Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a

    def strip_t(self) -> "GF2Poly":
        """Divide out the largest power of ``t``."""
        b = self.bits
        if b == 0:
            return self
        while not b & 1:
            b >>= 1
        return GF2Poly(b)

    def is_square(self) -> bool:
        """Squares over GF(2) are exactly the polynomials with only even-degree terms."""
        return self.bits & _odd_mask(self.degree) == 0

    def sqrt(self) -> "GF2Poly":
        if not self.is_square():
            raise ValueError("not a square")
        b, out, k = self.bits, 0, 0
        while b:
            if b & 1:
                out |= 1 << k
            b >>= 2
            k += 1
        return GF2Poly(out)

    def _powmod_x2(self, e: int) -> "GF2Poly":
        """``t^(2^e)`` modulo ``self`` by repeated squaring."""
        r = GF2Poly(0b10) % self
        for _ in range(e):
            r = (r * r) % self
        return r

    def is_irreducible(self) -> bool:
        """Rabin's test."""
        n = self.degree
        if n < 1:
            return False
        x = GF2Poly(0b10) % self
        if self._powmod_x2(n) != x:
            return False
        for q in _prime_divisors(n):
            h = self._powmod_x2(n // q) + x
            if self.gcd(h).degree > 0:
                return False
        return True

    def coeffs(self) -> list:
        return [(self.bits >> k) & 1 for k in range(self.degree + 1)]

    def __repr__(self):
        return f"GF2Poly({self})"

    def __str__(self):
        return _format(self.coeffs())


def _odd_mask(deg: int) -> int:
    return int("10" * (deg // 2 + 1), 2) if deg >= 0 else 0


def _prime_divisors(n: int) -> list:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass
class CheckResult:
    check: str
    verdict: str
    witness: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def obstructed(self) -> bool:
        return self.verdict == OBSTRUCTED

    def to_json(self) -> dict:
        return {"check": self.check, "verdict": self.verdict, "witness": self.witness, "details": self.details}


def _as_poly(delta) -> IntLaurentPoly:
    if isinstance(delta, IntLaurentPoly):
        return delta
    if isinstance(delta, str):
        return IntLaurentPoly.parse(delta)
    return IntLaurentPoly(delta)


def murasugi_check(delta) -> CheckResult:
    """Search odd ``lambda`` and ``f`` with ``Delta = f^2 (1 + ... + t^(lambda-1))`` mod 2."""
    delta = _as_poly(delta)
    d = delta.mod2().strip_t()
    details = {"mod2": str(d), "mod2_irreducible": d.is_irreducible()}
    if d.is_zero():
        return CheckResult("murasugi", POSSIBLE, {"f": "0", "lambda": 1}, details)
    for lam in range(1, d.degree + 2, 2):
        cyc = GF2Poly((1 << lam) - 1)
        quo, rem = divmod(d, cyc)
        if rem.is_zero() and quo.is_square():
            return CheckResult("murasugi", POSSIBLE, {"f": str(quo.sqrt()), "lambda": lam}, details)
    return CheckResult("murasugi", OBSTRUCTED, {}, details)


def _product(factors):
    out = [1]
    for g in factors:
        out = zf.mul(out, g)
    return out


def hartley_check(delta, cap: int | None = None) -> CheckResult:
    """Search an integer ``f`` with ``Delta(t^2) = +- f(t) f(-t)``."""
    cap = config.get("hartley_degree_cap") if cap is None else cap
    delta = _as_poly(delta)
    D = delta.at_square()
    n = zf.degree(D)
    details = {"D": _format(D)}
    if n > cap:
        raise SearchExhausted(f"Delta(t^2) has degree {n}, above the search bound {cap}")
    if n == 0:
        return CheckResult("hartley", POSSIBLE, {"f": "1"}, details)
    c, parts = zf.factor(D)
    primes = []
    for p in zf.PRIMES:
        if D[-1] % p and zf.is_squarefree_mod(zf.primitive(D), p):
            primes.append(p)
        if len(primes) == 2:
            break
    if len(primes) == 2:
        _, other = zf.factor(D, prime=primes[1])
        details["cross_checked_primes"] = primes
        if other != parts:
            raise zf.FactorizationError("factorizations at two primes disagree")
    details["factors"] = [[_format(g), m] for g, m in parts]
    irreducible = len(parts) == 1 and parts[0][1] == 1 and abs(c) == 1
    details["irreducible"] = irreducible
    if irreducible:
        return CheckResult("hartley", OBSTRUCTED, {}, details)
    target = zf.primitive(D)
    choices = [range(m + 1) for _, m in parts]
    for exps in itertools.product(*choices):
        deg = sum(e * zf.degree(g) for e, (g, _) in zip(exps, parts))
        if 2 * deg != n:
            continue
        f = _product([g for e, (g, _) in zip(exps, parts) for _ in range(e)])
        prod = zf.mul(f, zf.reflect(f))
        if prod == target or prod == zf.neg(target):
            return CheckResult("hartley", POSSIBLE, {"f": _format(f)}, details)
    return CheckResult("hartley", OBSTRUCTED, {}, details)


def symmetry_report(delta) -> dict:
    """Both checks and a combined verdict.

    ``excluded`` means the knot is neither 2-periodic nor freely 2-periodic,
    so it cannot be the link of a weakly isolated singularity of a radially
    weighted homogeneous inner non-degenerate mixed function.  ``no
    obstruction`` only says these tests do not rule that out.
    """
    delta = _as_poly(delta)
    mur = murasugi_check(delta)
    har = hartley_check(delta)
    verdict = EXCLUDED_VERDICT if mur.obstructed and har.obstructed else OPEN_VERDICT
    return {
        "alexander": str(delta.normalized()),
        "murasugi": mur.to_json(),
        "hartley": har.to_json(),
        "verdict": verdict,
        "note": "necessary conditions only; 'no obstruction' does not assert that a symmetry exists",
    }
