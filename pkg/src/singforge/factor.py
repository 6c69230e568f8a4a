"""Factorization of integer polynomials.

Polynomials are lists of Python ints, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``).  Factoring over Z follows the
classical route: square-free decomposition over Q, factorization modulo a
good prime by distinct-degree and equal-degree splitting, Hensel lifting to
a power of the prime above the Mignotte bound, and recombination of the
lifted factors by trial division.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


class FactorizationError(RuntimeError):
    """No usable prime was found, or recombination exceeded its budget."""


# ---------------------------------------------------------------------------
# generic helpers over Z and Q
# ---------------------------------------------------------------------------


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f) -> int:
    return len(f) - 1


def mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def add(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def neg(f):
    return [-a for a in f]


def content(f) -> int:
    c = 0
    for a in f:
        c = math.gcd(c, a)
    return c


def primitive(f):
    """Primitive part with positive leading coefficient."""
    f = trim(f)
    if not f:
        return []
    c = content(f)
    if f[-1] < 0:
        c = -c
    return [a // c for a in f]


def reflect(f):
    """``f(-t)``."""
    return [a if i % 2 == 0 else -a for i, a in enumerate(f)]


def exact_div(f, g):
    """``f / g`` over Z, or ``None`` when ``g`` does not divide ``f``."""
    f = trim(f)
    g = trim(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(f) < len(g):
        return [] if not f else None
    r = list(f)
    q = [0] * (len(f) - len(g) + 1)
    lc = g[-1]
    for k in range(len(q) - 1, -1, -1):
        a = r[k + len(g) - 1]
        if a % lc:
            return None
        c = a // lc
        q[k] = c
        if c:
            for j, b in enumerate(g):
                r[k + j] -= c * b
    return trim(q) if not any(r) else None


def _q_divmod(f, g):
    f = [Fraction(a) for a in f]
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    inv = Fraction(1) / g[-1]
    while len(f) >= len(g) and any(f):
        c = f[-1] * inv
        k = len(f) - len(g)
        q[k] = c
        for j, b in enumerate(g):
            f[k + j] -= c * b
        f = trim(f)
    return trim(q), f


def _q_gcd(f, g):
    f, g = [Fraction(a) for a in trim(f)], [Fraction(a) for a in trim(g)]
    while g:
        _, r = _q_divmod(f, g)
        f, g = g, r
    return f


def _to_int(f):
    """Clear denominators and take the primitive part."""
    if not f:
        return []
    den = 1
    for a in f:
        den = den * Fraction(a).denominator // math.gcd(den, Fraction(a).denominator)
    return primitive([int(Fraction(a) * den) for a in f])


def derivative(f):
    return trim([i * a for i, a in enumerate(f)][1:])


def squarefree_decomposition(f):
    """``[(a_1, 1), (a_2, 2), ...]`` with ``prim(f) = prod a_i^i`` (Yun's algorithm)."""
    f = primitive(f)
    if degree(f) <= 0:
        return []
    out = []
    a = _to_int(_q_gcd(f, derivative(f)))
    b = exact_div(f, a)
    c = exact_div(derivative(f), a) if degree(a) > 0 else derivative(f)
    c = [Fraction(x) for x in c]
    b = [Fraction(x) for x in b]
    i = 1
    while degree(b) > 0:
        d = trim([x - y for x, y in itertools.zip_longest(c, derivative(b), fillvalue=Fraction(0))])
        a_i = _q_gcd(b, d) if d else b
        ai = _to_int(a_i)
        if degree(ai) > 0:
            out.append((ai, i))
        b = _q_divmod(b, a_i)[0]
        c = _q_divmod(d, a_i)[0] if d else []
        i += 1
    return out


# ---------------------------------------------------------------------------
# arithmetic modulo a prime
# ---------------------------------------------------------------------------


def _mod(f, p):
    return trim([a % p for a in f])


def _pmul(f, g, p):
    return _mod(mul(f, g), p)


def _psub(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def _pdivmod(f, g, p):
    f = _mod(f, p)
    g = _mod(g, p)
    if not g:
        raise ZeroDivisionError("division by zero modulo p")
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - len(g) + 1, 1)
    while len(f) >= len(g) and f:
        c = f[-1] * inv % p
        k = len(f) - len(g)
        q[k] = c
        for j, b in enumerate(g):
            f[k + j] = (f[k + j] - c * b) % p
        f = trim(f)
    return trim(q), f


def _monic(f, p):
    inv = pow(f[-1], -1, p)
    return [a * inv % p for a in f]


def _pgcd(f, g, p):
    f, g = _mod(f, p), _mod(g, p)
    while g:
        f, g = g, _pdivmod(f, g, p)[1]
    return _monic(f, p) if f else f


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _pxgcd(f, g, p):
    """``(d, s, t)`` with ``s f + t g = d`` monic modulo ``p``."""
    r0, r1 = _mod(f, p), _mod(g, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return [a * inv % p for a in r0], [a * inv % p for a in s0], [a * inv % p for a in t0]


def distinct_degree(f, p):
    """Split a monic square-free ``f`` mod ``p`` into ``[(product, d)]`` by factor degree."""
    out = []
    h = [0, 1]
    d = 0
    f = _mod(f, p)
    while degree(f) >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, f, p)
        g = _pgcd(_psub(h, [0, 1], p), f, p)
        if degree(g) > 0:
            out.append((g, d))
            f = _pdivmod(f, g, p)[0]
            h = _pdivmod(h, f, p)[1]
    if degree(f) > 0:
        out.append((_monic(f, p), degree(f)))
    return out


def equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus splitting of a product of degree-``d`` irreducibles (odd ``p``)."""
    f = _monic(_mod(f, p), p)
    n = degree(f)
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = trim(a)
        if degree(a) <= 0:
            continue
        g = _pgcd(a, f, p)
        if 0 < degree(g) < n:
            break
        b = _psub(_ppowmod(a, (p ** d - 1) // 2, f, p), [1], p)
        g = _pgcd(b, f, p)
        if 0 < degree(g) < n:
            break
    return equal_degree(g, d, p, rng) + equal_degree(_pdivmod(f, g, p)[0], d, p, rng)


def factor_mod_p(f, p, seed: int = 0):
    """Monic irreducible factors of a square-free ``f`` modulo an odd prime ``p``."""
    rng = random.Random(seed)
    out = []
    for g, d in distinct_degree(_monic(_mod(f, p), p), p):
        out.extend(equal_degree(g, d, p, rng))
    return sorted(out)


def is_squarefree_mod(f, p) -> bool:
    fp = _mod(f, p)
    if degree(fp) != degree(f):
        return False
    return degree(_pgcd(fp, _mod(derivative(f), p), p)) == 0


# ---------------------------------------------------------------------------
# Hensel lifting and recombination
# ---------------------------------------------------------------------------


def _hensel_pair(f, g, h, p, k):
    """Lift ``f = g h mod p`` (``g`` monic, ``lc(h) = lc(f)``) to ``mod p^k``."""
    _, s, t = _pxgcd(g, h, p)
    q = p
    for _ in range(k - 1):
        e = [(a // q) % p for a in _mod_sub_exact(f, mul(g, h), q * p)]
        e = trim(e)
        quo, sigma = _pdivmod(_pmul(t, e, p), g, p)
        tau = _mod(add(_pmul(s, e, p), _pmul(quo, h, p)), p)
        q *= p
        g = _mod(add(g, [q // p * a for a in sigma]), q)
        h = _mod(add(h, [q // p * a for a in tau]), q)
    return g, h


def _mod_sub_exact(f, gh, modulus):
    return trim([a % modulus for a in add(f, neg(gh))])


def hensel_lift(f, factors, p, k):
    """Lift monic factors with ``f = lc(f) prod factors mod p`` to monic factors mod ``p^k``."""
    lc = f[-1]
    if len(factors) == 1:
        inv = pow(lc, -1, p ** k)
        return [_mod([a * inv for a in f], p ** k)]
    g = factors[0]
    rest = [lc % p]
    for r in factors[1:]:
        rest = _pmul(rest, r, p)
    rest[-1] = lc
    G, H = _hensel_pair(f, g, rest, p, k)
    H[-1] = lc % p ** k
    return [G] + hensel_lift(H, factors[1:], p, k)


def _symmetric(f, q):
    half = q // 2
    return trim([a - q if a > half else a for a in f])


def mignotte_bound(f) -> int:
    norm = math.isqrt(sum(a * a for a in f)) + 1
    return (2 ** degree(f)) * norm * abs(f[-1])


def _choose_prime(f, skip=()):
    for p in PRIMES:
        if p in skip or f[-1] % p == 0:
            continue
        if is_squarefree_mod(f, p):
            return p
    raise FactorizationError("no good prime below 100")


def factor_squarefree(f, prime: int | None = None, max_subsets: int = 200000):
    """Irreducible factors over Z of a primitive square-free ``f`` with positive leading coefficient."""
    f = primitive(f)
    if degree(f) <= 1:
        return [f] if degree(f) == 1 else []
    p = prime if prime and f[-1] % prime and is_squarefree_mod(f, prime) else _choose_prime(f)
    local = factor_mod_p(f, p)
    if len(local) == 1:
        return [f]
    bound = 2 * mignotte_bound(f)
    k = 1
    while p ** k <= bound:
        k += 1
    q = p ** k
    lifted = hensel_lift(f, local, p, k)
    result = []
    remaining = list(range(len(lifted)))
    size = 1
    tried = 0
    while 2 * size <= len(remaining):
        found = False
        for S in itertools.combinations(remaining, size):
            tried += 1
            if tried > max_subsets:
                raise FactorizationError("recombination budget exceeded")
            cand = [f[-1]]
            for i in S:
                cand = _mod(mul(cand, lifted[i]), q)
            cand = primitive(_symmetric(cand, q))
            quo = exact_div(f, cand)
            if quo is not None:
                result.append(cand)
                f = primitive(quo)
                remaining = [i for i in remaining if i not in S]
                found = True
                break
        if not found:
            size += 1
    result.append(f)
    return sorted(result, key=lambda g: (degree(g), g))


def factor(f, prime: int | None = None):
    """``(content, [(irreducible, multiplicity), ...])`` for a nonzero integer polynomial."""
    f = trim(f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    c = content(f) * (1 if f[-1] > 0 else -1)
    out = []
    for part, mult in squarefree_decomposition(f):
        for g in factor_squarefree(part, prime):
            out.append((g, mult))
    out.sort(key=lambda gm: (degree(gm[0]), gm[0], gm[1]))
    return c, out
