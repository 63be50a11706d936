"""Exact integer arithmetic: gcd, modular inverse, general CRT, primality, factoring.

All functions work on Python's unbounded integers; nothing here ever
overflows or rounds.
"""

from __future__ import annotations

import math
import random

from .model import Congruence, Factorization

DEFAULT_FACTOR_BUDGET = 10**7
_TRIAL_LIMIT = 10**6

# Strong-probable-prime witnesses proving primality for all n < 3.3e24 > 2**64.
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_ROUNDS_LARGE = 64  # error < 4**-64 = 2**-128 above the deterministic range


class NotInvertible(ValueError):
    """No modular inverse exists (the arguments are not coprime)."""


class BudgetExceeded(RuntimeError):
    """The factoring effort cap ran out before the factorization finished."""


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) == 0 and gcd(a, 0) == a."""
    return math.gcd(a, b)


def mod_inverse(a: int, m: int) -> int:
    """The x in [0, m) with a*x == 1 (mod m).

    Raises NotInvertible when m < 2 or gcd(a, m) != 1.
    """
    if m < 2:
        raise NotInvertible(f"modulus must be >= 2, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotInvertible(f"{a} has no inverse modulo {m}") from None


def crt_combine(c1: Congruence, c2: Congruence) -> Congruence | None:
    """The unique congruence modulo lcm(m1, m2) implying both, or None.

    Handles non-coprime moduli: a common solution exists exactly when the
    residues agree modulo gcd(m1, m2), and absence is an ordinary value
    rather than an error so overlap questions stay total.
    """
    r1, m1 = c1.residue % c1.modulus, c1.modulus
    r2, m2 = c2.residue % c2.modulus, c2.modulus
    g = math.gcd(m1, m2)
    if (r1 - r2) % g:
        return None
    lcm = m1 // g * m2
    m2g = m2 // g
    t = ((r2 - r1) // g * pow(m1 // g, -1, m2g)) % m2g
    return Congruence((r1 + m1 * t) % lcm, lcm)


def _is_strong_probable_prime(n: int, base: int, d: int, s: int) -> bool:
    # n - 1 == d * 2**s with d odd
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test, deterministic below 2**64.

    Small n are settled by fixed strong-probable-prime witnesses that are
    proven correct for the whole 64-bit range.  Larger n fall back to 64
    Miller-Rabin rounds with witnesses drawn from a PRNG seeded by n, so
    results are reproducible and the error probability is below 2**-128.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 2**64:
        bases = _MR_BASES_64
    else:
        rng = random.Random(n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(_MR_ROUNDS_LARGE))
    return all(_is_strong_probable_prime(n, b, d, s) for b in bases)


def _brent_rho(n: int, c: int, budget: list[int]) -> int | None:
    """One Brent-cycle Pollard rho attempt with increment c; returns a proper factor.

    Decrements the shared iteration budget; raises BudgetExceeded when it
    runs out.  Returns None when this c fails (caller retries with c + 1).
    """
    y, r, q = 2, 1, 1
    g = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            steps = min(128, r - k)
            for _ in range(steps):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            budget[0] -= steps
            if budget[0] < 0:
                raise BudgetExceeded(f"factoring budget exhausted while splitting {n}")
            g = math.gcd(q, n)
            k += 128
        r *= 2
    if g == n:
        # the batched gcd overshot; replay one step at a time
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            budget[0] -= 1
            if budget[0] < 0:
                raise BudgetExceeded(f"factoring budget exhausted while splitting {n}")
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


def _split(n: int, budget: list[int]) -> int:
    """A nontrivial factor of composite n (deterministic c sweep)."""
    root = math.isqrt(n)
    if root * root == n:
        return root
    c = 1
    while True:
        g = _brent_rho(n, c, budget)
        if g is not None and 1 < g < n:
            return g
        c += 1


def factorize(n: int, budget: int | None = None) -> Factorization:
    """Prime factorization of n >= 1 (n == 1 gives the empty factorization).

    Trial division below 10**6 peels off small primes; whatever survives is
    split by Brent-cycle Pollard rho with a deterministic parameter sweep.
    ``budget`` caps the total number of rho iterations (default 10**7) and
    overruns raise BudgetExceeded rather than silently stalling.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    remaining = [budget if budget is not None else DEFAULT_FACTOR_BUDGET]
    counts: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    d, step = 5, 2
    while d <= _TRIAL_LIMIT and d * d <= n:
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d
        d += step
        step = 6 - step  # alternate +2 / +4: walks the 6k +- 1 candidates
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        g = _split(m, remaining)
        stack.append(g)
        stack.append(m // g)
    return Factorization(tuple(sorted(counts.items())))
