"""Shared helpers for the test suite."""

from importlib.resources import files
from math import lcm

from nicenum.certificate import parse_text
from nicenum.model import Congruence, CongruenceAssignment, Factorization


def fixture_text(name: str) -> str:
    return (files("nicenum") / "fixtures" / name).read_text(encoding="utf-8")


def fixture_assignment(name: str) -> CongruenceAssignment:
    n, entries = parse_text(fixture_text(name))
    assert n is not None
    return CongruenceAssignment(n, {c.modulus: c.residue for c in entries})


def brute_crt(c1: Congruence, c2: Congruence) -> Congruence | None:
    """Independent CRT oracle: scan every class modulo the lcm."""
    m = lcm(c1.modulus, c2.modulus)
    for x in range(m):
        if x % c1.modulus == c1.residue % c1.modulus and x % c2.modulus == c2.residue % c2.modulus:
            return Congruence(x, m)
    return None


def spf_sieve(limit: int) -> list[int]:
    """Smallest-prime-factor table up to limit."""
    spf = list(range(limit + 1))
    i = 2
    while i * i <= limit:
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    return spf


def factorization_from_spf(n: int, spf: list[int]) -> Factorization:
    pairs = []
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        pairs.append((p, e))
    return Factorization(tuple(pairs))
