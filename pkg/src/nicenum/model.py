"""Core value types shared across the package.

Everything here is an immutable value: congruences, factorizations,
divisor-indexed residue assignments, and the 2 small result records
(niceness verdicts and verification reports).
"""

from __future__ import annotations

from dataclasses import dataclass


class ZeroModulus(ValueError):
    """A congruence was built with modulus < 1."""


@dataclass(frozen=True)
class Congruence:
    """A residue class ``residue (mod modulus)``.

    The residue may be any integer; ``canonicalize`` reduces it into
    ``[0, modulus)``.  Everything this package produces is already
    canonical.
    """

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ZeroModulus(f"modulus must be >= 1, got {self.modulus}")

    @property
    def is_canonical(self) -> bool:
        return 0 <= self.residue < self.modulus

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"


def canonicalize(c: Congruence) -> Congruence:
    """Reduce the residue into ``[0, modulus)``.  Idempotent."""
    if c.is_canonical:
        return c
    return Congruence(c.residue % c.modulus, c.modulus)


@dataclass(frozen=True)
class Factorization:
    """A prime factorization as strictly ascending ``(prime, exponent)`` pairs.

    Primality of the bases is the producer's responsibility (``arith.factorize``
    guarantees it); this type only enforces ordering and positive exponents.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last = 1
        for p, e in self.pairs:
            if p <= last:
                raise ValueError(f"primes must be strictly ascending and >= 2: {self.pairs}")
            if e < 1:
                raise ValueError(f"exponents must be >= 1: {self.pairs}")
            last = p

    @property
    def n(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.pairs)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.pairs)


def divisors_gt1(f: Factorization) -> list[int]:
    """All divisors of ``f.n`` greater than 1, ascending.

    The result always has exactly ``prod(e + 1) - 1`` entries.
    """
    divs = [1]
    for p, e in f.pairs:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs[1:]


@dataclass(frozen=True)
class CongruenceAssignment:
    """One residue per modulus: the certificate that an integer is nice.

    ``entries`` maps each modulus d to its residue a_d, so moduli are
    distinct by construction.  Moduli must exceed 1 and residues must be
    canonical; whether the key set equals the divisors of ``n`` above 1 is
    deliberately *not* enforced here - it is what ``verify.check_complete``
    reports on, and candidate certificates read from files must be
    representable even when they get it wrong.
    """

    n: int
    entries: dict[int, int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        for d, r in self.entries.items():
            if d < 2:
                raise ValueError(f"modulus {d} must exceed 1")
            if not 0 <= r < d:
                raise ValueError(f"residue {r} is not canonical modulo {d}")

    def congruences(self) -> list[Congruence]:
        """Entries as congruences, ascending by modulus."""
        return [Congruence(r, d) for d, r in sorted(self.entries.items())]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class NicenessVerdict:
    """Outcome of the niceness test for n >= 2.

    ``smallest_prime`` is the least prime divisor p of n and ``omega_rest``
    is the number of distinct primes of n/p; n is nice exactly when
    omega_rest < p.
    """

    smallest_prime: int
    omega_rest: int

    @property
    def nice(self) -> bool:
        return self.omega_rest < self.smallest_prime


@dataclass(frozen=True)
class VerificationReport:
    """Structured evidence from the goodness/completeness checkers.

    ``violations`` holds one ``(d1, d2, g)`` witness per overlapping pair of
    congruences whose moduli share the common factor g > 1.  ``good`` and
    ``complete`` are derived, so the report cannot contradict its own
    evidence.
    """

    violations: tuple[tuple[int, int, int], ...] = ()
    missing_divisors: tuple[int, ...] = ()
    extraneous_moduli: tuple[int, ...] = ()

    @property
    def good(self) -> bool:
        return not self.violations

    @property
    def complete(self) -> bool:
        return not self.missing_divisors and not self.extraneous_moduli

    @property
    def passed(self) -> bool:
        return self.good and self.complete

    def merged(self, other: VerificationReport) -> VerificationReport:
        return VerificationReport(
            self.violations + other.violations,
            self.missing_divisors + other.missing_divisors,
            self.extraneous_moduli + other.extraneous_moduli,
        )
