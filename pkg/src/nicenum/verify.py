"""Independent certificate checker: overlap, goodness, completeness.

This module never calls constructor code, so a construction bug cannot
certify its own output.  The goodness scan is a plain O(k^2) pairwise
pass: auditability beats speed at the scale of divisor sets.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .arith import factorize
from .model import (
    Congruence,
    CongruenceAssignment,
    VerificationReport,
    divisors_gt1,
)


class DuplicateModulus(ValueError):
    """check_good was handed two congruences with the same modulus."""


def overlaps(c1: Congruence, c2: Congruence) -> bool:
    """True iff some integer satisfies both congruences.

    Equivalent to the residues agreeing modulo gcd of the moduli, and to
    ``arith.crt_combine`` returning a value (the two are cross-checked in
    the test suite but deliberately share no code).
    """
    g = gcd(c1.modulus, c2.modulus)
    return (c1.residue - c2.residue) % g == 0


def check_good(entries: Sequence[Congruence] | Iterable[Congruence]) -> VerificationReport:
    """Goodness scan: any two overlapping congruences must have coprime moduli.

    Every failing pair is recorded as (smaller modulus, larger modulus, gcd).
    """
    items = sorted(entries, key=lambda c: c.modulus)
    seen: set[int] = set()
    for c in items:
        if c.modulus in seen:
            raise DuplicateModulus(f"modulus {c.modulus} appears more than once")
        seen.add(c.modulus)
    violations: list[tuple[int, int, int]] = []
    for i, a in enumerate(items):
        for b in items[i + 1 :]:
            g = gcd(a.modulus, b.modulus)
            if g > 1 and (a.residue - b.residue) % g == 0:
                violations.append((a.modulus, b.modulus, g))
    return VerificationReport(violations=tuple(violations))


def check_complete(
    assignment: CongruenceAssignment, factor_budget: int | None = None
) -> VerificationReport:
    """Completeness: the moduli must be exactly the divisors of n above 1."""
    expected = set(divisors_gt1(factorize(assignment.n, budget=factor_budget)))
    present = set(assignment.entries)
    return VerificationReport(
        missing_divisors=tuple(sorted(expected - present)),
        extraneous_moduli=tuple(sorted(present - expected)),
    )


def verify_certificate(
    assignment: CongruenceAssignment, factor_budget: int | None = None
) -> VerificationReport:
    """Combined goodness + completeness report; ``passed`` iff both hold."""
    good_part = check_good(assignment.congruences())
    complete_part = check_complete(assignment, factor_budget=factor_budget)
    return good_part.merged(complete_part)
