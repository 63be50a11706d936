"""Brute-force ground truth, independent of the constructive theory.

``exists_good_assignment`` decides by complete backtracking whether a set
of moduli admits any good residue assignment; ``is_covering`` scans every
residue class modulo the lcm; ``admissibility_scan`` combines the two to
look for a good assignment that is also a covering system.  An exhausted
budget is always an explicit outcome, never a silent timeout: an oracle
that merely gave up must not be mistaken for a proof.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

from .arith import factorize
from .model import Congruence, divisors_gt1

DEFAULT_NODE_BUDGET = 10**8
DEFAULT_CELL_CAP = 10**7


class LcmTooLarge(ValueError):
    """The covering scan would need more cells than the cap allows."""


class SearchStatus(enum.Enum):
    FOUND = "found"
    UNSATISFIABLE = "unsatisfiable"
    BUDGET_EXCEEDED = "budget exceeded"


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    assignment: dict[int, int] | None
    nodes_expanded: int


class AdmissibilityStatus(enum.Enum):
    NO_GOOD_SET_IS_COVERING = "no good set is covering"
    FOUND_COVERING_GOOD_SET = "found covering good set"
    BUDGET_EXCEEDED = "budget exceeded"


@dataclass(frozen=True)
class AdmissibilityOutcome:
    status: AdmissibilityStatus
    assignment: dict[int, int] | None
    nodes_expanded: int
    good_sets_tested: int


class _BudgetExhausted(Exception):
    pass


def _prepare(moduli: Sequence[int]) -> tuple[list[int], list[list[tuple[int, int, list[int]]]]]:
    """Sort moduli ascending and precompute the pairwise pruning tables.

    For each level i and each earlier level j with g = gcd(m_i, m_j) > 1,
    builds one bitmask per residue class mod g marking which candidates at
    level i are *allowed* once level j's class is known.
    """
    ms = sorted(moduli)
    if len(set(ms)) != len(ms):
        raise ValueError("moduli must be distinct")
    if ms and ms[0] < 2:
        raise ValueError("moduli must be >= 2")
    constraints: list[list[tuple[int, int, list[int]]]] = []
    for i, m in enumerate(ms):
        full = (1 << m) - 1
        row = []
        for j in range(i):
            g = gcd(m, ms[j])
            if g == 1:
                continue
            allowed_by_class = []
            for cls in range(g):
                forbidden = 0
                for r in range(cls, m, g):
                    forbidden |= 1 << r
                allowed_by_class.append(full ^ forbidden)
            row.append((j, g, allowed_by_class))
        constraints.append(row)
    return ms, constraints


def _assignments(
    ms: list[int],
    constraints: list[list[tuple[int, int, list[int]]]],
    node_budget: int,
    counter: list[int],
) -> Iterator[tuple[int, ...]]:
    """Depth-first enumeration of all good assignments over ms.

    Variables in ascending modulus order, values in ascending residue
    order.  One node = one residue actually assigned; raises
    _BudgetExhausted when the budget runs out.
    """
    t = len(ms)
    assign = [0] * t

    def descend(level: int) -> Iterator[tuple[int, ...]]:
        if level == t:
            yield tuple(assign)
            return
        allowed = (1 << ms[level]) - 1
        for j, g, allowed_by_class in constraints[level]:
            allowed &= allowed_by_class[assign[j] % g]
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            counter[0] += 1
            if counter[0] > node_budget:
                raise _BudgetExhausted
            assign[level] = low.bit_length() - 1
            yield from descend(level + 1)

    yield from descend(0)


def exists_good_assignment(
    moduli: Sequence[int], node_budget: int = DEFAULT_NODE_BUDGET
) -> SearchOutcome:
    """Backtracking search for any good assignment over the given moduli.

    Candidates for a modulus are pruned by the pairwise rule: the residue
    must differ from every previously assigned residue modulo the gcd of
    the two moduli whenever that gcd exceeds 1.  UNSATISFIABLE is reported
    only after the whole tree is exhausted.
    """
    ms, constraints = _prepare(moduli)
    counter = [0]
    try:
        for solution in _assignments(ms, constraints, node_budget, counter):
            return SearchOutcome(SearchStatus.FOUND, dict(zip(ms, solution)), counter[0])
    except _BudgetExhausted:
        return SearchOutcome(SearchStatus.BUDGET_EXCEEDED, None, counter[0])
    return SearchOutcome(SearchStatus.UNSATISFIABLE, None, counter[0])


def is_covering(entries: Sequence[Congruence], cell_cap: int = DEFAULT_CELL_CAP) -> bool:
    """True iff every integer satisfies at least one of the congruences.

    Materializes one byte per residue class modulo the lcm of the moduli
    and scans for the first uncovered class; raises LcmTooLarge when the
    lcm exceeds ``cell_cap``.
    """
    lcm = 1
    for c in entries:
        g = gcd(lcm, c.modulus)
        lcm = lcm // g * c.modulus
        if lcm > cell_cap:
            raise LcmTooLarge(f"lcm exceeds the {cell_cap}-cell cap")
    cells = bytearray(lcm)
    for c in entries:
        start = c.residue % c.modulus
        cells[start::c.modulus] = b"\x01" * len(range(start, lcm, c.modulus))
    return cells.find(0) == -1


def admissibility_scan(
    n: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    cell_cap: int = DEFAULT_CELL_CAP,
) -> AdmissibilityOutcome:
    """Exhaustively test whether any good assignment on n's divisors covers all integers.

    Enumerates every good assignment with the same backtracking tree as
    ``exists_good_assignment`` and covering-tests each one (the lcm of the
    divisors of n is n itself, so ``cell_cap`` bounds n).  Intended for
    tiny n; the expected outcome everywhere is NO_GOOD_SET_IS_COVERING.
    """
    if n > cell_cap:
        raise LcmTooLarge(f"n exceeds the {cell_cap}-cell cap")
    ms, constraints = _prepare(divisors_gt1(factorize(n)))
    counter = [0]
    tested = 0
    try:
        for solution in _assignments(ms, constraints, node_budget, counter):
            tested += 1
            entries = [Congruence(r, m) for m, r in zip(ms, solution)]
            if is_covering(entries, cell_cap):
                return AdmissibilityOutcome(
                    AdmissibilityStatus.FOUND_COVERING_GOOD_SET,
                    dict(zip(ms, solution)),
                    counter[0],
                    tested,
                )
    except _BudgetExhausted:
        return AdmissibilityOutcome(AdmissibilityStatus.BUDGET_EXCEEDED, None, counter[0], tested)
    return AdmissibilityOutcome(
        AdmissibilityStatus.NO_GOOD_SET_IS_COVERING, None, counter[0], tested
    )
