"""Explicit construction of good congruence sets for nice integers.

The construction is layered by the number of distinct primes in each
modulus.  Single-prime chains handle prime-power moduli; two-prime blocks
settle the p^i q^j layer with one residue class modulo the smaller prime
and three classes modulo the larger; blocks over three or more primes pick
their base residues from a restricted pool and separate members by a
prime-power term indexed with the e/s functions below.  ``construct_good_set``
dispatches on the shape of the factorization and lifts exponents where the
general assemblies need them, restricting back to the true divisor set at
the end.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .arith import crt_combine, factorize, is_prime, mod_inverse
from .model import (
    Congruence,
    CongruenceAssignment,
    Factorization,
    NicenessVerdict,
)


class InvalidParams(ValueError):
    """Block parameters violate a builder's contract."""


class InsufficientResidues(ValueError):
    """The residue pool is too small for the block's index range."""


class NonDistinctS(ValueError):
    """The residue pool has repeats modulo the product of the block primes."""


class PreconditionViolated(ValueError):
    """An assembly was called outside its case bounds."""


class NotADivisor(ValueError):
    """Restriction target does not divide the assignment's n."""


class NotNiceError(ValueError):
    """No good assignment exists; carries the witnessing verdict."""

    def __init__(self, verdict: NicenessVerdict):
        super().__init__(
            f"not nice: n/p has {verdict.omega_rest} distinct prime factors, "
            f"not fewer than p = {verdict.smallest_prime}"
        )
        self.verdict = verdict


def index_exponent(m: int) -> int:
    """Exponent e(m) of the separating prime-power term: e(1) = 1, else m - 1."""
    return 1 if m == 1 else m - 1


def index_bit(m: int) -> int:
    """Selector bit s(m) for the base residue: 0 at exponent 1, else 1."""
    return 0 if m == 1 else 1


@dataclass(frozen=True)
class TwoPrimeParams:
    """Residue parameters of a two-prime block.

    ``a`` pins every member modulo p1; ``b``, ``c``, ``d`` must be three
    distinct residues modulo p2 and tag the member's exponent pattern:
    b for (1, 1), c for (i >= 2, 1), d-based offsets for j >= 2.
    """

    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class BlockRestriction:
    """Allowed residues per prime position of a multi-prime block."""

    allowed: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for residues in self.allowed:
            if not residues:
                raise InvalidParams("every restriction set must be non-empty")


def niceness_condition(f: Factorization) -> NicenessVerdict:
    """Decide niceness from the factorization.

    With p the smallest prime of n, the verdict compares omega(n/p) against
    p: removing one copy of p drops the prime count only when its exponent
    is 1.
    """
    if not f.pairs:
        raise PreconditionViolated("niceness verdict needs n >= 2")
    p, alpha = f.pairs[0]
    omega_rest = f.omega if alpha >= 2 else f.omega - 1
    return NicenessVerdict(smallest_prime=p, omega_rest=omega_rest)


def build_prime_power(p: int, k: int) -> CongruenceAssignment:
    """Assignment for n = p**k: divisor p**i takes residue p**(i-1).

    Two members agree modulo the smaller modulus only if they are equal,
    so the chain is good outright.
    """
    if k < 1 or not is_prime(p):
        raise InvalidParams(f"need prime p and k >= 1, got p={p}, k={k}")
    return CongruenceAssignment(p**k, {p**i: p ** (i - 1) for i in range(1, k + 1)})


def build_p1_p2k(p1: int, p2: int, k: int) -> CongruenceAssignment:
    """Assignment for n = p1 * p2**k with p1 < p2 prime and k >= 1.

    p1 takes 0, p2**i takes p2**(i-1) + 1, and the mixed moduli take
    a*p1*p2**(i-1) + 1 where a is the smallest residue in [1, p2) that
    avoids both 0 and the inverse of p1 modulo p2.  Avoiding the inverse
    keeps a mixed entry from meeting the pure p2-chain at equal exponents;
    two forbidden classes among p2 - 1 >= 2 candidates always leave a
    choice.
    """
    if not (2 <= p1 < p2) or k < 1 or not (is_prime(p1) and is_prime(p2)):
        raise InvalidParams(f"need primes p1 < p2 and k >= 1, got {p1}, {p2}, {k}")
    inv = mod_inverse(p1, p2)
    a = 1 if inv != 1 else 2
    entries = {p1: 0}
    for i in range(1, k + 1):
        entries[p2**i] = p2 ** (i - 1) + 1
        m = p1 * p2**i
        entries[m] = (a * p1 * p2 ** (i - 1) + 1) % m
    return CongruenceAssignment(p1 * p2**k, entries)


def _require_odd_prime_pair(p1: int, p2: int) -> None:
    if p1 >= p2 or p1 <= 2 or not (is_prime(p1) and is_prime(p2)):
        raise InvalidParams(f"need odd primes p1 < p2, got {p1}, {p2}")


def build_two_prime_block(
    p1: int, p2: int, alpha1: int, alpha2: int, params: TwoPrimeParams
) -> list[Congruence]:
    """Good block over the moduli p1**i * p2**j, 1 <= i <= alpha1, 1 <= j <= alpha2.

    Every member reduces to ``a`` modulo p1 and to one of {b, c, d} modulo
    p2.  The two prime-power components are built independently and merged
    by CRT:

    * modulo p1**i: a itself at i = 1, a + p1**(i-1) above (so distinct
      i >= 2 rows separate modulo p1**2 at i = 2 versus i >= 3);
    * modulo p2**j: b or c at j = 1 depending on whether i exceeds 1, and
      for j >= 2 offsets of d chosen so the i = 1 column lands in
      {d, d + p2} modulo p2**2 while the i >= 2 columns land in
      {d + 2*p2, d + 3*p2}, keeping the two column families apart.
    """
    _require_odd_prime_pair(p1, p2)
    if alpha1 < 1 or alpha2 < 1:
        raise InvalidParams(f"exponent bounds must be >= 1, got {alpha1}, {alpha2}")
    a, b, c, d = params.a, params.b, params.c, params.d
    if len({b % p2, c % p2, d % p2}) != 3:
        raise InvalidParams(f"b, c, d must be distinct modulo {p2}: {b}, {c}, {d}")
    block: list[Congruence] = []
    for i in range(1, alpha1 + 1):
        m1 = p1**i
        part1 = Congruence(a % p1 if i == 1 else (a + p1 ** (i - 1)) % m1, m1)
        for j in range(1, alpha2 + 1):
            m2 = p2**j
            if j == 1:
                r2 = b if i == 1 else c
            elif i == 1:
                r2 = d + p2 if j == 2 else d + p2 ** (j - 1)
            else:
                r2 = d + 2 * p2 if j == 2 else d + 3 * p2 + p2 ** (j - 1)
            combined = crt_combine(part1, Congruence(r2 % m2, m2))
            assert combined is not None  # coprime moduli always combine
            block.append(combined)
    return block


def _prime_chain(p: int, alpha: int) -> list[Congruence]:
    return [Congruence(p ** (b - 1), p**b) for b in range(1, alpha + 1)]


def build_two_prime_full(p1: int, p2: int, alpha1: int, alpha2: int) -> CongruenceAssignment:
    """Complete assignment for n = p1**alpha1 * p2**alpha2, odd primes, exponents >= 2.

    The two single-prime chains contribute residues in {0, 1} modulo their
    prime, while the block with (a, b, c, d) = (2, 2, 3, 4) stays in
    {2, 3, 4}, so the union is good.
    """
    _require_odd_prime_pair(p1, p2)
    if alpha1 < 2 or alpha2 < 2:
        raise InvalidParams(f"exponents must both be >= 2, got {alpha1}, {alpha2}")
    entries: dict[int, int] = {}
    chain = _prime_chain(p1, alpha1) + _prime_chain(p2, alpha2)
    for c in chain + build_two_prime_block(p1, p2, alpha1, alpha2, TwoPrimeParams(2, 2, 3, 4)):
        entries[c.modulus] = c.residue
    return CongruenceAssignment(p1**alpha1 * p2**alpha2, entries)


def build_multi_prime_block(
    primes: tuple[int, ...] | list[int],
    alphas: tuple[int, ...] | list[int],
    residues: tuple[int, ...] | list[int],
) -> list[Congruence]:
    """Good block over all moduli prod(p_k**i_k), 1 <= i_k <= alpha_k.

    A member's residue is prod(p_k**e(i_k)) + base, where e is
    ``index_exponent`` and the base comes from ``residues``: sort the pool
    ascending and pick the element whose index packs the bits s(i_k) of the
    variable coordinates (alpha_k >= 2), least significant bit at the
    smallest such prime.  Coordinates frozen at alpha_k = 1 never vary and
    consume no bit, so the pool only needs 2**v distinct values modulo
    prod(primes), v the number of variable coordinates.

    Overlapping members would agree on their base (bases are distinct
    modulo the prime product), hence share every s-bit, and then the exact
    prime-power valuations of the e-term force equal exponent tuples - so
    distinct members never overlap even though their moduli always share
    every prime.
    """
    primes = tuple(primes)
    alphas = tuple(alphas)
    if len(primes) < 2 or len(primes) != len(alphas):
        raise InvalidParams(f"need t >= 2 primes with matching exponents, got {primes}, {alphas}")
    last = 1
    for p in primes:
        if p <= last or not is_prime(p):
            raise InvalidParams(f"primes must be distinct ascending primes: {primes}")
        last = p
    if any(a < 1 for a in alphas):
        raise InvalidParams(f"exponent bounds must be >= 1: {alphas}")
    product = 1
    for p in primes:
        product *= p
    pool = sorted(r % product for r in residues)
    if len(set(pool)) != len(pool):
        raise NonDistinctS(f"residues repeat modulo {product}")
    variable = [k for k, a in enumerate(alphas) if a >= 2]
    need = 1 << len(variable)
    if len(pool) < need:
        raise InsufficientResidues(f"need {need} residues, got {len(pool)}")
    block: list[Congruence] = []
    for combo in itertools.product(*(range(1, a + 1) for a in alphas)):
        modulus = 1
        term = 1
        for p, i in zip(primes, combo):
            modulus *= p**i
            term *= p ** index_exponent(i)
        idx = 0
        for bit, k in enumerate(variable):
            idx |= index_bit(combo[k]) << bit
        block.append(Congruence((term + pool[idx]) % modulus, modulus))
    return block


def restricted_residues(
    primes: tuple[int, ...] | list[int], restriction: BlockRestriction
) -> list[int]:
    """All residues modulo prod(primes) meeting every per-prime restriction, ascending.

    Enumerates the Cartesian product of the allowed sets and combines each
    choice by CRT; with coprime primes every combination yields exactly one
    residue, so the pool size is the product of the set sizes.
    """
    primes = tuple(primes)
    if len(primes) != len(restriction.allowed):
        raise InvalidParams("one restriction set per prime is required")
    for p, residues in zip(primes, restriction.allowed):
        if any(not 0 <= r < p for r in residues):
            raise InvalidParams(f"restriction residues must lie in [0, {p}): {residues}")
    pool = []
    for combo in itertools.product(*restriction.allowed):
        acc = Congruence(0, 1)
        for p, r in zip(primes, combo):
            nxt = crt_combine(acc, Congruence(r, p))
            assert nxt is not None
            acc = nxt
        pool.append(acc.residue)
    return sorted(pool)


Block = tuple[tuple[int, ...], list[Congruence]]


def _merge_blocks(n: int, blocks: list[Block]) -> CongruenceAssignment:
    entries: dict[int, int] = {}
    for _, congruences in blocks:
        for c in congruences:
            if c.modulus in entries:
                raise AssertionError(f"blocks collide on modulus {c.modulus}")
            entries[c.modulus] = c.residue
    return CongruenceAssignment(n, entries)


def case1_blocks(f: Factorization) -> list[Block]:
    """Labeled blocks of the alpha1 >= 2 assembly; labels are 1-based prime indices.

    Requires t >= 3 primes, t <= p1 - 1, and every exponent >= 2 (the
    dispatcher lifts exponents before calling).  Two-prime blocks use
    a = j + 2(i-1) modulo p_i and {3i-1, 3i, 3i+1} modulo p_j; larger
    blocks chain those sets downward and pin the smallest prime to
    i_s + 2(i_1 - 1).  The value families {0, 1}, the triples, and the
    single values never meet at any shared prime, which is what makes the
    union of all blocks good.
    """
    t = f.omega
    primes = f.primes()
    alphas = f.exponents()
    if t < 3:
        raise PreconditionViolated(f"need at least 3 primes, got {t}")
    if t > primes[0] - 1:
        raise PreconditionViolated(f"need t <= p1 - 1, got t={t}, p1={primes[0]}")
    if any(a < 2 for a in alphas):
        raise PreconditionViolated(f"every exponent must be >= 2, got {alphas}")
    blocks: list[Block] = []
    for i in range(1, t + 1):
        blocks.append(((i,), _prime_chain(primes[i - 1], alphas[i - 1])))
    for i, j in itertools.combinations(range(1, t + 1), 2):
        params = TwoPrimeParams(a=j + 2 * (i - 1), b=3 * i - 1, c=3 * i, d=3 * i + 1)
        blocks.append(
            ((i, j), build_two_prime_block(primes[i - 1], primes[j - 1], alphas[i - 1], alphas[j - 1], params))
        )
    for s in range(3, t + 1):
        for combo in itertools.combinations(range(1, t + 1), s):
            blocks.append((combo, _restricted_block(f, combo, _case1_allowed(combo))))
    return blocks


def _case1_allowed(combo: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Restriction chain of an alpha1 >= 2 multi-prime block, smallest prime first."""
    allowed: list[tuple[int, ...]] = [(combo[-1] + 2 * (combo[0] - 1),)]
    for pos in range(1, len(combo)):
        prev = combo[pos - 1]
        allowed.append((3 * prev - 1, 3 * prev, 3 * prev + 1))
    return allowed


def _case2_allowed(combo: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Restriction chain of an alpha1 = 1 multi-prime block, smallest prime first."""
    allowed: list[tuple[int, ...]] = [(combo[-1] + 2 * combo[0] - 3,)]
    for pos in range(1, len(combo)):
        prev = combo[pos - 1]
        if prev == 1:
            allowed.append((2, 3))
        else:
            allowed.append((3 * prev - 2, 3 * prev - 1, 3 * prev))
    return allowed


def case2_blocks(f: Factorization) -> list[Block]:
    """Labeled blocks of the alpha1 = 1 assembly.

    Requires t >= 3 primes, t <= p1, alpha1 = 1 and every other exponent
    >= 2.  The smallest prime takes the single congruence 0 (mod p1); the
    cross chains pair k - 1 modulo p1 with p_k**(b-1) + 2 modulo p_k**b
    (landing in {2, 3} modulo p_k); two-prime blocks over the larger primes
    use a = j + 2i - 3 and {3i-2, 3i-1, 3i}; bigger blocks chain these
    sets, with {2, 3} standing in at the second coordinate when the block
    contains p1.
    """
    t = f.omega
    primes = f.primes()
    alphas = f.exponents()
    if t < 3:
        raise PreconditionViolated(f"need at least 3 primes, got {t}")
    if t > primes[0]:
        raise PreconditionViolated(f"need t <= p1, got t={t}, p1={primes[0]}")
    if alphas[0] != 1:
        raise PreconditionViolated(f"smallest prime's exponent must be 1, got {alphas[0]}")
    if any(a < 2 for a in alphas[1:]):
        raise PreconditionViolated(f"exponents after the first must be >= 2, got {alphas}")
    p1 = primes[0]
    blocks: list[Block] = [((1,), [Congruence(0, p1)])]
    for i in range(2, t + 1):
        blocks.append(((i,), _prime_chain(primes[i - 1], alphas[i - 1])))
    for k in range(2, t + 1):
        pk = primes[k - 1]
        cross = []
        for beta in range(1, alphas[k - 1] + 1):
            combined = crt_combine(
                Congruence((k - 1) % p1, p1), Congruence(pk ** (beta - 1) + 2, pk**beta)
            )
            assert combined is not None
            cross.append(combined)
        blocks.append(((1, k), cross))
    for i, j in itertools.combinations(range(2, t + 1), 2):
        params = TwoPrimeParams(a=j + 2 * i - 3, b=3 * i - 2, c=3 * i - 1, d=3 * i)
        blocks.append(
            ((i, j), build_two_prime_block(primes[i - 1], primes[j - 1], alphas[i - 1], alphas[j - 1], params))
        )
    for s in range(3, t + 1):
        for combo in itertools.combinations(range(1, t + 1), s):
            blocks.append((combo, _restricted_block(f, combo, _case2_allowed(combo))))
    return blocks


def _restricted_block(
    f: Factorization, combo: tuple[int, ...], allowed: list[tuple[int, ...]]
) -> list[Congruence]:
    """Multi-prime block for the primes indexed by combo, pool from the restriction chain."""
    primes = tuple(f.primes()[i - 1] for i in combo)
    alphas = tuple(f.exponents()[i - 1] for i in combo)
    pool = restricted_residues(primes, BlockRestriction(tuple(allowed)))
    need = 1 << sum(1 for a in alphas if a >= 2)
    return build_multi_prime_block(primes, alphas, pool[:need])


def assemble_case1(f: Factorization) -> CongruenceAssignment:
    """Full assignment for t >= 3 primes with alpha1 >= 2 (all exponents >= 2)."""
    return _merge_blocks(f.n, case1_blocks(f))


def assemble_case2(f: Factorization) -> CongruenceAssignment:
    """Full assignment for t >= 3 primes with alpha1 = 1 (other exponents >= 2)."""
    return _merge_blocks(f.n, case2_blocks(f))


def restrict_to_divisors(full: CongruenceAssignment, n: int) -> CongruenceAssignment:
    """Keep exactly the entries whose modulus divides n.

    Any subset of a good set is good, and every divisor of n above 1
    divides ``full.n``, so restricting a complete good assignment yields a
    complete good assignment for n.
    """
    if n < 1 or full.n % n != 0:
        raise NotADivisor(f"{n} does not divide {full.n}")
    return CongruenceAssignment(n, {d: r for d, r in full.entries.items() if n % d == 0})


def construct_good_set(n: int, factor_budget: int | None = None) -> CongruenceAssignment:
    """A good, complete assignment for the divisors of n above 1.

    Dispatch: prime powers and p1*p2**k have direct chains; two primes with
    alpha1 >= 2 use the full two-prime assembly; three or more primes go
    through the case assemblies after lifting exponents to 2 (the smallest
    prime keeps exponent 1 in the alpha1 = 1 case) and restricting back.
    Raises NotNiceError - with the witnessing prime and omega(n/p) - when
    no good assignment exists.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return CongruenceAssignment(1, {})
    f = factorize(n, budget=factor_budget)
    verdict = niceness_condition(f)
    if not verdict.nice:
        raise NotNiceError(verdict)
    t = f.omega
    p1, a1 = f.pairs[0]
    if t == 1:
        return build_prime_power(p1, a1)
    if t == 2:
        p2, a2 = f.pairs[1]
        if a1 == 1:
            return build_p1_p2k(p1, p2, a2)
        if a2 >= 2:
            return build_two_prime_full(p1, p2, a1, a2)
        return restrict_to_divisors(build_two_prime_full(p1, p2, a1, 2), n)
    if a1 >= 2:
        lifted = Factorization(tuple((p, max(a, 2)) for p, a in f.pairs))
        full = assemble_case1(lifted)
    else:
        lifted = Factorization((f.pairs[0],) + tuple((p, max(a, 2)) for p, a in f.pairs[1:]))
        full = assemble_case2(lifted)
    if full.n == n:
        return full
    return restrict_to_divisors(full, n)
