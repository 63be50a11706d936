"""Acceptance gate: one test per criterion, each printing a PASS line with timing.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as the
criteria complete.
"""

import itertools
import random
import time

from conftest import factorization_from_spf, fixture_assignment, spf_sieve
from nicenum.arith import crt_combine, factorize
from nicenum.cli import main as cli_main
from nicenum.construct import (
    TwoPrimeParams,
    _case1_allowed,
    _case2_allowed,
    _prime_chain,
    case1_blocks,
    case2_blocks,
    construct_good_set,
    niceness_condition,
)
from nicenum.model import Congruence, CongruenceAssignment, Factorization, divisors_gt1
from nicenum.oracle import (
    AdmissibilityStatus,
    SearchStatus,
    admissibility_scan,
    exists_good_assignment,
)
from nicenum.verify import check_good, overlaps, verify_certificate

TARGETED = [3675, 148225, 25050025, 3 * 5**2 * 7**3, 5 * 7**2 * 11**2 * 13**2]


def _report(number: int, description: str, started: float) -> None:
    print(f"ACCEPTANCE {number} PASS - {description} ({time.perf_counter() - started:.2f}s)")


def test_criterion_1_output1_fixture_verifies():
    started = time.perf_counter()
    a = fixture_assignment("output1.txt")
    assert a.n == 25050025 and len(a) == 80
    report = verify_certificate(a)
    assert report.good and report.complete
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    _report(1, "80-congruence fixture for 25050025 passes goodness + completeness", started)


def test_criterion_2_output2_fixture_verifies():
    started = time.perf_counter()
    a = fixture_assignment("output2.txt")
    assert a.n == 3675 and len(a) == 17
    report = verify_certificate(a)
    assert report.good and report.complete
    elapsed = time.perf_counter() - started
    assert elapsed < 0.1
    _report(2, "17-congruence fixture for 3675 passes goodness + completeness", started)


def test_criterion_3_output3_reproduction(capsys):
    started = time.perf_counter()
    code = cli_main(["check", "11025"])
    out = capsys.readouterr().out
    assert code == 1
    assert out.strip() == "not nice (p=3, omega=3)"
    with capsys.disabled():
        _report(3, "check 11025 reports not nice with p=3, omega=3, exit 1", started)


def test_criterion_4_constructive_sufficiency_sweep():
    started = time.perf_counter()
    limit = 10**5
    spf = spf_sieve(limit)
    nice = [
        n for n in range(2, limit + 1)
        if niceness_condition(factorization_from_spf(n, spf)).nice
    ]
    checked = 0
    for n in nice + TARGETED:
        assignment = construct_good_set(n)
        assert verify_certificate(assignment).passed, n
        checked += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    _report(4, f"construct+verify for {checked} nice n (all nice n <= 1e5 + targeted set)", started)


def test_criterion_5_oracle_agrees_with_condition():
    started = time.perf_counter()
    for n in range(2, 201):
        f = factorize(n)
        outcome = exists_good_assignment(divisors_gt1(f))
        assert outcome.status is not SearchStatus.BUDGET_EXCEEDED, n
        assert (outcome.status is SearchStatus.FOUND) == niceness_condition(f).nice, n
    elapsed = time.perf_counter() - started
    assert elapsed < 300.0
    _report(5, "search existence agrees with the niceness condition on [2, 200]", started)


def test_criterion_6_non_admissibility_corroboration():
    started = time.perf_counter()
    nice = [1] + [n for n in range(2, 65) if niceness_condition(factorize(n)).nice]
    for n in nice:
        outcome = admissibility_scan(n)
        assert outcome.status is AdmissibilityStatus.NO_GOOD_SET_IS_COVERING, n
    elapsed = time.perf_counter() - started
    assert elapsed < 300.0
    _report(6, f"no covering good set exists for any of the {len(nice)} nice n <= 64", started)


def test_criterion_7_property_suites():
    started = time.perf_counter()

    # (a) CRT presence <-> overlap on 1e5 random pairs, non-coprime moduli included
    rng = random.Random(987654321)
    for _ in range(10**5):
        g = rng.randint(1, 40)
        m1 = g * rng.randint(1, 250)
        m2 = g * rng.randint(1, 250)
        c1 = Congruence(rng.randrange(m1), m1)
        c2 = Congruence(rng.randrange(m2), m2)
        assert overlaps(c1, c2) == (crt_combine(c1, c2) is not None)

    # (b) subset-goodness monotonicity on 1e3 random restrictions of constructed sets
    pool = [construct_good_set(n).congruences() for n in (25050025, 3675, 5010005)]
    for _ in range(10**3):
        base = pool[rng.randrange(len(pool))]
        subset = rng.sample(base, rng.randrange(0, len(base) + 1))
        assert check_good(subset).good

    # (c) residue range laws on every generated Case 1 / Case 2 block
    case1_fs = [
        Factorization(((5, 2), (7, 2), (11, 2))),
        Factorization(((5, 2), (7, 2), (11, 2), (13, 2))),
    ]
    case2_fs = [
        Factorization(((3, 1), (5, 2), (7, 2))),
        Factorization(((3, 1), (5, 2), (7, 3))),
        Factorization(((5, 1), (7, 2), (11, 2), (13, 2))),
    ]
    blocks_checked = 0
    for f in case1_fs:
        primes = f.primes()
        for label, congs in case1_blocks(f):
            blocks_checked += 1
            if len(label) == 1:
                for c in congs:
                    assert c.residue % primes[label[0] - 1] in {0, 1}
            elif len(label) == 2:
                i, j = label
                for c in congs:
                    assert c.residue % primes[i - 1] == j + 2 * (i - 1)
                    assert c.residue % primes[j - 1] in {3 * i - 1, 3 * i, 3 * i + 1}
            else:
                allowed = _case1_allowed(label)
                for pos, idx in enumerate(label):
                    for c in congs:
                        assert c.residue % primes[idx - 1] in allowed[pos]
    for f in case2_fs:
        primes = f.primes()
        for label, congs in case2_blocks(f):
            blocks_checked += 1
            if len(label) == 1:
                continue
            if len(label) == 2 and label[0] == 1:
                k = label[1]
                for c in congs:
                    assert c.residue % primes[0] == k - 1
                    assert c.residue % primes[k - 1] in {2, 3}
            elif len(label) == 2:
                i, j = label
                for c in congs:
                    assert c.residue % primes[i - 1] == j + 2 * i - 3
                    assert c.residue % primes[j - 1] in {3 * i - 2, 3 * i - 1, 3 * i}
            else:
                allowed = _case2_allowed(label)
                for pos, idx in enumerate(label):
                    for c in congs:
                        assert c.residue % primes[idx - 1] in allowed[pos]

    # (d) multi-prime block pairwise non-overlap on 100 random instances
    from nicenum.construct import build_multi_prime_block

    primes_pool = [3, 5, 7, 11, 13, 17]
    for _ in range(100):
        t = rng.randint(2, 4)
        primes = tuple(sorted(rng.sample(primes_pool, t)))
        alphas = tuple(rng.randint(1, 3) for _ in primes)
        product = 1
        for p in primes:
            product *= p
        variable = sum(1 for a in alphas if a >= 2)
        residues = rng.sample(range(product), 1 << variable)
        block = build_multi_prime_block(primes, alphas, residues)
        for x, y in itertools.combinations(block, 2):
            assert not overlaps(x, y)

    elapsed = time.perf_counter() - started
    assert elapsed < 120.0
    _report(7, f"property suites (1e5 CRT pairs, 1e3 restrictions, {blocks_checked} blocks, "
               "100 random multi-prime blocks)", started)


def _faulty_two_prime_block(p1, p2, alpha1, alpha2, params, fault):
    """Deliberately broken variants of the two-prime block, for fault injection."""
    a, b, c, d = params.a, params.b, params.c, params.d
    out = []
    for i in range(1, alpha1 + 1):
        m1 = p1**i
        if fault == "drop_p1_offset" and i >= 2:
            part1 = Congruence(a % m1, m1)
        else:
            part1 = Congruence(a % p1 if i == 1 else (a + p1 ** (i - 1)) % m1, m1)
        for j in range(1, alpha2 + 1):
            m2 = p2**j
            if j == 1:
                r2 = b if (i == 1 or fault == "c_reuses_b") else c
            elif i == 1 or fault == "collapse_d_branch":
                r2 = d + p2 if j == 2 else d + p2 ** (j - 1)
            else:
                r2 = d + 2 * p2 if j == 2 else d + 3 * p2 + p2 ** (j - 1)
            combined = crt_combine(part1, Congruence(r2 % m2, m2))
            out.append(combined)
    return out


def test_criterion_8_mutation_sensitivity():
    started = time.perf_counter()

    # all single-entry +1 perturbations of the 3675 fixture
    fixture = fixture_assignment("output2.txt")
    rejected = 0
    for d in fixture.entries:
        mutated = dict(fixture.entries)
        mutated[d] = (mutated[d] + 1) % d
        if not verify_certificate(CongruenceAssignment(fixture.n, mutated)).passed:
            rejected += 1
    rate = rejected / len(fixture.entries)
    assert rate >= 0.80, f"only {rate:.1%} of mutations rejected"

    # injected constructor faults must all be rejected by the verifier
    faults_rejected = 0
    faults_total = 0
    for fault in ("c_reuses_b", "drop_p1_offset", "collapse_d_branch"):
        faults_total += 1
        entries = {}
        block = _faulty_two_prime_block(5, 7, 3, 2, TwoPrimeParams(2, 2, 3, 4), fault)
        for cong in _prime_chain(5, 3) + _prime_chain(7, 2) + block:
            entries[cong.modulus] = cong.residue
        if not verify_certificate(CongruenceAssignment(6125, entries)).passed:
            faults_rejected += 1

    # the colliding cross-chain law: every p1*p_k^beta entry pinned to 1 mod p1
    faults_total += 1
    good = construct_good_set(3675)
    mutated = dict(good.entries)
    for pk, alpha in ((5, 2), (7, 2)):
        for beta in range(1, alpha + 1):
            cross = crt_combine(Congruence(1, 3), Congruence(pk ** (beta - 1), pk**beta))
            mutated[3 * pk**beta] = cross.residue
    if not verify_certificate(CongruenceAssignment(3675, mutated)).passed:
        faults_rejected += 1

    assert faults_rejected == faults_total
    _report(8, f"mutations rejected at {rate:.1%} (>= 80%); "
               f"{faults_rejected}/{faults_total} injected faults rejected", started)
