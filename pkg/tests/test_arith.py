import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_crt
from nicenum.arith import (
    BudgetExceeded,
    NotInvertible,
    crt_combine,
    factorize,
    gcd,
    is_prime,
    mod_inverse,
)
from nicenum.model import Congruence, Factorization


@pytest.mark.parametrize(
    "a,b,expected",
    [(15, 45, 15), (0, 7, 7), (1225, 3675, 1225), (0, 0, 0), (7, 0, 7)],
)
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


@given(st.integers(0, 10**12), st.integers(0, 10**12))
def test_gcd_divides_both(a, b):
    g = gcd(a, b)
    if g == 0:
        assert a == 0 and b == 0
    else:
        assert a % g == 0 and b % g == 0


@given(st.integers(1, 10**5), st.integers(0, 10**5), st.integers(0, 10**5))
def test_common_divisor_divides_gcd(c, x, y):
    assert gcd(c * x, c * y) % c == 0 or (x == 0 and y == 0)


@pytest.mark.parametrize("a,m,expected", [(2, 3, 2), (3, 5, 2), (1, 2, 1), (1, 97, 1)])
def test_mod_inverse_examples(a, m, expected):
    assert mod_inverse(a, m) == expected


@pytest.mark.parametrize("a,m", [(6, 9), (0, 7), (10, 5), (3, 1), (3, 0)])
def test_mod_inverse_rejects(a, m):
    with pytest.raises(NotInvertible):
        mod_inverse(a, m)


@given(st.integers(2, 10**9), st.integers(1, 10**9))
def test_mod_inverse_property(m, a):
    if gcd(a, m) != 1:
        with pytest.raises(NotInvertible):
            mod_inverse(a, m)
    else:
        x = mod_inverse(a, m)
        assert 0 <= x < m
        assert a * x % m == 1


def test_crt_combine_examples():
    assert crt_combine(Congruence(1, 5), Congruence(2, 7)) == Congruence(16, 35)
    # entries straight out of the bundled 3675 certificate: 13 != 0 mod 3
    assert crt_combine(Congruence(0, 3), Congruence(13, 15)) is None


@pytest.mark.parametrize("r,m", [(0, 1), (2, 5), (41, 100)])
def test_crt_combine_idempotent(r, m):
    assert crt_combine(Congruence(r, m), Congruence(r, m)) == Congruence(r, m)


congruence_small = st.integers(1, 60).flatmap(
    lambda m: st.tuples(st.integers(0, m - 1), st.just(m))
).map(lambda t: Congruence(*t))


@given(congruence_small, congruence_small)
def test_crt_combine_matches_brute_scan(c1, c2):
    assert crt_combine(c1, c2) == brute_crt(c1, c2)


@given(
    st.integers(1, 1000), st.integers(1, 1000), st.integers(1, 1000),
    st.integers(0, 10**6), st.integers(0, 10**6),
)
def test_crt_combine_presence_and_reduction(g, u, v, r1, r2):
    # share the factor g so non-coprime moduli are exercised heavily
    m1, m2 = g * u, g * v
    c1, c2 = Congruence(r1 % m1, m1), Congruence(r2 % m2, m2)
    combined = crt_combine(c1, c2)
    compatible = (c1.residue - c2.residue) % gcd(m1, m2) == 0
    assert (combined is not None) == compatible
    if combined is not None:
        assert combined.modulus == m1 // gcd(m1, m2) * m2
        assert combined.residue % m1 == c1.residue
        assert combined.residue % m2 == c2.residue
        assert combined.is_canonical


@pytest.mark.parametrize(
    "n,expected",
    [(13, True), (1, False), (25050025, False), (0, False), (2, True), (4, False), (97, True)],
)
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division_small():
    def trial(n):
        if n < 2:
            return False
        d = 2
        while d * d <= n:
            if n % d == 0:
                return False
            d += 1
        return True

    for n in range(2000):
        assert is_prime(n) == trial(n), n


def test_is_prime_beyond_64_bits():
    assert is_prime(2**89 - 1)          # Mersenne prime
    assert not is_prime(2**67 - 1)      # Mersenne composite
    assert is_prime(2**89 - 1)          # deterministic on repeat


@pytest.mark.parametrize(
    "n,pairs",
    [
        (25050025, ((5, 2), (7, 2), (11, 2), (13, 2))),
        (3675, ((3, 1), (5, 2), (7, 2))),
        (1, ()),
        (2, ((2, 1),)),
        (720, ((2, 4), (3, 2), (5, 1))),
    ],
)
def test_factorize_examples(n, pairs):
    assert factorize(n) == Factorization(pairs)


@given(st.integers(1, 10**6))
@settings(max_examples=300)
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert f.n == n
    assert all(is_prime(p) for p, _ in f.pairs)
    assert list(f.primes()) == sorted(set(f.primes()))


def test_factorize_beyond_trial_range():
    p, q = 1000003, 1000033
    assert factorize(p * q) == Factorization(((p, 1), (q, 1)))
    assert factorize(p * p) == Factorization(((p, 2),))


def test_factorize_budget_exhaustion():
    with pytest.raises(BudgetExceeded):
        factorize(1000003 * 1000033, budget=1)


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
