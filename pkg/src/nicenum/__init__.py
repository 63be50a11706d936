"""Nice integers and good sets of congruences on their divisors.

A finite set of congruences with pairwise distinct moduli is *good* when
any two members that share a common solution have coprime moduli.  An
integer n is *nice* when a residue a_d can be chosen for every divisor
d > 1 of n so that {a_d (mod d)} is good; with p the smallest prime of n
this happens exactly when n/p has fewer than p distinct prime factors.

The package decides niceness, constructs explicit certificates by a
layered CRT construction, verifies arbitrary certificates independently
of the construction, and cross-checks the theory with exhaustive search
at small scale.
"""

from .arith import (
    BudgetExceeded,
    NotInvertible,
    crt_combine,
    factorize,
    gcd,
    is_prime,
    mod_inverse,
)
from .construct import (
    NotNiceError,
    TwoPrimeParams,
    build_multi_prime_block,
    build_p1_p2k,
    build_prime_power,
    build_two_prime_block,
    build_two_prime_full,
    construct_good_set,
    niceness_condition,
    restrict_to_divisors,
)
from .model import (
    Congruence,
    CongruenceAssignment,
    Factorization,
    NicenessVerdict,
    VerificationReport,
    canonicalize,
    divisors_gt1,
)
from .oracle import (
    AdmissibilityOutcome,
    AdmissibilityStatus,
    SearchOutcome,
    SearchStatus,
    admissibility_scan,
    exists_good_assignment,
    is_covering,
)
from .verify import check_complete, check_good, overlaps, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityOutcome",
    "AdmissibilityStatus",
    "BudgetExceeded",
    "Congruence",
    "CongruenceAssignment",
    "Factorization",
    "NicenessVerdict",
    "NotInvertible",
    "NotNiceError",
    "SearchOutcome",
    "SearchStatus",
    "TwoPrimeParams",
    "VerificationReport",
    "admissibility_scan",
    "build_multi_prime_block",
    "build_p1_p2k",
    "build_prime_power",
    "build_two_prime_block",
    "build_two_prime_full",
    "canonicalize",
    "check_complete",
    "check_good",
    "construct_good_set",
    "crt_combine",
    "divisors_gt1",
    "exists_good_assignment",
    "factorize",
    "gcd",
    "is_covering",
    "is_prime",
    "mod_inverse",
    "niceness_condition",
    "overlaps",
    "restrict_to_divisors",
    "verify_certificate",
]
