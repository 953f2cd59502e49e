"""Exhaustive verification of product identities and rounding lemmas.

The checks in this module are deliberately brute-force: they enumerate
bounded index ranges and test exact integer equalities.  Where a classical
identity circulates with more than one sign convention, the suite tests
every printed variant and reports which convention actually holds (see
``check_identity_suite``), rather than assuming one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    FIBONACCI,
    JACOBSTHAL,
    LUCAS,
    PELL,
    fibonacci,
    lucas,
    sequence_values,
)

__all__ = [
    "ProductDecomposition",
    "CaseLabel",
    "UniquenessReport",
    "IdentityCheck",
    "IdentitySuiteReport",
    "RoundingScanReport",
    "decomposition_index_bound",
    "fl_decompose",
    "ll_decompose",
    "classify_fl_quadruple",
    "classify_ll_quadruple",
    "verify_fl_uniqueness",
    "verify_ll_uniqueness",
    "check_identity_suite",
    "check_rounding_lemma",
    "rounding_corollary_scan",
]


# --------------------------------------------------------------------------
# product decompositions
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ProductDecomposition:
    """One way of writing ``value`` as a product of two sequence terms.

    For the Fibonacci*Lucas scan the pair is ordered (a is the Fibonacci
    index); for the Lucas*Lucas scan pairs are unordered and stored with
    a <= b.  ``value == 0`` is an infinite family (a = 0 with b free),
    signalled by ``infinite_b`` and ``b = None``.
    """

    a: int
    b: int | None
    value: int
    infinite_b: bool = False

    @property
    def indices(self) -> tuple[int, int | None]:
        return (self.a, self.b)


def decomposition_index_bound(value: int, lucas_side: bool = False) -> int:
    """Smallest safe scan bound: first index whose term exceeds ``value``,
    plus 2 to clear the F(1) = F(2) plateau."""
    value = abs(value)
    i = 0
    while (lucas(i) if lucas_side else fibonacci(i)) <= value:
        i += 1
    return i + 2


def fl_decompose(value: int, index_bound: int | None = None) -> list[ProductDecomposition]:
    """All (a, b) with 0 <= a, b <= bound and F(a) * L(b) == value.

    The bound must satisfy F(bound) > value for the listing to be complete;
    when omitted it is computed from the value.  ``value == 0`` returns the
    flagged infinite family a = 0.
    """
    if value < 0:
        raise ValueError("products of nonnegative-index terms are nonnegative")
    if value == 0:
        return [ProductDecomposition(0, None, 0, infinite_b=True)]
    if index_bound is None:
        index_bound = decomposition_index_bound(value)
    fibs = [fibonacci(i) for i in range(index_bound + 1)]
    lucs = [lucas(i) for i in range(index_bound + 1)]
    out = []
    for a in range(index_bound + 1):
        if fibs[a] == 0 or fibs[a] > value or value % fibs[a]:
            continue
        rest = value // fibs[a]
        for b in range(index_bound + 1):
            if lucs[b] == rest:
                out.append(ProductDecomposition(a, b, value))
    return sorted(out, key=lambda d: (d.a, d.b))


def ll_decompose(value: int, index_bound: int | None = None) -> list[ProductDecomposition]:
    """All unordered pairs {a, b} with L(a) * L(b) == value >= 1."""
    if value < 1:
        raise ValueError("Lucas numbers are positive, so the product is >= 1")
    if index_bound is None:
        index_bound = decomposition_index_bound(value, lucas_side=True)
    lucs = [lucas(i) for i in range(index_bound + 1)]
    out = []
    for a in range(index_bound + 1):
        if lucs[a] > value or value % lucs[a]:
            continue
        rest = value // lucs[a]
        for b in range(a, index_bound + 1):
            if lucs[b] == rest:
                out.append(ProductDecomposition(a, b, value))
    return sorted(out, key=lambda d: (d.a, d.b))


# --------------------------------------------------------------------------
# uniqueness propositions
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CaseLabel:
    proposition: str  # "FL" or "LL"
    case_number: int

    def __post_init__(self) -> None:
        limit = 5 if self.proposition == "FL" else 3
        if not 1 <= self.case_number <= limit:
            raise ValueError(f"{self.proposition} cases run 1..{limit}")


# Sporadic equal products 2, 4 and 6; every cross pairing of one value's
# decompositions that no structural case explains lands here.
_FL_SPORADIC = {
    2: {(1, 0), (2, 0), (3, 1)},
    4: {(1, 3), (2, 3), (3, 0)},
    6: {(3, 2), (4, 0)},
}
_LL_SPORADIC = {(0, 0, 1, 3), (0, 0, 3, 1), (1, 3, 0, 0), (3, 1, 0, 0)}


def classify_fl_quadruple(a: int, b: int, c: int, d: int) -> CaseLabel | None:
    """Case label for F(a)L(b) = F(c)L(d), or None if the equality fails
    or no enumerated case covers it.

    Cases: 1 identical pairs; 2 both Fibonacci factors zero; 3 the
    F(1) = F(2) swap; 4 the doubling identity F(k)L(k) = F(2k)L(1), in
    either orientation and up to the F(1) = F(2) swap; 5 the sporadic
    products 2, 4, 6.
    """
    if fibonacci(a) * lucas(b) != fibonacci(c) * lucas(d):
        return None
    value = fibonacci(a) * lucas(b)
    if a == c and b == d:
        return CaseLabel("FL", 1)
    if a == 0 and c == 0:
        return CaseLabel("FL", 2)
    if b == d and {a, c} == {1, 2}:
        return CaseLabel("FL", 3)
    for (x, y), (u, v) in (((a, b), (c, d)), ((c, d), (a, b))):
        if v == 1 and u == 2 * y and fibonacci(x) == fibonacci(y):
            return CaseLabel("FL", 4)
    sporadic = _FL_SPORADIC.get(value)
    if sporadic and (a, b) in sporadic and (c, d) in sporadic:
        return CaseLabel("FL", 5)
    return None


def classify_ll_quadruple(a: int, b: int, c: int, d: int) -> CaseLabel | None:
    """Case label for L(a)L(b) = L(c)L(d): 1 equal, 2 swapped, 3 the lone
    sporadic identity 2*2 = 1*4."""
    if lucas(a) * lucas(b) != lucas(c) * lucas(d):
        return None
    if a == c and b == d:
        return CaseLabel("LL", 1)
    if a == d and b == c:
        return CaseLabel("LL", 2)
    if (a, b, c, d) in _LL_SPORADIC:
        return CaseLabel("LL", 3)
    return None


@dataclass
class UniquenessReport:
    proposition: str
    index_bound: int
    total_quadruples: int
    case_counts: dict[int, int]
    unclassified: list[tuple[int, int, int, int]]

    @property
    def passed(self) -> bool:
        return not self.unclassified


def _product_buckets(index_bound: int, first_fib: bool) -> dict[int, list[tuple[int, int]]]:
    fibs = [fibonacci(i) for i in range(index_bound + 1)]
    lucs = [lucas(i) for i in range(index_bound + 1)]
    buckets: dict[int, list[tuple[int, int]]] = {}
    for a in range(index_bound + 1):
        left = fibs[a] if first_fib else lucs[a]
        for b in range(index_bound + 1):
            buckets.setdefault(left * lucs[b], []).append((a, b))
    return buckets


def verify_fl_uniqueness(index_bound: int) -> UniquenessReport:
    """Classify every quadruple in [0, bound]^4 with F(a)L(b) = F(c)L(d).

    Equal products are found by value bucketing, so the cost is far below
    the nominal bound^4 enumeration.  The report lists any quadruple no
    case explains; an empty list is the expected outcome.
    """
    if index_bound < 5:
        raise ValueError("bound below 5 cannot exhibit all cases")
    counts: dict[int, int] = {}
    unclassified: list[tuple[int, int, int, int]] = []
    total = 0
    for value, pairs in _product_buckets(index_bound, first_fib=True).items():
        for a, b in pairs:
            for c, d in pairs:
                total += 1
                label = classify_fl_quadruple(a, b, c, d)
                if label is None:
                    unclassified.append((a, b, c, d))
                else:
                    counts[label.case_number] = counts.get(label.case_number, 0) + 1
    return UniquenessReport("FL", index_bound, total, counts, unclassified)


def verify_ll_uniqueness(index_bound: int) -> UniquenessReport:
    """Classify every quadruple in [0, bound]^4 with L(a)L(b) = L(c)L(d)."""
    if index_bound < 5:
        raise ValueError("bound below 5 cannot exhibit all cases")
    counts: dict[int, int] = {}
    unclassified: list[tuple[int, int, int, int]] = []
    total = 0
    for value, pairs in _product_buckets(index_bound, first_fib=False).items():
        for a, b in pairs:
            for c, d in pairs:
                total += 1
                label = classify_ll_quadruple(a, b, c, d)
                if label is None:
                    unclassified.append((a, b, c, d))
                else:
                    counts[label.case_number] = counts.get(label.case_number, 0) + 1
    return UniquenessReport("LL", index_bound, total, counts, unclassified)


# --------------------------------------------------------------------------
# identity suite
# --------------------------------------------------------------------------


@dataclass
class IdentityCheck:
    name: str
    passed: bool
    checked: int
    failures: list = field(default_factory=list)
    note: str = ""
    observations: dict[str, bool] = field(default_factory=dict)


@dataclass
class IdentitySuiteReport:
    index_bound: int
    checks: list[IdentityCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def by_name(self, name: str) -> IdentityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _check(name, pairs, predicate, note="", observations=None) -> IdentityCheck:
    failures = [p for p in pairs if not predicate(*p)]
    return IdentityCheck(name, not failures, len(pairs), failures[:10], note,
                         observations or {})


def check_identity_suite(index_bound: int) -> IdentitySuiteReport:
    """Verify the ten identity families used by the divisibility analysis.

    All equalities are exact-integer statements; indices that go negative
    are resolved by the reflection rules.  Two of the identities circulate
    with ambiguous sign placement; for those the canonical form is the one
    asserted, and the behaviour of the printed variant is recorded in the
    check's ``observations``.
    """
    if index_bound < 10:
        raise ValueError("index bound below 10 exercises too little")
    B = index_bound
    checks: list[IdentityCheck] = []

    pell = sequence_values(PELL, 4 * B + 6)
    jac = sequence_values(JACOBSTHAL, 2 * B + 4)
    fib = sequence_values(FIBONACCI, 4 * B + 6)
    fib_prefix = [0]
    for v in fib[1:]:
        fib_prefix.append(fib_prefix[-1] + v)
    fib_sum = lambda n: fib_prefix[n]
    pell_sum = lambda n: sum(pell[1:n + 1])
    jac_sum = lambda n: sum(jac[1:n + 1])

    rng = range(B + 1)
    grid = [(a, b) for a in rng for b in rng]

    checks.append(_check(
        "fib-double-index", [(n,) for n in rng],
        lambda n: fibonacci(2 * n) == fibonacci(n) * lucas(n)))

    checks.append(_check(
        "fib-neighbor-factorizations", [(n,) for n in rng],
        lambda n: (fibonacci(2 * n) + (-1) ** n == fibonacci(n - 1) * lucas(n + 1)
                   and fibonacci(2 * n) - (-1) ** n == fibonacci(n + 1) * lucas(n - 1)
                   and fibonacci(2 * n + 1) + (-1) ** n == fibonacci(n + 1) * lucas(n)
                   and fibonacci(2 * n + 1) - (-1) ** n == fibonacci(n) * lucas(n + 1))))

    checks.append(_check(
        "fib-partial-sum-products", [(k,) for k in range(B + 1)],
        lambda k: (fib_sum(4 * k) == fibonacci(2 * k) * lucas(2 * k + 2)
                   and fib_sum(4 * k + 2) == fibonacci(2 * k + 3) * lucas(2 * k + 1)
                   and fib_sum(4 * k + 1) == fibonacci(2 * k + 2) * lucas(2 * k + 1)
                   and fib_sum(4 * k + 3) == fibonacci(2 * k + 2) * lucas(2 * k + 3))))

    checks.append(_check(
        "fib-lucas-product-sum", grid,
        lambda a, b: fibonacci(a) * lucas(b)
        == fibonacci(a + b) + (-1) ** b * fibonacci(a - b)))

    # Product of two Lucas numbers.  The exponent must sit on the index that
    # is subtracted; attaching it to the first index fails exactly when the
    # two indices have opposite parity.
    first_index_failures = [(a, b) for a, b in grid
                            if lucas(a) * lucas(b) != lucas(a + b) + (-1) ** a * lucas(a - b)]
    checks.append(_check(
        "lucas-product-sum", grid,
        lambda a, b: lucas(a) * lucas(b) == lucas(a + b) + (-1) ** b * lucas(a - b),
        note="exponent on the subtracted index holds everywhere; the "
             "first-index variant holds only for indices of equal parity",
        observations={
            "first_index_variant_fails_somewhere": bool(first_index_failures),
            "first_index_variant_failures_all_opposite_parity":
                all((a - b) % 2 == 1 for a, b in first_index_failures),
        }))

    checks.append(_check(
        "lucas-double-index-neighbor", [(n,) for n in rng],
        lambda n: lucas(2 * n) + 3 * (-1) ** n == 5 * fibonacci(n + 1) * fibonacci(n - 1)))

    # Shift rule L(b)L(a-b) = L(a) + (-1)^(a+b) L(2b-a) for a >= b.  The
    # variant with plain (-1)^b fails exactly at odd a.
    pairs_ab = [(a, b) for b in rng for a in range(b, B + 1)]
    printed_failures = [(a, b) for a, b in pairs_ab
                        if lucas(a) + (-1) ** b * lucas(2 * b - a) != lucas(b) * lucas(a - b)]
    checks.append(_check(
        "lucas-shift-product", pairs_ab,
        lambda a, b: lucas(a) + (-1) ** (a + b) * lucas(2 * b - a) == lucas(b) * lucas(a - b),
        note="sign (-1)^(a+b) holds everywhere; the plain (-1)^b variant "
             "holds only for even a",
        observations={
            "plain_b_variant_fails_somewhere": bool(printed_failures),
            "plain_b_variant_failures_all_odd_a":
                all(a % 2 == 1 for a, b in printed_failures),
        }))

    checks.append(_check(
        "pell-partial-sum-squares", [(k,) for k in range(1, B + 1)],
        lambda k: (pell_sum(4 * k - 1) == 2 * pell[2 * k] ** 2
                   and pell_sum(4 * k) == 2 * pell[2 * k + 1] * pell[2 * k])))

    checks.append(_check(
        "jacobsthal-partial-sums", [(k,) for k in range(1, B + 1)],
        lambda k: (jac_sum(2 * k - 1) == jac[2 * k]
                   and jac_sum(2 * k) == 2 * jac[2 * k])))

    checks.append(_check(
        "fib-sum-ratio-window", [(n,) for n in range(3, B + 1)],
        lambda n: fibonacci(n + 1) < fibonacci(n + 2) - 1 < 2 * fibonacci(n + 1),
        note="integer restatement of 1 < (F(n+2)-1)/F(n+1) < 2 for n > 2"))

    return IdentitySuiteReport(index_bound, checks)


# --------------------------------------------------------------------------
# rounding lemma and its divisibility corollary
# --------------------------------------------------------------------------


def _rounding_preconditions(family: str, n: int, m: int) -> bool:
    if family == "fibonacci":
        return n - 3 * m <= -4 and n >= 11 and n - m >= 0
    if family == "lucas":
        return n - 3 * m <= -4 and n >= 11 and n - m >= 1
    raise ValueError(f"no rounding lemma for family {family!r}")


def check_rounding_lemma(family: str, n: int, m: int) -> bool:
    """Whether the partial-sum numerator sits within one divisor of a Lucas
    multiple: |numerator - D*L(n-m+2)| < D, with numerator F(n+2)-1 and
    D = F(m) for the Fibonacci family, L(n+2)-3 and D = L(m) for Lucas.

    Raises ValueError outside the lemma's hypotheses (n-3m <= -4, n >= 11,
    and n-m >= 0 resp. 1), where the statement asserts nothing.
    """
    if not _rounding_preconditions(family, n, m):
        raise ValueError(f"rounding lemma preconditions fail for {family} n={n} m={m}")
    if family == "fibonacci":
        numerator = fibonacci(n + 2) - 1
        divisor = fibonacci(m)
    else:
        numerator = lucas(n + 2) - 3
        divisor = lucas(m)
    return abs(numerator - divisor * lucas(n - m + 2)) < divisor


@dataclass
class RoundingScanReport:
    family: str
    n_max: int
    pairs_checked: int
    inequality_failures: list[tuple[int, int]]
    quotient_failures: list[tuple[int, int]]

    @property
    def passed(self) -> bool:
        return not self.inequality_failures and not self.quotient_failures


def rounding_corollary_scan(family: str, n_max: int) -> RoundingScanReport:
    """Every (n, m) pair meeting the lemma hypotheses up to n_max: check the
    unit-window inequality, and whenever the divisor also divides the
    numerator, check that the quotient is exactly L(n-m+2)."""
    ineq: list[tuple[int, int]] = []
    quot: list[tuple[int, int]] = []
    checked = 0
    low_gap = 0 if family == "fibonacci" else 1
    for n in range(11, n_max + 1):
        numerator = (fibonacci(n + 2) - 1) if family == "fibonacci" else (lucas(n + 2) - 3)
        # n - 3m <= -4  <=>  m >= ceil((n+4)/3)
        for m in range(-(-(n + 4) // 3), n - low_gap + 1):
            checked += 1
            divisor = fibonacci(m) if family == "fibonacci" else lucas(m)
            target = lucas(n - m + 2)
            if not abs(numerator - divisor * target) < divisor:
                ineq.append((n, m))
            if numerator % divisor == 0 and numerator // divisor != target:
                quot.append((n, m))
    return RoundingScanReport(family, n_max, checked, ineq, quot)
