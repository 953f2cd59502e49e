"""Exact evaluation of linear-recurrence sequences.

Everything here works over Python's built-in arbitrary-precision integers;
no floating point is used anywhere.  A sequence is described by a
:class:`RecurrenceSpec` (the recurrence coefficients) plus initial terms
(:class:`SequenceDef`).  Symbolic coefficient vectors over the initial
values are handled by :class:`LinearForm`, so that e.g. the seventh term of
any sequence obeying ``x_n = x_{n-1} + x_{n-2}`` can be written ``5a+8b``.

Index conventions: concrete sequences are indexed from 0, partial sums run
over indices 1..n, and symbolic forms place the unknown initial values at
indices 1..k (so ``term_form(rec, 1)`` is the first symbol).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "RecurrenceSpec",
    "SequenceDef",
    "LinearForm",
    "PartialSumRecord",
    "PeriodInfo",
    "FIBONACCI",
    "LUCAS",
    "PELL",
    "JACOBSTHAL",
    "SIGNED_FIBONACCI",
    "FIB_BISECTION",
    "TRIBONACCI",
    "NAMED_FAMILIES",
    "first_kind",
    "second_kind",
    "nnacci",
    "term",
    "term_fast",
    "fibonacci",
    "lucas",
    "sequence_values",
    "partial_sum",
    "term_form",
    "sum_form",
    "period_mod",
]


# --------------------------------------------------------------------------
# recurrences and sequences
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RecurrenceSpec:
    """A homogeneous linear recurrence x_n = c1*x_{n-1} + ... + ck*x_{n-k}.

    ``coefficients`` is ``(c1, ..., ck)``; the order k must be at least 2.
    The classical (P, Q) parametrisation ``x_n = P*x_{n-1} - Q*x_{n-2}``
    maps to coefficients ``(P, -Q)``.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) < 2:
            raise ValueError("recurrence order must be at least 2")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @classmethod
    def from_pq(cls, p: int, q: int) -> "RecurrenceSpec":
        return cls((p, -q))

    @classmethod
    def nnacci(cls, order: int) -> "RecurrenceSpec":
        """Order-k recurrence where each term is the sum of the previous k."""
        if order < 2:
            raise ValueError("n-nacci order must be at least 2")
        return cls((1,) * order)

    @property
    def pq(self) -> tuple[int, int]:
        """The (P, Q) pair of an order-2 recurrence."""
        if self.order != 2:
            raise ValueError("(P, Q) view requires an order-2 recurrence")
        return self.coefficients[0], -self.coefficients[1]

    def step(self, window: Sequence[int]) -> int:
        """Next term from the k most recent terms (oldest first)."""
        k = self.order
        return sum(c * x for c, x in zip(self.coefficients, reversed(window[-k:])))


@dataclass(frozen=True)
class SequenceDef:
    """A concrete sequence: recurrence plus initial terms at indices 0..k-1.

    ``family`` is a tag used to pick negative-index reflection rules and
    closed-form shortcuts; "custom" sequences get neither.
    """

    recurrence: RecurrenceSpec
    initial_terms: tuple[int, ...]
    family: str = "custom"

    def __post_init__(self) -> None:
        object.__setattr__(self, "initial_terms", tuple(int(t) for t in self.initial_terms))
        if len(self.initial_terms) != self.recurrence.order:
            raise ValueError("need exactly one initial term per recurrence order")

    @property
    def order(self) -> int:
        return self.recurrence.order


def first_kind(p: int, q: int, family: str = "first-kind") -> SequenceDef:
    """Lucas sequence of the first kind U(P, Q): starts 0, 1."""
    return SequenceDef(RecurrenceSpec.from_pq(p, q), (0, 1), family)


def second_kind(p: int, q: int, family: str = "second-kind") -> SequenceDef:
    """Lucas sequence of the second kind V(P, Q): starts 2, P."""
    return SequenceDef(RecurrenceSpec.from_pq(p, q), (2, p), family)


def nnacci(order: int) -> SequenceDef:
    """The order-k nacci sequence: k-1 zeros then a one, each later term
    the sum of the previous k.  For k = 3 this is the Tribonacci sequence
    0, 0, 1, 1, 2, 4, 7, 13, ...
    """
    rec = RecurrenceSpec.nnacci(order)
    return SequenceDef(rec, (0,) * (order - 1) + (1,), f"nnacci-{order}")


FIBONACCI = first_kind(1, -1, "fibonacci")
LUCAS = second_kind(1, -1, "lucas")
PELL = first_kind(2, -1, "pell")
JACOBSTHAL = first_kind(1, -2, "jacobsthal")
SIGNED_FIBONACCI = first_kind(-1, -1, "signed-fibonacci")
FIB_BISECTION = first_kind(3, 1, "fib-bisection")
TRIBONACCI = nnacci(3)

NAMED_FAMILIES: dict[str, SequenceDef] = {
    "fibonacci": FIBONACCI,
    "lucas": LUCAS,
    "pell": PELL,
    "jacobsthal": JACOBSTHAL,
    "signed-fibonacci": SIGNED_FIBONACCI,
    "fib-bisection": FIB_BISECTION,
    "tribonacci": TRIBONACCI,
}


# --------------------------------------------------------------------------
# term evaluation
# --------------------------------------------------------------------------


def _iterate_terms(seq: SequenceDef) -> Iterator[int]:
    window = list(seq.initial_terms)
    yield from window
    while True:
        nxt = seq.recurrence.step(window)
        yield nxt
        window.append(nxt)
        del window[0]


def sequence_values(seq: SequenceDef, upto: int) -> list[int]:
    """Terms at indices 0..upto as a list."""
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    out = []
    for i, v in enumerate(_iterate_terms(seq)):
        if i > upto:
            break
        out.append(v)
    return out


def term(seq: SequenceDef, n: int) -> int:
    """The n-th term, by linear iteration.

    Negative n is accepted only for the fibonacci and lucas families, using
    the reflections F(-n) = (-1)^(n+1) F(n) and L(-n) = (-1)^n L(n).
    """
    if n < 0:
        if seq.family == "fibonacci":
            return -term(seq, -n) if n % 2 == 0 else term(seq, -n)
        if seq.family == "lucas":
            return term(seq, -n) if n % 2 == 0 else -term(seq, -n)
        raise ValueError(f"negative index {n} needs a reflection rule; "
                         f"family {seq.family!r} has none")
    if n < seq.order:
        return seq.initial_terms[n]
    return sequence_values(seq, n)[n]


def _fib_pair(n: int) -> tuple[int, int]:
    """(F(n), F(n+1)) by index doubling: O(log n) big-integer multiplies."""
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)       # F(2k)
    d = a * a + b * b         # F(2k+1)
    if n & 1:
        return d, c + d
    return c, d


def term_fast(family: str, n: int) -> int:
    """Fast-doubling evaluation of Fibonacci or Lucas numbers, n >= 0.

    Returns the same value as ``term`` on the corresponding family but in
    O(log n) arithmetic steps, which makes indices like 10**6 practical.
    """
    if n < 0:
        raise ValueError("term_fast requires n >= 0")
    if family == "fibonacci":
        return _fib_pair(n)[0]
    if family == "lucas":
        a, b = _fib_pair(n)
        return 2 * b - a
    raise ValueError(f"no doubling kernel for family {family!r}")


def fibonacci(n: int) -> int:
    """F(n) for any integer n (reflection below zero)."""
    if n < 0:
        v = term_fast("fibonacci", -n)
        return -v if n % 2 == 0 else v
    return term_fast("fibonacci", n)


def lucas(n: int) -> int:
    """L(n) for any integer n (reflection below zero)."""
    if n < 0:
        v = term_fast("lucas", -n)
        return v if n % 2 == 0 else -v
    return term_fast("lucas", n)


# --------------------------------------------------------------------------
# partial sums
# --------------------------------------------------------------------------


class PartialSumRecord(NamedTuple):
    n: int
    value: int


def partial_sum(seq: SequenceDef, n: int) -> PartialSumRecord:
    """Exact sum of the terms at indices 1..n.

    For a first-kind pair U(P, Q) with Q - P + 1 != 0 the closed form
    ``(Q*U(n) - U(n+1) + 1) / (Q - P + 1)`` is used; otherwise the terms
    are summed directly.  Both routes agree wherever both apply.
    """
    if n < 1:
        raise ValueError("partial sums start at n = 1")
    if seq.order == 2 and seq.initial_terms == (0, 1):
        p, q = seq.recurrence.pq
        denom = q - p + 1
        if denom != 0:
            values = sequence_values(seq, n + 1)
            num = q * values[n] - values[n + 1] + 1
            quotient, rem = divmod(num, denom)
            if rem:  # cannot happen: the sum is an integer by construction
                raise ArithmeticError("closed-form partial sum was not integral")
            return PartialSumRecord(n, quotient)
    values = sequence_values(seq, n)
    return PartialSumRecord(n, sum(values[1:n + 1]))


# --------------------------------------------------------------------------
# symbolic linear forms
# --------------------------------------------------------------------------

_SYMBOLS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class LinearForm:
    """Integer coefficient vector over the symbolic initial values.

    Entry j is the coefficient of the (j+1)-st initial value, so for an
    order-2 recurrence ``LinearForm((5, 8))`` denotes 5a + 8b.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __add__(self, other: "LinearForm") -> "LinearForm":
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("cannot add forms of different lengths")
        return LinearForm(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, k: int) -> "LinearForm":
        return LinearForm(tuple(k * c for c in self.coeffs))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def evaluate(self, values: Sequence[int]) -> int:
        """Dot product with concrete initial values (first value = symbol a)."""
        if len(values) != len(self.coeffs):
            raise ValueError("need one value per coefficient")
        return sum(c * v for c, v in zip(self.coeffs, values))

    def multiple_of(self, other: "LinearForm") -> int | None:
        """The integer z with self == z * other, or None.

        A zero ``other`` never qualifies.  Only a single integer multiplier
        valid in every coordinate is accepted; no rational scaling.
        """
        if len(self.coeffs) != len(other.coeffs):
            return None
        if other.is_zero:
            return None
        z: int | None = None
        for s, t in zip(self.coeffs, other.coeffs):
            if t == 0:
                if s != 0:
                    return None
                continue
            q, r = divmod(s, t)
            if r != 0:
                return None
            if z is None:
                z = q
            elif z != q:
                return None
        return z

    def __str__(self) -> str:
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sym = _SYMBOLS[i] if i < len(_SYMBOLS) else f"x{i + 1}"
            if c == 1:
                text = sym
            elif c == -1:
                text = f"-{sym}"
            else:
                text = f"{c}{sym}"
            if parts and c > 0:
                parts.append(f"+{text}")
            else:
                parts.append(text)
        return "".join(parts) if parts else "0"


def _form_sequence(rec: RecurrenceSpec, upto: int) -> list[LinearForm]:
    """Forms for term indices 1..upto (index 0 of the list is a placeholder)."""
    k = rec.order
    forms: list[LinearForm] = [LinearForm((0,) * k)]
    for j in range(min(k, upto)):
        forms.append(LinearForm(tuple(1 if i == j else 0 for i in range(k))))
    while len(forms) <= upto:
        window = forms[-k:]
        nxt = LinearForm((0,) * k)
        for c, f in zip(rec.coefficients, reversed(window)):
            nxt = nxt + c * f
        forms.append(nxt)
    return forms


def term_form(rec: RecurrenceSpec, n: int) -> LinearForm:
    """Coefficients of the n-th term over the initial symbols, n >= 1."""
    if n < 1:
        raise ValueError("symbolic terms are indexed from 1")
    return _form_sequence(rec, n)[n]


def sum_form(rec: RecurrenceSpec, n: int) -> LinearForm:
    """Coefficients of the sum of terms 1..n over the initial symbols."""
    if n < 1:
        raise ValueError("symbolic sums start at n = 1")
    forms = _form_sequence(rec, n)
    total = LinearForm((0,) * rec.order)
    for f in forms[1:n + 1]:
        total = total + f
    return total


# --------------------------------------------------------------------------
# modular periods
# --------------------------------------------------------------------------


class PeriodInfo(NamedTuple):
    period: int
    residues: list[int]
    start: int


def period_mod(seq: SequenceDef, modulus: int) -> PeriodInfo:
    """Least period of the residue stream, found by state repetition.

    ``residues`` is one full cycle beginning at index ``start``; ``start``
    is 0 whenever the stream is purely periodic (always the case when the
    trailing recurrence coefficient is invertible mod ``modulus``).
    """
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    k = seq.order
    state = tuple(t % modulus for t in seq.initial_terms)
    stream = list(state)
    seen = {state: 0}
    idx = 0
    while True:
        nxt = seq.recurrence.step(stream) % modulus
        stream.append(nxt)
        idx += 1
        state = tuple(stream[idx:idx + k])
        if state in seen:
            start = seen[state]
            period = idx - start
            return PeriodInfo(period, stream[start:start + period], start)
        seen[state] = idx
