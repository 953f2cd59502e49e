"""The sum trick, decided for whole recurrence families at once.

A "common trick" for a recurrence and a count n is a pair (m, z) such that
for *every* sequence obeying the recurrence, the sum of the first n terms
equals z times the m-th term.  Coefficientwise that is exactly
``sum_form(rec, n) == z * term_form(rec, m)``, and for order-2 recurrences
it is equivalent (by linearity over the standard basis pair) to checking
the two concrete sums S_n = z*U(m) and S_{n-1} = z*U(m-1) on the first-kind
sequence.  Certificates carry both pieces of evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import (
    LinearForm,
    RecurrenceSpec,
    SequenceDef,
    sum_form,
    term_form,
    _form_sequence,
)

__all__ = [
    "TrickCertificate",
    "TrickResult",
    "NoTrickError",
    "find_common_trick",
    "common_trick_range",
    "perform_trick",
    "nnacci_trick_scan",
    "verify_nnacci_theorem",
]


@dataclass(frozen=True)
class TrickCertificate:
    """Evidence that summing the first n terms is z times the m-th term for
    every sequence sharing the recurrence.

    ``trivial`` marks the count-one identity (the sum of one term is that
    term), which exists for every recurrence and so says nothing about the
    family.  ``degenerate_zero`` marks a sum form that is identically zero
    (z = 0, m unconstrained).  ``periodic_m`` is set when the term forms
    repeat, so the certified index recurs at unboundedly many m.
    """

    n: int
    m: int | None
    z: int
    sum_form: LinearForm
    term_form: LinearForm | None
    trivial: bool = False
    degenerate_zero: bool = False
    periodic_m: bool = False
    evidence: tuple[str, ...] = ("proportional_forms",)


class TrickResult(NamedTuple):
    total: int
    m: int | None
    mth_term: int | None
    z: int


class NoTrickError(ValueError):
    """No common trick exists for the requested count."""

    def __init__(self, n: int, nearby: list[int]):
        self.n = n
        self.nearby = nearby
        hint = f"; nearby counts with one: {nearby}" if nearby else ""
        super().__init__(f"no common trick for n={n}{hint}")


def _first_kind_values(rec: RecurrenceSpec, upto: int) -> list[int]:
    values = [0, 1]
    while len(values) <= upto:
        values.append(rec.step(values))
    return values


def _two_basis_agrees(rec: RecurrenceSpec, n: int, m: int, z: int) -> bool:
    """Concrete re-check on the first-kind sequence (order 2 only):
    S_n = z*U(m) and S_{n-1} = z*U(m-1)."""
    u = _first_kind_values(rec, max(n, m) + 1)
    s_n = sum(u[1:n + 1])
    s_prev = sum(u[1:n])
    return s_n == z * u[m] and s_prev == z * u[m - 1]


def find_common_trick(rec: RecurrenceSpec, n: int,
                      m_bound: int | None = None) -> TrickCertificate | None:
    """The common-trick certificate with the largest m <= m_bound, if any.

    ``m_bound`` defaults to n + 2, which is enough for every pattern the
    scan is used to validate (a two-term sum already needs the third term).
    Zero term forms are never acceptable divisors; a zero *sum* form is
    returned as the flagged degenerate certificate.
    """
    if n < 1:
        raise ValueError("counts start at n = 1")
    if m_bound is None:
        m_bound = n + 2
    if m_bound < 1:
        raise ValueError("m_bound must be positive")

    forms = _form_sequence(rec, max(m_bound, n))
    total = LinearForm((0,) * rec.order)
    for f in forms[1:n + 1]:
        total = total + f

    if total.is_zero:
        # the zero form itself is the evidence: the sum vanishes for every
        # sequence with this recurrence, with no designated term
        return TrickCertificate(
            n=n, m=None, z=0, sum_form=total, term_form=None,
            degenerate_zero=True, periodic_m=True,
            evidence=("proportional_forms",),
        )

    matches = [m for m in range(1, m_bound + 1)
               if total.multiple_of(forms[m]) is not None]
    if not matches:
        return None
    m = matches[-1]
    z = total.multiple_of(forms[m])
    assert z is not None
    periodic = len(matches) > 1 and _forms_periodic(forms, rec.order)
    return TrickCertificate(
        n=n, m=m, z=z, sum_form=total, term_form=forms[m],
        trivial=(n == 1 and m == 1 and z == 1 and len(matches) == 1),
        periodic_m=periodic,
        evidence=_evidence(rec, n, m, z),
    )


def _evidence(rec: RecurrenceSpec, n: int, m: int, z: int) -> tuple[str, ...]:
    if rec.order != 2:
        return ("proportional_forms",)
    if not _two_basis_agrees(rec, n, m, z):
        # linearity over the unimodular basis {U, shifted U} makes the two
        # routes equivalent; disagreement would mean a bug, not mathematics
        raise AssertionError("two-basis check disagreed with form proportionality")
    return ("proportional_forms", "two_basis")


def _forms_periodic(forms: list[LinearForm], order: int) -> bool:
    seen = set()
    for j in range(1, len(forms) - order + 1):
        state = tuple(forms[j + i].coeffs for i in range(order))
        if state in seen:
            return True
        seen.add(state)
    return False


def common_trick_range(rec: RecurrenceSpec, n_max: int,
                       m_bound: int | None = None) -> list[tuple[int, TrickCertificate | None]]:
    """(n, certificate-or-None) for every n up to n_max."""
    return [(n, find_common_trick(rec, n, m_bound)) for n in range(1, n_max + 1)]


def perform_trick(initials: Sequence[int], rec: RecurrenceSpec, n: int) -> TrickResult:
    """Run the trick on a concrete sequence whose terms 1..k are ``initials``.

    Requires a certificate for (rec, n); otherwise NoTrickError reports the
    nearby counts that do have one.  The returned tuple satisfies
    ``total == z * mth_term`` exactly (degenerate zero-sum tricks return
    total 0 with no designated term).
    """
    initials = tuple(int(v) for v in initials)
    if len(initials) != rec.order:
        raise ValueError("need exactly one starting value per recurrence order")
    cert = find_common_trick(rec, n)
    if cert is None:
        nearby = [j for j, c in common_trick_range(rec, min(n + 6, n * 2 + 6))
                  if c is not None and not c.trivial and abs(j - n) <= 6]
        raise NoTrickError(n, nearby)

    values = list(initials)
    top = max(n, cert.m or 0)
    while len(values) < top:
        values.append(rec.step(values))
    total = sum(values[:n])

    if cert.degenerate_zero:
        return TrickResult(0, None, None, 0)
    mth = values[cert.m - 1]
    assert total == cert.z * mth
    return TrickResult(total, cert.m, mth, cert.z)


def nnacci_trick_scan(order: int, n_max: int) -> list[TrickCertificate]:
    """All nontrivial certificates for the order-k nacci recurrence.

    The count-one identity is omitted: it exists for every recurrence.
    """
    if order < 2:
        raise ValueError("n-nacci order must be at least 2")
    rec = RecurrenceSpec.nnacci(order)
    out = []
    for n in range(1, n_max + 1):
        cert = find_common_trick(rec, n)
        if cert is not None and not cert.trivial:
            out.append(cert)
    return out


def verify_nnacci_theorem(order: int) -> bool:
    """Coefficientwise check of the three nacci sum identities: the first k
    terms sum to term k+1, the first k+1 to twice term k+1, and the first
    2k+2 to four times term 2k+1."""
    if order < 2:
        raise ValueError("n-nacci order must be at least 2")
    rec = RecurrenceSpec.nnacci(order)
    k = order
    return (
        sum_form(rec, k) == term_form(rec, k + 1)
        and sum_form(rec, k + 1) == 2 * term_form(rec, k + 1)
        and sum_form(rec, 2 * k + 2) == 4 * term_form(rec, 2 * k + 1)
    )
