"""Truncated zero-sum oracle: lambda_n = sum_rho (1 - (1 - 1/rho)^n).

Ordinates come from published tables (all known zeros lie on the critical
line, so rho = 1/2 + i t and conjugate pairs combine to twice the real
part). This is a consistency check against the main pipeline, not an
RH-independent computation.

For a pair at height t the term is 2(1 - cos(n phi)) with
phi = 2 atan(1/(2t)) <= 1/t, hence bounded by n^2/t^2; integrating that
against the zero-counting density (1/2 pi) log(t/2 pi) dt gives the tail
bound

    tail(T) <= 2 * (n^2 / (2 pi T)) (log(T / 2 pi) + 1),

where the factor 2 absorbs the density fluctuation; the bound is
validated empirically by doubling the truncation height.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from mpmath import mp

from ..errors import DomainError, ZeroTableError
from ..precision import (
    PrecisionContext,
    local_dps,
    parse_decimal,
    significant_digits_in,
)

#: Ordinate of the first nontrivial zero, for ingest sanity checking.
_FIRST_ORDINATE = 14.134725


@dataclass(frozen=True)
class ZeroTable:
    """Ascending ordinates t_k of zeros 1/2 + i t_k, starting at the first."""

    ordinates: tuple
    source_digits: int

    def __post_init__(self):
        if not self.ordinates:
            raise ZeroTableError("empty zero table")
        if abs(float(self.ordinates[0]) - _FIRST_ORDINATE) > 1e-3:
            raise ZeroTableError(
                "first ordinate %s is not the first zeta zero (14.134725...)"
                % mp.nstr(self.ordinates[0], 10))
        for i in range(1, len(self.ordinates)):
            if not self.ordinates[i] > self.ordinates[i - 1]:
                raise ZeroTableError(
                    "ordinates not strictly ascending at position %d" % i)

    def __len__(self) -> int:
        return len(self.ordinates)

    def truncated(self, count: int) -> "ZeroTable":
        if not 1 <= count <= len(self.ordinates):
            raise ZeroTableError("cannot truncate to %d of %d entries"
                                 % (count, len(self.ordinates)))
        return ZeroTable(self.ordinates[:count], self.source_digits)


def parse_zero_table(stream) -> ZeroTable:
    """Read one decimal ordinate per line; '#' starts a comment.

    Accepts an open text stream or an iterable of lines. Raises
    ZeroTableError with the offending line number on bad input."""
    ordinates = []
    digits = None
    for lineno, line in enumerate(stream, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            value = parse_decimal(text, significant_digits_in(text))
        except (ValueError, ArithmeticError):
            raise ZeroTableError("line %d: unparsable ordinate %r"
                                 % (lineno, text))
        if value <= 0:
            raise ZeroTableError("line %d: ordinate must be positive"
                                 % lineno)
        if ordinates and not value > ordinates[-1]:
            raise ZeroTableError(
                "line %d: ordinates must be strictly ascending" % lineno)
        ordinates.append(value)
        d = significant_digits_in(text)
        digits = d if digits is None else min(digits, d)
    if not ordinates:
        raise ZeroTableError("no ordinates found in zero table")
    return ZeroTable(tuple(ordinates), digits)


class ZeroSumResult(NamedTuple):
    value: object      # truncated sum
    tail_bound: object # bound on the omitted tail


def tail_bound_at(n: int, height) -> object:
    """Bound on the zero-sum tail omitted above the given height."""
    with local_dps(30):
        t = mp.mpf(height)
        return +(2 * (n ** 2 / (2 * mp.pi * t))
                 * (mp.log(t / (2 * mp.pi)) + 1))


def lambda_from_zeros(n: int, zeros: ZeroTable,
                      ctx: PrecisionContext) -> ZeroSumResult:
    """Truncated lambda_n = sum_k 2 Re(1 - (1 - 1/(1/2 + i t_k))^n)."""
    if n < 0:
        raise DomainError("n must be >= 0, got %r" % (n,))
    if n == 0:
        zero = mp.mpf(0)
        return ZeroSumResult(zero, zero)
    with ctx.workprec(10):
        half = mp.mpf(1) / 2
        terms = [2 * mp.re(1 - (1 - 1 / mp.mpc(half, t)) ** n)
                 for t in zeros.ordinates]
        value = +mp.fsum(terms)
    return ZeroSumResult(value, tail_bound_at(n, zeros.ordinates[-1]))
