"""Working-precision policy and decimal-string plumbing.

Every numeric operation in the package takes a :class:`PrecisionContext`
carrying the requested decimal digits plus guard digits that absorb
cancellation. Operations run under ``mpmath`` scoped to the context's
working precision (digits + guard, plus a small evaluation margin local to
each algorithm), so nothing depends on the caller's global ``mp.dps``.

mpmath's precision state is process-global; a re-entrant lock serializes
the scoped-precision regions so concurrent callers at different precisions
cannot corrupt each other. Values themselves (``mpf``/``mpc``) are exact
binary objects and are safe to share once returned.
"""

from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass

from mpmath import mp

from .errors import ValidationError

_PREC_LOCK = threading.RLock()

#: Decimal digits a unit increase of n costs in the alternating binomial
#: sums: C(n, n/2) ~ 2^n grows at log10(2) digits per unit n.
BINOMIAL_DIGITS_PER_N = math.log10(2.0)


def default_guard(n_max: int) -> int:
    """Guard digits covering binomial-sum cancellation up to index n_max."""
    if n_max < 0:
        raise ValidationError("n_max must be >= 0, got %r" % (n_max,))
    return math.ceil(0.35 * n_max) + 20


@dataclass(frozen=True)
class PrecisionContext:
    """Requested precision plus guard digits; immutable.

    digits: decimal digits the caller wants to trust in results.
    guard:  extra digits absorbing cancellation and roundoff.
    """

    digits: int
    guard: int = 20

    def __post_init__(self):
        if self.digits < 15:
            raise ValidationError("digits must be >= 15, got %r" % (self.digits,))
        if self.guard < 0:
            raise ValidationError("guard must be >= 0, got %r" % (self.guard,))

    @property
    def working_digits(self) -> int:
        return self.digits + self.guard

    def plus(self, extra_digits: int) -> "PrecisionContext":
        """A context with the same guard and `extra_digits` more digits."""
        return PrecisionContext(self.digits + extra_digits, self.guard)

    @contextmanager
    def workprec(self, extra: int = 0):
        """Scope mpmath to working precision (+extra evaluation digits)."""
        with _PREC_LOCK:
            with mp.workdps(self.working_digits + extra):
                yield mp


@contextmanager
def local_dps(dps: int):
    """Scope mpmath to an explicit dps, under the shared lock."""
    with _PREC_LOCK:
        with mp.workdps(dps):
            yield mp


def format_significant(x, sig: int) -> str:
    """Decimal string of x with exactly `sig` significant digits.

    Stable under round-trips: parse_decimal(format_significant(x, d), ...)
    formatted again at d digits reproduces the same string.
    """
    from mpmath.libmp import to_str

    if sig < 1:
        raise ValidationError("sig must be >= 1, got %r" % (sig,))
    with local_dps(max(sig + 10, 15)):
        v = mp.mpf(x)
        return to_str(v._mpf_, sig, strip_zeros=False)


def parse_decimal(s: str, sig: int):
    """Parse a decimal string to an mpf faithful at `sig` digits."""
    with local_dps(max(sig + 10, 15)):
        return mp.mpf(s.strip())


def significant_digits_in(s: str) -> int:
    """Count the significant figures written in a decimal literal."""
    mantissa = s.strip().lower().split("e")[0].lstrip("+-")
    digits = mantissa.replace(".", "").lstrip("0")
    return len(digits) if digits else 1


def agreement_digits(a, b, cap: int) -> int:
    """Leading decimal digits on which a and b agree, capped at `cap`.

    Equal values (including both zero) count as full agreement at the cap;
    this is the degenerate identical-runs case of the accuracy probe.
    """
    with local_dps(cap + 15):
        a = mp.mpf(a)
        b = mp.mpf(b)
        if a == b:
            return cap
        scale = max(abs(a), abs(b))
        rel = abs(a - b) / scale
        est = int(mp.floor(-mp.log10(rel)))
    return max(0, min(cap, est))
