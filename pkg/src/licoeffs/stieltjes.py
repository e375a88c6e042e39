"""Stieltjes constants by contour extraction, with convention handling
and a decimal-string cache.

zeta(1+w) - 1/w is entire, so its Taylor coefficients about w = 0 are the
constants in the Bombieri-Lagarias convention,

    zeta(1+w) = 1/w + sum_n gamma_n w^n,

and trapezoidal extraction on |w| = r converges exponentially in the node
count; one shared sample set yields every index at once. The classical
convention differs by gamma_n_classical = (-1)^n n! gamma_n_bl and appears
only at I/O boundaries; the computing pipeline is Bombieri-Lagarias
throughout.
"""

from __future__ import annotations

import enum
import hashlib
import math
import threading
from dataclasses import dataclass

from mpmath import mp

from .errors import (
    CacheFormatError,
    RealityCheckError,
    ValidationError,
)
from .kernel import sample_circle, contour_coeffs, zeta
from .precision import (
    PrecisionContext,
    format_significant,
    local_dps,
    parse_decimal,
    significant_digits_in,
)

#: Euler's constant to 18 digits, used only for construction sanity checks.
_EULER_SANITY = 0.577215664901532861


class Convention(enum.Enum):
    CLASSICAL = "classical"
    BOMBIERI_LAGARIAS = "bl"


@dataclass(frozen=True)
class GammaTable:
    """Stieltjes constants gamma_0..gamma_n_max in one convention.

    digits[n] declares how many leading decimal digits of values[n] are
    trustworthy; entries are independent (no monotonicity assumed).
    """

    convention: Convention
    values: tuple
    digits: tuple

    def __post_init__(self):
        if len(self.values) != len(self.digits):
            raise ValidationError("values and digits lengths differ")
        if not self.values:
            raise ValidationError("empty gamma table")
        if abs(float(self.values[0]) - _EULER_SANITY) > 1e-6:
            raise ValidationError(
                "gamma_0 must be Euler's constant in either convention")

    @property
    def n_max(self) -> int:
        return len(self.values) - 1


def _next_pow2(n: int) -> int:
    return 1 << max(3, (n - 1).bit_length())


_COEFF_MEMO: dict = {}
_GAMMA_LOCK = threading.Lock()


def _raw_coefficients(radius, node_count: int, ctx: PrecisionContext):
    """All extractable contour coefficients of zeta(1+w) - 1/w, shared
    across every n_max served by the same contour."""
    key = (float(radius), node_count, ctx.working_digits)
    with _GAMMA_LOCK:
        hit = _COEFF_MEMO.get(key)
    if hit is not None:
        return hit

    def f(w):
        return zeta(1 + w, ctx) - 1 / w

    samples = sample_circle(f, 0, radius, node_count, ctx)
    coeffs = tuple(contour_coeffs(samples, node_count // 2 - 1, ctx))
    with _GAMMA_LOCK:
        _COEFF_MEMO[key] = coeffs
    return coeffs


def gamma_bl(n_max: int, ctx: PrecisionContext, *, radius=1.0,
             node_count: int | None = None) -> GammaTable:
    """Bombieri-Lagarias Stieltjes constants gamma_0..gamma_n_max.

    Samples zeta(1+w) - 1/w on |w| = radius (default 1, which keeps
    Re(1+w) >= 0 and puts no r^-n amplification into the extraction) and
    reads all coefficients from one discrete transform. Each coefficient
    must come out real; its imaginary residue doubles as the noise
    estimate behind the per-entry declared digits.
    """
    if n_max < 0:
        raise ValidationError("n_max must be >= 0, got %r" % (n_max,))
    if node_count is None:
        node_count = _next_pow2(max(32, 4 * (n_max + 1)))
    if node_count < 4 * (n_max + 1):
        raise ValidationError(
            "node_count %d < 4*(n_max+1) = %d" % (node_count, 4 * (n_max + 1)))
    wp = ctx.working_digits
    coeffs = _raw_coefficients(radius, node_count, ctx)[:n_max + 1]
    with local_dps(wp + 15):
        reality_tol = mp.mpf(10) ** (-(ctx.digits // 2))
        noise_floor = mp.mpf(10) ** (-(wp - 3))
        values = []
        digits = []
        for n, a in enumerate(coeffs):
            im = abs(mp.im(a))
            if im >= reality_tol:
                raise RealityCheckError(
                    "imaginary residue %s at n=%d exceeds 10^-%d; "
                    "increase node_count or check the radius"
                    % (mp.nstr(im, 3), n, ctx.digits // 2))
            v = mp.re(a)
            noise = max(im, noise_floor)
            if v == 0:
                d = 0
            else:
                d = int(mp.floor(mp.log10(abs(v) / noise)))
            values.append(+v)
            digits.append(max(0, min(wp, d)))
    return GammaTable(Convention.BOMBIERI_LAGARIAS, tuple(values),
                      tuple(digits))


def convert_convention(table: GammaTable, target: Convention) -> GammaTable:
    """Map a table entrywise between conventions using exact factorials:
    gamma_n_bl = ((-1)^n / n!) gamma_n_classical."""
    if table.convention is target:
        return table
    dps = max(table.digits) + 25
    with local_dps(dps):
        out = []
        fact = 1
        for n, v in enumerate(table.values):
            if n > 0:
                fact *= n
            sign = -1 if n % 2 else 1
            if target is Convention.CLASSICAL:
                out.append(+(v * sign * fact))
            else:
                out.append(+(v * sign / fact))
    return GammaTable(target, tuple(out), table.digits)


# ---------------------------------------------------------------------------
# cache file format:
#   li-gamma-cache v1
#   convention=<classical|bl>
#   count=<N>
#   # sha256=<hex>            (optional comment; hash of the entry lines)
#   <n> TAB <decimal value> TAB <declared digits>
# ---------------------------------------------------------------------------

_MAGIC = "li-gamma-cache v1"


def _entry_lines(table: GammaTable) -> list[str]:
    lines = []
    for n, (v, d) in enumerate(zip(table.values, table.digits)):
        lines.append("%d\t%s\t%d" % (n, format_significant(v, max(1, d)), d))
    return lines


def save_cache(table: GammaTable, path) -> None:
    """Write the table as decimal strings at each entry's declared digits."""
    entries = _entry_lines(table)
    digest = hashlib.sha256("\n".join(entries).encode("ascii")).hexdigest()
    with open(path, "w", encoding="ascii") as fh:
        fh.write(_MAGIC + "\n")
        fh.write("convention=%s\n" % table.convention.value)
        fh.write("count=%d\n" % len(table.values))
        fh.write("# sha256=%s\n" % digest)
        for line in entries:
            fh.write(line + "\n")


def load_cache(path) -> GammaTable:
    """Read a cache file back; validates header, count, and checksum."""
    with open(path, "r", encoding="ascii") as fh:
        raw = fh.read().splitlines()
    if not raw or raw[0].strip() != _MAGIC:
        raise CacheFormatError("malformed-header",
                               "not a li-gamma-cache v1 file: %s" % (path,))
    convention = None
    count = None
    declared_digest = None
    entries = []
    for lineno, line in enumerate(raw[1:], start=2):
        stripped = line.strip()
        if stripped.startswith("#"):
            if stripped.startswith("# sha256="):
                declared_digest = stripped[len("# sha256="):].strip()
            continue
        if not stripped:
            continue
        if stripped.startswith("convention="):
            value = stripped.split("=", 1)[1]
            try:
                convention = Convention(value)
            except ValueError:
                raise CacheFormatError(
                    "malformed-header",
                    "line %d: unknown convention %r" % (lineno, value))
            continue
        if stripped.startswith("count="):
            try:
                count = int(stripped.split("=", 1)[1])
            except ValueError:
                raise CacheFormatError(
                    "malformed-header", "line %d: bad count" % lineno)
            continue
        entries.append((lineno, line))
    if convention is None:
        raise CacheFormatError("convention-missing",
                               "cache file has no convention= line")
    if count is None:
        raise CacheFormatError("malformed-header",
                               "cache file has no count= line")
    if declared_digest is not None:
        digest = hashlib.sha256(
            "\n".join(line for _, line in entries).encode("ascii")).hexdigest()
        if digest != declared_digest:
            raise CacheFormatError("checksum-mismatch",
                                   "entry lines do not match the checksum")
    if len(entries) != count:
        raise CacheFormatError(
            "entry-count",
            "expected %d entries, found %d" % (count, len(entries)))
    values = []
    digits = []
    for expect_n, (lineno, line) in enumerate(entries):
        parts = line.split("\t")
        if len(parts) != 3:
            raise CacheFormatError("bad-entry",
                                   "line %d: expected 3 tab fields" % lineno)
        try:
            n = int(parts[0])
            d = int(parts[2])
            v = parse_decimal(parts[1], max(significant_digits_in(parts[1]),
                                            d))
        except (ValueError, ArithmeticError):
            raise CacheFormatError("bad-entry",
                                   "line %d: unparsable entry" % lineno)
        if n != expect_n:
            raise CacheFormatError("bad-entry",
                                   "line %d: index %d out of order" %
                                   (lineno, n))
        values.append(v)
        digits.append(d)
    return GammaTable(convention, tuple(values), tuple(digits))
