"""Arbitrary-precision kernel: zeta, log-gamma, the completed xi function,
exact combinatorics, and trapezoidal contour coefficient extraction.

zeta is evaluated by Euler-Maclaurin summation,

    zeta(s) = sum_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{j<=M} B_2j/(2j)! * (s)_{2j-1} * N^(-s-2j+1) + R_M,

with the classical remainder bound
|R_M| <= |next term| * |(s+2M+1)/(sigma+2M+1)|. N is seeded from the
target accuracy and M grows adaptively until the bound meets the target;
both are overridable. The same formula provides the analytic continuation
for sigma > -1 (all this package needs).

log-gamma uses the Stirling series after an upward recurrence shift,
which yields the principal branch everywhere off the cut (-inf, 0]; the
remainder is bounded by |B_{2J+2}| / ((2J+1)(2J+2)|w|^{2J+1}) *
sec(arg(w)/2)^(2J+2).

Contour extraction is the trapezoidal Cauchy formula
a_n = (1/M) sum_m f(c + r w_M^m) w_M^{-nm} / r^n, realized as a single
radix-2 FFT pass over the shared samples (node counts are powers of two).
"""

from __future__ import annotations

import math
import threading
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from mpmath import mp

from .errors import (
    AliasingWarning,
    DomainError,
    PoleError,
    PrecisionError,
    ValidationError,
)
from .precision import PrecisionContext, local_dps

_LOCK = threading.Lock()

# ---------------------------------------------------------------------------
# exact combinatorics
# ---------------------------------------------------------------------------

_BERN_EVEN: list[Fraction] = [Fraction(1)]  # B_0, B_2, B_4, ...


def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number B_k (convention B_1 = -1/2), memoized."""
    if k < 0:
        raise DomainError("bernoulli: k must be >= 0, got %r" % (k,))
    if k == 0:
        return Fraction(1)
    if k == 1:
        return Fraction(-1, 2)
    if k % 2 == 1:
        return Fraction(0)
    m = k // 2
    with _LOCK:
        while len(_BERN_EVEN) <= m:
            # sum_{r=0}^{n} C(n+1, r) B_r = 0 with n = 2*len, odd B_r>=3 zero
            n = 2 * len(_BERN_EVEN)
            acc = Fraction(n + 1, -2)  # C(n+1,1) * B_1
            for j, b in enumerate(_BERN_EVEN):
                acc += math.comb(n + 1, 2 * j) * b
            _BERN_EVEN.append(-acc / (n + 1))
        return _BERN_EVEN[m]


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; k > n gives 0."""
    if n < 0 or k < 0:
        raise DomainError("binomial: need n, k >= 0, got (%r, %r)" % (n, k))
    if k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# shared caches (keyed by working precision; values immutable)
# ---------------------------------------------------------------------------

_LN_CACHE: dict = {}        # (k, dps) -> mpf ln k
_ZETA_INT_CACHE: dict = {}  # (j, dps) -> mpf zeta(j)
_ROOT_CACHE: dict = {}      # (node_count, dps) -> tuple of e^{2 pi i m/M}


def _ln(k: int) -> "mp.mpf":
    key = (k, mp.dps)
    val = _LN_CACHE.get(key)
    if val is None:
        val = mp.log(k)
        _LN_CACHE[key] = val
    return val


def unit_roots(node_count: int) -> tuple:
    """e^{2 pi i m / M} for m = 0..M-1 at the current working precision."""
    key = (node_count, mp.dps)
    roots = _ROOT_CACHE.get(key)
    if roots is None:
        half = []
        for m in range(node_count // 2):
            frac = mp.mpf(2 * m) / node_count
            half.append(mp.mpc(mp.cospi(frac), mp.sinpi(frac)))
        roots = tuple(half + [-w for w in half])
        _ROOT_CACHE[key] = roots
    return roots


# ---------------------------------------------------------------------------
# zeta by Euler-Maclaurin
# ---------------------------------------------------------------------------

def _bern_over_fact(j: int) -> "mp.mpf":
    """B_2j / (2j)! at the current working precision."""
    b = bernoulli(2 * j)
    return mp.mpf(b.numerator) / (mp.mpf(b.denominator) * mp.factorial(2 * j))


def _zeta_em_core(s, eps, n_start: int, m_cap: int | None,
                  allow_growth: bool):
    """Euler-Maclaurin passes; returns (value, ok) at current precision."""
    N = n_start
    for _ in range(6 if allow_growth else 1):
        direct = mp.fsum(mp.exp(-s * _ln(k)) for k in range(2, N))
        one = mp.mpf(1)
        lnN = _ln(N)
        npow_s = mp.exp(-s * lnN)          # N^-s
        value = one + direct + npow_s * N / (s - 1) + npow_s / 2
        sigma = mp.re(s)
        poch = s                            # (s)_{2j-1}, j = 1
        npow = npow_s / N                   # N^(-s-2j+1), j = 1
        n2 = mp.mpf(N) ** (-2)
        corr = mp.mpf(0)
        prev_bound = None
        ok = False
        j = 1
        j_cap = m_cap if m_cap is not None else 4 * N + 50
        while j <= j_cap:
            corr += _bern_over_fact(j) * poch * npow
            poch_next = poch * (s + 2 * j - 1) * (s + 2 * j)
            npow_next = npow * n2
            # |R_j| <= |t_{j+1}| * |(s+2j+1)/(sigma+2j+1)|
            bound = abs(_bern_over_fact(j + 1) * poch_next * npow_next)
            bound *= abs(s + 2 * j + 1) / (sigma + 2 * j + 1)
            if bound <= eps:
                ok = True
                break
            if prev_bound is not None and bound > prev_bound:
                break  # past the divergence minimum; need larger N
            prev_bound = bound
            poch, npow = poch_next, npow_next
            j += 1
        if ok or not allow_growth:
            return value + corr, ok
        N = max(N + 8, (3 * N) // 2)
    return value + corr, False


def zeta(s, ctx: PrecisionContext, *, series_terms: int | None = None,
         correction_order: int | None = None):
    """zeta(s) for Re(s) > -1, s != 1, to the context's working digits.

    series_terms / correction_order override the automatic choice of the
    direct-sum length N and the correction order M.
    """
    wp = ctx.working_digits
    with local_dps(wp + 15):
        s = mp.mpmathify(s)
        real_input = isinstance(s, mp.mpf) or mp.im(s) == 0
        if real_input:
            s = mp.re(s)
        sigma = mp.re(s)
        if abs(s - 1) < mp.mpf(10) ** (-ctx.digits):
            raise PoleError("zeta: s within 10^-digits of the pole at 1")
        if sigma <= -1:
            raise DomainError(
                "zeta: Re(s) = %s <= -1 is outside the supported range"
                % mp.nstr(sigma, 6))
        eps = mp.mpf(10) ** (-(wp + 5))
        t = abs(mp.im(s))
        n_start = series_terms if series_terms is not None else max(
            8, int(math.ceil(0.54 * (wp + 5) + 0.25 * float(t) + 8)))
        value, ok = _zeta_em_core(s, eps, n_start, correction_order,
                                  allow_growth=series_terms is None)
        if not ok and correction_order is None:
            raise PrecisionError(
                "zeta: Euler-Maclaurin bound did not reach 10^-%d" % (wp + 5,))
        return +value if not real_input else mp.re(value)


def zeta_int(j: int, ctx: PrecisionContext):
    """zeta at an integer argument j >= 2; even j via the Bernoulli form."""
    if not isinstance(j, int) or j < 2:
        raise DomainError("zeta_int: need an integer j >= 2, got %r" % (j,))
    key = (j, ctx.working_digits)
    val = _ZETA_INT_CACHE.get(key)
    if val is not None:
        return val
    with local_dps(ctx.working_digits + 15):
        if j % 2 == 0:
            # zeta(2k) = (2 pi)^2k |B_2k| / (2 (2k)!)
            b = bernoulli(j)
            num = mp.mpf(abs(b.numerator))
            den = mp.mpf(b.denominator) * 2 * mp.factorial(j)
            val = (2 * mp.pi) ** j * num / den
        else:
            val = zeta(mp.mpf(j), ctx)
        val = +val
    _ZETA_INT_CACHE[key] = val
    return val


# ---------------------------------------------------------------------------
# log-gamma and xi
# ---------------------------------------------------------------------------

def log_gamma(s, ctx: PrecisionContext):
    """Principal-branch log Gamma(s) to the context's working digits."""
    wp = ctx.working_digits
    with local_dps(wp + 15):
        s = mp.mpmathify(s)
        real_input = isinstance(s, mp.mpf) or mp.im(s) == 0
        s = mp.re(s) if real_input else s
        if real_input and s <= 0 and mp.isint(s):
            raise PoleError("log_gamma: pole at non-positive integer %s" % s)
        if real_input and s <= 0:
            # keep the standard limit-from-above convention off the cut
            s = mp.mpc(s, 0)
            real_input = False
        eps = mp.mpf(10) ** (-(wp + 5))
        im = abs(mp.im(s))
        z_min = 0.40 * (wp + 5) + 10.0
        shift = max(0, int(math.ceil(z_min - mp.re(s))),
                    int(math.ceil(4 * im - mp.re(s))))
        w = s + shift
        lw = mp.log(w)
        total = (w - mp.mpf(1) / 2) * lw - w + mp.log(2 * mp.pi) / 2
        # sec(arg(w)/2)^(2j+2) factor of the remainder bound, as digits
        theta = abs(mp.arg(w))
        sec_log = -mp.log(mp.cos(theta / 2))
        w2 = w * w
        wpow = w  # w^(2j-1)
        j = 1
        ok = False
        while j < 8 * (wp + 20):
            b = bernoulli(2 * j)
            term = mp.mpf(b.numerator) / (mp.mpf(b.denominator)
                                          * (2 * j) * (2 * j - 1))
            total += term / wpow
            nb = bernoulli(2 * j + 2)
            bound = abs(mp.mpf(nb.numerator)) / (
                mp.mpf(nb.denominator) * (2 * j + 1) * (2 * j + 2)
                * abs(wpow) * abs(w2))
            bound *= mp.exp((2 * j + 4) * sec_log)
            if bound <= eps:
                ok = True
                break
            wpow *= w2
            j += 1
        if not ok:
            raise PrecisionError("log_gamma: Stirling bound did not converge")
        for i in range(shift):
            total -= mp.log(s + i)
        return mp.re(total) if real_input else +total


def xi(s, ctx: PrecisionContext):
    """Completed zeta, normalized so xi(1) = 1:
    xi(s) = 2 (s-1) pi^(-s/2) Gamma(1 + s/2) zeta(s), xi(s) = xi(1-s)."""
    with local_dps(ctx.working_digits + 15):
        s = mp.mpmathify(s)
        if s == 1:
            return mp.mpf(1)
        z = zeta(s, ctx)
        lg = log_gamma(1 + s / 2, ctx)
        val = 2 * (s - 1) * mp.exp(-(s / 2) * mp.log(mp.pi) + lg) * z
        real_input = isinstance(s, mp.mpf) or mp.im(s) == 0
        return mp.re(val) if real_input else +val


# ---------------------------------------------------------------------------
# contour sampling and coefficient extraction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContourSamples:
    """Function samples at equispaced nodes of a circle |w - center| = radius.

    values[m] = f(center + radius * e^{2 pi i m / M}), M a power of two.
    """

    center: object
    radius: object
    values: tuple = field(repr=False)

    def __post_init__(self):
        m = len(self.values)
        if m < 8 or m & (m - 1):
            raise ValidationError(
                "node_count must be a power of two >= 8, got %d" % m)
        if not self.radius > 0:
            raise ValidationError("radius must be positive")

    @property
    def node_count(self) -> int:
        return len(self.values)


def sample_circle(f: Callable, center, radius, node_count: int,
                  ctx: PrecisionContext) -> ContourSamples:
    """Sample f at the contour nodes, at the context's working precision."""
    with local_dps(ctx.working_digits + 15):
        center = mp.mpmathify(center)
        radius = mp.mpf(radius)
        roots = unit_roots(node_count)
        values = tuple(f(center + radius * w) for w in roots)
        return ContourSamples(center=center, radius=radius, values=values)


def _fft_pow2(vals: list, roots: Sequence) -> list:
    """In-order radix-2 DIT FFT with kernel e^{-2 pi i jk/M} (roots are the
    +2 pi table; conjugation is index reversal)."""
    n = len(vals)
    a = list(vals)
    j = 0
    for i in range(1, n):            # bit reversal permutation
        bit = n >> 1
        while j & bit:
            j ^= bit
            bit >>= 1
        j |= bit
        if i < j:
            a[i], a[j] = a[j], a[i]
    size = 2
    while size <= n:
        step = n // size
        half = size // 2
        for start in range(0, n, size):
            for k in range(half):
                # e^{-2 pi i k/size} = conj(roots[k*step])
                tw = mp.conj(roots[k * step])
                u = a[start + k]
                v = a[start + k + half] * tw
                a[start + k] = u + v
                a[start + k + half] = u - v
        size *= 2
    return a


def contour_coeffs(samples: ContourSamples, n_max: int,
                   ctx: PrecisionContext) -> list:
    """Taylor coefficients a_0..a_n_max of the sampled function about the
    contour center, all extracted in one FFT pass.

    Exact (up to roundoff) for polynomials of degree < node_count/2; warns
    if the trailing raw coefficients fail to decay (aliasing).
    """
    m = samples.node_count
    if n_max >= m // 2:
        raise ValidationError(
            "n_max must be < node_count/2 (%d >= %d)" % (n_max, m // 2))
    wp = ctx.working_digits
    with local_dps(wp + 15):
        roots = unit_roots(m)
        raw = _fft_pow2(list(samples.values), roots)
        inv_m = mp.mpf(1) / m
        raw = [b * inv_m for b in raw]
        top = max(abs(b) for b in raw)
        if top > 0:
            tail = max(abs(b) for b in raw[(7 * m) // 8:])
            thresh = top * mp.mpf(10) ** (-min(12, wp // 2))
            if tail > thresh:
                warnings.warn(AliasingWarning(
                    "trailing contour coefficients do not decay "
                    "(tail %s vs top %s); increase node_count or shrink "
                    "the radius" % (mp.nstr(tail, 3), mp.nstr(top, 3))))
        r = mp.mpf(samples.radius)
        out = []
        rpow = mp.mpf(1)
        for n in range(n_max + 1):
            out.append(raw[n] / rpow)
            rpow *= r
        return out
