"""The main derivation: power-series exponentiation triangle -> eta
sequence -> oscillation, trend by the binomial/zeta sum, assembly, the
asymptotic trend model, the positivity report, and the two-precision
accuracy probe.

The decomposition computed here is

    lambda_n = trend_n + osc_n
    trend_n  = 1 - (log(4 pi) + gamma) n/2
               + sum_{j=2}^{n} (-1)^j C(n,j) (1 - 2^-j) zeta(j)
    osc_n    = - sum_{j=1}^{n} C(n,j) eta_{j-1}

with eta_n = (n+1) sum_{k=0}^{n} ((-1)^(k+1)/(k+1)) c_{n-k}^{(k+1)} and
the c triangle built from the Bombieri-Lagarias Stieltjes constants by

    c_0^(k) = gamma_0^k
    c_m^(k) = (1/(m gamma_0)) sum_{i<m} [km - (k+1)i] gamma_{m-i} c_i^(k).

Both binomial sums cancel catastrophically (C(n, n/2) ~ 2^n, about 0.30
decimal digits per unit n), so the operations estimate the largest
intermediate term up front and refuse to run with insufficient guard
digits rather than return silently wrong values. Final accuracy is
measured, not modeled: the probe reruns the pipeline 30 digits higher and
counts agreeing leading digits per index.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from mpmath import mp

from .errors import (
    ConventionError,
    CoverageError,
    DivergenceWarning,
    PrecisionError,
    ValidationError,
)
from .kernel import binomial, bernoulli, zeta_int
from .precision import (
    BINOMIAL_DIGITS_PER_N,
    PrecisionContext,
    agreement_digits,
    local_dps,
)
from .stieltjes import Convention, GammaTable, gamma_bl

#: Safety margin (decimal digits) demanded beyond the cancellation estimate.
_CANCELLATION_MARGIN = 5

OESTERLE_CAVEAT = (
    'not numerical evidence for RH: if the first N zeros lie on the '
    'critical line, "the Li positivity should hold" only for about the '
    'first N^2 coefficients (Oesterle; see Biane, Pitman & Yor, '
    'Bull. Amer. Math. Soc. 38 (2001), p. 441)'
)


@dataclass(frozen=True)
class CTriangle:
    """Coefficients c_m^(k) of the k-th power of the Stieltjes series,
    stored only on the band m + k <= bound + 1 that the eta sums read."""

    bound: int
    columns: tuple = field(repr=False)  # columns[k-1][m], k = 1..bound+1
    dps: int = 15                       # precision the entries were built at

    def entry(self, m: int, k: int):
        if k < 1 or m < 0 or m + k > self.bound + 1:
            raise CoverageError(
                "c triangle of bound %d has no entry (m=%d, k=%d)"
                % (self.bound, m, k))
        return self.columns[k - 1][m]


@dataclass(frozen=True)
class EtaTable:
    """eta_0..eta_n_max with optionally probed per-entry digits."""

    values: tuple
    digits: tuple | None = None

    @property
    def n_max(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class LiRow:
    """One index of the decomposition; total = trend + osc as stored."""

    n: int
    trend: object
    osc: object
    total: object
    est_digits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("LiRow index must be >= 1")
        if self.est_digits < 0:
            raise ValidationError("est_digits must be >= 0")


def build_c_triangle(gamma: GammaTable, bound: int) -> CTriangle:
    """Fill the band m + k <= bound + 1 of the exponentiation triangle."""
    if gamma.convention is not Convention.BOMBIERI_LAGARIAS:
        raise ConventionError(
            "c triangle needs the Bombieri-Lagarias convention, got %s"
            % gamma.convention.value)
    if gamma.n_max < bound:
        raise CoverageError(
            "gamma table covers n <= %d, need %d" % (gamma.n_max, bound))
    if bound < 0:
        raise ValidationError("bound must be >= 0")
    g = gamma.values
    dps = max(gamma.digits) + 15
    with local_dps(dps):
        inv_g0 = 1 / g[0]
        columns = []
        for k in range(1, bound + 2):
            width = bound + 2 - k  # m = 0..bound+1-k
            col = [g[0] ** k]
            for m in range(1, width):
                acc = mp.fsum(
                    (k * m - (k + 1) * i) * g[m - i] * col[i]
                    for i in range(m))
                col.append(acc * inv_g0 / m)
            columns.append(tuple(col))
        return CTriangle(bound, tuple(columns), dps)


def eta_from_c(c: CTriangle, n_max: int) -> EtaTable:
    """eta_n = (n+1) sum_{k=0}^{n} ((-1)^(k+1)/(k+1)) c_{n-k}^{(k+1)}."""
    if n_max > c.bound:
        raise CoverageError(
            "triangle bound %d cannot produce eta_%d" % (c.bound, n_max))
    values = []
    with local_dps(c.dps):
        for n in range(n_max + 1):
            terms = []
            for k in range(n + 1):
                t = c.entry(n - k, k + 1) / (k + 1)
                terms.append(-t if k % 2 == 0 else t)
            values.append((n + 1) * mp.fsum(terms))
    return EtaTable(tuple(values))


def _require_guard(ctx: PrecisionContext, needed_digits: float, what: str):
    if needed_digits + _CANCELLATION_MARGIN > ctx.guard:
        raise PrecisionError(
            "%s: cancellation needs about %d guard digits, context has %d "
            "(use guard >= %d)"
            % (what, math.ceil(needed_digits), ctx.guard,
               math.ceil(needed_digits) + _CANCELLATION_MARGIN))


def lambda_osc(eta: EtaTable, n_max: int, ctx: PrecisionContext) -> list:
    """Oscillating parts osc_1..osc_n_max from the eta sequence."""
    if eta.n_max < n_max - 1:
        raise CoverageError(
            "eta table covers n <= %d, need %d" % (eta.n_max, n_max - 1))
    # largest intermediate term, in digits, for the worst row
    worst = 0.0
    for j in range(1, n_max + 1):
        e = eta.values[j - 1]
        if e == 0:
            continue
        size = math.log10(binomial(n_max, j)) + float(mp.mag(e)) * math.log10(2)
        worst = max(worst, size)
    _require_guard(ctx, worst, "lambda_osc(n_max=%d)" % n_max)
    out = []
    with ctx.workprec(15):
        for n in range(1, n_max + 1):
            terms = [binomial(n, j) * eta.values[j - 1]
                     for j in range(1, n + 1)]
            out.append(-mp.fsum(terms))
    return out


def lambda_trend(n_max: int, ctx: PrecisionContext) -> list:
    """Trend parts trend_1..trend_n_max via the binomial/zeta sum.

    Fails fast if the guard digits cannot absorb the binomial cancellation;
    verifies the strict growth of the result for n >= 4 (the sequence dips
    to its minimum near n ~ 3.5 before climbing)."""
    if n_max < 1:
        raise ValidationError("n_max must be >= 1")
    worst = math.log10(binomial(n_max, n_max // 2)) + math.log10(1.7)
    _require_guard(ctx, worst, "lambda_trend(n_max=%d)" % n_max)
    zetas = {j: zeta_int(j, ctx) for j in range(2, n_max + 1)}
    out = []
    with ctx.workprec(15):
        const = mp.log(4 * mp.pi) + mp.euler
        factors = {j: (1 - mp.mpf(2) ** (-j)) * zetas[j]
                   for j in range(2, n_max + 1)}
        for n in range(1, n_max + 1):
            terms = [mp.mpf(1), -const * n / 2]
            for j in range(2, n + 1):
                t = binomial(n, j) * factors[j]
                terms.append(t if j % 2 == 0 else -t)
            out.append(mp.fsum(terms))
    for i in range(3, len(out)):
        if not out[i] > out[i - 1]:
            raise PrecisionError(
                "trend failed to grow at n=%d: cancellation has destroyed "
                "the working precision" % (i + 1,))
    return out


def assemble(trend: list, osc: list,
             est_digits: list | None = None) -> list:
    """Pair the parts into LiRows; total is the stored sum trend + osc."""
    if len(trend) != len(osc):
        raise ValidationError(
            "trend and oscillation lengths differ (%d vs %d)"
            % (len(trend), len(osc)))
    if est_digits is not None and len(est_digits) != len(trend):
        raise ValidationError("est_digits length mismatch")
    rows = []
    for i, (t, o) in enumerate(zip(trend, osc)):
        est = 0 if est_digits is None else est_digits[i]
        total = mp.fadd(t, o, exact=True)
        rows.append(LiRow(n=i + 1, trend=t, osc=o, total=total,
                          est_digits=est))
    return rows


# ---------------------------------------------------------------------------
# asymptotic trend model
# ---------------------------------------------------------------------------

#: Exponents k of the non-vanishing correction terms -B_k/(2k n^(k-1)):
#: k = 1 gives +1/4, then even k: -1/(24n), +1/(240n^3), -1/(504n^5), ...
def _correction_exponents(terms: int) -> list[int]:
    if terms <= 0:
        return []
    return [1] + [2 * i for i in range(1, terms)]


def trend_asymptotic(n: int, terms: int, ctx: PrecisionContext):
    """Asymptotic trend model a(1 + n ln n) + c n - sum_k B_k/(2k n^(k-1))
    with a = 1/2 and c = (gamma - 1 - ln 2 pi)/2 = -1.130330701...

    `terms` counts the non-vanishing correction terms; the series is
    formally divergent, so requesting more terms than the smallest-term
    cutoff only adds noise (a DivergenceWarning is emitted)."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    if terms < 0:
        raise ValidationError("terms must be >= 0")
    with ctx.workprec(15):
        nn = mp.mpf(n)
        c = (mp.euler - 1 - mp.log(2 * mp.pi)) / 2
        value = (1 + nn * mp.log(nn)) / 2 + c * nn
        sizes = []
        for k in _correction_exponents(terms):
            b = bernoulli(k)
            term = (mp.mpf(b.numerator) / b.denominator
                    / (2 * k) / nn ** (k - 1))
            sizes.append(abs(term))
            value -= term
        if sizes:
            smallest = min(range(len(sizes)), key=sizes.__getitem__)
            if smallest < len(sizes) - 1:
                warnings.warn(DivergenceWarning(
                    "correction term %d is past the smallest-term cutoff %d "
                    "for n=%d" % (len(sizes), smallest + 1, n)))
        return +value


# ---------------------------------------------------------------------------
# positivity report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PositivityReport:
    checked: int
    violations: tuple          # (n, total) pairs with total < 0
    trend_violations: tuple    # n with -osc > trend
    min_margin: object         # min_n (trend + osc), None if empty
    min_margin_n: int | None
    caveat: str = OESTERLE_CAVEAT

    @property
    def clean(self) -> bool:
        return not self.violations and not self.trend_violations

    def render(self) -> str:
        lines = []
        if self.checked == 0:
            lines.append("positivity: no rows checked")
        else:
            lines.append(
                "positivity: %d rows checked, %d total<0, %d with "
                "-oscillation > trend" % (self.checked, len(self.violations),
                                          len(self.trend_violations)))
            for n, total in self.violations:
                lines.append("  VIOLATION lambda_%d = %s < 0"
                             % (n, mp.nstr(total, 12)))
            for n in self.trend_violations:
                lines.append("  VIOLATION -osc_%d > trend_%d" % (n, n))
            if self.min_margin is not None:
                lines.append("  min margin lambda_%d = %s"
                             % (self.min_margin_n,
                                mp.nstr(self.min_margin, 12)))
        lines.append("note: " + self.caveat)
        return "\n".join(lines)


def positivity_report(rows: list) -> PositivityReport:
    """Check lambda_n > 0 and -osc_n <= trend_n over the given rows."""
    violations = []
    trend_violations = []
    min_margin = None
    min_n = None
    for row in rows:
        if row.total < 0:
            violations.append((row.n, row.total))
        if -row.osc > row.trend:
            trend_violations.append(row.n)
        if min_margin is None or row.total < min_margin:
            min_margin = row.total
            min_n = row.n
    return PositivityReport(
        checked=len(rows), violations=tuple(violations),
        trend_violations=tuple(trend_violations),
        min_margin=min_margin, min_margin_n=min_n)


# ---------------------------------------------------------------------------
# pipeline and accuracy probe
# ---------------------------------------------------------------------------

def _pipeline_parts(n_max: int, ctx: PrecisionContext, radius,
                    node_count, gamma_table):
    if gamma_table is None:
        gamma_table = gamma_bl(max(n_max - 1, 0), ctx, radius=radius,
                               node_count=node_count)
    elif gamma_table.convention is not Convention.BOMBIERI_LAGARIAS:
        raise ConventionError("pipeline needs a Bombieri-Lagarias table")
    bound = n_max - 1
    if gamma_table.n_max < bound:
        raise CoverageError(
            "gamma table covers n <= %d, pipeline needs %d"
            % (gamma_table.n_max, bound))
    triangle = build_c_triangle(gamma_table, bound)
    eta = eta_from_c(triangle, bound)
    osc = lambda_osc(eta, n_max, ctx)
    trend = lambda_trend(n_max, ctx)
    return gamma_table, eta, osc, trend


@dataclass(frozen=True)
class ProbeReport:
    """Per-index agreement digits between the base and elevated runs."""

    lambda_digits: tuple
    osc_digits: tuple
    eta_digits: tuple

    def slope(self) -> float:
        """Least-squares digits-per-index slope of lambda agreement."""
        ys = self.lambda_digits
        n = len(ys)
        if n < 2:
            return 0.0
        xs = range(1, n + 1)
        mx = (n + 1) / 2
        my = sum(ys) / n
        num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
        den = sum((x - mx) ** 2 for x in xs)
        return num / den

    def window_means(self, window: int = 10) -> list[float]:
        ys = self.lambda_digits
        return [sum(ys[i:i + window]) / window
                for i in range(len(ys) - window + 1)]


def accuracy_probe(n_max: int, ctx: PrecisionContext,
                   ctx_plus: PrecisionContext, *, radius=1.0,
                   node_count: int | None = None,
                   _parts_lo=None) -> ProbeReport:
    """Run the pipeline at two precisions and count agreeing digits.

    The elevated context must carry at least 30 more digits so the second
    run can serve as reference for the first."""
    if ctx_plus.digits < ctx.digits + 30:
        raise ValidationError(
            "probe context must have at least digits+30 (%d < %d)"
            % (ctx_plus.digits, ctx.digits + 30))
    if _parts_lo is None:
        _parts_lo = _pipeline_parts(n_max, ctx, radius, node_count, None)
    _, eta_lo, osc_lo, trend_lo = _parts_lo
    _, eta_hi, osc_hi, trend_hi = _pipeline_parts(
        n_max, ctx_plus, radius, node_count, None)
    cap = ctx.working_digits
    lam = []
    osc_d = []
    for i in range(n_max):
        lam.append(agreement_digits(mp.fadd(trend_lo[i], osc_lo[i], exact=True),
                                    mp.fadd(trend_hi[i], osc_hi[i], exact=True),
                                    cap))
        osc_d.append(agreement_digits(osc_lo[i], osc_hi[i], cap))
    eta_d = [agreement_digits(a, b, cap)
             for a, b in zip(eta_lo.values, eta_hi.values)]
    return ProbeReport(tuple(lam), tuple(osc_d), tuple(eta_d))


@dataclass(frozen=True)
class PipelineResult:
    rows: list
    gamma: GammaTable
    eta: EtaTable
    probe: ProbeReport


def compute_rows(n_max: int, ctx: PrecisionContext, *, radius=1.0,
                 node_count: int | None = None,
                 gamma_table: GammaTable | None = None,
                 probe_extra: int = 30) -> PipelineResult:
    """Full decomposition pipeline with probed per-row digit estimates."""
    if n_max < 1:
        raise ValidationError("n_max must be >= 1")
    parts = _pipeline_parts(n_max, ctx, radius, node_count, gamma_table)
    gamma_table, eta, osc, trend = parts
    report = accuracy_probe(n_max, ctx, ctx.plus(probe_extra),
                            radius=radius, node_count=node_count,
                            _parts_lo=parts)
    eta = EtaTable(eta.values, report.eta_digits)
    rows = assemble(trend, osc, list(report.lambda_digits))
    return PipelineResult(rows=rows, gamma=gamma_table, eta=eta, probe=report)
