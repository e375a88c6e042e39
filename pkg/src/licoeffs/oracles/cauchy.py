"""Contour oracle: lambda_n straight from its defining derivative,

    lambda_n = (1/Gamma(n)) d^n/ds^n [ s^(n-1) ln xi(s) ] at s = 1
             = n * [coefficient of (s-1)^n in s^(n-1) ln xi(s)],

the coefficient extracted by the shared trapezoidal Cauchy pass from
samples of ln xi on a circle about s = 1. The nearest zero of xi sits at
distance ~14.13, so any radius < 3 leaves ln xi analytic on and inside
the contour; the log's argument is tracked continuously between adjacent
nodes (and must close up after a full turn) rather than taken on the
principal branch pointwise.
"""

from __future__ import annotations

import threading

from mpmath import mp

from ..errors import BranchTrackingError, RealityCheckError, ValidationError
from ..kernel import ContourSamples, contour_coeffs, unit_roots, xi
from ..precision import PrecisionContext, local_dps

_SAMPLE_MEMO: dict = {}
_LOCK = threading.Lock()


def unwrap_phases(values, max_step=None):
    """Continuous argument along a closed sample path.

    values: nonzero complex samples around the contour, first sample on
    the positive real axis (argument 0). Returns the unwrapped arguments;
    raises BranchTrackingError if adjacent nodes jump by pi/2 or more, or
    if the argument fails to return to 0 around the loop."""
    if max_step is None:
        max_step = mp.pi / 2
    args = [mp.mpf(0)]
    prev_principal = mp.arg(values[0])
    total = mp.mpf(0)
    for i in range(1, len(values) + 1):
        v = values[i % len(values)]
        principal = mp.arg(v)
        delta = principal - prev_principal
        two_pi = 2 * mp.pi
        delta -= two_pi * mp.nint(delta / two_pi)
        if abs(delta) >= max_step:
            raise BranchTrackingError(
                "argument jumps by %s at node %d; sample more densely"
                % (mp.nstr(delta, 5), i))
        total += delta
        prev_principal = principal
        if i < len(values):
            args.append(total)
    if abs(total) > mp.pi:
        raise BranchTrackingError(
            "argument winds by %s around the contour: zeros inside, "
            "or undersampled" % mp.nstr(total, 5))
    return args


def log_xi_samples(radius, node_count: int, ctx: PrecisionContext, *,
                   scale=1) -> ContourSamples:
    """Samples of ln(scale * xi(s)) on |s - 1| = radius, branch-tracked.

    scale > 0 rescales xi by a constant; the extracted lambda_n are
    provably invariant under it (the added constant contributes a
    polynomial of degree n-1, annihilated by the n-th derivative)."""
    key = (float(radius), node_count, ctx.working_digits, float(scale))
    with _LOCK:
        hit = _SAMPLE_MEMO.get(key)
    if hit is not None:
        return hit
    if not 0 < radius < 3:
        raise ValidationError(
            "radius must be in (0, 3) to keep ln xi analytic, got %r"
            % (radius,))
    if scale <= 0:
        raise ValidationError("scale must be positive")
    with local_dps(ctx.working_digits + 15):
        r = mp.mpf(radius)
        roots = unit_roots(node_count)
        points = [1 + r * w for w in roots]
        values = [xi(s, ctx) * scale for s in points]
        moduli = [abs(v) for v in values]
        if min(moduli) == 0:
            raise BranchTrackingError("xi vanished on the contour")
        phases = unwrap_phases(values)
        logs = tuple(mp.mpc(mp.log(m), p) for m, p in zip(moduli, phases))
        samples = ContourSamples(center=mp.mpc(1), radius=r, values=logs)
    with _LOCK:
        _SAMPLE_MEMO[key] = samples
    return samples


def lambda_cauchy(n: int, radius, nodes: int, ctx: PrecisionContext, *,
                  scale=1):
    """lambda_n by contour extraction; precision is limited by the r^-n
    factor and the node count, both chosen by the caller (nodes > 2n)."""
    if n < 1:
        raise ValidationError("n must be >= 1, got %r" % (n,))
    if nodes <= 2 * n:
        raise ValidationError("nodes must exceed 2n (%d <= %d)"
                              % (nodes, 2 * n))
    samples = log_xi_samples(radius, nodes, ctx, scale=scale)
    with local_dps(ctx.working_digits + 15):
        roots = unit_roots(nodes)
        r = mp.mpf(radius)
        weighted = tuple(((1 + r * w) ** (n - 1)) * v
                         for w, v in zip(roots, samples.values))
        shaped = ContourSamples(center=samples.center, radius=r,
                                values=weighted)
        coeff = contour_coeffs(shaped, n, ctx)[n]
        im = abs(mp.im(coeff))
        tol = mp.mpf(10) ** (-(ctx.digits // 2))
        if im >= tol * max(1, abs(mp.re(coeff))):
            raise RealityCheckError(
                "lambda_%d extraction left imaginary residue %s"
                % (n, mp.nstr(im, 3)))
        return +(n * mp.re(coeff))
