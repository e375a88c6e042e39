"""Limit-definition estimates of the gamma and eta constants.

These implement the defining limits directly,

    gamma_n = ((-1)^n / n!) lim ( sum_{k<=x} (log k)^n / k
                                  - (log x)^(n+1)/(n+1) )
    eta_n   = ((-1)^n / n!) lim ( sum_{k<=x} Lambda(k)/k (log k)^n
                                  - (log x)^(n+1)/(n+1) ),

with Lambda the von Mangoldt function (log p on prime powers p^m, zero
elsewhere). Convergence is far too slow for production use: with the
midpoint correction (log N)^n / (2N) the gamma estimate is good to a few
parts in 1e-6 at N = 1e6, and the eta estimate is fluctuation-limited to
about 1e-2 there. That is exactly what makes them independent oracles.
Double precision with pairwise/fsum accumulation is orders of magnitude
more accurate than either tolerance, so the sums run on numpy arrays.
"""

from __future__ import annotations

import math

import numpy as np

from mpmath import mp

from ..errors import DomainError, ValidationError

#: Loose empirical tolerances at N = 1e6, validated by N-doubling.
GAMMA_LIMIT_TOL = {0: 1e-4, 1: 1e-3, 2: 1e-3, 3: 1e-3, 4: 1e-3, 5: 1e-3}
ETA_LIMIT_TOL = {0: 1e-2, 1: 3e-2, 2: 3e-2}

_CHUNK = 1 << 20


def _chunked_sum(total_n: int, chunk_values) -> float:
    """fsum of per-chunk pairwise sums over k = 1..total_n (deterministic)."""
    partials = []
    start = 1
    while start <= total_n:
        stop = min(start + _CHUNK, total_n + 1)
        k = np.arange(start, stop, dtype=np.float64)
        partials.append(float(np.sum(chunk_values(k))))
        start = stop
    return math.fsum(partials)


def gamma_limit_estimate(n: int, big_n: int):
    """Bombieri-Lagarias gamma_n from the defining limit at x = big_n,
    with the Euler-Maclaurin midpoint term (log x)^n / (2x) removed."""
    if not 0 <= n <= 5:
        raise DomainError("limit oracle supports n <= 5, got %r" % (n,))
    if big_n < 10 ** 4:
        raise ValidationError("need N >= 1e4 for a meaningful estimate")
    if n == 0:
        s = _chunked_sum(big_n, lambda k: 1.0 / k)
    else:
        s = _chunked_sum(big_n, lambda k: np.log(k) ** n / k)
    ln = math.log(big_n)
    s -= ln ** (n + 1) / (n + 1)
    s -= ln ** n / (2 * big_n)
    sign = -1.0 if n % 2 else 1.0
    return mp.mpf(sign * s / math.factorial(n))


def von_mangoldt_sieve(limit: int) -> np.ndarray:
    """Lambda(0..limit) as float64; Lambda(p^m) = log p, else 0."""
    if limit < 2:
        raise ValidationError("limit must be >= 2")
    if limit > 2 * 10 ** 7:
        raise ValidationError(
            "sieve limited to 2e7 entries (memory), got %d" % limit)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, int(limit ** 0.5) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    lam = np.zeros(limit + 1, dtype=np.float64)
    primes = np.nonzero(is_prime)[0]
    lam[primes] = np.log(primes.astype(np.float64))
    for p in primes:
        q = int(p) * int(p)
        if q > limit:
            break
        logp = math.log(p)
        while q <= limit:
            lam[q] = logp
            q *= int(p)
    return lam


def eta_limit_estimate(n: int, big_n: int):
    """eta_n from the defining limit at x = big_n (fluctuation-limited)."""
    if not 0 <= n <= 2:
        raise DomainError("limit oracle supports n <= 2, got %r" % (n,))
    if big_n < 10 ** 4:
        raise ValidationError("need N >= 1e4 for a meaningful estimate")
    lam = von_mangoldt_sieve(big_n)
    k = np.arange(big_n + 1, dtype=np.float64)
    k[0] = 1.0  # avoid 0/0; Lambda(0) = Lambda(1) = 0 anyway
    weights = lam / k
    if n > 0:
        with np.errstate(divide="ignore"):
            logs = np.log(k)
        logs[0] = 0.0
        weights = weights * logs ** n
    partials = [float(np.sum(weights[i:i + _CHUNK]))
                for i in range(0, big_n + 1, _CHUNK)]
    s = math.fsum(partials)
    ln = math.log(big_n)
    s -= ln ** (n + 1) / (n + 1)
    sign = -1.0 if n % 2 else 1.0
    return mp.mpf(sign * s / math.factorial(n))
