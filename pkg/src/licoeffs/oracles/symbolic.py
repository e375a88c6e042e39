"""Exact symbolic expansion of eta_n and osc_n as integer-coefficient
polynomials in the Stieltjes constants.

Formal power-series composition of

    sum_n eta_n s^(n+1)/(n+1) = -log(1 + sum_n gamma_n s^(n+1))
                              = sum_{k>=1} ((-1)^k / k) G(s)^k

with G(s) = sum_n gamma_n s^(n+1), carried out on dense exponent
multi-indices with exact integers. No simplification is attempted; the
term count of eta_n is the partition number p(n+1), and of osc_n the sum
p(1) + ... + p(n), which explodes quickly (p(31) = 6842 terms already),
hence the expansion cap.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp

from ..errors import (
    ConventionError,
    CoverageError,
    DomainError,
    ResourceLimitError,
)
from ..kernel import binomial
from ..precision import PrecisionContext, local_dps
from ..stieltjes import Convention, GammaTable

#: Largest index the expansion will attempt (term counts beyond are huge).
EXPANSION_CAP = 30


@dataclass(frozen=True)
class SymbolicPoly:
    """Exact polynomial in gamma_0..gamma_d.

    monomials maps an exponent multi-index (e_0, e_1, ..., trailing zeros
    trimmed) to its integer coefficient; zero coefficients are never
    stored."""

    monomials: dict = field(default_factory=dict)

    def __post_init__(self):
        for expo, coeff in self.monomials.items():
            if coeff == 0:
                raise ValueError("zero coefficient stored for %r" % (expo,))
            if expo and expo[-1] == 0:
                raise ValueError("untrimmed exponent %r" % (expo,))

    def __len__(self) -> int:
        return len(self.monomials)

    def max_variable(self) -> int:
        """Largest gamma index appearing (-1 for a constant polynomial)."""
        return max((len(e) - 1 for e in self.monomials), default=-1)


def term_count(poly: SymbolicPoly) -> int:
    return len(poly.monomials)


_PARTITIONS = [1]  # p(0), p(1), ...
_PART_LOCK = threading.Lock()


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence, memoized."""
    if n < 0:
        raise DomainError("partition_count: n must be >= 0")
    with _PART_LOCK:
        while len(_PARTITIONS) <= n:
            m = len(_PARTITIONS)
            total = 0
            k = 1
            while True:
                g1 = k * (3 * k - 1) // 2
                g2 = k * (3 * k + 1) // 2
                if g1 > m and g2 > m:
                    break
                sign = 1 if k % 2 else -1  # (-1)^(k-1)
                if g1 <= m:
                    total += sign * _PARTITIONS[m - g1]
                if g2 <= m:
                    total += sign * _PARTITIONS[m - g2]
                k += 1
            _PARTITIONS.append(total)
        return _PARTITIONS[n]


# --- exact multivariate arithmetic on exponent dicts ----------------------

def _trim(expo: tuple) -> tuple:
    end = len(expo)
    while end and expo[end - 1] == 0:
        end -= 1
    return expo[:end]


def _mul_mono(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    return a[:0] + tuple(
        x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            key = _mul_mono(ea, eb)
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def _poly_add_scaled(dst: dict, src: dict, factor) -> None:
    for e, c in src.items():
        v = dst.get(e, 0) + factor * c
        if v:
            dst[e] = v
        elif e in dst:
            del dst[e]


# --- eta expansion ---------------------------------------------------------

_ETA_LOCK = threading.Lock()
_ETA_POLYS: list = []  # _ETA_POLYS[n] = dict for eta_n


def _eta_polys(n_max: int) -> list:
    """Eta polynomial dicts through index n_max (exact), cached.

    Rebuilds geometrically so ascending requests cost no more than twice
    the largest one."""
    with _ETA_LOCK:
        if len(_ETA_POLYS) > n_max:
            return _ETA_POLYS[:n_max + 1]
        target = max(n_max, min(EXPANSION_CAP, 2 * max(len(_ETA_POLYS), 4)))
        deg = target + 1  # work with series in s truncated past s^deg
        # G(s) = sum gamma_j s^(j+1): series[d] = dict of the s^d coefficient
        gam = [{} for _ in range(deg + 1)]
        for j in range(deg):
            mono = _trim(tuple(0 for _ in range(j)) + (1,))
            gam[j + 1] = {mono: 1}
        # accumulate sum_k ((-1)^k / k) G^k with Fraction scalars
        acc = [dict() for _ in range(deg + 1)]
        power = gam  # G^1
        for k in range(1, deg + 1):
            factor = Fraction((-1) ** k, k)
            for d in range(k, deg + 1):
                _poly_add_scaled(acc[d], power[d], factor)
            if k == deg:
                break
            # power <- power * G, truncated at degree deg
            nxt = [dict() for _ in range(deg + 1)]
            for d1 in range(k, deg + 1):
                if not power[d1]:
                    continue
                for d2 in range(1, deg + 1 - d1):
                    if gam[d2]:
                        _poly_add_scaled(nxt[d1 + d2],
                                         _poly_mul(power[d1], gam[d2]), 1)
            power = nxt
        polys = []
        for n in range(target + 1):
            out = {}
            for e, c in acc[n + 1].items():
                v = c * (n + 1)
                if v.denominator != 1:
                    raise ArithmeticError(
                        "eta_%d produced non-integer coefficient %s" % (n, v))
                out[e] = int(v)
            polys.append(out)
        _ETA_POLYS.clear()
        _ETA_POLYS.extend(polys)
        return _ETA_POLYS[:n_max + 1]


def expand_eta_symbolic(n: int) -> SymbolicPoly:
    """Exact polynomial for eta_n in gamma_0..gamma_n."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if n > EXPANSION_CAP:
        raise ResourceLimitError(
            "eta_%d has %d terms; expansion capped at n = %d"
            % (n, partition_count(n + 1), EXPANSION_CAP))
    return SymbolicPoly(dict(_eta_polys(n)[n]))


def expand_lambda_osc_symbolic(n: int) -> SymbolicPoly:
    """Exact polynomial for osc_n = -sum_j C(n,j) eta_{j-1}."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if n > EXPANSION_CAP:
        raise ResourceLimitError(
            "osc_%d expansion capped at n = %d" % (n, EXPANSION_CAP))
    etas = _eta_polys(n - 1)
    out: dict = {}
    for j in range(1, n + 1):
        _poly_add_scaled(out, etas[j - 1], -binomial(n, j))
    return SymbolicPoly(out)


def eval_symbolic(poly: SymbolicPoly, gamma: GammaTable,
                  ctx: PrecisionContext):
    """Evaluate an exact polynomial at a Bombieri-Lagarias gamma table."""
    if gamma.convention is not Convention.BOMBIERI_LAGARIAS:
        raise ConventionError(
            "eval_symbolic needs a Bombieri-Lagarias table, got %s"
            % gamma.convention.value)
    need = poly.max_variable()
    if need > gamma.n_max:
        raise CoverageError(
            "polynomial uses gamma_%d, table covers n <= %d"
            % (need, gamma.n_max))
    with local_dps(ctx.working_digits + 15):
        powers: dict = {}

        def var_power(i: int, e: int):
            key = (i, e)
            v = powers.get(key)
            if v is None:
                v = gamma.values[i] ** e
                powers[key] = v
            return v

        terms = []
        for expo in sorted(poly.monomials):
            prod = mp.mpf(poly.monomials[expo])
            for i, e in enumerate(expo):
                if e:
                    prod *= var_power(i, e)
            terms.append(prod)
        return +mp.fsum(terms)
