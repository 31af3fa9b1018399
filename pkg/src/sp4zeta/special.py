"""Gamma, Riemann zeta, the completed zeta xi(s) and the entire chi(s) = s(s-1)xi(s).

Gamma uses the Stirling series after an upward recurrence shift, with the
reflection formula on the left half-plane.  Zeta uses Euler-Maclaurin
summation; the power sum is built multiplicatively from prime powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .precision import PrecisionContext, default_context


class PoleError(ArithmeticError):
    """Evaluation requested exactly at a pole."""


@dataclass(frozen=True)
class EvalResult:
    value: object
    residual_estimate: object
    at_pole: bool = False

    @property
    def finite(self) -> bool:
        return not self.at_pole and all(map(math.isfinite, (float(self.value.real), float(self.value.imag))))


# --- cached tables -----------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_over_factorial(prec: int, count: int):
    """B_{2k}/(2k)! for k = 1..count, as mpf at ``prec`` bits."""
    from .precision import _mp_for

    mp = _mp_for(prec)
    return [mp.bernoulli(2 * k) / mp.factorial(2 * k) for k in range(1, count + 1)]


@lru_cache(maxsize=None)
def _stirling_coefficients(prec: int, count: int):
    """B_{2k}/(2k(2k-1)) for the log-gamma asymptotic series."""
    from .precision import _mp_for

    mp = _mp_for(prec)
    return [mp.bernoulli(2 * k) / (2 * k * (2 * k - 1)) for k in range(1, count + 1)]


@lru_cache(maxsize=64)
def _smallest_prime_factor(limit: int):
    spf = list(range(limit + 1))
    for p in range(2, int(limit ** 0.5) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf


@lru_cache(maxsize=4096)
def _log_int(prec: int, n: int):
    from .precision import _mp_for

    return _mp_for(prec).log(n)


def _is_nonpositive_integer(z) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == int(z.real)


# --- Gamma -------------------------------------------------------------------

def _stirling_log_gamma(z, ctx: PrecisionContext):
    """log Gamma(z) by the asymptotic series; needs Re z large."""
    mp = ctx.mp
    eps = mp.ldexp(mp.mpf(1), -ctx.prec)
    coeffs = _stirling_coefficients(ctx.prec, ctx.prec // 2 + 20)
    logz = mp.log(z)
    acc = (z - mp.mpf(0.5)) * logz - z + mp.log(2 * mp.pi) / 2
    inv = 1 / z
    inv2 = inv * inv
    power = inv
    for c in coeffs:
        term = c * power
        acc += term
        if abs(term) < eps * abs(acc):
            break
        power *= inv2
    return acc


def _shift_for_stirling(z, ctx: PrecisionContext) -> int:
    target = ctx.prec / 8
    return max(0, int(math.ceil(target - float(z.real))))


def log_gamma(z, ctx: PrecisionContext | None = None):
    """A logarithm of Gamma(z) for Re z > 0 (branch not normalised).

    Only differences of these values are meaningful; used for gamma quotients
    at large height where the factors themselves span a huge range.
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    z = ctx.complex(z)
    if z.real <= 0:
        raise ValueError("log_gamma requires Re(z) > 0")
    m = _shift_for_stirling(z, ctx)
    acc = _stirling_log_gamma(z + m, ctx)
    for k in range(m):
        acc -= mp.log(z + k)
    return acc


def gamma(z, ctx: PrecisionContext | None = None):
    """Gamma(z); reflection for Re z < 1/2, Stirling with recurrence shift otherwise."""
    ctx = ctx or default_context()
    mp = ctx.mp
    z = ctx.complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z.real}")
    if z.real < 0.5:
        return mp.pi / (mp.sinpi(z) * gamma(1 - z, ctx))
    if z.imag == 0 and z.real == int(z.real) and z.real < 200:
        return mp.mpc(mp.factorial(int(z.real) - 1))
    m = _shift_for_stirling(z, ctx)
    prod = mp.mpc(1)
    for k in range(m):
        prod *= z + k
    return mp.exp(_stirling_log_gamma(z + m, ctx)) / prod


# --- Zeta --------------------------------------------------------------------

def _em_terms(s, ctx: PrecisionContext):
    """Euler-Maclaurin pieces for zeta(s).

    Returns (head, pole_term, error) with zeta(s) = head + pole_term/(s-1):
    head holds the power sum, the N^-s/2 correction and the Bernoulli tail,
    pole_term is N^(1-s).
    """
    mp = ctx.mp
    t = abs(float(s.imag))
    n_terms = int(max(20, 0.8 * t + ctx.bits / 4, abs(float(s.real)) / 2))
    spf = _smallest_prime_factor(n_terms)
    powers = [None, mp.mpc(1)]
    head = mp.mpc(1)
    for n in range(2, n_terms):
        p = spf[n]
        if p == n:
            v = mp.exp(-s * _log_int(ctx.prec, n))
        else:
            v = powers[p] * powers[n // p]
        powers.append(v)
        head += v
    logn = _log_int(ctx.prec, n_terms)
    n_pow = mp.exp(-s * logn)  # N^-s
    head += n_pow / 2
    pole_term = n_pow * n_terms

    eps = mp.ldexp(mp.mpf(1), -ctx.prec)
    bern = _bernoulli_over_factorial(ctx.prec, ctx.prec // 2 + 40)
    n2 = mp.mpf(n_terms) ** 2
    # k = 1 term: B2/2! * s * N^(-s-1)
    factor = s * n_pow / n_terms
    last = mp.mpf(0)
    for k, b in enumerate(bern, start=1):
        term = b * factor
        head += term
        last = abs(term)
        if last < eps * abs(head):
            break
        factor *= (s + 2 * k - 1) * (s + 2 * k) / n2
    return head, pole_term, last


def zeta(s, ctx: PrecisionContext | None = None, method: str = "auto"):
    """Riemann zeta.

    ``method="auto"`` uses the functional equation for Re s < 0;
    ``method="em"`` forces Euler-Maclaurin everywhere, raising the working
    precision to absorb the cancellation in the power sum.
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    s = ctx.complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if method == "auto" and s.real < 0:
        one_minus = 1 - s
        return (mp.power(2, s) * mp.power(mp.pi, s - 1) * mp.sinpi(s / 2)
                * gamma(one_minus, ctx) * zeta(one_minus, ctx))
    if method not in ("auto", "em"):
        raise ValueError(f"unknown zeta method {method!r}")
    work = ctx
    if s.real < 0.5:
        n_est = max(20, 0.8 * abs(float(s.imag)) + ctx.bits / 4, abs(float(s.real)) / 2)
        extra = int((0.5 - float(s.real)) * math.log2(n_est)) + 16
        work = ctx.raised(extra)
    sw = work.mp.mpc(s)
    head, pole_term, _ = _em_terms(sw, work)
    return mp.mpc(head + pole_term / (sw - 1))


def _sm1_zeta(s, ctx: PrecisionContext):
    """(s-1) * zeta(s) for Re s >= 1/2, finite at s = 1."""
    head, pole_term, _ = _em_terms(s, ctx)
    return (s - 1) * head + pole_term


# --- xi and chi --------------------------------------------------------------

def _near(s, point, tol) -> bool:
    return abs(s - point) <= tol


def xi(s, ctx: PrecisionContext | None = None, reflect: bool = True) -> EvalResult:
    """Completed zeta pi^(-s/2) Gamma(s/2) zeta(s); poles at 0 and 1 are flagged.

    With ``reflect=True`` the left half-plane is served by xi(s) = xi(1-s).
    ``reflect=False`` evaluates the defining product directly everywhere,
    which gives an independent route for checking the functional equation.
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    s = ctx.complex(s)
    tol = ctx.pole_tolerance()
    if _near(s, 0, tol) or _near(s, 1, tol):
        return EvalResult(mp.mpc(mp.inf), mp.mpf(0), at_pole=True)
    if reflect and s.real < 0.5:
        return xi(1 - s, ctx, reflect)
    z = zeta(s, ctx, method="auto" if reflect else "em")
    value = mp.power(mp.pi, -s / 2) * gamma(s / 2, ctx) * z
    return EvalResult(value, abs(value) * ctx.tol(12))


def xi_value(s, ctx: PrecisionContext | None = None):
    """xi(s) as a bare value; raises PoleError at 0 and 1."""
    r = xi(s, ctx)
    if r.at_pole:
        raise PoleError(f"xi has a pole at {s}")
    return r.value


def chi(s, ctx: PrecisionContext | None = None, reflect: bool = True):
    """Entire function s(s-1)xi(s) = 2 pi^(-s/2) Gamma(s/2+1) (s-1)zeta(s).

    Exactly 1 within 2^(-bits/2) of s = 0 and s = 1.
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    s = ctx.complex(s)
    tol = ctx.pole_tolerance()
    if _near(s, 0, tol) or _near(s, 1, tol):
        return mp.mpc(1)
    if s.real < 0.5:
        if reflect:
            return chi(1 - s, ctx)
        r = xi(s, ctx, reflect=False)
        return s * (s - 1) * r.value
    return 2 * mp.power(mp.pi, -s / 2) * gamma(s / 2 + 1, ctx) * _sm1_zeta(s, ctx)


def xi_residue(pole) -> Fraction:
    """Residue of xi at its simple poles: -1 at s = 0, +1 at s = 1."""
    if pole == 0:
        return Fraction(-1)
    if pole == 1:
        return Fraction(1)
    raise ValueError(f"xi has no pole at {pole}")
