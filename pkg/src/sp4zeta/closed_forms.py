"""The zeta function of Sp(4) over Q and the auxiliary functions built from chi.

    xi_sp4(s)  six-term combination of products xi(a s + b) xi(c s + d)
    Z(s)       4 s^2 (s-1)^2 (s+1)(2s-1)(s-2) xi_sp4(s), evaluated in its entire
               four-term chi form
    f, g       f(s) = (s-1)(As-A+1)chi(s+1) - (s-2)chi(s),  g(s) = f(s)chi(2s)
    U, V       the pair with s(s-1)xi(s)U(s) = V(s) - Z(s)
    R1..R3     remainder ratios with Z = (s-1)(As-A+1)chi(s+1)chi(2s)(1-R1-R2-R3)

where A = pi/3 - 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .precision import PrecisionContext, default_context
from .special import EvalResult, PoleError, chi, gamma, xi, zeta

XI_SP4_POLES = (-1, 0, 1, 2)
GAMMA_QUOTIENT_HEIGHT = 500


class FunctionId(enum.Enum):
    XI = "xi"
    CHI = "chi"
    XI_SP4 = "xi_sp4"
    Z = "Z"
    F = "f"
    G = "g"
    U = "U"
    V = "V"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"

    @classmethod
    def parse(cls, name: "str | FunctionId") -> "FunctionId":
        if isinstance(name, cls):
            return name
        key = name.strip().replace("-", "_").lower()
        try:
            return {m.value.lower(): m for m in cls}[key]
        except KeyError:
            raise ValueError(f"unknown function id {name!r}") from None

    @property
    def poles(self) -> tuple:
        if self is FunctionId.XI:
            return (0, 1)
        if self is FunctionId.XI_SP4:
            return XI_SP4_POLES
        return ()


class DenominatorError(ZeroDivisionError):
    """The common denominator of the remainder ratios vanishes."""


def constant_a(ctx: PrecisionContext | None = None):
    """A = pi/3 - 1, computed from pi (not from xi(2))."""
    ctx = ctx or default_context()
    return ctx.mp.pi / 3 - 1


class _Chis:
    """Lazily evaluated chi(s-1), chi(s), chi(s+1), chi(2s-1), chi(2s)."""

    __slots__ = ("s", "ctx", "_cache")

    def __init__(self, s, ctx):
        self.s = s
        self.ctx = ctx
        self._cache = {}

    def __call__(self, key: str):
        v = self._cache.get(key)
        if v is None:
            s = self.s
            arg = {"s-1": s - 1, "s": s, "s+1": s + 1, "2s-1": 2 * s - 1, "2s": 2 * s}[key]
            v = chi(arg, self.ctx)
            self._cache[key] = v
        return v


def _prepare(s, ctx):
    ctx = ctx or default_context()
    return ctx.complex(s), ctx


def _xi_sp4_terms(s, ctx):
    mp = ctx.mp
    x = lambda a: xi(a, ctx).value  # noqa: E731
    xi2 = mp.pi / 6
    xs, x2s, xsp1, xsm1, x2sm1 = x(s), x(2 * s), x(s + 1), x(s - 1), x(2 * s - 1)
    return (
        xi2 * xsp1 * x2s / (s - 2)
        - xi2 * xsm1 * x2sm1 / (s + 1)
        - xsp1 * x2s / (2 * s - 2)
        + xsm1 * x2sm1 / (2 * s)
        - xs * x2s / ((2 * s - 2) * (s + 1))
        - xs * x2sm1 / ((2 * s) * (s - 2))
    )


def xi_sp4(s, ctx: PrecisionContext | None = None) -> EvalResult:
    """Zeta function of Sp(4)/Q; simple poles at -1, 0, 1, 2 are flagged.

    Near s = 1/2 the six terms carry cancelling poles of size |s - 1/2|^-1,
    so the working precision is raised by about 2 log2(1/|s - 1/2|) bits.
    Inside a window of radius 2^-(bits/2 + 8) the value is taken at the window
    edge; the function is even about 1/2, so the error is O(2^-(bits + 16)).
    """
    s, ctx = _prepare(s, ctx)
    mp = ctx.mp
    tol = ctx.pole_tolerance()
    if any(abs(s - p) <= tol for p in XI_SP4_POLES):
        return EvalResult(mp.mpc(mp.inf), mp.mpf(0), at_pole=True)
    half = mp.mpf(0.5)
    window = mp.ldexp(mp.mpf(1), -(ctx.bits // 2 + 8))
    d = abs(s - half)
    if d < window:
        s = mp.mpc(half + window, 0)
        d = window
    if d < 1:
        work = ctx.raised(2 * int(math.ceil(-math.log2(float(d)))) + 8)
        value = mp.mpc(_xi_sp4_terms(work.mp.mpc(s), work))
    else:
        value = _xi_sp4_terms(s, ctx)
    return EvalResult(value, max(abs(value), mp.mpf(1)) * ctx.tol(20))


def big_z(s, ctx: PrecisionContext | None = None):
    """Entire function Z(s) from its four-term chi expression."""
    s, ctx = _prepare(s, ctx)
    a = constant_a(ctx)
    c = _Chis(s, ctx)
    return (
        (s - 1) * (a * s - a + 1) * c("s+1") * c("2s")
        - (s - 2) * c("s") * c("2s")
        - s * (a * s - 1) * c("s-1") * c("2s-1")
        - (s + 1) * c("s") * c("2s-1")
    )


def big_z_from_xi_sp4(s, ctx: PrecisionContext | None = None):
    """Z(s) as the polynomial multiple of xi_sp4(s); a cross-check only."""
    s, ctx = _prepare(s, ctx)
    r = xi_sp4(s, ctx)
    if r.at_pole:
        raise PoleError(f"xi_sp4 pole at {s}")
    return 4 * s ** 2 * (s - 1) ** 2 * (s + 1) * (2 * s - 1) * (s - 2) * r.value


def _f(s, ctx, c: _Chis):
    a = constant_a(ctx)
    return (s - 1) * (a * s - a + 1) * c("s+1") - (s - 2) * c("s")


def f_aux(s, ctx: PrecisionContext | None = None):
    s, ctx = _prepare(s, ctx)
    return _f(s, ctx, _Chis(s, ctx))


def g_aux(s, ctx: PrecisionContext | None = None):
    s, ctx = _prepare(s, ctx)
    c = _Chis(s, ctx)
    return _f(s, ctx, c) * c("2s")


def u_v(s, ctx: PrecisionContext | None = None):
    """(U(s), V(s)) with chi(s) * U(s) = V(s) - Z(s).

    U carries a plus sign between its two terms.  With a minus sign the
    identity fails and U would be symmetric under s -> 1 - s, whereas
    (V - Z) / chi must be antisymmetric.
    """
    s, ctx = _prepare(s, ctx)
    a = constant_a(ctx)
    c = _Chis(s, ctx)
    u = (s + 1) * c("2s-1") + (s - 2) * c("2s")
    v = (s - 1) * (a * s - a + 1) * c("s+1") * c("2s") - s * (a * s - 1) * c("s-1") * c("2s-1")
    return u, v


@dataclass(frozen=True)
class Remainders:
    r1: object
    r2: object
    r3: object

    @property
    def defect(self):
        """1 - R1 - R2 - R3; multiplied by the common denominator this is Z(s)."""
        return 1 - self.r1 - self.r2 - self.r3


def remainder_denominator(s, ctx: PrecisionContext | None = None):
    s, ctx = _prepare(s, ctx)
    a = constant_a(ctx)
    return (s - 1) * (a * s - a + 1) * chi(s + 1, ctx) * chi(2 * s, ctx)


def _remainders_gamma_quotient(s, ctx):
    mp = ctx.mp
    a = constant_a(ctx)
    pi = mp.pi
    lin = a * s - a + 1
    g_half = gamma(s / 2, ctx) / gamma((s + 1) / 2, ctx)
    g_shift = gamma(s - mp.mpf(0.5), ctx) / gamma(s, ctx)
    g_low = gamma((s - 1) / 2, ctx) / gamma((s + 1) / 2, ctx)
    z_s, z_s1, z_sm1 = zeta(s, ctx), zeta(s + 1, ctx), zeta(s - 1, ctx)
    z_2s, z_2sm1 = zeta(2 * s, ctx), zeta(2 * s - 1, ctx)
    r1 = (s - 2) / ((s + 1) * lin) * mp.sqrt(pi) * g_half * z_s / z_s1
    r2 = (pi ** mp.mpf(1.5) * (s - 1) * (s - 2) * (a * s - 1) / (s * (s + 1) * lin)
          * g_low * g_shift * (z_sm1 * z_2sm1) / (z_s1 * z_2s))
    r3 = pi * (s - 1) / (s * lin) * g_half * g_shift * (z_s * z_2sm1) / (z_s1 * z_2s)
    return Remainders(r1, r2, r3)


def remainders(s, ctx: PrecisionContext | None = None) -> Remainders:
    """R1, R2, R3 for Re(s) > 1/2.

    Above |Im s| = 500 the ratios are taken in gamma-quotient form so that no
    individual chi value is formed.
    """
    s, ctx = _prepare(s, ctx)
    if not s.real > 0.5:
        raise ValueError("remainder ratios are defined here for Re(s) > 1/2")
    a = constant_a(ctx)
    lin = a * s - a + 1
    if abs(s - 1) < ctx.pole_tolerance() or abs(lin) < ctx.pole_tolerance():
        raise DenominatorError(f"common denominator vanishes at {s}")
    if abs(s.imag) > GAMMA_QUOTIENT_HEIGHT:
        return _remainders_gamma_quotient(s, ctx)
    c = _Chis(s, ctx)
    den = (s - 1) * lin * c("s+1") * c("2s")
    if den == 0:
        raise DenominatorError(f"common denominator vanishes at {s}")
    r1 = (s - 2) * c("s") * c("2s") / den
    r2 = s * (a * s - 1) * c("s-1") * c("2s-1") / den
    r3 = (s + 1) * c("s") * c("2s-1") / den
    return Remainders(r1, r2, r3)


def evaluate(fid: "FunctionId | str", s, ctx: PrecisionContext | None = None) -> EvalResult:
    """Single dispatch surface for every named function."""
    fid = FunctionId.parse(fid)
    s, ctx = _prepare(s, ctx)
    mp = ctx.mp
    if fid is FunctionId.XI:
        return xi(s, ctx)
    if fid is FunctionId.XI_SP4:
        return xi_sp4(s, ctx)
    if fid is FunctionId.CHI:
        value = chi(s, ctx)
    elif fid is FunctionId.Z:
        value = big_z(s, ctx)
    elif fid is FunctionId.F:
        value = f_aux(s, ctx)
    elif fid is FunctionId.G:
        value = g_aux(s, ctx)
    elif fid is FunctionId.U:
        value = u_v(s, ctx)[0]
    elif fid is FunctionId.V:
        value = u_v(s, ctx)[1]
    else:
        try:
            rem = remainders(s, ctx)
        except DenominatorError:
            return EvalResult(mp.mpc(mp.inf), mp.mpf(0), at_pole=True)
        value = {FunctionId.R1: rem.r1, FunctionId.R2: rem.r2, FunctionId.R3: rem.r3}[fid]
    return EvalResult(mp.mpc(value), abs(value) * ctx.tol(20))
