"""Arbitrary-precision contexts, elementary functions and decimal I/O.

Every numeric routine in the package takes a :class:`PrecisionContext`.  The
context owns a private :class:`mpmath.ctx_mp.MPContext` so that evaluations at
different precisions never touch mpmath's global state.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from mpmath.ctx_mp import MPContext

DEFAULT_BITS = 256
MIN_BITS = 64
MIN_GUARD_BITS = 16


class PrecisionError(ValueError):
    """Requested precision is below what the verification tolerances need."""


class DomainError(ArithmeticError):
    """Argument outside the domain of an elementary function."""


@lru_cache(maxsize=None)
def _mp_for(prec: int) -> MPContext:
    mp = MPContext()
    mp.prec = prec
    return mp


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision: ``bits`` of mantissa plus ``guard_bits`` carried internally."""

    bits: int = DEFAULT_BITS
    guard_bits: int = MIN_GUARD_BITS

    def __post_init__(self):
        if self.bits < MIN_BITS:
            raise PrecisionError(f"precision too low: {self.bits} < {MIN_BITS} bits")
        if self.guard_bits < MIN_GUARD_BITS:
            raise PrecisionError(f"guard_bits must be >= {MIN_GUARD_BITS}")

    @property
    def prec(self) -> int:
        return self.bits + self.guard_bits

    @property
    def mp(self) -> MPContext:
        return _mp_for(self.prec)

    @property
    def eps(self):
        """Unit roundoff at the *advertised* precision, 2^-bits."""
        return self.mp.ldexp(self.mp.mpf(1), -self.bits)

    @property
    def digits(self) -> int:
        """Decimal digits worth printing: floor(bits*log10 2) - 10."""
        return max(1, int(math.floor(self.bits * math.log10(2))) - 10)

    def tol(self, slack_bits: int):
        """2^(-bits + slack_bits), the form all tolerances in this package take."""
        return self.mp.ldexp(self.mp.mpf(1), -self.bits + slack_bits)

    def pole_tolerance(self):
        return self.mp.ldexp(self.mp.mpf(1), -(self.bits // 2))

    def complex(self, z):
        """Coerce ``z`` (number, string, mpmath value) to a complex of this context."""
        if isinstance(z, str):
            return parse_value(z, self)
        return self.mp.mpc(z)

    def real(self, x):
        if isinstance(x, str):
            return self.mp.mpf(x.strip())
        return self.mp.mpf(x)

    def raised(self, extra_bits: int) -> "PrecisionContext":
        return PrecisionContext(self.bits + extra_bits, self.guard_bits)


def create_context(bits: int = DEFAULT_BITS, guard_bits: int = MIN_GUARD_BITS) -> PrecisionContext:
    if not isinstance(bits, int) or bits < MIN_BITS:
        raise PrecisionError(f"precision too low: {bits} < {MIN_BITS} bits")
    return PrecisionContext(bits, max(guard_bits, MIN_GUARD_BITS))


_DEFAULT = PrecisionContext()


def default_context() -> PrecisionContext:
    return _DEFAULT


def _check_finite(z, mp):
    if not (mp.isfinite(z.real) and mp.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z}")


def elementary(op: str, z, ctx: PrecisionContext | None = None, w=None):
    """Evaluate an elementary function on the principal branch.

    ``op`` is one of exp, log, sqrt, pow, sin, cos, tan, sinh, cosh.  ``pow``
    takes its exponent through ``w`` and computes exp(w * log z).
    """
    ctx = ctx or _DEFAULT
    mp = ctx.mp
    z = ctx.complex(z)
    _check_finite(z, mp)
    if op == "log":
        if z == 0:
            raise DomainError("log(0)")
        return mp.log(z)
    if op == "pow":
        if w is None:
            raise TypeError("pow needs an exponent")
        w = ctx.complex(w)
        if z == 0:
            if w.real > 0:
                return mp.mpc(0)
            raise DomainError("0 raised to a power with non-positive real part")
        return mp.exp(w * mp.log(z))
    funcs = {
        "exp": mp.exp,
        "sqrt": mp.sqrt,
        "sin": mp.sin,
        "cos": mp.cos,
        "tan": mp.tan,
        "sinh": mp.sinh,
        "cosh": mp.cosh,
    }
    try:
        fn = funcs[op]
    except KeyError:
        raise ValueError(f"unknown elementary op {op!r}") from None
    return mp.mpc(fn(z))


# --- decimal serialization -------------------------------------------------

_REAL = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_RE = re.compile(rf"^\s*({_REAL})\s*$")
_COMPLEX_RE = re.compile(rf"^\s*({_REAL})?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij])?\s*$")
_PURE_IMAG_RE = re.compile(r"^\s*([+-]?(?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?)\s*[ij]\s*$")


def _format_real(x, digits: int, mp) -> str:
    if mp.isnan(x):
        return "nan"
    if mp.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x == 0:
        return "0"
    return mp.nstr(x, digits, min_fixed=-6, max_fixed=digits + 1)


def format_value(x, ctx: PrecisionContext | None = None, decimal_digits: int | None = None) -> str:
    """Correctly rounded decimal text with ``decimal_digits`` significant digits.

    Real values print as a plain decimal; values with a non-zero imaginary part
    print as ``a+bi``.
    """
    ctx = ctx or _DEFAULT
    digits = ctx.digits if decimal_digits is None else decimal_digits
    if digits < 1:
        raise ValueError("decimal_digits must be >= 1")
    mp = ctx.mp
    z = mp.mpc(x)
    re_s = _format_real(z.real, digits, mp)
    if z.imag == 0:
        return re_s
    im_s = _format_real(abs(z.imag), digits, mp)
    sign = "-" if z.imag < 0 else "+"
    return f"{re_s}{sign}{im_s}i"


def to_json(x, ctx: PrecisionContext | None = None, decimal_digits: int | None = None) -> dict:
    ctx = ctx or _DEFAULT
    digits = ctx.digits if decimal_digits is None else decimal_digits
    z = ctx.mp.mpc(x)
    return {"re": _format_real(z.real, digits, ctx.mp), "im": _format_real(z.imag, digits, ctx.mp)}


def from_json(obj: dict, ctx: PrecisionContext | None = None):
    ctx = ctx or _DEFAULT
    return ctx.mp.mpc(ctx.real(obj["re"]), ctx.real(obj["im"]))


def parse_value(text: str, ctx: PrecisionContext | None = None):
    """Parse ``"3"``, ``"0.5+14.1i"``, ``"-2e-3-1j"``, ``"2i"`` into a complex."""
    ctx = ctx or _DEFAULT
    mp = ctx.mp
    t = text.strip().replace(" ", "")
    m = _REAL_RE.match(t)
    if m:
        return mp.mpc(mp.mpf(m.group(1)))
    m = _PURE_IMAG_RE.match(t)
    if m and t[-1] in "ij":
        body = m.group(1)
        if body in (None, "", "+"):
            return mp.mpc(0, 1)
        if body == "-":
            return mp.mpc(0, -1)
        return mp.mpc(0, mp.mpf(body))
    m = _COMPLEX_RE.match(t)
    if m and m.group(1) is not None and m.group(2) is not None:
        im = mp.mpf(m.group(3)) if m.group(3) else mp.mpf(1)
        if m.group(2) == "-":
            im = -im
        return mp.mpc(mp.mpf(m.group(1)), im)
    raise ValueError(f"cannot parse complex value {text!r}")
