"""Zero counting in rectangles, critical-line scanning and refinement, zero censuses.

Counting uses the argument principle through phase tracking: the boundary is
sampled, the phase increment arg(F(b)/F(a)) between neighbouring samples is
accumulated, and any segment whose increment exceeds pi/2 is bisected.  No
derivative of F is needed and the result is an exact integer whenever the
subdivision terminates.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .precision import PrecisionContext, create_context, default_context, format_value
from .special import PoleError
from .closed_forms import FunctionId, evaluate, g_aux, remainders

MAX_BISECTIONS = 40
NUDGE = 1e-3
INTEGER_SLACK = 1e-6
DEFAULT_SCAN_STEP = 0.02
CENSUS_T0 = 0.01
GAP_RADIUS = 10.1
GAP_MIN_T = 12

REAL_SURROGATE = frozenset({FunctionId.XI, FunctionId.CHI, FunctionId.XI_SP4})
IMAG_SURROGATE = frozenset({FunctionId.Z, FunctionId.U, FunctionId.V})


class BoundaryProximityError(ArithmeticError):
    """A zero sits too close to the contour for phase tracking to resolve."""

    def __init__(self, message: str, edge: int | None = None, point=None):
        super().__init__(message)
        self.edge = edge
        self.point = point


class NonConvergenceError(ArithmeticError):
    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


# --- shapes and records ---------------------------------------------------------

@dataclass(frozen=True)
class Rectangle:
    re_min: object
    re_max: object
    im_min: object
    im_max: object

    def __post_init__(self):
        if not float(self.re_min) < float(self.re_max):
            raise ValueError("rectangle needs re_min < re_max")
        if not float(self.im_min) < float(self.im_max):
            raise ValueError("rectangle needs im_min < im_max")

    @classmethod
    def parse(cls, text: str) -> "Rectangle":
        """``"a,b,c,d"`` meaning [a,b] x [c,d]."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"rectangle needs four numbers, got {text!r}")
        return cls(*parts)

    def bounds(self, ctx: PrecisionContext):
        return tuple(_coerce(v, ctx) for v in (self.re_min, self.re_max, self.im_min, self.im_max))

    def contains(self, z, ctx: PrecisionContext, margin=0) -> bool:
        a, b, c, d = self.bounds(ctx)
        return a - margin <= z.real <= b + margin and c - margin <= z.imag <= d + margin

    def shifted_edge(self, edge: int, delta: float) -> "Rectangle":
        """Move one edge outward by ``delta`` (edges: 0 bottom, 1 right, 2 top, 3 left)."""
        ctx = default_context()
        vals = list(self.bounds(ctx))
        idx, sign = {0: (2, -1), 1: (1, 1), 2: (3, 1), 3: (0, -1)}[edge]
        vals[idx] = format_value(vals[idx] + sign * ctx.real(repr(delta)), ctx, 40)
        return Rectangle(*vals)

    def as_strings(self, ctx: PrecisionContext | None = None) -> list[str]:
        ctx = ctx or default_context()
        return [format_value(v, ctx, 30) for v in self.bounds(ctx)]

    def to_dict(self, ctx: PrecisionContext | None = None) -> dict:
        return dict(zip(("re_min", "re_max", "im_min", "im_max"), self.as_strings(ctx)))


def _coerce(v, ctx: PrecisionContext):
    if isinstance(v, str):
        return ctx.real(v)
    if isinstance(v, float):
        return ctx.real(repr(v))
    return ctx.mp.mpf(v)


@dataclass(frozen=True)
class ZeroRecord:
    location: object
    residual: object          # |F(location)|
    scaled_residual: object   # |F| / |F'|, a Newton-step distance
    method: str
    function: FunctionId

    def to_dict(self, ctx: PrecisionContext | None = None, digits: int | None = None) -> dict:
        ctx = ctx or default_context()
        z = ctx.mp.mpc(self.location)
        return {
            "function": self.function.value,
            "re": format_value(z.real, ctx, digits),
            "im": format_value(z.imag, ctx, digits),
            "residual": format_value(self.residual, ctx, 6),
            "scaled_residual": format_value(self.scaled_residual, ctx, 6),
            "method": self.method,
        }


@dataclass(frozen=True)
class RectCount:
    count: int
    raw_winding: float
    rectangle: Rectangle
    nudges: tuple = ()
    evaluations: int = 0


@dataclass
class ScanResult:
    brackets: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    evaluations: int = 0

    def __len__(self) -> int:
        return len(self.brackets)

    def __iter__(self) -> Iterator:
        return iter(self.brackets)

    def __getitem__(self, i):
        return self.brackets[i]


@dataclass(frozen=True)
class Panel:
    rectangle: Rectangle
    rect_count: int
    line_count: int
    nudges: tuple = ()


@dataclass
class CensusReport:
    function: FunctionId
    height: object
    rect_count: int
    line_count: int
    off_line_suspects: list
    zeros: list
    panels: list
    real_axis_count: int | None = None
    warnings: list = field(default_factory=list)

    @property
    def rh_holds(self) -> bool:
        return self.rect_count == self.line_count and not self.off_line_suspects

    def to_dict(self, ctx: PrecisionContext | None = None) -> dict:
        ctx = ctx or default_context()
        return {
            "function": self.function.value,
            "height": format_value(self.height, ctx, 20),
            "rect_count": self.rect_count,
            "line_count": self.line_count,
            "real_axis_count": self.real_axis_count,
            "rh_holds": self.rh_holds,
            "off_line_suspects": [r.to_dict(ctx) for r in self.off_line_suspects],
            "panels": [
                {"rectangle": p.rectangle.to_dict(ctx), "rect_count": p.rect_count,
                 "line_count": p.line_count, "nudges": list(p.nudges)}
                for p in self.panels
            ],
            "zeros": [z.to_dict(ctx) for z in self.zeros],
            "warnings": list(self.warnings),
        }


# --- evaluation helpers --------------------------------------------------------------

def _evaluator(fn, ctx: PrecisionContext) -> Callable:
    if callable(fn) and not isinstance(fn, (str, FunctionId)):
        return lambda s: ctx.mp.mpc(fn(s))
    fid = FunctionId.parse(fn)

    def call(s):
        r = evaluate(fid, s, ctx)
        if r.at_pole:
            raise PoleError(f"{fid.value} has a pole at {s}")
        return r.value

    return call


def _fid_or_none(fn):
    if isinstance(fn, (str, FunctionId)):
        return FunctionId.parse(fn)
    return None


def surrogate(fn, ctx: PrecisionContext) -> Callable:
    """Real function of t whose sign changes are the zeros of F on Re s = 1/2."""
    fid = FunctionId.parse(fn)
    F = _evaluator(fid, ctx)
    half = ctx.mp.mpf(0.5)
    if fid in REAL_SURROGATE:
        return lambda t: F(ctx.mp.mpc(half, t)).real
    if fid in IMAG_SURROGATE:
        return lambda t: F(ctx.mp.mpc(half, t)).imag
    raise ValueError(f"{fid.value} has no real-valued surrogate on the critical line")


def _derivative(F, s, ctx):
    mp = ctx.mp
    h = mp.ldexp(mp.mpf(1), -(ctx.bits // 4)) * max(1, abs(s))
    return (F(s + h) - F(s - h)) / (2 * h)


def _scaled(F, s, value, ctx):
    d = _derivative(F, s, ctx)
    if d == 0:
        return ctx.mp.inf
    return abs(value) / abs(d)


# --- argument principle --------------------------------------------------------------

def _boundary_floor(ctx: PrecisionContext):
    return ctx.mp.ldexp(ctx.mp.mpf(1), -(ctx.bits // 4))


def _edge_phase(F, a, b, step, ctx, edge, stats) -> object:
    mp = ctx.mp
    floor = _boundary_floor(ctx)
    half_pi = mp.pi / 2
    n = max(4, int(math.ceil(float(abs(b - a)) / step)))
    points = [a + (b - a) * k / n for k in range(n + 1)]
    values = [F(p) for p in points]
    stats["evals"] += len(points)
    for k, (p, v) in enumerate(zip(points, values)):
        near = max(abs(values[j]) for j in (k - 1, k + 1) if 0 <= j <= n)
        if v == 0 or abs(v) <= floor * near:
            raise BoundaryProximityError("zero too close to boundary", edge, p)

    def seg(pa, fa, pb, fb, depth):
        d = mp.arg(fb / fa)
        if abs(d) <= half_pi:
            return d
        if depth >= MAX_BISECTIONS:
            raise BoundaryProximityError("zero too close to boundary", edge, (pa + pb) / 2)
        pm = (pa + pb) / 2
        fm = F(pm)
        stats["evals"] += 1
        if abs(fm) <= floor * max(abs(fa), abs(fb)):
            raise BoundaryProximityError("zero too close to boundary", edge, pm)
        return seg(pa, fa, pm, fm, depth + 1) + seg(pm, fm, pb, fb, depth + 1)

    total = mp.mpf(0)
    for k in range(n):
        total += seg(points[k], values[k], points[k + 1], values[k + 1], 0)
    return total


def _winding(F, rect: Rectangle, ctx, step) -> tuple:
    mp = ctx.mp
    a, b, c, d = rect.bounds(ctx)
    corners = [mp.mpc(a, c), mp.mpc(b, c), mp.mpc(b, d), mp.mpc(a, d)]
    stats = {"evals": 0}
    total = mp.mpf(0)
    for edge in range(4):
        total += _edge_phase(F, corners[edge], corners[(edge + 1) % 4], step, ctx, edge, stats)
    raw = float(total / (2 * mp.pi))
    k = round(raw)
    if abs(raw - k) > INTEGER_SLACK:
        raise BoundaryProximityError(f"phase integral {raw} is not an integer")
    return k, raw, stats["evals"]


def count_zeros_report(fn, rect: Rectangle, ctx: PrecisionContext | None = None,
                       step: float = 0.1, max_nudges: int = 3) -> RectCount:
    """Winding number of F around ``rect`` with the rectangle actually used.

    When a zero is too close to an edge that edge is moved outward by 10^-3
    (up to ``max_nudges`` times) and the move is recorded.
    """
    ctx = ctx or default_context()
    fid = _fid_or_none(fn)
    if fid is not None:
        for p in fid.poles:
            if rect.contains(ctx.mp.mpc(p), ctx, margin=NUDGE * (max_nudges + 1)):
                raise PoleError(f"pole in region: {fid.value} has a pole at {p}")
    F = _evaluator(fn, ctx)
    nudges = []
    current = rect
    while True:
        try:
            k, raw, evals = _winding(F, current, ctx, step)
            return RectCount(k, raw, current, tuple(nudges), evals)
        except PoleError as exc:
            raise PoleError(f"pole in region: {exc}") from exc
        except BoundaryProximityError as exc:
            if len(nudges) >= max_nudges or exc.edge is None:
                raise
            nudges.append(f"edge {exc.edge} moved outward by {NUDGE}")
            current = current.shifted_edge(exc.edge, NUDGE)


def count_zeros_rect(fn, rect: Rectangle, ctx: PrecisionContext | None = None, step: float = 0.1) -> int:
    """Number of zeros of F inside ``rect`` (F analytic on the closed rectangle)."""
    return count_zeros_report(fn, rect, ctx, step).count


# --- critical line -----------------------------------------------------------

def default_scan_step(fn, t_max) -> float:
    """0.02, halved until it is well below the expected zero spacing at ``t_max``."""
    fid = FunctionId.parse(fn)
    weight = 1 if fid in (FunctionId.XI, FunctionId.CHI) else 3
    t = max(abs(float(t_max)), 2 * math.pi)
    spacing = 2 * math.pi / (weight * math.log(t / (2 * math.pi) + math.e))
    step = DEFAULT_SCAN_STEP
    while step > spacing / 25:
        step /= 2
    return step


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def scan_line_zeros(fn, t_min, t_max, step: float | None = None,
                    ctx: PrecisionContext | None = None, max_halvings: int = 6) -> ScanResult:
    """Sign-change brackets of the critical-line surrogate of F on [t_min, t_max].

    A sample whose |value| dips sharply below both neighbours without a sign
    change is probed at finer steps; an unresolved dip is reported as a
    warning and the scan continues.
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    t_min, t_max = ctx.real(t_min), ctx.real(t_max)
    result = ScanResult()
    if t_max <= t_min:
        return result
    step = default_scan_step(fn, t_max) if step is None else step
    v = surrogate(fn, ctx)
    n = max(1, int(math.ceil(float((t_max - t_min) / step))))
    ts = [t_min + (t_max - t_min) * k / n for k in range(n + 1)]
    vals = [v(t) for t in ts]
    result.evaluations += len(ts)

    found = []
    for k in range(n):
        sa, sb = _sign(vals[k]), _sign(vals[k + 1])
        if sa == 0:
            if k == 0 or _sign(vals[k - 1]) != 0:
                found.append((ts[k], ts[k]))
        elif sb != 0 and sa != sb:
            found.append((ts[k], ts[k + 1]))
    if _sign(vals[n]) == 0:
        found.append((ts[n], ts[n]))

    for k in range(1, n):
        a, m, b = vals[k - 1], vals[k], vals[k + 1]
        if m == 0 or _sign(a) != _sign(m) or _sign(b) != _sign(m):
            continue
        if abs(m) < abs(a) and abs(m) < abs(b) and m * m < abs(a * b) / 4:
            extra = _probe(v, ts[k - 1], ts[k + 1], max_halvings, result)
            if extra:
                found.extend(extra)
            else:
                result.warnings.append(
                    f"step too coarse: unresolved dip near t={mp.nstr(ts[k], 8)}")
    found.sort(key=lambda br: br[0])
    result.brackets = _dedupe(found)
    return result


def _probe(v, a, b, max_halvings, result):
    """Look for a hidden pair of sign changes in [a, b] by repeated halving."""
    for j in range(2, max_halvings + 2):
        n = 2 ** j
        ts = [a + (b - a) * k / n for k in range(n + 1)]
        vals = [v(t) for t in ts]
        result.evaluations += len(ts)
        brackets = [(ts[k], ts[k + 1]) for k in range(n)
                    if _sign(vals[k]) * _sign(vals[k + 1]) < 0]
        if brackets:
            return brackets
    return []


def _dedupe(brackets):
    out = []
    for br in brackets:
        if out and br[0] <= out[-1][1] and br[1] <= out[-1][1]:
            continue
        out.append(br)
    return out


def _illinois(v, a, b, tol, max_iter, mp):
    fa, fb = v(a), v(b)
    if fa == 0:
        return a, a
    if fb == 0:
        return b, b
    if _sign(fa) == _sign(fb):
        raise ValueError("bracket has no sign change")
    side = 0
    for _ in range(max_iter):
        if abs(b - a) <= tol:
            break
        c = (a * fb - b * fa) / (fb - fa)
        if not (min(a, b) < c < max(a, b)):
            c = (a + b) / 2
        fc = v(c)
        if fc == 0:
            return c, c
        if _sign(fc) == _sign(fb):
            b, fb = c, fc
            if side == -1:
                fa /= 2
            side = -1
        else:
            a, fa = c, fc
            if side == 1:
                fb /= 2
            side = 1
    else:
        raise NonConvergenceError("bracket refinement did not converge", best=(a + b) / 2)
    return a, b


def refine_zero(fn, seed, tol=None, ctx: PrecisionContext | None = None,
                max_iter: int = 200) -> ZeroRecord:
    """Refine a zero from a sign-change bracket (t1, t2) or from a complex seed.

    Brackets are shrunk by the Illinois variant of regula falsi on the line
    surrogate, so the result lies exactly on Re s = 1/2.  Complex seeds use the
    secant iteration with difference quotients.
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    tol = ctx.tol(ctx.bits // 4) if tol is None else ctx.real(tol)
    F = _evaluator(fn, ctx)
    fid = _fid_or_none(fn)
    if isinstance(seed, (tuple, list)):
        v = surrogate(fn, ctx)
        t1, t2 = ctx.real(seed[0]), ctx.real(seed[1])
        a, b = _illinois(v, t1, t2, tol, max_iter, mp)
        loc = mp.mpc(mp.mpf(0.5), (a + b) / 2)
        val = F(loc)
        return ZeroRecord(loc, abs(val), _scaled(F, loc, val, ctx), "line_scan", fid)

    s0 = ctx.complex(seed)
    s1 = s0 + mp.mpf(10) ** -4 * (1 + 1j)
    f0, f1 = F(s0), F(s1)
    best = min(((abs(f0), s0), (abs(f1), s1)), key=lambda x: x[0])
    for _ in range(max_iter):
        if f1 == f0:
            break
        s2 = s1 - f1 * (s1 - s0) / (f1 - f0)
        f2 = F(s2)
        if abs(f2) < best[0]:
            best = (abs(f2), s2)
        if abs(s2 - s1) <= tol * max(1, abs(s2)) and abs(s2 - s1) > 0:
            loc = s2
            return ZeroRecord(loc, abs(f2), _scaled(F, loc, f2, ctx), "refinement", fid)
        if f2 == 0:
            return ZeroRecord(s2, mp.mpf(0), mp.mpf(0), "refinement", fid)
        s0, f0, s1, f1 = s1, f1, s2, f2
    raise NonConvergenceError("secant iteration did not converge", best=best[1])


def line_zeros(fn, t_min, t_max, step=None, ctx: PrecisionContext | None = None, tol=None):
    """Scan and refine: the zeros of F on the critical line with t in [t_min, t_max]."""
    ctx = ctx or default_context()
    scan = scan_line_zeros(fn, t_min, t_max, step, ctx)
    zeros = [refine_zero(fn, br, tol, ctx) for br in scan.brackets]
    return zeros, scan.warnings


# --- census -------------------------------------------------------------------

def _panel_task(args):
    fid_value, bounds, bits, step = args
    ctx = create_context(bits)
    rect = Rectangle(*bounds)
    rc = count_zeros_report(FunctionId.parse(fid_value), rect, ctx, step)
    return rc.count, rc.nudges, rc.rectangle.as_strings(ctx)


def _cuts(ordinates, t0, top, panel_height, mp):
    """Panel boundaries near multiples of ``panel_height``, each in a gap between line zeros."""
    cuts = [t0]
    target = t0 + panel_height
    while target < top - panel_height / 2:
        below = [g for g in ordinates if g < target]
        above = [g for g in ordinates if g >= target]
        if below and above:
            cut = (below[-1] + above[0]) / 2
        else:
            cut = mp.mpf(target)
        if cut > cuts[-1] + 1:
            cuts.append(cut)
        target += panel_height
    cuts.append(top)
    return cuts


def zero_census(fn, height, strip: Rectangle | None = None, ctx: PrecisionContext | None = None,
                step: float | None = None, panel_height: float = 10, count_step: float = 0.1,
                workers: int = 1) -> CensusReport:
    """Compare a rectangle count with an on-line count up to ``height``.

    The strip is cut into panels whose horizontal edges sit midway between
    consecutive line zeros.  The lower edge is lifted to t = 0.01 so zeros on
    the real axis are excluded; for entire functions those are counted
    separately in a thin strip around the axis.
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    fid = FunctionId.parse(fn)
    height = ctx.real(height)
    strip = strip or Rectangle(-5, 6, 0, height)
    a, b, c, _ = strip.bounds(ctx)
    if not a < 0.5 < b:
        raise ValueError("census strip must straddle Re s = 1/2")
    t0 = max(c, mp.mpf(CENSUS_T0))
    warnings = []

    # Scan a little past the top so a zero close to it is seen.
    zeros, w = line_zeros(fid, t0, height + 1, step, ctx)
    warnings.extend(w)
    ords = [z.location.imag for z in zeros]
    top = height
    near = [g for g in ords if abs(g - height) < 0.02]
    if near:
        nxt = [g for g in ords if g > near[0]]
        gap = (nxt[0] - near[0]) / 2 if nxt else mp.mpf(0.1)
        top = near[0] + min(mp.mpf(0.05), gap)
        warnings.append(f"top edge moved to t={mp.nstr(top, 10)} to clear a zero")
    zeros = [z for z in zeros if z.location.imag < top]
    ords = [g for g in ords if g < top]

    cuts = _cuts(ords, t0, top, panel_height, mp)
    rects = [Rectangle(a, b, cuts[k], cuts[k + 1]) for k in range(len(cuts) - 1)]
    if workers > 1:
        tasks = [(fid.value, r.as_strings(ctx), ctx.bits, count_step) for r in rects]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_panel_task, tasks))
        counted = [(k, n, Rectangle(*bnds)) for k, n, bnds in outcomes]
    else:
        counted = []
        for r in rects:
            rc = count_zeros_report(fid, r, ctx, count_step)
            counted.append((rc.count, rc.nudges, rc.rectangle))

    panels, suspects = [], []
    for (k, nudges, used), lo, hi in zip(counted, cuts, cuts[1:]):
        line_k = sum(1 for g in ords if lo <= g < hi)
        panels.append(Panel(used, k, line_k, tuple(nudges)))
        if k != line_k:
            suspects.append(used)

    real_count = None
    if not fid.poles:
        real_count = count_zeros_rect(fid, Rectangle(a, b, -t0, t0), ctx, count_step / 10)

    return CensusReport(
        function=fid,
        height=top,
        rect_count=sum(p.rect_count for p in panels),
        line_count=len(zeros),
        off_line_suspects=suspects,
        zeros=zeros,
        panels=panels,
        real_axis_count=real_count,
        warnings=warnings,
    )


# --- gap check and region bounds -----------------------------------------------------

@dataclass(frozen=True)
class GapResult:
    ok: bool
    witnesses: tuple

    def __bool__(self) -> bool:
        return self.ok


def gap_check(zeros: Sequence, t, complete_to=None) -> GapResult:
    """Two distinct ordinates within 10.1 of |t|, given a list complete past |t| + 10.1.

    ``zeros`` are positive ordinates; by symmetry the check is done at |t|.
    The witnesses are the two nearest ordinates, returned in increasing order.
    """
    t = abs(t)
    if t < GAP_MIN_T:
        raise ValueError(f"gap check needs |t| >= {GAP_MIN_T}")
    ords = sorted({abs(g) for g in zeros})
    reach = max(ords) if complete_to is None else complete_to
    if not ords or reach < t + GAP_RADIUS:
        raise ValueError("list not high enough")
    close = sorted((g for g in ords if abs(t - g) <= GAP_RADIUS), key=lambda g: abs(t - g))
    if len(close) < 2:
        return GapResult(False, tuple(close))
    return GapResult(True, tuple(sorted(close[:2])))


@dataclass
class RegionReport:
    kind: str
    maxima: dict            # name -> max value over the grid
    locations: dict         # name -> grid point of the max
    bounds: dict            # name -> bound the max must stay under
    points: int

    @property
    def all_below(self) -> bool:
        return all(self.maxima[k] < self.bounds[k] for k in self.maxima)

    def to_dict(self, ctx: PrecisionContext | None = None) -> dict:
        ctx = ctx or default_context()
        return {
            "kind": self.kind,
            "points": self.points,
            "all_below": self.all_below,
            "quantities": {
                k: {"max": format_value(self.maxima[k], ctx, 12),
                    "at": format_value(self.locations[k], ctx, 12),
                    "bound": format_value(self.bounds[k], ctx, 6)}
                for k in sorted(self.maxima)
            },
        }


def witness_products(s, rho0, rho, ctx: PrecisionContext):
    """The two products that must stay below 1 for a witness zero ``rho`` of xi."""
    mp = ctx.mp
    c0, c = mp.conj(rho0), mp.conj(rho)
    second = abs((2 * s - 1 - (1 - c)) / (2 * s - rho))
    p1 = abs((s - 1 + c0) / (s - rho0)) * second
    p2 = abs((s - 1 + rho0) / (s - c0)) * second
    return p1, p2


def exceptional_zero(ctx: PrecisionContext | None = None):
    """The zero of f near 0.927 + 3.20i."""
    ctx = ctx or default_context()
    return refine_zero(FunctionId.F, "0.9+3.2i", None, ctx).location


def verify_region_bounds(kind: str, sigmas, ts, ctx: PrecisionContext | None = None,
                         xi_zeros: Sequence | None = None, rho0=None) -> RegionReport:
    """Maximum of a bounded quantity over the grid ``sigmas`` x ``ts``.

    kinds: ``prop32_ratio`` for |g(1-s)/g(s)|; ``lemma39_inequality`` for the
    two products built from the exceptional zero of f and the two witness
    zeros of xi nearest to t; ``r_bound`` for |R1|, |R2|, |R3|.
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    sigmas = [ctx.real(x) for x in sigmas]
    ts = [ctx.real(x) for x in ts]
    maxima, locations = {}, {}

    def record(name, value, s):
        if name not in maxima or value > maxima[name]:
            maxima[name] = value
            locations[name] = s

    if kind == "prop32_ratio":
        bounds = {"ratio": mp.mpf(1)}
        for sg in sigmas:
            for t in ts:
                s = mp.mpc(sg, t)
                record("ratio", abs(g_aux(1 - s, ctx) / g_aux(s, ctx)), s)
    elif kind == "lemma39_inequality":
        rho0 = exceptional_zero(ctx) if rho0 is None else ctx.complex(rho0)
        if xi_zeros is None:
            top = max(abs(t) for t in ts) + GAP_RADIUS + 1
            found, _ = line_zeros(FunctionId.XI, 1, top, None, ctx)
            xi_zeros = [z.location.imag for z in found]
            complete = top
        else:
            complete = None
        bounds = {"product_1": mp.mpf(1), "product_2": mp.mpf(1)}
        for t in ts:
            gap = gap_check(xi_zeros, t, complete)
            if not gap:
                raise ValueError(f"no two witness zeros near t={t}")
            for sg in sigmas:
                s = mp.mpc(sg, t)
                for gamma in gap.witnesses:
                    rho = mp.mpc(mp.mpf(0.5), gamma if t >= 0 else -gamma)
                    p1, p2 = witness_products(s, rho0, rho, ctx)
                    record("product_1", p1, s)
                    record("product_2", p2, s)
    elif kind == "r_bound":
        bounds = {"R1": mp.mpf(0.5), "R2": mp.mpf(0.1), "R3": mp.mpf(0.3)}
        for sg in sigmas:
            for t in ts:
                s = mp.mpc(sg, t)
                rem = remainders(s, ctx)
                record("R1", abs(rem.r1), s)
                record("R2", abs(rem.r2), s)
                record("R3", abs(rem.r3), s)
    else:
        raise ValueError(f"unknown bound kind {kind!r}")
    return RegionReport(kind, maxima, locations, bounds, len(sigmas) * len(ts))


__all__ = [
    "BoundaryProximityError", "CensusReport", "GapResult", "NonConvergenceError", "Panel",
    "Rectangle", "RectCount", "RegionReport", "ScanResult", "ZeroRecord", "count_zeros_rect",
    "count_zeros_report", "default_scan_step", "exceptional_zero", "gap_check",
    "witness_products", "line_zeros", "refine_zero", "scan_line_zeros", "surrogate",
    "verify_region_bounds", "zero_census",
]
