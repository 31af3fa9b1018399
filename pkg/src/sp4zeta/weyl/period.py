"""Weyl-group period sums for Sp(2n), their iterated residues and normalisation.

For each w in W(C_n) the term is

    prod_{alpha simple} 1/(<lambda, w^-1 alpha^v> - 1)
        * prod_{alpha > 0, w alpha < 0} xi(<lambda, alpha^v>) / xi(<lambda, alpha^v> + 1)

with lambda = sum z_i e_i.  Residues are taken along z_1 - z_2 = 1, then
z_2 - z_3 = 1, and so on, leaving a function of z_n.  Poles are detected
exactly: a polynomial factor vanishing identically on the hyperplane, or a xi
argument restricting to the constant 0 or 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..precision import PrecisionContext, default_context
from ..special import PoleError, xi, xi_residue
from .roots import WeylElement, enumerate_weyl, flipped_roots, root_system_c
from .symbolic import LinearForm, SymbolicSum, SymbolicTerm, make_term, reflect, shift

MAX_PERIOD_RANK = 5
POLE_GUARD = 1e-6


class HigherOrderPoleError(ArithmeticError):
    """A term has a pole of order >= 2 along the residue hyperplane."""


class ClearingFactorError(ValueError):
    """No finite clearing factor exists for the sum."""


def _lam_pairing(n: int, vec, constant=0) -> LinearForm:
    return LinearForm(tuple(vec), constant)


def build_period_term(w: WeylElement, n: int | None = None) -> SymbolicTerm:
    """Contribution of ``w`` to the period sum (truncation parameter T = 0)."""
    n = n or w.n
    rs = root_system_c(n)
    winv = w.inverse()
    poly = [(_lam_pairing(n, winv.apply(rs.coroot(a)), -1), -1) for a in rs.simple_roots]
    xis = []
    for a in flipped_roots(w, rs):
        cv = rs.coroot(a)
        xis.append((_lam_pairing(n, cv, 0), 1))
        xis.append((_lam_pairing(n, cv, 1), -1))
    term = make_term(1, poly, xis)
    if term is None:  # pragma: no cover - every term has coefficient 1
        raise AssertionError("period term vanished")
    return term


def period_terms(n: int) -> list[tuple[WeylElement, SymbolicTerm]]:
    return [(w, build_period_term(w, n)) for w in enumerate_weyl(n)]


def weyl_sum(n: int) -> SymbolicSum:
    """The unresidued period sum over the whole Weyl group."""
    return SymbolicSum(n, [t for _, t in period_terms(n)])


# --- residues -------------------------------------------------------------------

def term_residue(term: SymbolicTerm, i: int) -> SymbolicTerm | None:
    """Residue of one term along z_i - z_{i+1} = 1 (``i`` is 1-based).

    With u = z_i - z_{i+1}, a form L equals L|_H + a (u - 1), where a is the
    z_i coefficient of L.  Returns ``None`` when the term is regular there.
    """
    k = i - 1
    order = 0
    lead = Fraction(1)
    poly, xis = [], []
    for form, e in term.poly_factors:
        r = form.restrict(k)
        a = form.coeffs[k]
        if r.is_constant and r.constant == 0:
            order += e
            lead *= Fraction(a) ** e
        else:
            poly.append((r, e))
    for form, e in term.xi_factors:
        r = form.restrict(k)
        a = form.coeffs[k]
        if r.is_constant and r.constant in (0, 1):
            # xi(c + a(u-1)) ~ Res_c / (a (u - 1))
            order -= e
            lead *= (Fraction(xi_residue(int(r.constant))) / a) ** e
        else:
            xis.append((r, e))
    if order >= 0:
        return None
    if order < -1:
        raise HigherOrderPoleError(f"pole of order {-order} along z{i} - z{i + 1} = 1 in {term}")
    return make_term(term.coeff * lead, poly, xis, term.xi_constants)


def take_residue(sm: SymbolicSum, i: int) -> SymbolicSum:
    """Residue of a sum along z_i - z_{i+1} = 1 (``i`` is 1-based)."""
    if not 1 <= i < sm.n:
        raise ValueError(f"hyperplane index {i} out of range for rank {sm.n}")
    return SymbolicSum(sm.n, [term_residue(t, i) for t in sm.terms])


def assemble_period(n: int) -> SymbolicSum:
    """Weyl sum followed by the iterated residues; a function of z_n."""
    if not 1 <= n <= MAX_PERIOD_RANK:
        raise ValueError(f"rank must be in 1..{MAX_PERIOD_RANK}")
    sm = weyl_sum(n)
    for i in range(1, n):
        sm = take_residue(sm, i)
    return sm


# --- normalisation ----------------------------------------------------------------

def clearing_factor(sm: SymbolicSum) -> SymbolicTerm:
    """Smallest product of xi factors making every xi exponent non-negative."""
    need_forms: dict = {}
    need_consts: dict = {}
    for t in sm.terms:
        for f, e in t.xi_factors:
            if e < 0:
                need_forms[f] = max(need_forms.get(f, 0), -e)
        for q, e in t.xi_constants:
            if e < 0:
                need_consts[q] = max(need_consts.get(q, 0), -e)
    term = make_term(1, (), list(need_forms.items()), list(need_consts.items()))
    if term is None:
        raise ClearingFactorError("clearing factor not found")
    return term


def find_reflection_constant(sm: SymbolicSum, index: int, candidates=None):
    """A rational c with sum(c - z) == sum(z) as symbolic sums, or ``None``."""
    if candidates is None:
        candidates = [Fraction(k, 2) for k in range(-12, 13)]
    for c in candidates:
        if reflect(sm, index, c) == sm:
            return Fraction(c)
    return None


@dataclass
class NormalizedZeta:
    n: int
    period: SymbolicSum
    factor: SymbolicTerm
    xi_o: SymbolicSum                 # in z_n
    reflection: Fraction | None        # c with xi_o(c - z) = xi_o(z), when found symbolically
    xi_s: SymbolicSum | None           # xi_o(s + (c - 1)/2), symmetric under s -> 1 - s

    @property
    def shift(self):
        return None if self.reflection is None else (self.reflection - 1) / 2


def normalize_to_zeta(period: SymbolicSum, n: int, reflection=None) -> NormalizedZeta:
    """Clear xi denominators, then move the symmetry centre to s = 1/2.

    ``reflection`` may be given; otherwise the symbolic search over half-integers
    is used and ``xi_s`` stays ``None`` if it finds nothing.
    """
    factor = clearing_factor(period)
    xi_o = period.times(factor)
    c = Fraction(reflection) if reflection is not None else find_reflection_constant(xi_o, n - 1)
    xi_s = None if c is None else shift(xi_o, n - 1, (c - 1) / 2)
    return NormalizedZeta(n, period, factor, xi_o, c, xi_s)


def closed_form_symbolic() -> SymbolicSum:
    """The six-term Sp(4) zeta in the variable z_2 = s, written out directly."""
    n = 2
    s = LinearForm.variable(n, 1)

    def term(coeff, polys, xis, consts=()):
        return make_term(coeff, [(p, -1) for p in polys], [(x, 1) for x in xis], consts)

    xi2 = [(Fraction(2), 1)]
    return SymbolicSum(n, [
        term(1, [s - 2], [s + 1, s.scale(2)], xi2),
        term(-1, [s + 1], [s - 1, s.scale(2) - 1], xi2),
        term(-1, [s.scale(2) - 2], [s + 1, s.scale(2)]),
        term(1, [s.scale(2)], [s - 1, s.scale(2) - 1]),
        term(-1, [s.scale(2) - 2, s + 1], [s, s.scale(2)]),
        term(-1, [s.scale(2), s - 2], [s, s.scale(2) - 1]),
    ])


# --- numerics ---------------------------------------------------------------------

class _XiCache:
    def __init__(self, ctx: PrecisionContext):
        self.ctx = ctx
        self.values = {}

    def __call__(self, z):
        key = (str(z.real), str(z.imag))
        v = self.values.get(key)
        if v is None:
            r = xi(z, self.ctx)
            if r.at_pole:
                raise PoleError(f"xi pole at {z}")
            v = r.value
            self.values[key] = v
        return v


def _assignment(values, n, ctx):
    mp = ctx.mp
    if not isinstance(values, (list, tuple)):
        values = [mp.mpc(0)] * (n - 1) + [ctx.complex(values)]
    if len(values) != n:
        raise ValueError(f"assignment needs {n} values")
    return [ctx.complex(v) for v in values]


def eval_symbolic(sm: SymbolicSum, assignment, ctx: PrecisionContext | None = None, cache=None):
    """Numeric value of a symbolic sum.

    ``assignment`` is a vector of n values, or a single value for z_n when
    only that variable occurs.  Points within 10^-6 of a factor's pole raise
    :class:`PoleError`.
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    z = _assignment(assignment, sm.n, ctx)
    cache = cache or _XiCache(ctx)
    total = mp.mpc(0)
    for t in sm.terms:
        acc = mp.mpc(t.coeff.numerator) / t.coeff.denominator
        for f, e in t.poly_factors:
            v = f.evaluate(z, mp)
            if e < 0 and abs(v) < POLE_GUARD:
                raise PoleError(f"({f}) vanishes at the assignment")
            acc *= v ** e
        for f, e in t.xi_factors:
            v = f.evaluate(z, mp)
            if abs(v) < POLE_GUARD or abs(v - 1) < POLE_GUARD:
                raise PoleError(f"xi({f}) is at a pole")
            acc *= cache(mp.mpc(v)) ** e
        for q, e in t.xi_constants:
            acc *= cache(mp.mpc(mp.mpf(q.numerator) / q.denominator)) ** e
        total += acc
    return total


@dataclass(frozen=True)
class FESearchResult:
    constant: Fraction
    residual: object
    table: tuple      # ((c, residual), ...) over the grid


def search_functional_equation(sm: SymbolicSum, n: int | None = None, candidates=None,
                               samples: int = 8, ctx: PrecisionContext | None = None,
                               seed: int = 0) -> FESearchResult:
    """Scan reflection constants c; report the one minimising max |F(c - s) - F(s)|.

    The residual at each sample is scaled by max(1, |F(s)|).  Samples are
    drawn with a fixed seed from 0.2 <= Im s <= 3, -1 <= Re s <= 2.
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    n = n or sm.n
    if candidates is None:
        candidates = [Fraction(k, 2) for k in range(-8, 9)]
    rng = random.Random(seed)
    points = []
    while len(points) < samples:
        s = mp.mpc(rng.uniform(-1, 2), rng.uniform(0.2, 3))
        points.append(s)
    cache = _XiCache(ctx)
    base = {}

    def value(s):
        return eval_symbolic(sm, s, ctx, cache)

    for s in points:
        base[str(s)] = value(s)
    table = []
    for c in candidates:
        cc = mp.mpf(c.numerator) / c.denominator
        worst = mp.mpf(0)
        for s in points:
            f = base[str(s)]
            try:
                g = value(cc - s)
            except PoleError:
                worst = mp.inf
                break
            worst = max(worst, abs(g - f) / max(1, abs(f)))
        table.append((Fraction(c), worst))
    best = min(table, key=lambda x: x[1])
    return FESearchResult(best[0], best[1], tuple(table))


def contour_residue(sm: SymbolicSum, i: int, assignment, ctx: PrecisionContext | None = None,
                    radius: float = 0.1, points: int = 64):
    """Numeric residue along z_i - z_{i+1} = 1 by the trapezoid rule on a small circle.

    ``assignment`` fixes every variable except z_i, which is set to
    z_{i+1} + u with u on the circle |u - 1| = radius.
    """
    ctx = ctx or default_context()
    mp = ctx.mp
    z = [ctx.complex(v) for v in assignment]
    k = i - 1
    total = mp.mpc(0)
    r = mp.mpf(radius)
    for j in range(points):
        e = mp.expjpi(mp.mpf(2 * j) / points)
        u = 1 + r * e
        zz = list(z)
        zz[k] = z[k + 1] + u
        total += eval_symbolic(sm, zz, ctx) * r * e
    return total / points


def contribution_table(n: int) -> list[tuple[str, SymbolicTerm, SymbolicTerm | None]]:
    """(name, term, residue along z_1 - z_2 = 1) for every Weyl element."""
    rows = []
    for w, t in period_terms(n):
        res = term_residue(t, 1) if n > 1 else None
        rows.append((w.name, t, res))
    return rows
