"""Exact symbolic sums of products of linear forms and xi factors.

A term is

    coeff * prod (L_k)^e_k * prod xi(M_j)^f_j * prod xi(q_i)^g_i

with integer-coefficient linear forms L, M in z_1..z_n, rational constants q
and exact rational coefficients.  Terms are kept in a normal form so that sums
merge structurally:

* polynomial factors are primitive (coprime integers) with positive leading
  coefficient, the scale going into ``coeff``;
* xi arguments use xi(L) = xi(1 - L) to pick the representative whose leading
  coefficient is positive; constant arguments are moved to ``xi_constants``
  with q >= 1/2;
* factors with exponent zero are dropped, and zero terms are removed from sums.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class LinearForm:
    coeffs: tuple
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "constant", _frac(self.constant))

    @classmethod
    def variable(cls, n: int, i: int, constant=0) -> "LinearForm":
        return cls(tuple(1 if k == i else 0 for k in range(n)), constant)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs)

    def leading(self) -> int:
        for c in self.coeffs:
            if c:
                return c
        return 0

    def __add__(self, other) -> "LinearForm":
        if isinstance(other, LinearForm):
            return LinearForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                              self.constant + other.constant)
        return LinearForm(self.coeffs, self.constant + _frac(other))

    def __radd__(self, other) -> "LinearForm":
        return self + other

    def __neg__(self) -> "LinearForm":
        return LinearForm(tuple(-c for c in self.coeffs), -self.constant)

    def __sub__(self, other) -> "LinearForm":
        return self + (-other if isinstance(other, LinearForm) else -_frac(other))

    def __rsub__(self, other) -> "LinearForm":
        return (-self) + other

    def scale(self, k: int) -> "LinearForm":
        return LinearForm(tuple(k * c for c in self.coeffs), k * self.constant)

    def primitive(self) -> tuple:
        """(scale, P) with self = scale * P, P coprime-integer with positive leading term."""
        den = self.constant.denominator
        ints = [c * den for c in self.coeffs] + [self.constant.numerator]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        if g == 0:
            return Fraction(0), self
        lead = next(x for x in ints if x)
        if lead < 0:
            g = -g
        prim = LinearForm(tuple(c * den // g for c in self.coeffs), Fraction(self.constant.numerator, g))
        return Fraction(g, den), prim

    def restrict(self, i: int) -> "LinearForm":
        """Substitute z_i = z_{i+1} + 1 (0-based ``i``)."""
        c = list(self.coeffs)
        a = c[i]
        c[i] = 0
        c[i + 1] += a
        return LinearForm(tuple(c), self.constant + a)

    def substitute_affine(self, index: int, mult: int, shift) -> "LinearForm":
        """Replace z_index by mult * z_index + shift."""
        c = list(self.coeffs)
        a = c[index]
        c[index] = a * mult
        return LinearForm(tuple(c), self.constant + a * _frac(shift))

    def evaluate(self, values, mp=None):
        acc = self.constant if mp is None else mp.mpf(self.constant.numerator) / self.constant.denominator
        for c, v in zip(self.coeffs, values):
            if c:
                acc = acc + c * v
        return acc

    def text(self, names=None) -> str:
        names = names or [f"z{k + 1}" for k in range(self.n)]
        parts = []
        for c, name in zip(self.coeffs, names):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign}{mag}{name}")
        if self.constant or not parts:
            sign = "-" if self.constant < 0 else "+"
            parts.append(f"{sign}{abs(self.constant)}")
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    def __str__(self) -> str:
        return self.text()


def _canonical_xi_arg(form: LinearForm) -> LinearForm:
    """Representative of {L, 1-L} with positive leading coefficient."""
    if form.leading() < 0:
        return 1 - form
    return form


def _canonical_xi_const(q: Fraction) -> Fraction:
    return q if q >= Fraction(1, 2) else 1 - q


class ZeroTermError(ZeroDivisionError):
    """A polynomial factor is identically zero with a negative exponent."""


@dataclass(frozen=True)
class SymbolicTerm:
    coeff: Fraction
    poly_factors: tuple     # ((LinearForm, exp), ...) sorted
    xi_factors: tuple       # ((LinearForm, exp), ...) sorted
    xi_constants: tuple     # ((Fraction, exp), ...) sorted

    @property
    def key(self) -> tuple:
        return (self.poly_factors, self.xi_factors, self.xi_constants)

    @property
    def n(self) -> int:
        for form, _ in self.poly_factors + self.xi_factors:
            return form.n
        return 0

    def with_coeff(self, coeff) -> "SymbolicTerm":
        return SymbolicTerm(_frac(coeff), self.poly_factors, self.xi_factors, self.xi_constants)

    def text(self, names=None) -> str:
        parts = [str(self.coeff)]
        parts += [f"({f.text(names)})^{e}" for f, e in self.poly_factors]
        parts += [f"xi({f.text(names)})^{e}" for f, e in self.xi_factors]
        parts += [f"xi({q})^{e}" for q, e in self.xi_constants]
        return " * ".join(parts)

    def __str__(self) -> str:
        return self.text()

    def map_forms(self, fn) -> "SymbolicTerm":
        """Apply ``fn`` to every linear form and renormalise."""
        return make_term(self.coeff,
                         [(fn(f), e) for f, e in self.poly_factors],
                         [(fn(f), e) for f, e in self.xi_factors],
                         list(self.xi_constants))

    def times(self, other: "SymbolicTerm") -> "SymbolicTerm":
        return make_term(self.coeff * other.coeff,
                         list(self.poly_factors) + list(other.poly_factors),
                         list(self.xi_factors) + list(other.xi_factors),
                         list(self.xi_constants) + list(other.xi_constants))


def make_term(coeff, poly: Iterable = (), xi: Iterable = (), xi_const: Iterable = ()) -> SymbolicTerm | None:
    """Normal form of a term; ``None`` when the term is zero."""
    coeff = _frac(coeff)
    if coeff == 0:
        return None
    pexp = defaultdict(int)
    for form, e in poly:
        if e == 0:
            continue
        scale, prim = form.primitive()
        if scale == 0:
            if e > 0:
                return None
            raise ZeroTermError(f"identically zero factor ({form}) with exponent {e}")
        coeff *= scale ** e
        if prim.is_constant:
            continue  # prim is the constant 1
        pexp[prim] += e
    xexp = defaultdict(int)
    cexp = defaultdict(int)
    for q, e in xi_const:
        cexp[_canonical_xi_const(_frac(q))] += e
    for form, e in xi:
        if form.is_constant:
            cexp[_canonical_xi_const(form.constant)] += e
        else:
            xexp[_canonical_xi_arg(form)] += e
    for q in cexp:
        if q == 1 and cexp[q]:
            raise ZeroTermError("xi evaluated at its pole")
    return SymbolicTerm(
        coeff,
        tuple(sorted((f, e) for f, e in pexp.items() if e)),
        tuple(sorted((f, e) for f, e in xexp.items() if e)),
        tuple(sorted((q, e) for q, e in cexp.items() if e)),
    )


class SymbolicSum:
    """A sum of normal-form terms, merged on insert."""

    def __init__(self, n: int, terms: Iterable[SymbolicTerm | None] = ()):
        self.n = n
        self._terms: dict = {}
        for t in terms:
            self.add(t)

    def add(self, term: SymbolicTerm | None) -> None:
        if term is None:
            return
        prev = self._terms.get(term.key)
        coeff = term.coeff + (prev.coeff if prev is not None else 0)
        if coeff == 0:
            self._terms.pop(term.key, None)
        else:
            self._terms[term.key] = term.with_coeff(coeff)

    @property
    def terms(self) -> list[SymbolicTerm]:
        return sorted(self._terms.values(), key=lambda t: t.text())

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "SymbolicSum") -> "SymbolicSum":
        return SymbolicSum(self.n, list(self._terms.values()) + list(other._terms.values()))

    def scaled(self, k) -> "SymbolicSum":
        return SymbolicSum(self.n, [t.with_coeff(t.coeff * _frac(k)) for t in self._terms.values()])

    def __sub__(self, other: "SymbolicSum") -> "SymbolicSum":
        return self + other.scaled(-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolicSum) and len(self - other) == 0

    def map_forms(self, fn) -> "SymbolicSum":
        return SymbolicSum(self.n, [t.map_forms(fn) for t in self._terms.values()])

    def times(self, factor: SymbolicTerm) -> "SymbolicSum":
        return SymbolicSum(self.n, [t.times(factor) for t in self._terms.values()])

    def variables_used(self) -> set:
        used = set()
        for t in self._terms.values():
            for f, _ in t.poly_factors + t.xi_factors:
                used.update(i for i, c in enumerate(f.coeffs) if c)
        return used

    def serialize(self, names=None) -> str:
        """Canonical text: one term per line, sorted."""
        return "\n".join(sorted(t.text(names) for t in self._terms.values()))

    def __str__(self) -> str:
        return self.serialize()

    def __repr__(self) -> str:
        return f"SymbolicSum(n={self.n}, terms={len(self)})"


def reflect(sm: SymbolicSum, index: int, c) -> SymbolicSum:
    """Substitute z_index -> c - z_index in every term."""
    return sm.map_forms(lambda f: f.substitute_affine(index, -1, c))


def shift(sm: SymbolicSum, index: int, delta) -> SymbolicSum:
    """Substitute z_index -> z_index + delta."""
    return sm.map_forms(lambda f: f.substitute_affine(index, 1, delta))
