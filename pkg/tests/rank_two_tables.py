"""Hand-typed rank-2 residue contributions along z1 - z2 = 1, in b = z2."""

from fractions import Fraction

from sp4zeta.weyl import LinearForm, make_term


def _b_term(coeff, polys=(), xis=(), consts=()):
    b = LinearForm.variable(2, 1)
    return make_term(coeff, [(b.scale(k) + c, e) for k, c, e in polys],
                     [(b.scale(k) + c, e) for k, c, e in xis], consts)


def _ratio(k, c):
    """xi(kb + c) / xi(kb + c + 1)."""
    return [(k, c, 1), (k, c + 1, -1)]


_XI2 = [(Fraction(2), -1)]

RESIDUE_ROWS = {
    "1": _b_term(1, [(1, -1, -1)]),
    "(12)": _b_term(Fraction(-1, 2), [(1, 0, -1)], (), _XI2),
    "c1": _b_term(1, [(-2, -2, -1), (1, -1, -1)], _ratio(2, 1) + _ratio(1, 1), _XI2),
    "c2": None,
    "(12)c1": _b_term(1, [(2, 0, -1), (-1, -2, -1)], _ratio(1, 1), _XI2),
    "(12)c2": None,
    "(12)c1c2": _b_term(1, [(-1, -2, -1)], _ratio(1, 0) + _ratio(2, 1) + _ratio(1, 1)),
    "c1c2": _b_term(Fraction(-1, 2), [(-1, -1, -1)], _ratio(1, 0) + _ratio(2, 1) + _ratio(1, 1), _XI2),
}
