"""Root system of type C_n and its Weyl group of signed permutations.

Vectors are integer tuples in the basis e_1..e_n.  A Weyl element acts by
w(e_i) = signs[i] * e_{perm[i]}; the name "(12)c1" means: flip e_1 first, then
swap indices 1 and 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

MAX_RANK = 8


def unit(n: int, i: int, scale: int = 1) -> tuple:
    v = [0] * n
    v[i] = scale
    return tuple(v)


def is_positive(v) -> bool:
    """Positive iff the first non-zero coordinate is positive."""
    for x in v:
        if x:
            return x > 0
    return False


def pairing(v, w) -> int:
    return sum(a * b for a, b in zip(v, w))


@dataclass(frozen=True)
class RootSystem:
    n: int
    positive_roots: tuple
    simple_roots: tuple
    coroots: dict
    rho: tuple

    def coroot(self, root) -> tuple:
        root = tuple(root)
        if root in self.coroots:
            return self.coroots[root]
        neg = tuple(-x for x in root)
        return tuple(-x for x in self.coroots[neg])


def _adjacent_indices(n: int):
    """Positions of e_i - e_{i+1} in the lexicographic list of e_i - e_j."""
    pos, k = [], 0
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1:
                pos.append(k)
            k += 1
    return pos


@lru_cache(maxsize=None)
def root_system_c(n: int) -> RootSystem:
    """C_n: positive roots e_i - e_j, e_i + e_j (i < j) and 2e_i.

    Coroots: (e_i +- e_j)^v = e_i +- e_j and (2e_i)^v = e_i, so that
    <rho, alpha^v> = 1 on every simple root with rho = sum (n - i + 1) e_i.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    diff, plus, long_ = [], [], []
    for i in range(n):
        for j in range(i + 1, n):
            d = [0] * n
            d[i], d[j] = 1, -1
            diff.append(tuple(d))
            p = [0] * n
            p[i], p[j] = 1, 1
            plus.append(tuple(p))
        long_.append(unit(n, i, 2))
    positive = tuple(diff + plus + long_)
    simple = tuple(diff[k] for k in _adjacent_indices(n)) + (unit(n, n - 1, 2),)
    coroots = {r: r for r in diff + plus}
    coroots.update({r: tuple(x // 2 for x in r) for r in long_})
    rho = tuple(n - i for i in range(n))
    return RootSystem(n, positive, simple, coroots, rho)


@dataclass(frozen=True)
class WeylElement:
    perm: tuple    # 0-based images of the indices
    signs: tuple   # +1 / -1

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(n)), (1,) * n)

    def apply(self, v) -> tuple:
        out = [0] * self.n
        for i, x in enumerate(v):
            out[self.perm[i]] = self.signs[i] * x
        return tuple(out)

    def __call__(self, v) -> tuple:
        return self.apply(v)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self o other (apply ``other`` first)."""
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.n))
        return WeylElement(perm, signs)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.compose(other)

    def inverse(self) -> "WeylElement":
        perm = [0] * self.n
        signs = [1] * self.n
        for i, j in enumerate(self.perm):
            perm[j] = i
            signs[j] = self.signs[i]
        return WeylElement(tuple(perm), tuple(signs))

    @property
    def name(self) -> str:
        cycles = []
        seen = set()
        for start in range(self.n):
            if start in seen or self.perm[start] == start:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(str(k + 1))
                k = self.perm[k]
            cycles.append("(" + "".join(cyc) + ")")
        flips = "".join(f"c{i + 1}" for i in range(self.n) if self.signs[i] < 0)
        name = "".join(cycles) + flips
        return name or "1"

    def __str__(self) -> str:
        return self.name


def enumerate_weyl(n: int) -> list[WeylElement]:
    """All 2^n n! signed permutations; identity first, then by permutation and sign pattern."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    if n > MAX_RANK:
        raise ValueError(f"size overflow: rank {n} exceeds {MAX_RANK}")
    out = []
    for perm in itertools.permutations(range(n)):
        for flips in itertools.product((1, -1), repeat=n):
            out.append(WeylElement(perm, flips))
    return out


def weyl_action(w: WeylElement, form):
    """Apply ``w`` to a root vector or to the coefficient vector of a LinearForm."""
    from .symbolic import LinearForm

    if isinstance(form, LinearForm):
        if len(form.coeffs) != w.n:
            raise ValueError("dimension mismatch")
        return LinearForm(w.apply(form.coeffs), form.constant)
    if len(form) != w.n:
        raise ValueError("dimension mismatch")
    return w.apply(form)


def flipped_roots(w: WeylElement, rs: RootSystem) -> list:
    """Positive roots sent to negative roots by ``w``."""
    return [a for a in rs.positive_roots if not is_positive(w.apply(a))]
