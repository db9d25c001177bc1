"""Representation theory of sl2 over the rationals.

The fixed basis is (e, h, f) with [h, e] = 2e, [h, f] = -2f and
[e, f] = h.  The simple module of highest weight m has the weight basis
v_0, ..., v_m with

    h . v_k = (m - 2k) v_k
    e . v_k = k (m - k + 1) v_{k-1}
    f . v_k = v_{k+1}

Decomposition into simples goes by h-eigenspace differencing: the
multiplicity of weight m is dim ker(rho_h - m) - dim ker(rho_h - (m+2)).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import NonIntegralWeightError
from .linear import Mat, kron, rank
from .algebra import LeftModule, LeibnizAlgebra, LieAlgebra, hemi_semidirect

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def sl2() -> LieAlgebra:
    """The rational Lie algebra sl2 in the (e, h, f) basis."""
    z3 = (_ZERO, _ZERO, _ZERO)
    c = [[z3, z3, z3], [z3, z3, z3], [z3, z3, z3]]
    E, H, F = 0, 1, 2
    c[H][E] = (Fraction(2), _ZERO, _ZERO)
    c[E][H] = (Fraction(-2), _ZERO, _ZERO)
    c[H][F] = (_ZERO, _ZERO, Fraction(-2))
    c[F][H] = (_ZERO, _ZERO, Fraction(2))
    c[E][F] = (_ZERO, _ONE, _ZERO)
    c[F][E] = (_ZERO, Fraction(-1), _ZERO)
    return LieAlgebra(3, c, labels=("e", "h", "f"))


class SL2Module:
    """A finite-dimensional sl2-module (a LeftModule over sl2)."""

    __slots__ = ("underlying",)

    def __init__(self, underlying: LeftModule):
        if underlying.algebra != sl2():
            raise ValueError("SL2Module requires a module over sl2")
        object.__setattr__(self, "underlying", underlying)

    def __setattr__(self, name, value):
        raise AttributeError("SL2Module is immutable")

    @property
    def dim(self) -> int:
        return self.underlying.dim

    @property
    def e(self) -> Mat:
        return self.underlying.action[0]

    @property
    def h(self) -> Mat:
        return self.underlying.action[1]

    @property
    def f(self) -> Mat:
        return self.underlying.action[2]

    def __eq__(self, other):
        return isinstance(other, SL2Module) and self.underlying == other.underlying

    def __hash__(self):
        return hash(self.underlying)

    def __repr__(self):
        return f"SL2Module(dim={self.dim})"


@lru_cache(maxsize=None)
def simple_module(m: int) -> SL2Module:
    """The simple sl2-module of highest weight m (dimension m + 1)."""
    if m < 0:
        raise ValueError("highest weight must be nonnegative")
    n = m + 1
    e = [[_ZERO] * n for _ in range(n)]
    h = [[_ZERO] * n for _ in range(n)]
    f = [[_ZERO] * n for _ in range(n)]
    for k in range(n):
        h[k][k] = Fraction(m - 2 * k)
        if k >= 1:
            e[k - 1][k] = Fraction(k * (m - k + 1))
        if k + 1 < n:
            f[k + 1][k] = _ONE
    mats = [Mat(n, n, e), Mat(n, n, h), Mat(n, n, f)]
    return SL2Module(LeftModule(sl2(), n, mats))


def tensor(u: SL2Module, v: SL2Module) -> SL2Module:
    """Tensor product with the diagonal action x (u ox v) =
    (x u) ox v + u ox (x v)."""
    du, dv = u.dim, v.dim
    iu, iv = Mat.identity(du), Mat.identity(dv)
    mats = [
        kron(au, iv) + kron(iu, av)
        for au, av in zip(u.underlying.action, v.underlying.action)
    ]
    return SL2Module(LeftModule(sl2(), du * dv, mats))


def dual(v: SL2Module) -> SL2Module:
    """Dual module, x acting by minus the transpose."""
    mats = [(-a).transpose() for a in v.underlying.action]
    return SL2Module(LeftModule(sl2(), v.dim, mats))


def direct_sum(*mods: SL2Module) -> SL2Module:
    """Block-diagonal direct sum of sl2-modules."""
    total = sum(m.dim for m in mods)
    mats = []
    for idx in range(3):
        grid = [[_ZERO] * total for _ in range(total)]
        off = 0
        for m in mods:
            a = m.underlying.action[idx]
            for i in range(m.dim):
                row = a.row(i)
                for j, x in enumerate(row):
                    if x:
                        grid[off + i][off + j] = x
            off += m.dim
        mats.append(Mat(total, total, grid))
    return SL2Module(LeftModule(sl2(), total, mats))


class WeightMultiset:
    """Multiset of highest weights, i.e. a finite multiset of simples."""

    __slots__ = ("mults",)

    def __init__(self, mults: dict):
        clean = {}
        for w in sorted(mults):
            k = mults[w]
            if k < 0 or w < 0:
                raise ValueError("weights and multiplicities must be nonnegative")
            if k:
                clean[int(w)] = int(k)
        object.__setattr__(self, "mults", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WeightMultiset is immutable")

    def __eq__(self, other):
        return isinstance(other, WeightMultiset) and self.mults == other.mults

    def __hash__(self):
        return hash(tuple(sorted(self.mults.items())))

    def __repr__(self):
        inner = ", ".join(f"{w}: {k}" for w, k in sorted(self.mults.items()))
        return f"WeightMultiset({{{inner}}})"

    def multiplicity(self, w: int) -> int:
        return self.mults.get(w, 0)

    def module_dim(self) -> int:
        return sum((w + 1) * k for w, k in self.mults.items())

    def __add__(self, other: "WeightMultiset") -> "WeightMultiset":
        out = dict(self.mults)
        for w, k in other.mults.items():
            out[w] = out.get(w, 0) + k
        return WeightMultiset(out)


def decompose(v: SL2Module) -> WeightMultiset:
    """Decompose into simples by h-eigenspace differencing.

    Raises NonIntegralWeightError when the integer h-eigenspaces do not
    fill the module (which cannot happen for an actual sl2-module over
    the rationals, but guards corrupted inputs).
    """
    d = v.dim
    if d == 0:
        return WeightMultiset({})
    rho_h = v.h
    null = {}
    total = 0
    for w in range(-(d - 1), d + 2):
        shifted = rho_h - Mat.identity(d).scale(Fraction(w))
        null[w] = d - rank(shifted)
        if -(d - 1) <= w <= d - 1:
            total += null[w]
    if total != d:
        raise NonIntegralWeightError(
            f"integer h-eigenspaces cover {total} of {d} dimensions"
        )
    mults = {}
    for m in range(d):
        k = null[m] - null[m + 2]
        if k < 0:
            raise NonIntegralWeightError("eigenspace dimensions are not unimodal")
        if k:
            mults[m] = k
    out = WeightMultiset(mults)
    if out.module_dim() != d:
        raise NonIntegralWeightError("weight multiset does not account for the module")
    return out


def clebsch_gordan(m: int, n: int) -> WeightMultiset:
    """The decomposition of V_m ox V_n: weights m+n, m+n-2, ..., |m-n|.

    >>> clebsch_gordan(2, 2).mults
    {0: 1, 2: 1, 4: 1}
    """
    if m < 0 or n < 0:
        raise ValueError("weights must be nonnegative")
    return WeightMultiset({w: 1 for w in range(abs(m - n), m + n + 1, 2)})


def hom_dim(a: WeightMultiset, b: WeightMultiset) -> int:
    """dim of the space of sl2-maps between semisimple modules with the
    given decompositions (sum over shared weights of the products)."""
    return sum(k * b.multiplicity(w) for w, k in a.mults.items())


@lru_cache(maxsize=None)
def hemi_sl2(n: int) -> LeibnizAlgebra:
    """The hemi-semidirect product V_n x_hs sl2, module basis first.

    Simple as a Leibniz algebra for n >= 1, with Leibniz kernel V_n and
    Lie quotient sl2.
    """
    if n < 1:
        raise ValueError("hemi-semidirect weight must be >= 1")
    return hemi_semidirect(sl2(), simple_module(n).underlying)
