"""Cohomology of Leibniz algebras and of Lie algebras.

The Leibniz complex of an algebra h with coefficients in a bimodule M
has cochain spaces CL^n = Hom(h^(ox n), M) and differential

    (d f)(x_0, ..., x_n) =
        sum_{i<n}   (-1)^i     x_i . f(..., x_i^, ..., x_n)
      + (-1)^(n-1)  f(x_0, ..., x_{n-1}) . x_n
      + sum_{i<j}   (-1)^(i+1) f(..., x_i^, ..., [x_i, x_j] at slot j-1, ...)

so in degree zero (d m)(x) = -m.x and HL^0 is the right-invariant part
of M.  Cochains are flattened row-major: the coordinate of f at
(tuple t, module index j) is ``flat(t) * dim M + j``.

The Lie-algebra (Chevalley-Eilenberg) complex uses C^p = Hom(Lambda^p g, M)
with the classical differential; both complexes verify d.d = 0 on
construction.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .errors import ComplexError, DimensionError, StabilityError
from .linear import (
    Mat,
    SubspaceBasis,
    image_basis,
    kernel_basis,
    rank,
    restrict_and_project,
)
from .algebra import LeftModule, LeibnizAlgebra, LieAlgebra, quotient_data
from .bimodule import Bimodule, right_invariants

_ZERO = Fraction(0)


class CochainComplex:
    """A finite run of a cochain complex: spaces and differentials.

    ``dims[q]`` is the dimension of the degree-q space and
    ``differentials[q]`` maps degree q to degree q+1; shapes must chain
    and all compositions must vanish (ComplexError otherwise).
    """

    __slots__ = ("dims", "differentials")

    def __init__(self, dims: Sequence[int], differentials: Sequence[Mat]):
        dims = tuple(dims)
        differentials = tuple(differentials)
        if len(dims) != len(differentials) + 1:
            raise ComplexError("need one differential per consecutive pair of spaces")
        for q, d in enumerate(differentials):
            if d.cols != dims[q] or d.rows != dims[q + 1]:
                raise ComplexError(f"differential {q} has shape {d.rows}x{d.cols}, "
                                   f"expected {dims[q + 1]}x{dims[q]}")
        for q in range(len(differentials) - 1):
            if not (differentials[q + 1] * differentials[q]).is_zero():
                raise ComplexError(f"d({q + 1}) . d({q}) is nonzero")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "differentials", differentials)

    def __setattr__(self, name, value):
        raise AttributeError("CochainComplex is immutable")


class DegreeGroup:
    """Cohomology in one degree: dimension plus witness bases."""

    __slots__ = ("dim", "cocycles", "coboundaries")

    def __init__(self, dim: int, cocycles: SubspaceBasis, coboundaries: SubspaceBasis):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "cocycles", cocycles)
        object.__setattr__(self, "coboundaries", coboundaries)

    def __setattr__(self, name, value):
        raise AttributeError("DegreeGroup is immutable")


class CohomologyResult:
    """Per-degree cohomology of a complex, degrees 0..qmax."""

    __slots__ = ("groups",)

    def __init__(self, groups: Sequence[DegreeGroup]):
        object.__setattr__(self, "groups", tuple(groups))

    def __setattr__(self, name, value):
        raise AttributeError("CohomologyResult is immutable")

    @property
    def dims(self) -> list:
        return [g.dim for g in self.groups]

    def __getitem__(self, q: int) -> DegreeGroup:
        return self.groups[q]


def cohomology_of_complex(cx: CochainComplex) -> CohomologyResult:
    """Kernels modulo images of a verified complex, through degree
    len(differentials) - 1."""
    groups = []
    for q in range(len(cx.differentials)):
        cocycles = kernel_basis(cx.differentials[q])
        if q == 0:
            coboundaries = SubspaceBasis.empty(cx.dims[0])
        else:
            coboundaries = image_basis(cx.differentials[q - 1])
        if not cocycles.contains_all(coboundaries):
            raise ComplexError(f"coboundaries escape cocycles in degree {q}")
        groups.append(DegreeGroup(cocycles.dim - coboundaries.dim, cocycles, coboundaries))
    return CohomologyResult(groups)


# ---------------------------------------------------------------------------
# The Leibniz complex.
# ---------------------------------------------------------------------------


def _tuple_index(t: tuple, d: int) -> int:
    idx = 0
    for x in t:
        idx = idx * d + x
    return idx


def _add_block(grid: list, r0: int, c0: int, block: Mat, sign: int) -> None:
    for i in range(block.rows):
        row = block.row(i)
        target = grid[r0 + i]
        for j, v in enumerate(row):
            if v:
                target[c0 + j] += v if sign > 0 else -v


def _add_scaled_identity(grid: list, r0: int, c0: int, coeff: Fraction, dm: int) -> None:
    for i in range(dm):
        grid[r0 + i][c0 + i] += coeff


def leibniz_differential(h: LeibnizAlgebra, m: Bimodule, n: int) -> Mat:
    """Matrix of d: CL^n -> CL^(n+1) for the bimodule m over h."""
    if m.algebra != h:
        raise DimensionError("bimodule is not over the given algebra")
    d = h.dim
    dm = m.dim
    rows = d ** (n + 1) * dm
    cols = d ** n * dm
    grid = [[_ZERO] * cols for _ in range(rows)]
    c = h.c
    for y in itertools.product(range(d), repeat=n + 1):
        r0 = _tuple_index(y, d) * dm
        for i in range(n):
            t = y[:i] + y[i + 1:]
            _add_block(grid, r0, _tuple_index(t, d) * dm, m.left[y[i]], -1 if i % 2 else 1)
        right_sign = 1 if (n - 1) % 2 == 0 else -1
        _add_block(grid, r0, _tuple_index(y[:n], d) * dm, m.right[y[n]], right_sign)
        for i in range(n + 1):
            si = -1 if i % 2 == 0 else 1  # (-1)^(i+1)
            for j in range(i + 1, n + 1):
                coeffs = c[y[i]][y[j]]
                base = list(y[:i] + y[i + 1:])
                for k, ck in enumerate(coeffs):
                    if ck:
                        base[j - 1] = k
                        _add_scaled_identity(
                            grid, r0, _tuple_index(tuple(base), d) * dm, si * ck, dm
                        )
    return Mat(rows, cols, grid)


def leibniz_complex(h: LeibnizAlgebra, m: Bimodule, qmax: int) -> CochainComplex:
    if qmax < 0:
        raise DimensionError("qmax must be nonnegative")
    d, dm = h.dim, m.dim
    dims = [d ** q * dm for q in range(qmax + 2)]
    diffs = [leibniz_differential(h, m, q) for q in range(qmax + 1)]
    return CochainComplex(dims, diffs)


def leibniz_cohomology(h: LeibnizAlgebra, m: Bimodule, qmax: int) -> CohomologyResult:
    """HL^q(h, m) for q = 0..qmax, with cocycle/coboundary bases."""
    return cohomology_of_complex(leibniz_complex(h, m, qmax))


def cochain_action(h: LeibnizAlgebra, m: Bimodule, q: int) -> list:
    """Action matrices of the h basis on CL^q = Hom(h^(ox q), M):

        (x . f)(y_1, ..., y_q) = x . f(y_1, ..., y_q)
                                 - sum_i f(y_1, ..., [x, y_i], ..., y_q)

    The Leibniz kernel acts by zero (left multiplications by squares
    vanish), so this is really an action of the Lie quotient.
    """
    d, dm = h.dim, m.dim
    size = d ** q * dm
    out = []
    for a in range(d):
        grid = [[_ZERO] * size for _ in range(size)]
        la = m.left[a]
        for y in itertools.product(range(d), repeat=q):
            r0 = _tuple_index(y, d) * dm
            _add_block(grid, r0, r0, la, 1)
            for i in range(q):
                coeffs = h.c[a][y[i]]
                for k, ck in enumerate(coeffs):
                    if ck:
                        t = y[:i] + (k,) + y[i + 1:]
                        _add_scaled_identity(grid, r0, _tuple_index(t, d) * dm, -ck, dm)
        out.append(Mat(size, size, grid))
    return out


def hl_module_structure(h: LeibnizAlgebra, m: Bimodule, q: int) -> LeftModule:
    """HL^q(h, m) as a module over the Lie quotient of h.

    The cochain action is restricted to cocycles and projected modulo
    coboundaries; failure to preserve either space raises
    StabilityError, as does a Leibniz-kernel element acting nonzero on
    the quotient.
    """
    dq = leibniz_differential(h, m, q)
    cocycles = kernel_basis(dq)
    if q == 0:
        coboundaries = SubspaceBasis.empty(m.dim)
    else:
        coboundaries = image_basis(leibniz_differential(h, m, q - 1))
    actions = cochain_action(h, m, q)
    induced = [restrict_and_project(a, cocycles, coboundaries) for a in actions]
    data = quotient_data(h)
    hdim = cocycles.dim - coboundaries.dim
    for kv in data.kernel.vectors:
        acc = Mat.zero(hdim, hdim)
        for i, xi in enumerate(kv):
            if xi:
                acc = acc + induced[i].scale(xi)
        if not acc.is_zero():
            raise StabilityError("Leibniz kernel acts nonzero on cohomology")
    return LeftModule(data.lie, hdim, [induced[i] for i in data.complement])


# ---------------------------------------------------------------------------
# Chevalley-Eilenberg cohomology of Lie algebras.
# ---------------------------------------------------------------------------


def ce_differential(g: LieAlgebra, m: LeftModule, p: int) -> Mat:
    """Matrix of d: Hom(Lambda^p g, M) -> Hom(Lambda^(p+1) g, M)."""
    if m.algebra != g:
        raise DimensionError("module is not over the given Lie algebra")
    n, dm = g.dim, m.dim
    cols_combos = list(itertools.combinations(range(n), p))
    rows_combos = list(itertools.combinations(range(n), p + 1))
    col_index = {t: i for i, t in enumerate(cols_combos)}
    grid = [[_ZERO] * (len(cols_combos) * dm) for _ in range(len(rows_combos) * dm)]
    for ri, T in enumerate(rows_combos):
        r0 = ri * dm
        for i, ti in enumerate(T):
            sub = T[:i] + T[i + 1:]
            sign = -1 if i % 2 else 1
            _add_block(grid, r0, col_index[sub] * dm, m.action[ti], sign)
        for i in range(p + 1):
            for j in range(i + 1, p + 1):
                base_sign = -1 if (i + j) % 2 else 1
                rest = T[:i] + T[i + 1:j] + T[j + 1:]
                coeffs = g.c[T[i]][T[j]]
                for k, ck in enumerate(coeffs):
                    if not ck:
                        continue
                    if k in rest:
                        continue
                    pos = sum(1 for x in rest if x < k)
                    combo = tuple(sorted(rest + (k,)))
                    wedge_sign = -1 if pos % 2 else 1
                    _add_scaled_identity(
                        grid,
                        r0,
                        col_index[combo] * dm,
                        Fraction(base_sign * wedge_sign) * ck,
                        dm,
                    )
    return Mat(len(rows_combos) * dm, len(cols_combos) * dm, grid)


def _binomial(n: int, p: int) -> int:
    if p < 0 or p > n:
        return 0
    out = 1
    for i in range(p):
        out = out * (n - i) // (i + 1)
    return out


def ce_complex(g: LieAlgebra, m: LeftModule, pmax: int) -> CochainComplex:
    if pmax < 0:
        raise DimensionError("pmax must be nonnegative")
    dims = [_binomial(g.dim, p) * m.dim for p in range(pmax + 2)]
    diffs = [ce_differential(g, m, p) for p in range(pmax + 1)]
    return CochainComplex(dims, diffs)


def ce_cohomology(g: LieAlgebra, m: LeftModule, pmax: int) -> CohomologyResult:
    """H^p(g, m) for p = 0..pmax; degrees above dim g are reported 0."""
    return cohomology_of_complex(ce_complex(g, m, pmax))


def invariants_dim(g: LieAlgebra, m: LeftModule) -> int:
    """Dimension of the g-invariant subspace of m."""
    if m.dim == 0:
        return 0
    return kernel_basis(Mat.vstack(list(m.action))).dim


def ce_dims_via_invariants(g: LieAlgebra, m: LeftModule, pmax: int) -> list:
    """Cohomology dimensions via H^p(g, M) = H^p(g, K) ox M^g.

    Only valid when every finite-dimensional g-module is semisimple
    (for sl2 in characteristic zero, in particular); callers are
    responsible for that hypothesis.  Useful as a fast cross-check
    against the full complex.
    """
    trivial = LeftModule(g, 1, [Mat.zero(1, 1)] * g.dim)
    base = ce_cohomology(g, trivial, pmax).dims
    inv = invariants_dim(g, m)
    return [b * inv for b in base]


# ---------------------------------------------------------------------------
# Closed forms over the one-dimensional algebra.
# ---------------------------------------------------------------------------


def trivial_algebra_closed_form(m: Bimodule, qmax: int) -> list:
    """HL dimensions over the one-dimensional algebra:

        HL^0 = M^h,   HL^odd = M^0 / M.h,   HL^even>0 = M^h / M_0

    where M^h = ker R, M^0 = ker(L + R), M.h = im R and M_0 = im(L + R).
    """
    if m.algebra.dim != 1:
        raise DimensionError("closed form needs the one-dimensional algebra")
    if qmax < 0:
        raise DimensionError("qmax must be nonnegative")
    L, R = m.left[0], m.right[0]
    rank_r = rank(R)
    rank_lr = rank(L + R)
    mh = m.dim - rank_r
    m0 = m.dim - rank_lr
    odd = m0 - rank_r
    even = mh - rank_lr
    out = [mh]
    for q in range(1, qmax + 1):
        out.append(odd if q % 2 else even)
    return out
