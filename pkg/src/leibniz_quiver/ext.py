"""Ext groups between simple bimodules of a Leibniz algebra.

Two standing tools:

* base-change groups: Ext^q against the symmetrized enveloping module
  of the Lie quotient, computed as Ker(f) / Coker(f) / Hom(h, HL^(q-1))
  where f: X -> Hom(h, HL^0) sends m to x |-> x.m + m.x;
* two first-quadrant spectral sequences converging to Ext(Y^a, X) and
  Ext(Z^s, X), with E2 terms given by Lie-algebra cohomology of the
  quotient with Hom coefficient modules.

Nothing here assumes the sequences collapse: a certificate is computed
from the E2 zero pattern and degreewise dimensions are only assembled
when every potentially nonzero higher differential has zero source or
zero target.  Closed-form counterparts (the one-dimensional-algebra
table, the hemi-semidirect degree-1 and degree-2 formulas) are kept
independent of the linear-algebra stack so they can serve as oracles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import (
    CollapseNotCertifiedError,
    DimensionError,
    InputError,
    StabilityError,
    UnsupportedDegreeError,
)
from .linear import Mat, SubspaceBasis, image_basis, kernel_basis, restrict_and_project
from .algebra import LeftModule, LeibnizAlgebra, quotient_data
from .bimodule import (
    Bimodule,
    OneDimBimodule,
    KIND_ANTISYMMETRIC,
    KIND_SYMMETRIC,
    KIND_TRIVIAL,
    hom_module_action,
)
from .cohomology import ce_cohomology, ce_dims_via_invariants, hl_module_structure, leibniz_differential
from .repsl2 import clebsch_gordan, sl2, simple_module

_ZERO = Fraction(0)

CERTIFIED = "Certified"
NOT_CERTIFIED = "NotCertified"


class E2Page:
    """Second page of a cohomological spectral sequence, as a dims grid.

    dims[p][q] for 0 <= p <= pmax, 0 <= q <= qmax; coeff_modules, when
    given, records the CE coefficient module used for each column q.
    """

    __slots__ = ("pmax", "qmax", "dims", "coeff_modules")

    def __init__(self, pmax: int, qmax: int, dims: Sequence[Sequence[int]],
                 coeff_modules: Sequence[LeftModule] | None = None):
        if pmax < 0 or qmax < 0:
            raise DimensionError("page bounds must be nonnegative")
        grid = tuple(tuple(int(x) for x in row) for row in dims)
        if len(grid) != pmax + 1 or any(len(r) != qmax + 1 for r in grid):
            raise DimensionError("dims grid does not match pmax/qmax")
        if any(x < 0 for row in grid for x in row):
            raise DimensionError("negative dimension in E2 grid")
        object.__setattr__(self, "pmax", pmax)
        object.__setattr__(self, "qmax", qmax)
        object.__setattr__(self, "dims", grid)
        object.__setattr__(self, "coeff_modules",
                           None if coeff_modules is None else tuple(coeff_modules))

    def __setattr__(self, name, value):
        raise AttributeError("E2Page is immutable")

    def entry(self, p: int, q: int) -> int:
        """dims[p][q], with positions outside the grid counting as 0."""
        if 0 <= p <= self.pmax and 0 <= q <= self.qmax:
            return self.dims[p][q]
        return 0


class CollapseCertificate:
    """Outcome of the zero-pattern collapse check.

    status is Certified when no differential d_r (r >= 2) can be nonzero
    on dimension grounds; otherwise witness = (r, p, q) locates the first
    potentially nonzero differential out of position (p, q).
    """

    __slots__ = ("status", "witness")

    def __init__(self, status: str, witness: tuple | None = None):
        if status not in (CERTIFIED, NOT_CERTIFIED):
            raise InputError(f"unknown certificate status {status!r}")
        if (status == NOT_CERTIFIED) != (witness is not None):
            raise InputError("witness exactly when not certified")
        object.__setattr__(self, "status", status)
        object.__setattr__(self, "witness", witness)

    def __setattr__(self, name, value):
        raise AttributeError("CollapseCertificate is immutable")

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED


class ExtResult:
    """Degreewise Ext dimensions together with the collapse certificate
    and the E2 page they were assembled from."""

    __slots__ = ("dims", "certificate", "page")

    def __init__(self, dims: Sequence[int], certificate: CollapseCertificate, page: E2Page):
        object.__setattr__(self, "dims", tuple(int(x) for x in dims))
        object.__setattr__(self, "certificate", certificate)
        object.__setattr__(self, "page", page)

    def __setattr__(self, name, value):
        raise AttributeError("ExtResult is immutable")


# ---------------------------------------------------------------------------
# Simple-bimodule descriptors.
# ---------------------------------------------------------------------------


class SimpleDescriptor:
    """A simple bimodule over a hemi-semidirect product, by kind and
    highest weight.  Weight 0 collapses to the trivial kind (V_0 with
    either symmetrization is the trivial bimodule)."""

    __slots__ = ("kind", "weight")

    def __init__(self, kind: str, weight: int = 0):
        if kind not in (KIND_TRIVIAL, KIND_SYMMETRIC, KIND_ANTISYMMETRIC):
            raise InputError(f"unknown bimodule kind {kind!r}")
        weight = int(weight)
        if weight < 0:
            raise InputError("weight must be nonnegative")
        if weight == 0:
            kind = KIND_TRIVIAL
        elif kind == KIND_TRIVIAL:
            raise InputError("trivial kind carries weight 0")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "weight", weight)

    def __setattr__(self, name, value):
        raise AttributeError("SimpleDescriptor is immutable")

    def __eq__(self, other):
        return (isinstance(other, SimpleDescriptor)
                and self.kind == other.kind and self.weight == other.weight)

    def __hash__(self):
        return hash((self.kind, self.weight))

    def __repr__(self):
        return f"SimpleDescriptor({self.kind!r}, {self.weight})"

    def label(self) -> str:
        if self.kind == KIND_TRIVIAL:
            return "V_0"
        tag = "s" if self.kind == KIND_SYMMETRIC else "a"
        return f"V_{self.weight}^{tag}"

    def underlying_module(self, glie) -> LeftModule:
        """The underlying simple module of the Lie quotient (trivial or
        a weight module of sl2)."""
        if self.kind == KIND_TRIVIAL:
            return LeftModule(glie, 1, [Mat.zero(1, 1)] * glie.dim)
        if glie != sl2():
            raise InputError("weight descriptors need an sl2 quotient")
        v = simple_module(self.weight)
        return LeftModule(glie, v.dim, v.underlying.action)

    def realize(self, h: LeibnizAlgebra) -> Bimodule:
        """The bimodule over h this descriptor names."""
        from .bimodule import antisymmetric, symmetric, trivial_bimodule

        if self.kind == KIND_TRIVIAL:
            return trivial_bimodule(h)
        v = simple_module(self.weight).underlying
        if self.kind == KIND_SYMMETRIC:
            return symmetric(h, v)
        return antisymmetric(h, v)


# ---------------------------------------------------------------------------
# Base-change groups.
# ---------------------------------------------------------------------------


def h_as_lie_module(h: LeibnizAlgebra) -> LeftModule:
    """h as a module over its Lie quotient, acting by left brackets
    (well defined because left multiplication kills the Leibniz kernel)."""
    data = quotient_data(h)
    return LeftModule(data.lie, h.dim, [h.left_mult(i) for i in data.complement])


def _induced_module_on_h_indexed(h: LeibnizAlgebra, actions: Sequence[Mat],
                                 sub: SubspaceBasis, quot: SubspaceBasis) -> LeftModule:
    """Left module over the Lie quotient induced on span(sub)/span(quot)
    by per-h-basis-element action matrices.  Checks that the Leibniz
    kernel acts by zero on the quotient."""
    data = quotient_data(h)
    induced = [restrict_and_project(a, sub, quot) for a in actions]
    dim = sub.dim - quot.dim
    for kv in data.kernel.vectors:
        acc = Mat.zero(dim, dim)
        for i, xi in enumerate(kv):
            if xi:
                acc = acc + induced[i].scale(xi)
        if not acc.is_zero():
            raise StabilityError("Leibniz kernel acts nonzero on the quotient")
    return LeftModule(data.lie, dim, [induced[i] for i in data.complement])


def base_change_map(h: LeibnizAlgebra, x: Bimodule) -> tuple:
    """The map f: X -> Hom(h, HL^0(h, X)), f(m)(y) = y.m + m.y.

    Returns (matrix of f, cocycle basis of HL^0).  The values of f land
    in HL^0 because R_y(L_x + R_x) = 0 follows from the bimodule axioms.
    Hom coordinates are row-major: (i, j) |-> i * dim h + j with i the
    HL^0 index.
    """
    if x.algebra != h:
        raise DimensionError("bimodule is not over the given algebra")
    z0 = kernel_basis(leibniz_differential(h, x, 0))
    dh, dx, dz = h.dim, x.dim, z0.dim
    grid = [[_ZERO] * dx for _ in range(dz * dh)]
    for j in range(dh):
        s = x.left[j] + x.right[j]
        for b in range(dx):
            coeffs = z0.coords(s.col(b))
            if coeffs is None:
                raise StabilityError("f does not land in the degree-0 cocycles")
            for i, ci in enumerate(coeffs):
                if ci:
                    grid[i * dh + j][b] = ci
    return Mat(dz * dh, dx, grid), z0


def ext_base_sym(h: LeibnizAlgebra, x: Bimodule, q: int) -> LeftModule:
    """Ext^q against the symmetrized enveloping module of the Lie
    quotient, as a module over the quotient; its dim is the count.

    q = 0 is Ker(f), q = 1 is Coker(f), and q >= 2 is the full Hom
    space Hom(h, HL^(q-1)(h, X)) with the usual action.
    """
    if q < 0:
        raise DimensionError("degree must be nonnegative")
    data = quotient_data(h)
    if q >= 2:
        return hom_module_action(data.lie, h_as_lie_module(h), hl_module_structure(h, x, q - 1))
    f, z0 = base_change_map(h, x)
    if q == 0:
        return _induced_module_on_h_indexed(h, list(x.left), kernel_basis(f),
                                            SubspaceBasis.empty(x.dim))
    hl0 = hl_module_structure(h, x, 0)
    hom = hom_module_action(data.lie, h_as_lie_module(h), hl0)
    imf = image_basis(f)
    full = SubspaceBasis.full(hom.dim)
    induced = [restrict_and_project(a, full, imf) for a in hom.action]
    return LeftModule(data.lie, hom.dim - imf.dim, induced)


# ---------------------------------------------------------------------------
# The two spectral sequences.
# ---------------------------------------------------------------------------


def _page_from_columns(glie, coeffs: Sequence[LeftModule], pmax: int,
                       fast: bool) -> E2Page:
    qmax = len(coeffs) - 1
    cols = []
    for w in coeffs:
        if fast:
            cols.append(ce_dims_via_invariants(glie, w, pmax))
        else:
            cols.append(ce_cohomology(glie, w, pmax).dims)
    dims = [[cols[q][p] for q in range(qmax + 1)] for p in range(pmax + 1)]
    return E2Page(pmax, qmax, dims, coeffs)


def e2_first(h: LeibnizAlgebra, y: LeftModule, x: Bimodule, pmax: int, qmax: int,
             *, fast: bool = False) -> E2Page:
    """E2 of the sequence converging to Ext(Y^a, X):

        E2^{pq} = H^p(h_Lie, Hom(Y, HL^q(h, X))).

    ``fast`` computes CE dimensions through the invariants shortcut,
    valid when h_Lie-modules are semisimple (sl2 inputs).
    """
    data = quotient_data(h)
    coeffs = [hom_module_action(data.lie, y, hl_module_structure(h, x, q))
              for q in range(qmax + 1)]
    return _page_from_columns(data.lie, coeffs, pmax, fast)


def e2_second(h: LeibnizAlgebra, z: LeftModule, x: Bimodule, pmax: int, qmax: int,
              *, fast: bool = False) -> E2Page:
    """E2 of the sequence converging to Ext(Z^s, X):

        E2^{pq} = H^p(h_Lie, Hom(Z, ext_base_sym(h, X, q))).
    """
    data = quotient_data(h)
    coeffs = [hom_module_action(data.lie, z, ext_base_sym(h, x, q))
              for q in range(qmax + 1)]
    return _page_from_columns(data.lie, coeffs, pmax, fast)


def certify_collapse(page: E2Page) -> CollapseCertificate:
    """Certified iff every differential d_r (r >= 2) has zero source or
    zero target on the page; grid positions outside count as zero.  The
    witness names the first potential differential in scan order
    (p ascending, then q, then r)."""
    for p in range(page.pmax + 1):
        for q in range(page.qmax + 1):
            if page.dims[p][q] == 0:
                continue
            for r in range(2, min(page.pmax - p, q + 1) + 1):
                if page.entry(p + r, q - r + 1) > 0:
                    return CollapseCertificate(NOT_CERTIFIED, (r, p, q))
    return CollapseCertificate(CERTIFIED)


def assemble_ext(page: E2Page, nmax: int) -> ExtResult:
    """Anti-diagonal sums of a certified page; raises
    CollapseNotCertifiedError (with the witness) otherwise."""
    cert = certify_collapse(page)
    if not cert.certified:
        raise CollapseNotCertifiedError(cert.witness)
    dims = [sum(page.entry(p, n - p) for p in range(min(n, page.pmax) + 1))
            for n in range(nmax + 1)]
    return ExtResult(dims, cert, page)


def ext_dims(h: LeibnizAlgebra, m_kind, n_bimodule: Bimodule, nmax: int,
             *, fast: bool = False) -> ExtResult:
    """Ext^n(M, N) for n = 0..nmax via the appropriate spectral sequence.

    m_kind is a descriptor of the simple source (OneDimBimodule or
    SimpleDescriptor): trivial and antisymmetric sources go through the
    first sequence, symmetric sources through the second.  Raises
    CollapseNotCertifiedError when the E2 zero pattern does not force
    collapse.
    """
    if nmax < 0:
        raise DimensionError("nmax must be nonnegative")
    data = quotient_data(h)
    src = m_kind.underlying_module(data.lie)
    if m_kind.kind == KIND_SYMMETRIC:
        page = e2_second(h, src, n_bimodule, data.lie.dim, nmax, fast=fast)
    else:
        page = e2_first(h, src, n_bimodule, data.lie.dim, nmax, fast=fast)
    return assemble_ext(page, nmax)


# ---------------------------------------------------------------------------
# The hemi-semidirect degree-1 module and closed forms.
# ---------------------------------------------------------------------------


def nhat(h: LeibnizAlgebra, n: LeftModule) -> LeftModule:
    """Coker(f: N -> Hom(h, N)), f(v)(x) = x.v, as a module over the
    Lie quotient; its equivariant Hom against a simple source computes
    degree-1 Ext with antisymmetric coefficients."""
    data = quotient_data(h)
    if n.algebra != data.lie:
        raise DimensionError("module is not over the Lie quotient")
    hmod = h_as_lie_module(h)
    hom = hom_module_action(data.lie, hmod, n)
    dh, dn = h.dim, n.dim
    grid = [[_ZERO] * dn for _ in range(dh * dn)]
    for j in range(dh):
        act = n.act_by(data.projection.col(j))
        for b in range(dn):
            for i, ci in enumerate(act.col(b)):
                if ci:
                    grid[i * dh + j][b] = ci
    f = Mat(dh * dn, dn, grid)
    imf = image_basis(f)
    full = SubspaceBasis.full(hom.dim)
    induced = [restrict_and_project(a, full, imf) for a in hom.action]
    return LeftModule(data.lie, hom.dim - imf.dim, induced)


def ext1_hemi_closed(n: int, p: int, m: int) -> int:
    """dim Ext^1(V_p^s, V_m^a) over V_n x_hs sl2, counted as the
    multiplicity of V_p in the closed-form decomposition of N-hat."""
    if n < 1:
        raise InputError("the hemi-semidirect module weight n must be >= 1")
    if p < 0 or m < 0:
        raise InputError("weights must be nonnegative")
    if m >= 2:
        return int(p in clebsch_gordan(m, n).mults) + int(p in (m + 2, m - 2))
    if m == 1:
        return [n + 1, n - 1, 3].count(p)
    return [n, 2].count(p)


def ext_trivial_closed(mk: OneDimBimodule, nk: OneDimBimodule, nmax: int) -> list:
    """Ext^n table over the one-dimensional algebra: (K, K) gives
    1, 2, 2, ...; a nontrivial kind against itself with equal weight
    gives 1, 1, 0, ...; everything else vanishes."""
    if nmax < 0:
        raise DimensionError("nmax must be nonnegative")
    if mk.kind == KIND_TRIVIAL and nk.kind == KIND_TRIVIAL:
        return [1] + [2] * nmax
    if mk.kind == nk.kind and mk.lam == nk.lam:
        return [1, 1][: nmax + 1] + [0] * (nmax - 1)
    return [0] * (nmax + 1)


def ext_simple_closed(n: int, src: SimpleDescriptor, dst: SimpleDescriptor,
                      degree: int) -> int:
    """Closed-form Ext^degree between simples over V_n x_hs sl2,
    degree <= 2 (UnsupportedDegreeError above that).

    Degree 0 is Schur; degree 1 is the N-hat multiplicity formula,
    nonzero only from trivial/symmetric sources to trivial/antisymmetric
    targets; degree 2 is nonzero only for symmetric-to-antisymmetric
    pairs with both weights in {n, 2}, where it is 4 when the Leibniz
    kernel and the Lie quotient coincide as modules (n = 2) and 1
    otherwise.
    """
    if n < 1:
        raise InputError("the hemi-semidirect module weight n must be >= 1")
    if degree not in (0, 1, 2):
        raise UnsupportedDegreeError(f"closed forms cover degrees 0..2, not {degree}")
    if degree == 0:
        return 1 if src == dst else 0
    if degree == 1:
        if src.kind in (KIND_TRIVIAL, KIND_SYMMETRIC) and \
           dst.kind in (KIND_TRIVIAL, KIND_ANTISYMMETRIC):
            return ext1_hemi_closed(n, src.weight, dst.weight)
        return 0
    if (src.kind == KIND_SYMMETRIC and dst.kind == KIND_ANTISYMMETRIC
            and src.weight in (n, 2) and dst.weight in (n, 2)):
        return 4 if n == 2 else 1
    return 0
