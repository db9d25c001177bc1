"""Bimodules over Leibniz algebras and the Hom-space module structure.

A bimodule carries a left and a right action subject to

    (LLM)  L([x,y]) = L(x) L(y) - L(y) L(x)
    (LML)  R(y) L(x) = L(x) R(y) - R([x,y])
    (MLL)  R(y) R(x) = R([x,y]) - L(x) R(y)

so the left action alone is a left module.  ``symmetric`` and
``antisymmetric`` build the two standard bimodules attached to a left
module (right action minus the left, respectively zero).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, InputError, ModuleAxiomError
from .linear import (
    Mat,
    SubspaceBasis,
    as_scalar,
    image_basis,
    intersect_kernels,
    kernel_basis,
    kron,
    restrict_and_project,
)
from .algebra import LeftModule, LeibnizAlgebra, LieAlgebra, lift_module, quotient_data, trivial_algebra

_ZERO = Fraction(0)

KIND_TRIVIAL = "trivial"
KIND_SYMMETRIC = "symmetric"
KIND_ANTISYMMETRIC = "antisymmetric"
_KINDS = (KIND_TRIVIAL, KIND_SYMMETRIC, KIND_ANTISYMMETRIC)


class Bimodule:
    """An exact Leibniz bimodule; the three axioms are checked on
    construction unless ``check=False``."""

    __slots__ = ("algebra", "dim", "left", "right")

    def __init__(
        self,
        algebra: LeibnizAlgebra,
        dim: int,
        left: Sequence[Mat],
        right: Sequence[Mat],
        *,
        check: bool = True,
    ):
        left = tuple(left)
        right = tuple(right)
        if len(left) != algebra.dim or len(right) != algebra.dim:
            raise ValueError("need one left and one right matrix per basis element")
        for m in list(left) + list(right):
            if not isinstance(m, Mat) or m.rows != dim or m.cols != dim:
                raise ValueError("action matrix has wrong shape")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if check:
            failure = _axiom_failure(self)
            if failure is not None:
                raise ModuleAxiomError(failure)

    def __setattr__(self, name, value):
        raise AttributeError("Bimodule is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Bimodule)
            and self.algebra == other.algebra
            and self.dim == other.dim
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return hash((self.algebra, self.dim, self.left, self.right))

    def __repr__(self):
        return f"Bimodule(dim={self.dim} over dim-{self.algebra.dim} algebra)"

    def left_module(self) -> LeftModule:
        """The underlying left module (axiom LLM)."""
        return LeftModule(self.algebra, self.dim, self.left)

    def left_by(self, coords: Sequence) -> Mat:
        out = Mat.zero(self.dim, self.dim)
        for i, xi in enumerate(coords):
            if xi:
                out = out + self.left[i].scale(xi)
        return out

    def right_by(self, coords: Sequence) -> Mat:
        out = Mat.zero(self.dim, self.dim)
        for i, xi in enumerate(coords):
            if xi:
                out = out + self.right[i].scale(xi)
        return out


def _axiom_failure(b: Bimodule) -> str | None:
    a = b.algebra
    L, R = b.left, b.right
    for i in range(a.dim):
        for j in range(a.dim):
            cij = a.c[i][j]
            lb = b.left_by(cij)
            if lb != L[i] * L[j] - L[j] * L[i]:
                return f"(LLM) fails at basis pair ({i}, {j})"
            rb = b.right_by(cij)
            if R[j] * L[i] != L[i] * R[j] - rb:
                return f"(LML) fails at basis pair ({i}, {j})"
            if R[j] * R[i] != rb - L[i] * R[j]:
                return f"(MLL) fails at basis pair ({i}, {j})"
    return None


def check_bimodule(b: Bimodule) -> bool:
    """Whether the three bimodule axioms hold (for use with check=False)."""
    return _axiom_failure(b) is None


def symmetric(h: LeibnizAlgebra, m: LeftModule) -> Bimodule:
    """The symmetric bimodule on ``m``: right action = minus the left.

    ``m`` may be given over ``h`` or over its Lie quotient; the lift
    along the quotient projection is applied automatically.
    """
    lifted = lift_module(h, m)
    return Bimodule(h, m.dim, lifted.action, [(-a) for a in lifted.action])


def antisymmetric(h: LeibnizAlgebra, m: LeftModule) -> Bimodule:
    """The antisymmetric bimodule on ``m``: right action zero."""
    lifted = lift_module(h, m)
    zero = Mat.zero(m.dim, m.dim)
    return Bimodule(h, m.dim, lifted.action, [zero] * h.dim)


def trivial_bimodule(h: LeibnizAlgebra) -> Bimodule:
    """The one-dimensional bimodule with both actions zero."""
    zero = Mat.zero(1, 1)
    return Bimodule(h, 1, [zero] * h.dim, [zero] * h.dim)


def antisymmetric_kernel(b: Bimodule) -> SubspaceBasis:
    """Span of all (L_i + R_i) v: the largest subbimodule on which the
    quotient becomes symmetric."""
    if b.dim == 0:
        return SubspaceBasis.empty(0)
    stacked = Mat.hstack([b.left[i] + b.right[i] for i in range(b.algebra.dim)])
    return image_basis(stacked)


def sym_quotient(b: Bimodule) -> Bimodule:
    """The symmetric quotient bimodule M / M_0 with the induced actions."""
    m0 = antisymmetric_kernel(b)
    sub = SubspaceBasis.full(b.dim)
    left = [restrict_and_project(L, sub, m0) for L in b.left]
    right = [restrict_and_project(R, sub, m0) for R in b.right]
    out = Bimodule(b.algebra, b.dim - m0.dim, left, right)
    for l, r in zip(out.left, out.right):
        if l != -r:
            raise ModuleAxiomError("symmetric quotient is not symmetric")
    return out


def right_invariants(b: Bimodule) -> SubspaceBasis:
    """The common kernel of the right actions (degree-0 cohomology)."""
    return intersect_kernels(list(b.right))


def m_zero_subspace(b: Bimodule) -> SubspaceBasis:
    """ker(L + R) for the one-dimensional algebra only."""
    if b.algebra.dim != 1:
        raise DimensionError("m_zero_subspace needs a one-dimensional algebra")
    return kernel_basis(b.left[0] + b.right[0])


def hom_module_action(g: LeibnizAlgebra, u: LeftModule, v: LeftModule) -> LeftModule:
    """Hom(U, V) with the action (x . f)(a) = x . f(a) - f(x . a).

    The matrix-flattening basis E_ij (1 at row i, column j) is ordered
    row-major by (i, j), matching ``linear.kron``; the action matrix of
    x is rho_v(x) ox I - I ox rho_u(x)^T.
    """
    if u.algebra != g or v.algebra != g:
        raise ModuleAxiomError("both modules must be over the given algebra")
    iu = Mat.identity(u.dim)
    iv = Mat.identity(v.dim)
    mats = [
        kron(av, iu) - kron(iv, au.transpose())
        for au, av in zip(u.action, v.action)
    ]
    return LeftModule(g, u.dim * v.dim, mats)


def intertwiner_dim(g: LeibnizAlgebra, u: LeftModule, v: LeftModule) -> int:
    """Dimension of the space of module maps U -> V (the invariants of
    the Hom module)."""
    hom = hom_module_action(g, u, v)
    if hom.dim == 0:
        return 0
    return intersect_kernels(list(hom.action)).dim


class OneDimBimodule:
    """Descriptor of a simple one-dimensional bimodule over the
    one-dimensional algebra: trivial, symmetric (L, -L) or antisymmetric
    (L, 0), with the left eigenvalue ``lam``."""

    __slots__ = ("kind", "lam")

    def __init__(self, kind: str, lam=0):
        lam = as_scalar(lam)
        if kind not in _KINDS:
            raise InputError(f"unknown bimodule kind {kind!r}")
        if kind == KIND_TRIVIAL and lam != 0:
            raise InputError("the trivial bimodule has eigenvalue 0")
        if kind != KIND_TRIVIAL and lam == 0:
            raise InputError(f"a {kind} one-dimensional bimodule needs a nonzero eigenvalue")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "lam", lam)

    def __setattr__(self, name, value):
        raise AttributeError("OneDimBimodule is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, OneDimBimodule)
            and self.kind == other.kind
            and self.lam == other.lam
        )

    def __hash__(self):
        return hash((self.kind, self.lam))

    def __repr__(self):
        if self.kind == KIND_TRIVIAL:
            return "OneDimBimodule(trivial)"
        return f"OneDimBimodule({self.kind}, lam={self.lam})"

    def label(self) -> str:
        if self.kind == KIND_TRIVIAL:
            return "K"
        tag = "a" if self.kind == KIND_ANTISYMMETRIC else "s"
        return f"M^{tag}({self.lam})"

    def realize(self, h: LeibnizAlgebra | None = None) -> Bimodule:
        """The actual bimodule over the one-dimensional algebra."""
        if h is None:
            h = trivial_algebra()
        if h.dim != 1:
            raise DimensionError("one-dimensional bimodules live over a 1-dim algebra")
        L = Mat(1, 1, [[self.lam]])
        if self.kind == KIND_TRIVIAL:
            R = Mat.zero(1, 1)
        elif self.kind == KIND_SYMMETRIC:
            R = Mat(1, 1, [[-self.lam]])
        else:
            R = Mat.zero(1, 1)
        return Bimodule(h, 1, [L], [R])

    def underlying_module(self, glie: LieAlgebra) -> LeftModule:
        """The underlying 1-dim module over the (1-dim) Lie quotient."""
        if glie.dim != 1:
            raise DimensionError("expected the one-dimensional Lie algebra")
        return LeftModule(glie, 1, [Mat(1, 1, [[self.lam]])])


# ---------------------------------------------------------------------------
# JSON interchange for bimodules.
# ---------------------------------------------------------------------------


def _entry_from_json(x) -> Fraction:
    if isinstance(x, bool):
        raise InputError("bimodule entries must be rationals, not booleans")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {x!r}") from exc
    raise InputError(f"bimodule entries must be ints or 'num/den' strings, got {x!r}")


def _matrix_from_json(rows, dim: int) -> Mat:
    if not isinstance(rows, list) or len(rows) != dim or any(
        not isinstance(r, list) or len(r) != dim for r in rows
    ):
        raise InputError(f"matrix must be {dim} x {dim}")
    return Mat(dim, dim, [[_entry_from_json(x) for x in r] for r in rows])


def bimodule_from_spec(h: LeibnizAlgebra, spec: dict, *, check: bool = True) -> Bimodule:
    """Build a bimodule from its JSON form.

    Expected shape::

        {"dim": d,
         "left":  [d x d matrix per algebra basis element],
         "right": [d x d matrix per algebra basis element]}

    Entries are ints or "num/den" strings.
    """
    try:
        dim = spec["dim"]
        left = spec["left"]
        right = spec["right"]
    except (TypeError, KeyError) as exc:
        raise InputError(f"bimodule spec missing field: {exc}") from exc
    if not isinstance(dim, int) or dim < 0:
        raise InputError("bimodule dim must be a nonnegative integer")
    if not isinstance(left, list) or not isinstance(right, list):
        raise InputError("left/right must be lists of matrices")
    if len(left) != h.dim or len(right) != h.dim:
        raise InputError("need one left and one right matrix per algebra basis element")
    lmats = [_matrix_from_json(mat, dim) for mat in left]
    rmats = [_matrix_from_json(mat, dim) for mat in right]
    try:
        return Bimodule(h, dim, lmats, rmats, check=check)
    except ModuleAxiomError as exc:
        raise InputError(f"bimodule axioms fail: {exc}") from exc


def bimodule_to_spec(b: Bimodule) -> dict:
    def render(m: Mat):
        return [
            [str(x) if x.denominator != 1 else x.numerator for x in m.row(i)]
            for i in range(m.rows)
        ]

    return {
        "dim": b.dim,
        "left": [render(m) for m in b.left],
        "right": [render(m) for m in b.right],
    }
