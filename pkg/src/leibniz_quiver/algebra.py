"""Finite-dimensional Leibniz and Lie algebras from structure constants.

An algebra is stored as the table c[i][j][k] with
``[b_i, b_j] = sum_k c[i][j][k] b_k``.  Construction validates the left
Leibniz identity ``[x, [y, z]] = [[x, y], z] + [y, [x, z]]`` on basis
triples, so invalid algebras are unrepresentable downstream (tests that
need a broken table pass ``check=False``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import AlgebraAxiomError, InputError, ModuleAxiomError
from .linear import Mat, SubspaceBasis, as_scalar, complement_pivot_indices, span_of

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _freeze_constants(dim: int, c) -> tuple:
    table = tuple(
        tuple(tuple(as_scalar(x) for x in row) for row in plane) for plane in c
    )
    if len(table) != dim or any(
        len(plane) != dim or any(len(row) != dim for row in plane) for plane in table
    ):
        raise ValueError(f"structure constants do not have shape {dim}^3")
    return table


class LeibnizAlgebra:
    """A left Leibniz algebra given by exact structure constants."""

    __slots__ = ("dim", "c", "labels")

    def __init__(self, dim: int, c, labels: Sequence[str] | None = None, *, check: bool = True):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "c", _freeze_constants(dim, c))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != dim:
                raise ValueError("label count mismatch")
        object.__setattr__(self, "labels", labels)
        if check and not check_left_leibniz(self):
            raise AlgebraAxiomError("structure constants violate the left Leibniz identity")

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, LeibnizAlgebra)
            and self.dim == other.dim
            and self.c == other.c
        )

    def __hash__(self):
        return hash((self.dim, self.c))

    def __repr__(self):
        kind = type(self).__name__
        return f"{kind}(dim={self.dim})"

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"b{i}"

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        """Bracket of two coordinate vectors."""
        n = self.dim
        out = [_ZERO] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            plane = self.c[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                coeff = xi * yj
                for k, ck in enumerate(plane[j]):
                    if ck:
                        out[k] += coeff * ck
        return tuple(out)

    def left_mult(self, i: int) -> Mat:
        """Matrix of y -> [b_i, y]."""
        n = self.dim
        return Mat(n, n, [[self.c[i][j][k] for j in range(n)] for k in range(n)])

    def right_mult(self, j: int) -> Mat:
        """Matrix of x -> [x, b_j]."""
        n = self.dim
        return Mat(n, n, [[self.c[i][j][k] for i in range(n)] for k in range(n)])

    def basis_vector(self, i: int) -> tuple:
        return tuple(_ONE if k == i else _ZERO for k in range(self.dim))


class LieAlgebra(LeibnizAlgebra):
    """A Leibniz algebra whose bracket is also antisymmetric.

    Antisymmetry plus the left Leibniz identity is equivalent to the
    Jacobi identity, so construction checks both.
    """

    def __init__(self, dim: int, c, labels: Sequence[str] | None = None, *, check: bool = True):
        super().__init__(dim, c, labels, check=check)
        if check:
            table = self.c
            for i in range(dim):
                for j in range(dim):
                    for k in range(dim):
                        if table[i][j][k] != -table[j][i][k]:
                            raise AlgebraAxiomError("bracket is not antisymmetric")


def check_left_leibniz(a: LeibnizAlgebra) -> bool:
    """Whether [x,[y,z]] = [[x,y],z] + [y,[x,z]] holds on basis triples."""
    n = a.dim
    basis = [a.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            bij = a.c[i][j]
            for k in range(n):
                lhs = a.bracket(basis[i], a.c[j][k])
                rhs1 = a.bracket(bij, basis[k])
                rhs2 = a.bracket(basis[j], a.c[i][k])
                if any(lhs[t] != rhs1[t] + rhs2[t] for t in range(n)):
                    return False
    return True


def trivial_algebra() -> LeibnizAlgebra:
    """The one-dimensional algebra with zero bracket."""
    return LeibnizAlgebra(1, [[[_ZERO]]], labels=("e",), check=False)


def leibniz_kernel(a: LeibnizAlgebra) -> SubspaceBasis:
    """Span of all squares [x, x], via the basis polarization
    {[b_i, b_i]} together with {[b_i, b_j] + [b_j, b_i] : i < j}."""
    gens = []
    n = a.dim
    for i in range(n):
        gens.append(a.c[i][i])
    for i in range(n):
        for j in range(i + 1, n):
            gens.append(tuple(a.c[i][j][k] + a.c[j][i][k] for k in range(n)))
    return span_of(gens, n)


class QuotientData:
    """Canonical Lie quotient of a Leibniz algebra.

    ``complement`` lists the basis indices of the original algebra whose
    classes form the quotient basis (deterministic pivot extension of
    the Leibniz kernel), ``projection`` sends original coordinates to
    quotient coordinates, and ``lie`` is the quotient algebra itself.
    """

    __slots__ = ("algebra", "kernel", "complement", "projection", "lie")

    def __init__(self, algebra: LeibnizAlgebra):
        kernel = leibniz_kernel(algebra)
        n = algebra.dim
        comp = complement_pivot_indices(kernel.vectors, n)
        nq = len(comp)
        # Solve [K | E] c = v for each basis vector; the last nq coords
        # of c are the quotient coordinates of v.
        basis_cols = list(kernel.vectors) + [
            tuple(_ONE if i == j else _ZERO for i in range(n)) for j in comp
        ]
        bmat = Mat.from_cols(basis_cols, rows=n)
        from .linear import solve

        coords = solve(bmat, Mat.identity(n))
        if coords is None:  # unreachable: basis_cols spans K^n
            raise AlgebraAxiomError("internal: quotient coordinates unsolvable")
        proj = Mat(nq, n, [coords.row(kernel.dim + i) for i in range(nq)])
        cq = [[None] * nq for _ in range(nq)]
        for ai, i in enumerate(comp):
            for bj, j in enumerate(comp):
                cq[ai][bj] = proj.apply(algebra.c[i][j])
        lie = LieAlgebra(
            nq,
            cq,
            labels=tuple(algebra.label(i) for i in comp) if algebra.labels else None,
        )
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "kernel", kernel)
        object.__setattr__(self, "complement", tuple(comp))
        object.__setattr__(self, "projection", proj)
        object.__setattr__(self, "lie", lie)

    def __setattr__(self, name, value):
        raise AttributeError("QuotientData is immutable")


def quotient_data(a: LeibnizAlgebra) -> QuotientData:
    return QuotientData(a)


def lie_quotient(a: LeibnizAlgebra) -> tuple:
    """The canonical Lie quotient and the projection onto it.

    The quotient is validated as a Lie algebra on construction; for an
    algebra that is already Lie this returns an equal algebra with the
    identity projection.
    """
    data = QuotientData(a)
    return data.lie, data.projection


class LeftModule:
    """A left module over a Leibniz (or Lie) algebra.

    ``action[i]`` is the matrix of b_i acting on the module, and the
    compatibility ``rho([b_i, b_j]) = [rho(b_i), rho(b_j)]`` is verified
    on construction.
    """

    __slots__ = ("algebra", "dim", "action")

    def __init__(self, algebra: LeibnizAlgebra, dim: int, action: Sequence[Mat], *, check: bool = True):
        action = tuple(action)
        if len(action) != algebra.dim:
            raise ValueError("need one action matrix per algebra basis element")
        for m in action:
            if not isinstance(m, Mat) or m.rows != dim or m.cols != dim:
                raise ValueError("action matrix has wrong shape")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "action", action)
        if check:
            err = self._axiom_failure()
            if err is not None:
                raise ModuleAxiomError(err)

    def __setattr__(self, name, value):
        raise AttributeError("LeftModule is immutable")

    def _axiom_failure(self) -> str | None:
        a = self.algebra
        rho = self.action
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self.act_by(a.c[i][j])
                rhs = rho[i] * rho[j] - rho[j] * rho[i]
                if lhs != rhs:
                    return f"rho([b{i}, b{j}]) differs from the commutator"
        return None

    def act_by(self, coords: Sequence) -> Mat:
        """Action matrix of an arbitrary algebra element."""
        out = Mat.zero(self.dim, self.dim)
        for i, xi in enumerate(coords):
            if xi:
                out = out + self.action[i].scale(xi)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, LeftModule)
            and self.algebra == other.algebra
            and self.dim == other.dim
            and self.action == other.action
        )

    def __hash__(self):
        return hash((self.algebra, self.dim, self.action))

    def __repr__(self):
        return f"LeftModule(dim={self.dim} over dim-{self.algebra.dim} algebra)"


def zero_module(algebra: LeibnizAlgebra) -> LeftModule:
    return LeftModule(algebra, 0, [Mat.zero(0, 0)] * algebra.dim, check=False)


def one_dim_module(algebra: LeibnizAlgebra, weights: Sequence) -> LeftModule:
    """The one-dimensional module where b_i acts by the scalar weights[i]."""
    mats = [Mat(1, 1, [[w]]) for w in weights]
    return LeftModule(algebra, 1, mats)


def adjoint_module(g: LieAlgebra) -> LeftModule:
    """A Lie algebra acting on itself by left multiplication."""
    return LeftModule(g, g.dim, [g.left_mult(i) for i in range(g.dim)])


def lift_module(h: LeibnizAlgebra, m: LeftModule) -> LeftModule:
    """Present ``m`` as a module over ``h`` itself.

    Accepts a module over ``h`` (returned unchanged) or over the
    canonical Lie quotient of ``h`` (lifted along the projection).
    """
    if m.algebra == h:
        return m
    data = quotient_data(h)
    if m.algebra == data.lie:
        proj = data.projection
        mats = []
        for i in range(h.dim):
            col = proj.col(i)
            mats.append(m.act_by(col))
        return LeftModule(h, m.dim, mats)
    raise ModuleAxiomError("module is over neither the algebra nor its Lie quotient")


def hemi_semidirect(g: LieAlgebra, m: LeftModule) -> LeibnizAlgebra:
    """The hemi-semidirect product of a Lie algebra with a left module.

    On M + g the bracket is [(a, x), (b, y)] = (x.b, [x, y]); the module
    coordinates come first, then the Lie algebra coordinates.  The
    result is a genuine (typically non-Lie) Leibniz algebra; its squares
    all land in the module summand, which is asserted here.
    """
    if m.algebra != g:
        raise ModuleAxiomError("module is not over the given Lie algebra")
    dm, dg = m.dim, g.dim
    n = dm + dg
    zero_row = (_ZERO,) * n
    c = [[zero_row for _ in range(n)] for _ in range(n)]
    for x in range(dg):
        rho = m.action[x]
        for b in range(dm):
            c[dm + x][b] = tuple(rho[k, b] for k in range(dm)) + (_ZERO,) * dg
        for y in range(dg):
            c[dm + x][dm + y] = (_ZERO,) * dm + tuple(g.c[x][y])
    labels = None
    if g.labels is not None:
        labels = tuple(f"m{i}" for i in range(dm)) + tuple(g.labels)
    out = LeibnizAlgebra(n, c, labels=labels)
    for i in range(n):
        sq = out.c[i][i]
        if any(sq[dm + t] for t in range(dg)):
            raise AlgebraAxiomError("square escapes the module summand")
    return out


# ---------------------------------------------------------------------------
# JSON interchange for algebras.
# ---------------------------------------------------------------------------


def algebra_from_spec(spec: dict, *, check: bool = True) -> LeibnizAlgebra:
    """Build an algebra from its JSON form.

    Expected shape::

        {"dim": d,
         "bracket": [[[k, num, den], ...] per (i, j) ...],
         "labels": [...]}        # optional

    ``bracket[i][j]`` lists the nonzero coefficients of [b_i, b_j] as
    ``[k, num, den]`` triples.
    """
    try:
        dim = spec["dim"]
        bracket = spec["bracket"]
    except (TypeError, KeyError) as exc:
        raise InputError(f"algebra spec missing field: {exc}") from exc
    if not isinstance(dim, int) or dim < 0:
        raise InputError("algebra dim must be a nonnegative integer")
    if len(bracket) != dim or any(len(row) != dim for row in bracket):
        raise InputError("bracket table must be dim x dim")
    c = [[[_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            for triple in bracket[i][j]:
                try:
                    k, num, den = triple
                except (TypeError, ValueError) as exc:
                    raise InputError("bracket entries must be [k, num, den] triples") from exc
                if not isinstance(k, int) or not 0 <= k < dim:
                    raise InputError(f"bracket index {k} out of range")
                if not isinstance(num, int) or not isinstance(den, int) or den == 0:
                    raise InputError("bracket coefficients must be exact integers num/den")
                c[i][j][k] += Fraction(num, den)
    labels = spec.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or len(labels) != dim
    ):
        raise InputError("labels must list one name per basis element")
    return LeibnizAlgebra(dim, c, labels=labels, check=check)


def algebra_to_spec(a: LeibnizAlgebra) -> dict:
    """Inverse of algebra_from_spec (nonzero coefficients only)."""
    bracket = []
    for i in range(a.dim):
        row = []
        for j in range(a.dim):
            entries = []
            for k in range(a.dim):
                x = a.c[i][j][k]
                if x:
                    entries.append([k, x.numerator, x.denominator])
            row.append(entries)
        bracket.append(row)
    spec = {"dim": a.dim, "bracket": bracket}
    if a.labels is not None:
        spec["labels"] = list(a.labels)
    return spec
