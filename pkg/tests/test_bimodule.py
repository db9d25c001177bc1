"""Bimodule axioms, canonical constructions, and subspace invariants."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from leibniz_quiver.algebra import lift_module, one_dim_module, trivial_algebra
from leibniz_quiver.bimodule import (
    KIND_ANTISYMMETRIC,
    KIND_SYMMETRIC,
    KIND_TRIVIAL,
    Bimodule,
    OneDimBimodule,
    antisymmetric,
    antisymmetric_kernel,
    bimodule_from_spec,
    bimodule_to_spec,
    check_bimodule,
    hom_module_action,
    intertwiner_dim,
    m_zero_subspace,
    right_invariants,
    sym_quotient,
    symmetric,
    trivial_bimodule,
)
from leibniz_quiver.errors import InputError, ModuleAxiomError
from leibniz_quiver.linear import Mat, image_basis, rank
from leibniz_quiver.repsl2 import hemi_sl2, simple_module, sl2

from conftest import make_trivial_bimodule


def lifted_simple(n, m):
    """V_m pulled back to the hemi-semidirect algebra with parameter n."""
    h = hemi_sl2(n)
    return h, lift_module(h, simple_module(m).underlying)


# -------------------------------------------------------------------- axioms

def test_axiom_rejection():
    # over the 1-dim algebra, L = R = 1 violates (L+R)R = 0
    one = Mat.from_rows([[1]])
    with pytest.raises(ModuleAxiomError):
        Bimodule(trivial_algebra(), 1, [one], [one])
    b = Bimodule(trivial_algebra(), 1, [one], [one], check=False)
    assert not check_bimodule(b)


def test_symmetric_and_antisymmetric_over_hemi():
    for n in (1, 2):
        for m in (0, 1, 2):
            h, mod = lifted_simple(n, m)
            s = symmetric(h, mod)
            a = antisymmetric(h, mod)
            assert check_bimodule(s) and check_bimodule(a)
            for i in range(h.dim):
                assert s.right[i] == -s.left[i]
                assert a.right[i].is_zero()


def test_trivial_bimodule_shape():
    t = trivial_bimodule(hemi_sl2(1))
    assert t.dim == 1
    assert all(m.is_zero() for m in t.left + t.right)


def test_one_dim_bimodule_descriptor_validation():
    assert OneDimBimodule(KIND_TRIVIAL).label() == "K"
    assert OneDimBimodule(KIND_SYMMETRIC, 2).label() == "M^s(2)"
    assert OneDimBimodule(KIND_ANTISYMMETRIC, Fraction(1, 2)).label() == "M^a(1/2)"
    with pytest.raises(InputError):
        OneDimBimodule("weird", 1)
    with pytest.raises(InputError):
        OneDimBimodule(KIND_TRIVIAL, 1)
    with pytest.raises(InputError):
        OneDimBimodule(KIND_SYMMETRIC, 0)


def test_one_dim_realizations_satisfy_axioms():
    for d in (
        OneDimBimodule(KIND_TRIVIAL),
        OneDimBimodule(KIND_SYMMETRIC, 1),
        OneDimBimodule(KIND_ANTISYMMETRIC, Fraction(3, 7)),
    ):
        b = d.realize()
        assert check_bimodule(b)
        lam = d.lam
        assert b.left[0][0, 0] == lam
        if d.kind == KIND_SYMMETRIC:
            assert b.right[0][0, 0] == -lam
        else:
            assert b.right[0].is_zero()


# ------------------------------------------------------- subspace invariants

def test_antisymmetric_kernel_and_sym_quotient():
    # antisymmetric bimodule: x.m + m.x = x.m, so M_0 = image of the left action
    h, mod = lifted_simple(1, 1)
    a = antisymmetric(h, mod)
    m0 = antisymmetric_kernel(a)
    assert m0.dim == 2  # V_1 is simple nontrivial: g.V = V
    q = sym_quotient(a)
    assert q.dim == 0
    # symmetric bimodule: x.m + m.x = 0 identically
    s = symmetric(h, mod)
    assert antisymmetric_kernel(s).dim == 0
    assert sym_quotient(s).dim == 2
    assert check_bimodule(sym_quotient(s))


def test_right_invariants():
    h, mod = lifted_simple(1, 1)
    assert right_invariants(antisymmetric(h, mod)).dim == 2
    assert right_invariants(symmetric(h, mod)).dim == 0
    assert right_invariants(trivial_bimodule(h)).dim == 1


def test_m_zero_subspace_on_one_dim_examples():
    sym = OneDimBimodule(KIND_SYMMETRIC, 1).realize()
    anti = OneDimBimodule(KIND_ANTISYMMETRIC, 1).realize()
    triv = OneDimBimodule(KIND_TRIVIAL).realize()
    assert m_zero_subspace(sym).dim == 1
    assert m_zero_subspace(anti).dim == 0
    assert m_zero_subspace(triv).dim == 1


# ------------------------------------------------------------ Hom module

def test_hom_module_action_decomposes_correctly():
    from leibniz_quiver.repsl2 import SL2Module, decompose

    g = sl2()
    u = simple_module(1).underlying
    v = simple_module(2).underlying
    hom = hom_module_action(g, u, v)
    assert hom.dim == 6
    assert decompose(SL2Module(hom)).mults == {3: 1, 1: 1}


def test_intertwiner_dim_is_schur():
    g = sl2()
    for m in range(3):
        for n in range(3):
            u = simple_module(m).underlying
            v = simple_module(n).underlying
            assert intertwiner_dim(g, u, v) == (1 if m == n else 0)


def test_hom_flattening_convention():
    # f_{ij} at flat index i*dim_u + j maps u_j to v_i; check one entry
    g = sl2()
    u = simple_module(1).underlying
    v = simple_module(1).underlying
    hom = hom_module_action(g, u, v)
    # the identity map is an invariant vector
    ident = [1 if i == j else 0 for i in range(2) for j in range(2)]
    for k in range(3):
        assert all(x == 0 for x in hom.action[k].apply(ident))


# ----------------------------------------------------------------- JSON I/O

def test_bimodule_spec_roundtrip():
    h = trivial_algebra()
    b = OneDimBimodule(KIND_SYMMETRIC, Fraction(5, 3)).realize()
    spec = bimodule_to_spec(b)
    back = bimodule_from_spec(h, spec)
    assert back == b


def test_bimodule_spec_rejects_bad_input():
    h = trivial_algebra()
    with pytest.raises(InputError):
        bimodule_from_spec(h, {"dim": 1})
    with pytest.raises(InputError):
        bimodule_from_spec(h, {"dim": 1, "left": [[[1]]], "right": [[["bad"]]]})
    with pytest.raises(InputError):
        bimodule_from_spec(h, {"dim": 2, "left": [[[1]]], "right": [[[0]]]})
    # axiom-violating matrices are rejected on load
    with pytest.raises((InputError, ModuleAxiomError)):
        bimodule_from_spec(h, {"dim": 1, "left": [[[1]]], "right": [[[1]]]})


def test_bimodule_spec_accepts_fraction_strings():
    h = trivial_algebra()
    b = bimodule_from_spec(h, {"dim": 1, "left": [[["1/2"]]], "right": [[["-1/2"]]]})
    assert b.left[0][0, 0] == Fraction(1, 2)


# -------------------------------------------------- randomized axiom checks

def test_random_bimodules_satisfy_inclusions():
    rng = random.Random(20240814)
    for _ in range(20):
        b = make_trivial_bimodule(rng)
        left, right = b.left[0], b.right[0]
        both = left + right
        # M.h lies inside M^0 and M_0 lies inside M^h
        mh_image = image_basis(right)
        m0_img = image_basis(both)
        for v in mh_image.vectors:
            assert all(x == 0 for x in both.apply(v))
        for v in m0_img.vectors:
            assert all(x == 0 for x in right.apply(v))


def test_random_bimodule_parity_identity():
    rng = random.Random(99)
    for _ in range(20):
        b = make_trivial_bimodule(rng)
        left, right = b.left[0], b.right[0]
        both = left + right
        lhs = (b.dim - rank(both)) - rank(right)
        rhs = (b.dim - rank(right)) - rank(both)
        assert lhs == rhs
        assert m_zero_subspace(b).dim == b.dim - rank(both)
