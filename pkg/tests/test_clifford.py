"""Exact Clifford algebra over Gaussian rationals: elements, involutions,
the twisted vector action, and the verification suites at small rank."""

import random
from fractions import Fraction

import hypothesis
import hypothesis.strategies as strat
import pytest

from grstacks.clifford import (
    NEG_SUM,
    SPLIT,
    BadSupport,
    CliffordElement,
    DegenerateDirection,
    NotPin,
    QuadSpace,
    basis_vector,
    eta_center_check,
    f1_vector,
    f2_vector,
    f_map,
    f_recover,
    involutions,
    is_pin,
    is_spin,
    mat_det,
    mat_identity,
    mat_inv,
    mat_mul,
    mat_vec,
    phi_pin,
    phi_w_matrix,
    pin_sample,
    reflect_point,
    rho,
    spin_sample,
    unit_vector_sample,
    verify_clifford_relations,
    verify_f_properties,
    verify_phi_pin_embedding,
    verify_phi_w,
)
from grstacks.gaussian import GR_HALF, GR_I, GR_ONE, GR_ZERO, GaussianRational

gaussians = strat.builds(
    GaussianRational,
    strat.fractions(min_value=-4, max_value=4, max_denominator=3),
    strat.fractions(min_value=-2, max_value=2, max_denominator=2),
)


# -- scalar layer -----------------------------------------------------


@hypothesis.given(gaussians, gaussians, gaussians)
def test_gaussian_field_laws(a, b, c):
    # a(b + c) = ab + ac, and conjugation is multiplicative
    assert a * (b + c) == a * b + a * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if b:
        assert (a / b) * b == a


@hypothesis.given(gaussians)
def test_gaussian_norm(a):
    assert a * a.conjugate() == GaussianRational(a.norm())
    assert a.norm() >= 0


def test_gaussian_foreign_types():
    assert GaussianRational(2) + 1 == GaussianRational(3)
    assert Fraction(1, 2) * GaussianRational(0, 2) == GR_I
    with pytest.raises(TypeError):
        GaussianRational(1) + "x"


# -- algebra basics ---------------------------------------------------


def test_generators_square_to_minus_one():
    for n in (2, 5):
        for i in range(1, n + 1):
            e = basis_vector(n, i)
            assert e * e == -1


def test_generators_anticommute():
    e1, e2 = basis_vector(4, 1), basis_vector(4, 2)
    assert e1 * e2 == -(e2 * e1)


def test_vector_square_is_form_value():
    space = QuadSpace(3, NEG_SUM)
    v = (GaussianRational(2), GaussianRational(Fraction(1, 2)), GR_I)
    el = CliffordElement.vector(3, v)
    assert el * el == CliffordElement.scalar(3, space.q(v))


def test_vector_coords_roundtrip():
    v = (GR_ONE, GR_ZERO, GR_I)
    assert CliffordElement.vector(3, v).vector_coords() == v
    with pytest.raises(ValueError):
        (basis_vector(3, 1) * basis_vector(3, 2)).vector_coords()


def test_mixed_dimension_rejected():
    with pytest.raises(ValueError):
        basis_vector(3, 1) + basis_vector(4, 1)
    with pytest.raises(ValueError):
        CliffordElement(2, {4: GR_ONE})


def test_involution_signs_on_blades():
    # eps: (-1)^g, transpose: (-1)^(g(g-1)/2), bar: (-1)^(g(g+1)/2)
    for g in range(5):
        b = CliffordElement.blade(5, tuple(range(1, g + 1)))
        ep, tr, br = involutions(b)
        assert ep == ((-1) ** g) * b
        assert tr == ((-1) ** (g * (g - 1) // 2)) * b
        assert br == ((-1) ** (g * (g + 1) // 2)) * b


@hypothesis.given(strat.integers(0, 7), strat.integers(0, 7))
def test_involutions_on_products(ma, mb):
    a = CliffordElement(3, {ma: GaussianRational(2, 1)})
    b = CliffordElement(3, {mb: GaussianRational(1, -1)})
    # eps is a homomorphism, transpose and bar reverse the order
    assert (a * b).eps() == a.eps() * b.eps()
    assert (a * b).transpose() == b.transpose() * a.transpose()
    assert (a * b).bar() == b.bar() * a.bar()


def test_bar_composes_eps_and_transpose():
    a = CliffordElement(4, {0b0110: GR_I, 0b0001: GR_ONE, 0: GR_HALF})
    assert a.bar() == a.eps().transpose() == a.transpose().eps()


# -- quadratic spaces -------------------------------------------------


def test_neg_sum_form():
    space = QuadSpace(4, NEG_SUM)
    v = tuple(GaussianRational(k) for k in (1, 2, 0, -1))
    assert space.q(v) == GaussianRational(-6)
    assert space.h(v, v) == space.q(v)


def test_split_form_pairs_coordinates():
    space = QuadSpace(5, SPLIT)
    v = tuple(GaussianRational(k) for k in (1, 2, 3, 4, 5))
    # (x1 x2) + (x3 x4) + x5^2
    assert space.q(v) == GaussianRational(2 + 12 + 25)
    assert space.h(v, v) == space.q(v)


@hypothesis.given(strat.sampled_from((NEG_SUM, SPLIT)), strat.integers(2, 5))
def test_gram_matches_pairing(form, n):
    space = QuadSpace(n, form)
    g = space.gram()
    basis = [tuple(GR_ONE if j == i else GR_ZERO for j in range(n)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            assert g[i][j] == space.h(basis[i], basis[j])
    assert space.preserves(mat_identity(n))


def test_unknown_form_rejected():
    with pytest.raises(ValueError):
        QuadSpace(3, "euclidean")


# -- exact unit sphere sampling ---------------------------------------


def test_reflect_point_stays_on_sphere():
    base = (GR_ONE, GR_ZERO, GR_ZERO)
    u = (GaussianRational(1), GaussianRational(2), GaussianRational(2))
    v = reflect_point(base, u)
    assert sum((x * x for x in v), GR_ZERO) == GR_ONE
    assert v != base


def test_reflect_point_rejects_isotropic_direction():
    base = (GR_ONE, GR_ZERO)
    with pytest.raises(DegenerateDirection):
        reflect_point(base, (GR_ONE, GR_I))


def test_unit_vector_sample_support():
    rng = random.Random(3)
    for _ in range(20):
        v = unit_vector_sample(5, rng, support=(2, 4))
        assert sum((x * x for x in v), GR_ZERO) == GR_ONE
        assert v[0] == v[2] == v[4] == GR_ZERO


def test_pin_membership():
    rng = random.Random(1)
    a = pin_sample(4, rng)
    assert is_pin(a)
    s = spin_sample(4, rng)
    assert is_spin(s) and s.parity() == 0
    assert not is_pin(basis_vector(4, 1) + 1)  # mixed parity
    assert not is_pin(CliffordElement.scalar(4, GaussianRational(2)))


def test_rho_of_a_generator_is_a_reflection():
    m = rho(basis_vector(3, 1))
    want = (
        (-GR_ONE, GR_ZERO, GR_ZERO),
        (GR_ZERO, GR_ONE, GR_ZERO),
        (GR_ZERO, GR_ZERO, GR_ONE),
    )
    assert m == want
    assert mat_det(m) == -GR_ONE


def test_rho_is_multiplicative():
    rng = random.Random(5)
    a, b = pin_sample(3, rng), pin_sample(3, rng)
    assert rho(a * b) == mat_mul(rho(a), rho(b))
    # det records the parity
    assert mat_det(rho(a)) == GaussianRational(1 - 2 * a.parity())


def test_rho_rejects_non_pin():
    with pytest.raises(NotPin):
        rho(basis_vector(3, 1) * GaussianRational(2))


def test_matrix_inverse():
    rng = random.Random(9)
    m = rho(pin_sample(4, rng))
    assert mat_mul(m, mat_inv(m)) == mat_identity(4)


# -- the one-lower pin embedding --------------------------------------


def test_phi_pin_cases():
    rng = random.Random(2)
    even = spin_sample(5, rng, support=(2, 3, 4, 5))
    g, s = phi_pin(even)
    assert (g, s) == (even, 1)
    odd = pin_sample(5, rng, factors=1, support=(2, 3, 4, 5))
    g, s = phi_pin(odd)
    assert s == -1 and g == basis_vector(5, 1) * odd
    assert g.parity() == 0


def test_phi_pin_rejects_mixed_parity():
    with pytest.raises(NotPin):
        phi_pin(basis_vector(3, 2) + 1)


# -- the unipotent family f(w) ----------------------------------------


def test_f1_f2_are_isotropic_and_pair_to_half():
    space = QuadSpace(4, NEG_SUM)
    f1, f2 = f1_vector(4), f2_vector(4)
    assert space.q(f1) == GR_ZERO and space.q(f2) == GR_ZERO
    assert space.h(f1, f2) == GR_HALF


def test_f_map_addition_to_multiplication():
    w1 = (GR_ZERO, GR_ZERO, GaussianRational(2), GR_ZERO)
    w2 = (GR_ZERO, GR_ZERO, GaussianRational(-1), GaussianRational(3))
    ws = tuple(a + b for a, b in zip(w1, w2))
    assert f_map(4, w1) * f_map(4, w2) == f_map(4, ws)


def test_f_map_recover_roundtrip():
    w = (GR_ZERO, GR_ZERO, GaussianRational(Fraction(3, 2)), GR_I)
    assert f_recover(f_map(4, w)) == w


def test_f_map_rejects_head_support():
    with pytest.raises(BadSupport):
        f_map(4, (GR_ONE, GR_ZERO, GR_ZERO, GR_ZERO))
    with pytest.raises(BadSupport):
        f_map(4, (GR_ZERO, GR_ZERO, GR_ZERO))


def test_phi_w_zero_is_identity():
    space = QuadSpace(4, SPLIT)
    assert phi_w_matrix(space, 4, tuple([GR_ZERO] * 4)) == mat_identity(4)
    e1 = (GR_ONE, GR_ZERO, GR_ZERO, GR_ZERO)
    w = (GR_ZERO, GR_ZERO, GaussianRational(2), GaussianRational(1))
    m = phi_w_matrix(space, 4, w)
    assert mat_vec(m, e1) == e1
    assert space.preserves(m)


# -- suite smoke at reduced size --------------------------------------


@pytest.mark.parametrize("n", [2, 3, 5])
def test_relations_suite(n):
    rep = verify_clifford_relations(n, samples=25, seed=11)
    assert rep.ok, rep.to_text()


@pytest.mark.parametrize("n", [3, 4])
def test_phi_pin_suite(n):
    rep = verify_phi_pin_embedding(n, samples=40, seed=11)
    assert rep.ok, rep.to_text()


@pytest.mark.parametrize("n", [3, 5])
def test_f_suite(n):
    rep = verify_f_properties(n, samples=25, seed=11)
    assert rep.ok, rep.to_text()


def test_phi_w_suite():
    rep = verify_phi_w(4, samples=25, seed=11)
    assert rep.ok, rep.to_text()


def test_eta_suite():
    rep = eta_center_check(samples=20, seed=11)
    assert rep.ok, rep.to_text()


def test_suite_size_guards():
    with pytest.raises(ValueError):
        verify_phi_pin_embedding(9)
    with pytest.raises(ValueError):
        verify_f_properties(2)
