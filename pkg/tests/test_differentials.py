"""Differential modules: presentation rows, zero tests, induced maps, the
graded kernel of the universal derivation, and its Leibniz/representative
properties."""

import random

import pytest

from unramified import linalg
from unramified.algebras import (
    MODE_GRADED,
    Presentation,
    make_map,
    make_quotient,
)
from unramified.differentials import (
    derivation_kernel_in_degree,
    induced_map_on_omega,
    is_omega_zero,
    is_zero_induced_map,
    kaehler,
    omega_matrix_on_bases,
    veronese_containment_check,
)
from unramified.fields import QQ, prime_field, rational_functions
from unramified.groebner import normal_form
from unramified.polynomials import (
    ModuleVector,
    PolyRing,
    Polynomial,
    format_polynomial,
    partial_derivative,
)

R = PolyRing(QQ, ("X", "Y"))
X, Y = R.variable("X"), R.variable("Y")
RZ = PolyRing(QQ, ("Z",))
Z = RZ.variable("Z")


def test_free_algebra_module_is_free():
    free = make_quotient(Presentation(PolyRing(QQ, ("X",)), ()))
    module = kaehler(free)
    assert not module.is_zero()
    dX = module.d_image(free.ring.variable("X"))
    assert dX == ModuleVector.unit(free.ring, 1, 0)
    assert module.d_image(free.ring.from_int(7)).is_zero()


def test_dual_numbers_module(dual_numbers):
    # R dZ / (2z dZ, z^2 dZ): one-dimensional, dz nonzero, z dz = 0
    module = kaehler(dual_numbers)
    assert not module.is_d_zero(Z)
    z_dz = module.raw_differential(Z).poly_mul(Z)
    assert module.contains(z_dz)
    assert module.dimension() == 1
    assert not is_omega_zero(dual_numbers)


def test_b5_presentation_rows(b5):
    B, _ = b5
    module = kaehler(B)
    ring = B.ring
    # every Jacobian row of a defining relation must be a relation vector
    for g in B.presentation.relations:
        row = {}
        for i, name in enumerate(ring.names):
            d = partial_derivative(g, name)
            for m, c in d.terms.items():
                row[(i, m)] = c
        if row:
            assert ModuleVector(ring, 2, row) in module.relation_vectors
    # in particular the row of X*F1 is (F1 + X dF1/dX, X dF1/dY)
    X, Y = ring.variable("X"), ring.variable("Y")
    F1 = 2 * Y ** 2 + 5 * X ** 3
    expected = ModuleVector.from_components(
        ring, [F1 + X * partial_derivative(F1, "X"), X * partial_derivative(F1, "Y")])
    assert expected in module.relation_vectors


def test_b5_df_zero(b5):
    B, _ = b5
    F = X ** 2 * Y ** 2 + X ** 5 + Y ** 5
    module = kaehler(B)
    assert module.is_d_zero(F)
    assert not module.is_zero()


def test_charp_quotient_keeps_free_generator():
    # over F_p the relation Y^(p^n) contributes the zero Jacobian row, so the
    # module is free of rank one over the quotient
    for p, n in ((2, 1), (2, 2), (3, 1)):
        field = prime_field(p)
        ring = PolyRing(field, ("Y",))
        a = make_quotient(Presentation(ring, (ring.variable("Y") ** (p ** n),)))
        module = kaehler(a)
        assert not module.is_zero()
        assert module.dimension() == p ** n


def test_collapsed_line_is_unramified():
    collapsed = make_quotient(Presentation(RZ, (Z,)))
    assert is_omega_zero(collapsed)
    ground = make_quotient(Presentation(PolyRing(QQ, ()), ()))
    assert is_omega_zero(ground)


def test_twisted_relations():
    L = rational_functions(2)
    ring = PolyRing(L, ("U", "Z"))
    U, Zt = ring.variable("U"), ring.variable("Z")
    x = ring.from_scalar(L.generator())
    a = make_quotient(Presentation(ring, (U ** 2 - x - Zt, Zt ** 2)))
    module = kaehler(a)
    assert module.is_d_zero(Zt)
    assert not module.is_zero()
    assert not module.d_image(U).is_zero()


def test_induced_maps():
    field = prime_field(2)
    ring1 = PolyRing(field, ("Y",))
    ring2 = PolyRing(field, ("Y",))
    a1 = make_quotient(Presentation(ring1, (ring1.variable("Y") ** 2,)))
    a2 = make_quotient(Presentation(ring2, (ring2.variable("Y") ** 4,)))
    step = make_map(a1, a2, {"Y": ring2.variable("Y") ** 2})
    images = induced_map_on_omega(step)
    assert len(images) == 1 and images[0].is_zero()
    assert is_zero_induced_map(step)

    free = make_quotient(Presentation(PolyRing(QQ, ("X",)), ()))
    from unramified.algebras import identity_map
    assert not is_zero_induced_map(identity_map(free))


def test_omega_matrix_is_zero_matrix_for_tower_step():
    field = prime_field(3)
    ring1 = PolyRing(field, ("Y",))
    ring2 = PolyRing(field, ("Y",))
    a1 = make_quotient(Presentation(ring1, (ring1.variable("Y") ** 3,)))
    a2 = make_quotient(Presentation(ring2, (ring2.variable("Y") ** 9,)))
    step = make_map(a1, a2, {"Y": ring2.variable("Y") ** 3})
    matrix = omega_matrix_on_bases(step)
    assert all(v.is_zero() for row in matrix for v in row)


def test_derivation_kernel_character_zero():
    graded = make_quotient(Presentation(R, (X ** 2 - Y ** 2,), MODE_GRADED))
    for degree in range(1, 5):
        assert derivation_kernel_in_degree(graded, degree) == []


def test_derivation_kernel_prime_field():
    for p in (2, 3):
        field = prime_field(p)
        ring = PolyRing(field, ("X",))
        free = make_quotient(Presentation(ring, (), MODE_GRADED))
        kern = derivation_kernel_in_degree(free, p)
        assert [format_polynomial(k) for k in kern] == [f"X^{p}"]
        assert derivation_kernel_in_degree(free, p + 1) == []


def test_derivation_kernel_requires_graded(dual_numbers):
    with pytest.raises(ValueError):
        derivation_kernel_in_degree(dual_numbers, 1)


def test_veronese_containment():
    F3 = prime_field(3)
    ring = PolyRing(F3, ("X",))
    free = make_quotient(Presentation(ring, (), MODE_GRADED))
    report = veronese_containment_check(free, 9)
    assert report.passed
    assert report.kernel_dimensions == {1: 0, 2: 0, 3: 1, 4: 0, 5: 0, 6: 1,
                                        7: 0, 8: 0, 9: 1}

    F2 = prime_field(2)
    ring2 = PolyRing(F2, ("X", "Y"))
    cross = make_quotient(Presentation(
        ring2, (ring2.variable("X") * ring2.variable("Y"),), MODE_GRADED))
    report2 = veronese_containment_check(cross, 6)
    assert report2.passed
    assert report2.kernel_dimensions == {1: 0, 2: 2, 3: 0, 4: 2, 5: 0, 6: 2}

    graded = make_quotient(Presentation(R, (X ** 2 - Y ** 2,), MODE_GRADED))
    with pytest.raises(ValueError):
        veronese_containment_check(graded, 4)


def _random_poly(rng, ring, max_exp=3, max_terms=4):
    terms = []
    for _ in range(rng.randrange(0, max_terms + 1)):
        mono = tuple(sorted((i, rng.randrange(1, max_exp + 1))
                            for i in range(ring.nvars) if rng.random() < 0.6))
        c = ring.field.from_int(rng.randrange(-4, 5))
        if not c.is_zero():
            terms.append((mono, c))
    return Polynomial.build(ring, terms)


def test_leibniz_rule(b5):
    B, _ = b5
    module = kaehler(B)
    rng = random.Random(5)
    for _ in range(25):
        f = _random_poly(rng, B.ring)
        g = _random_poly(rng, B.ring)
        left = module.raw_differential(f * g)
        right = (module.raw_differential(g).poly_mul(f)
                 + module.raw_differential(f).poly_mul(g))
        assert module.reduce(left) == module.reduce(right)


def test_representative_independence(b5):
    B, _ = b5
    module = kaehler(B)
    rng = random.Random(9)
    relations = list(B.presentation.relations)
    for _ in range(25):
        f = _random_poly(rng, B.ring)
        h = rng.choice(relations) * _random_poly(rng, B.ring, max_exp=2, max_terms=2)
        assert module.d_image(f) == module.d_image(f + h)


def test_degree_times_kernel_element_vanishes():
    # a homogeneous f with df = 0 must satisfy deg(f) * f = 0 in the algebra
    for p in (2, 3):
        field = prime_field(p)
        ring = PolyRing(field, ("X", "Y"))
        algebra = make_quotient(Presentation(
            ring, (ring.variable("X") * ring.variable("Y"),), MODE_GRADED))
        for degree in range(1, 2 * p + 1):
            for f in derivation_kernel_in_degree(algebra, degree):
                assert algebra.is_zero_element(f.scale(degree))


def test_degree_times_kernel_element_vanishes_randomized():
    from unramified.polynomials import monomials_of_weighted_degree
    rng = random.Random(31)
    for _ in range(12):
        p = rng.choice((2, 3))
        field = prime_field(p)
        nvars = rng.randrange(1, 3)
        ring = PolyRing(field, tuple(f"V{i}" for i in range(nvars)),
                        tuple(rng.randrange(1, 3) for _ in range(nvars)))
        relations = []
        for _ in range(rng.randrange(0, 3)):
            degree = rng.randrange(1, 5)
            monos = monomials_of_weighted_degree(ring, degree)
            if not monos:
                continue
            terms = {m: field.from_int(rng.randrange(1, p))
                     for m in rng.sample(monos, k=min(2, len(monos)))}
            rel = Polynomial(ring, terms)
            if not rel.is_zero():
                relations.append(rel)
        algebra = make_quotient(Presentation(ring, tuple(relations), MODE_GRADED))
        for degree in range(1, 7):
            for f in derivation_kernel_in_degree(algebra, degree):
                assert algebra.is_zero_element(f.scale(degree))


def test_base_change_sanity():
    # unramified over the field stays unramified over the degree-zero subring
    collapsed = make_quotient(Presentation(RZ, (Z,)))
    assert is_omega_zero(collapsed, "field")
    assert is_omega_zero(collapsed, "degree0")


def test_finite_omega_dimension_cross_check(b5, dual_numbers):
    # module staircase count vs dense linear algebra over the algebra basis
    for algebra in (dual_numbers,):
        module = kaehler(algebra)
        dim_module = module.dimension()
        # dense model: coordinates of mono * row over basis x components
        basis = algebra.basis_monomials()
        rows = []
        field = algebra.field
        for vec in module.relation_vectors:
            for mu in basis:
                shifted = vec.poly_mul(Polynomial(algebra.ring, {mu: field.one()}))
                dense = [field.zero()] * (len(basis) * module.rank)
                for comp in range(module.rank):
                    reduced = algebra.reduce(shifted.component(comp))
                    for m, c in reduced.terms.items():
                        dense[basis.index(m) + comp * len(basis)] = c
                rows.append(dense)
        rank = linalg.rank(rows, len(basis) * module.rank, field)
        assert dim_module == len(basis) * module.rank - rank
        assert module.is_zero() == (dim_module == 0)
