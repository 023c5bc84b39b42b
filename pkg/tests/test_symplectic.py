"""Skew forms, compatibility identities, star products."""

import random
from fractions import Fraction

import pytest

from sympleib.algebra import (
    Algebra,
    is_left_symmetric,
    multiply,
)
from sympleib.exactlin import Matrix, basis_vector, span, vector, zero_subspace
from sympleib.symplectic import (
    SkewForm,
    SymplecticAlgebra,
    find_nondegenerate,
    form_coords,
    form_from_coords,
    form_from_pairs,
    is_bi_symplectic,
    is_isotropic,
    is_lagrangian,
    is_symplectic_left,
    is_symplectic_left_split,
    is_symplectic_right,
    is_symplectic_right_split,
    omega,
    omega_adjoint,
    orthogonal,
    solve_symplectic_forms,
    star_left,
    star_right,
    upper_index,
)


def _dim2(x=3):
    return Algebra.from_table(2, {(2, 2): {1: x}})


def _r4():
    return Algebra.from_table(4, {
        (1, 1): {4: 1},
        (1, 2): {3: 1},
        (1, 3): {4: 1},
        (2, 1): {3: -1},
        (3, 1): {4: -1},
    })


def _rr3_minus1():
    return Algebra.from_table(4, {
        (1, 2): {2: 1},
        (2, 1): {2: -1},
        (1, 3): {3: -1},
        (3, 1): {3: 1},
    })


W14_23 = form_from_pairs(4, {(1, 4): 1, (2, 3): 1})
W12 = form_from_pairs(2, {(1, 2): 1})


def _random_algebra(rng, n, lo=-2, hi=2):
    c = tuple(
        tuple(vector([rng.randint(lo, hi) for _ in range(n)]) for _ in range(n))
        for _ in range(n)
    )
    return Algebra(n, c)


def _random_form(rng, n):
    while True:
        pairs = {(i + 1, j + 1): rng.randint(-3, 3)
                 for i in range(n) for j in range(i + 1, n)}
        f = form_from_pairs(n, pairs)
        if f.nondegenerate:
            return f


def _l1_defect(a, form, i, j, k):
    e = [basis_vector(a.dim, t) for t in range(a.dim)]
    return (omega(form, e[i], a.c[j][k]) - omega(form, e[j], a.c[i][k])
            - Fraction(1, 2) * omega(form, a.c[i][j], e[k])
            + Fraction(1, 2) * omega(form, a.c[j][i], e[k]))


def test_skew_form_construction():
    assert W14_23.nondegenerate
    assert W14_23.w.entries[0][3] == 1
    assert W14_23.w.entries[3][0] == -1
    with pytest.raises(ValueError):
        SkewForm(Matrix.from_rows([[0, 1], [1, 0]]))
    degenerate = SkewForm(Matrix.zero(2, 2))
    assert not degenerate.nondegenerate


def test_omega_evaluation():
    u = vector([1, 2, 0, 0])
    v = vector([0, 0, 3, 4])
    # omega = e1^e4 + e2^e3: u1 v4 - u4 v1 + u2 v3 - u3 v2
    assert omega(W14_23, u, v) == Fraction(10)
    assert omega(W14_23, v, u) == Fraction(-10)


def test_omega_adjoint_definition():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.choice([2, 4])
        form = _random_form(rng, n)
        m = Matrix.from_rows([[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
        ms = omega_adjoint(form, m)
        for i in range(n):
            for j in range(n):
                u, v = basis_vector(n, i), basis_vector(n, j)
                assert omega(form, ms.matvec(u), v) == omega(form, u, m.matvec(v))
                # skewness makes the mirrored convention agree
                assert omega(form, u, ms.matvec(v)) == omega(form, m.matvec(u), v)


def test_omega_adjoint_is_involutive_and_antimultiplicative():
    rng = random.Random(32)
    form = _random_form(rng, 4)
    a = Matrix.from_rows([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
    b = Matrix.from_rows([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
    assert omega_adjoint(form, omega_adjoint(form, a)) == a
    assert omega_adjoint(form, a @ b) == omega_adjoint(form, b) @ omega_adjoint(form, a)


def test_r4_is_left_symplectic():
    rep = is_symplectic_left(_r4(), W14_23)
    assert rep.holds


def test_dim2_is_bi_symplectic_for_nonzero_parameter():
    for x in (1, -1, 5, Fraction(2, 3)):
        a = _dim2(x)
        assert is_symplectic_left(a, W12).holds
        assert is_symplectic_right(a, W12).holds
        assert is_bi_symplectic(a, W12).holds


def test_degenerate_form_reports_radical_witness():
    rep = is_symplectic_left(_dim2(), SkewForm(Matrix.zero(2, 2)))
    assert not rep.holds
    assert rep.witness.kind == "degenerate-form"
    assert rep.witness.defect != (0, 0)


def test_split_formulations_agree_with_direct_ones():
    rng = random.Random(33)
    for _ in range(40):
        n = rng.choice([2, 4])
        a = _random_algebra(rng, n)
        form = _random_form(rng, n)
        assert is_symplectic_left(a, form).holds == is_symplectic_left_split(a, form).holds
        assert is_symplectic_right(a, form).holds == is_symplectic_right_split(a, form).holds


def test_bi_symplectic_means_left_and_right():
    rng = random.Random(34)
    seen_bi = 0
    for x in (1, 2, -3):
        a = _dim2(x)
        assert is_bi_symplectic(a, W12).holds
        seen_bi += 1
    for _ in range(40):
        n = rng.choice([2, 4])
        a = _random_algebra(rng, n)
        form = _random_form(rng, n)
        bi = is_bi_symplectic(a, form).holds
        both = (is_symplectic_left(a, form).holds
                and is_symplectic_right(a, form).holds)
        assert bi == both
    assert seen_bi == 3


def test_upper_index_is_lexicographic():
    assert [upper_index(4, i, j) for i in range(4) for j in range(i + 1, 4)] == list(range(6))


def test_form_coords_round_trip():
    coords = form_coords(W14_23)
    assert form_from_coords(4, coords) == W14_23
    assert coords == (0, 0, 1, 1, 0, 0)


def test_solve_symplectic_forms_dim2_is_exactly_the_area_form_line():
    space = solve_symplectic_forms(_dim2(), side="left")
    assert space == span(1, [[1]])
    assert solve_symplectic_forms(_dim2(), side="right") == span(1, [[1]])


def test_solve_symplectic_forms_r4_contains_the_known_form():
    space = solve_symplectic_forms(_r4(), side="left")
    assert space.contains(form_coords(W14_23))
    # every element of the space satisfies the defining equations
    rng = random.Random(35)
    for _ in range(10):
        coords = [Fraction(0)] * space.ambient_dim
        for row in space.basis.entries:
            c = rng.randint(-5, 5)
            coords = [x + c * y for x, y in zip(coords, row)]
        form = form_from_coords(4, coords)
        a = _r4()
        for i in range(4):
            for j in range(4):
                for k in range(4):
                    assert _l1_defect(a, form, i, j, k) == 0


def test_find_nondegenerate_r4():
    space = solve_symplectic_forms(_r4(), side="left")
    form = find_nondegenerate(space, 4, seed=0)
    assert form is not None
    assert form.nondegenerate
    assert is_symplectic_left(_r4(), form).holds


def test_find_nondegenerate_on_zero_space_returns_none():
    assert find_nondegenerate(zero_subspace(6), 4, seed=0) is None


def test_r4_star_table():
    star = star_left(_r4(), W14_23)
    expected = Algebra.from_table(4, {
        (1, 1): {2: -1, 4: 1},
        (1, 2): {3: 1},
        (2, 2): {4: -1},
        (3, 1): {4: -1},
    })
    assert star.c == expected.c


def test_rr3_minus1_star_table():
    star = star_left(_rr3_minus1(), W14_23)
    expected = Algebra.from_table(4, {
        (1, 2): {2: 1},
        (1, 3): {3: -1},
        (2, 3): {4: 1},
        (3, 2): {4: 1},
    })
    assert star.c == expected.c


def test_star_left_defining_relation():
    rng = random.Random(36)
    for a, form in ((_r4(), W14_23), (_rr3_minus1(), W14_23), (_dim2(), W12)):
        star = star_left(a, form)
        n = a.dim
        for _ in range(20):
            u = vector([rng.randint(-4, 4) for _ in range(n)])
            v = vector([rng.randint(-4, 4) for _ in range(n)])
            w = vector([rng.randint(-4, 4) for _ in range(n)])
            assert omega(form, multiply(star, u, v), w) == -omega(form, v, multiply(a, u, w))


def test_star_right_defining_relation():
    rng = random.Random(37)
    for a, form in ((_r4(), W14_23), (_dim2(), W12)):
        star = star_right(a, form)
        n = a.dim
        for _ in range(20):
            u = vector([rng.randint(-4, 4) for _ in range(n)])
            v = vector([rng.randint(-4, 4) for _ in range(n)])
            w = vector([rng.randint(-4, 4) for _ in range(n)])
            assert omega(form, multiply(star, u, v), w) == -omega(form, v, multiply(a, w, u))


def test_star_of_left_symplectic_pair_is_left_symmetric_with_half_commutator():
    for a, form in ((_r4(), W14_23), (_rr3_minus1(), W14_23), (_dim2(), W12)):
        star = star_left(a, form)
        assert is_left_symmetric(star).holds
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = vector([x - y for x, y in zip(star.c[i][j], star.c[j][i])])
                rhs = vector([Fraction(1, 2) * (x - y)
                              for x, y in zip(a.c[i][j], a.c[j][i])])
                assert lhs == rhs


def test_orthogonal_isotropic_lagrangian():
    e = [basis_vector(4, i) for i in range(4)]
    line = span(4, [e[0]])
    assert orthogonal(W14_23, line) == span(4, [e[0], e[1], e[2]])
    assert is_isotropic(W14_23, line)
    plane = span(4, [e[0], e[1]])
    assert is_lagrangian(W14_23, plane)
    assert not is_lagrangian(W14_23, line)
    assert orthogonal(W14_23, zero_subspace(4)) == span(4, e)


def test_symplectic_algebra_bundle_checks_on_construction():
    sa = SymplecticAlgebra(_r4(), W14_23, side="left")
    assert sa.algebra.dim == 4
    SymplecticAlgebra(_dim2(), W12, side="bi")
    with pytest.raises(ValueError):
        SymplecticAlgebra(_dim2(), SkewForm(Matrix.zero(2, 2)), side="left")
    with pytest.raises(ValueError):
        SymplecticAlgebra(_dim2(), W12, side="sideways")
