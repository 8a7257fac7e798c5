"""Forms, monomial bases, substitution, and graded maps."""

from fractions import Fraction
from math import comb

import pytest

from lefschetz.algebra import (
    Form,
    forms_to_matrix,
    graded_map_from_images,
    monomial_basis,
    rank_of_span,
    substitute_variable,
)
from lefschetz.sampling import random_form, random_linear_form, rng_for


def test_monomial_basis_counts_and_order():
    assert monomial_basis(2, 0) == ((0, 0, 0),)
    assert monomial_basis(1, 3) == ((3, 0), (2, 1), (1, 2), (0, 3))
    for n in range(4):
        for d in range(6):
            basis = monomial_basis(n, d)
            assert len(basis) == comb(n + d, d)
            assert len(set(basis)) == len(basis)
            assert all(sum(e) == d and len(e) == n + 1 for e in basis)
            assert list(basis) == sorted(basis, reverse=True)


def test_form_construction_and_cleaning():
    f = Form(2, 2, {(1, 1, 0): 1, (0, 0, 2): 0})
    assert f.terms == {(1, 1, 0): 1}
    assert not f.is_zero
    assert Form.zero(2, 5).is_zero
    assert Form.zero(2, 5).degree == 5
    with pytest.raises(ValueError):
        Form(2, 2, {(1, 1, 1): 1})
    with pytest.raises(ValueError):
        Form(2, 2, {(1, 1): 1})
    with pytest.raises(AttributeError):
        Form.variable(2, 0).n = 3


def test_form_arithmetic():
    x = Form.variable(2, 0)
    y = Form.variable(2, 1)
    z = Form.variable(2, 2)
    f = (x + y) * (x - y)
    assert f == x**2 - y**2
    assert (x * y * z).terms == {(1, 1, 1): 1}
    assert (2 * x).coefficient((1, 0, 0)) == 2
    assert (x * Fraction(1, 3)).coefficient((1, 0, 0)) == Fraction(1, 3)
    assert (x**0).degree == 0
    with pytest.raises(ValueError):
        x + x**2
    # adding a zero form of mismatched declared degree is tolerated
    assert (Form.zero(2, 7) + x**2) == x**2


def test_form_monomial_flag():
    assert Form.monomial((2, 1, 0)).is_monomial
    assert not (2 * Form.monomial((2, 1, 0))).is_monomial
    assert not (Form.variable(2, 0) + Form.variable(2, 1)).is_monomial


def test_evaluate():
    f = Form(2, 3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): -3})
    assert f.evaluate((1, 1, 1)) == 0
    assert f.evaluate((1, 2, 3)) == 1 + 8 + 27 - 18


def test_substitution_is_a_ring_map():
    rng = rng_for(0, "algebra-subst")
    for trial in range(30):
        n = rng.choice([2, 3])
        f = random_form(n, 2, rng, bound=9)
        g = random_form(n, 2, rng, bound=9)
        i = rng.randrange(n + 1)
        # replacement must avoid x_i
        replacement = Form(
            n,
            1,
            {
                tuple(1 if k == j else 0 for k in range(n + 1)): rng.randrange(-9, 10)
                for j in range(n + 1)
                if j != i
            },
        )
        sub_f = substitute_variable(f, i, replacement)
        sub_g = substitute_variable(g, i, replacement)
        assert substitute_variable(f * g, i, replacement) == sub_f * sub_g
        assert substitute_variable(f + g, i, replacement) == sub_f + sub_g


def test_substitution_drops_the_variable():
    f = Form(2, 2, {(2, 0, 0): 1, (1, 1, 0): 2, (0, 0, 2): 5})
    # x_0 := x_1 + x_2 (as a form in the original ring, then reduced)
    replacement = Form(2, 1, {(0, 1, 0): 1, (0, 0, 1): 1})
    g = substitute_variable(f, 0, replacement)
    assert g.n == 1
    # (y+z)^2 + 2(y+z)y + 5z^2 = 3y^2 + 4yz + 6z^2
    assert g.terms == {(2, 0): 3, (1, 1): 4, (0, 2): 6}
    with pytest.raises(ValueError):
        substitute_variable(f, 0, Form.variable(2, 0))


def test_rank_of_span_invariances():
    rng = rng_for(0, "algebra-rank")
    for trial in range(20):
        n = 2
        d = rng.choice([2, 3])
        forms = [random_form(n, d, rng, bound=9) for _ in range(rng.randrange(1, 6))]
        base = rank_of_span(forms)
        assert rank_of_span(forms + [Form.zero(n, d)]) == base
        assert rank_of_span(forms + [forms[0] * 3]) == base
        assert rank_of_span(forms + [forms[0] + forms[-1]]) == base
        scaled = [f * Fraction(rng.randrange(1, 5), rng.randrange(1, 5)) for f in forms]
        assert rank_of_span(scaled) == base
        # multiplying every form by one linear form preserves independence
        ell = random_linear_form(n, rng)
        assert rank_of_span([f * ell for f in forms]) == base


def test_forms_to_matrix_columns():
    x = Form.variable(1, 0)
    y = Form.variable(1, 1)
    rows, cols = forms_to_matrix([x**2, x * y])
    assert cols == ((2, 0), (1, 1))
    assert rows == [[1, 0], [0, 1]]
    rows2, cols2 = forms_to_matrix([x * y], columns=monomial_basis(1, 2))
    assert cols2 == ((2, 0), (1, 1), (0, 2))
    assert rows2 == [[0, 1, 0]]


def test_graded_map():
    x = Form.variable(1, 0)
    y = Form.variable(1, 1)
    ell = x + y
    images = [ell * x, ell * y]
    gm = graded_map_from_images(images, column_labels=monomial_basis(1, 1))
    assert gm.shape == (3, 2)
    assert gm.rank() == 2
    assert gm.kernel() == []
    gm2 = graded_map_from_images([x * y, x * y], column_labels=((0,), (1,)))
    assert gm2.rank() == 1
    (vec,) = gm2.kernel()
    assert vec == [Fraction(-1), Fraction(1)]
