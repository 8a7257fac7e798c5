"""Osculating dimensions, Laplace equation counts, and the lattice quadric."""

import itertools

import pytest

from lefschetz.apolarity import apolar_complement
from lefschetz.osculating import (
    LinearSystem,
    homogeneous_jet_rank,
    laplace_count,
    osculating_dimension,
    perkinson_quadric,
)
from lefschetz.parser import format_form
from lefschetz.sampling import random_chart_point, rng_for
from lefschetz.wlp import IdealSpec, has_wlp

HEXAGON = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]


@pytest.fixture
def hexagon_system():
    return LinearSystem.from_monomials(2, 3, HEXAGON)


def test_from_apolar_matches_from_monomials(togliatti_cubic, hexagon_system):
    via_apolar = LinearSystem.from_apolar(apolar_complement(togliatti_cubic))
    assert sorted(via_apolar.exponents()) == sorted(hexagon_system.exponents())
    assert via_apolar.projective_target == hexagon_system.projective_target == 5


def test_hexagon_tangent_space_is_honest(hexagon_system):
    rep = osculating_dimension(hexagon_system, 1, seed=0, trials=3)
    assert (rep.expected_dim, rep.actual_dim, rep.delta) == (2, 2, 0)


def test_hexagon_second_osculating_space_drops(hexagon_system):
    rep = osculating_dimension(hexagon_system, 2, seed=0, trials=3)
    assert (rep.expected_dim, rep.actual_dim, rep.delta) == (5, 4, 1)
    count = laplace_count(hexagon_system, 2, seed=0, trials=3)
    assert count.delta == 1
    assert not count.degenerate


def test_full_veronese_has_no_laplace_equation():
    exps = [e for e in itertools.product(range(4), repeat=3) if sum(e) == 3]
    full = LinearSystem.from_monomials(2, 3, exps)
    rep = osculating_dimension(full, 2, seed=0, trials=3)
    assert rep.delta == 0
    assert perkinson_quadric(full.exponents()) is None


def test_quartic_projection_laplace_order_three():
    # the degree 4 counterpart: one Laplace equation, but only at order d-1 = 3
    spec = IdealSpec.from_monomials(
        2, 4, [(4, 0, 0), (0, 4, 0), (0, 0, 4), (2, 2, 0), (1, 1, 2)]
    )
    system = LinearSystem.from_apolar(apolar_complement(spec))
    assert len(system.members) == 10
    assert system.projective_target == 9
    second = osculating_dimension(system, 2, seed=0, trials=3)
    assert (second.expected_dim, second.actual_dim, second.delta) == (5, 5, 0)
    third = osculating_dimension(system, 3, seed=0, trials=3)
    assert (third.expected_dim, third.actual_dim, third.delta) == (9, 8, 1)
    ok, failures = has_wlp(spec, seed=0, trials=3)
    assert not ok and failures == [3]


@pytest.mark.parametrize("s", [1, 2])
def test_homogeneous_jets_match_affine_chart(hexagon_system, s):
    # Euler relation: order-s homogeneous partials at (1, p) span one more
    # dimension than the affine jet, the cone direction
    rng = rng_for(0, "osculating", "euler", s)
    rep = osculating_dimension(hexagon_system, s, seed=0, trials=3)
    for _ in range(3):
        point = random_chart_point(2, rng)
        assert homogeneous_jet_rank(hexagon_system, s, point) == rep.actual_dim + 1


def test_hexagon_quadric(hexagon_system):
    q = perkinson_quadric(hexagon_system.exponents())
    assert q is not None
    text = format_form(q, ("x0", "x1", "x2"))
    assert text == "2*x0^2 - 5*x0*x1 - 5*x0*x2 + 2*x1^2 - 5*x1*x2 + 2*x2^2"


def test_quadric_vanishes_on_marked_points(hexagon_system):
    q = perkinson_quadric(hexagon_system.exponents())
    for e in hexagon_system.exponents():
        assert q.evaluate(e) == 0
    # and does not vanish on the discarded vertex monomials
    for e in [(3, 0, 0), (0, 3, 0), (0, 0, 3)]:
        assert q.evaluate(e) != 0


def test_quadric_requires_enough_points():
    # five points always lie on a conic; the hit only means something for >= 6
    assert perkinson_quadric(HEXAGON[:5]) is not None
