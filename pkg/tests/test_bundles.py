"""Splitting types of restricted syzygy bundles and the rank-four verifier."""

from fractions import Fraction

import pytest

from lefschetz.algebra import Form
from lefschetz.bundles import (
    SplittingType,
    restrict_to_line,
    splitting_type,
    verify_r4_theorem,
    wlp_via_splitting,
)
from lefschetz.wlp import IdealSpec, fails_in_degree_dminus1


def test_togliatti_splitting(togliatti_cubic):
    st = splitting_type(togliatti_cubic, seed=0, trials=3)
    assert st.values == (-2, -1, 0)
    assert st.d == 3
    assert st.generic_splitting == st.values
    assert not st.wlp_in_degree_dminus1


def test_control_splitting(control_cubic):
    st = splitting_type(control_cubic, seed=0, trials=3)
    assert st.values == (-1, -1, -1)
    assert st.wlp_in_degree_dminus1


def test_splitting_invariants(togliatti_cubic, control_cubic):
    for spec in (togliatti_cubic, control_cubic):
        st = splitting_type(spec, seed=0, trials=3)
        assert len(st.values) == spec.r - 1
        assert sum(st.values) == -spec.d
        assert all(a <= 0 for a in st.values)
        assert st.values == tuple(sorted(st.values))


def test_wlp_via_splitting_matches_direct(togliatti_cubic, control_cubic):
    for spec in (togliatti_cubic, control_cubic):
        assert wlp_via_splitting(spec, seed=0, trials=3) == (
            not fails_in_degree_dminus1(spec, seed=0, trials=3)
        )


def test_splitting_rejects_non_artinian():
    with pytest.raises(ValueError):
        splitting_type(IdealSpec.from_monomials(2, 3, [(3, 0, 0), (0, 3, 0)]))
    with pytest.raises(ValueError):
        splitting_type(IdealSpec.from_monomials(2, 3, [(3, 0, 0)]))


def test_restrict_to_line_binary_cubic():
    cube = Form.monomial((3, 0, 0))
    (restricted,) = restrict_to_line([cube], (1, 2, 3), (4, 5, 6))
    # x = s + 4t, so x^3 pulls back to (s + 4t)^3
    assert restricted.n == 1
    assert restricted.degree == 3
    assert dict(restricted.terms) == {
        (3, 0): Fraction(1),
        (2, 1): Fraction(12),
        (1, 2): Fraction(48),
        (0, 3): Fraction(64),
    }


def test_restrict_to_line_rejects_coincident_points():
    cube = Form.monomial((3, 0, 0))
    with pytest.raises(ValueError):
        restrict_to_line([cube], (1, 2, 3), (2, 4, 6))


def test_restrict_to_line_keeps_count(togliatti_cubic):
    forms = list(togliatti_cubic.generators)
    out = restrict_to_line(forms, (1, 0, 2), (0, 1, 5))
    assert len(out) == len(forms)
    assert all(f.degree == 3 for f in out)


def test_verify_r4_smoke():
    report = verify_r4_theorem(
        4, 4, seed=0, trials=2, monomial_samples=10, random_samples=2
    )
    assert report["ok"]
    assert report["violations"] == []
    assert report["d_min"] == report["d_max"] == 4
    (entry,) = report["per_degree"]
    assert entry["d"] == 4
    assert entry["distinct_monomial_ideals"] > 0
    assert "witness" in entry
