"""Jacobian criterion, singular loci, radicality certificates."""

from __future__ import annotations

from fractions import Fraction

import pytest

from realcurve import (
    RadicalityReason,
    RadicalityVerdict,
    is_smooth_at,
    is_unit_ideal,
    jacobian,
    krull_dimension,
    minors_ideal,
    radicality_certificate,
    rank_at,
    singular_locus_ideal,
)
from realcurve.errors import DimensionUnknown, PointNotOnVariety, RankTooLarge
from realcurve.singular import is_on_variety

from conftest import make_ideal, poly

Q = Fraction


def test_jacobian_of_node(node):
    j = jacobian(node)
    assert j.entries == ((poly("-2x - 3x^2"), poly("2y")),)


def test_jacobian_of_coordinate_ideal():
    j = jacobian(make_ideal("x,y", "x", "y"))
    assert j.entries[0][0] == poly("1")
    assert j.entries[0][1].is_zero()
    assert j.entries[1][1] == poly("1")


def test_jacobian_fourbar_first_row():
    i = make_ideal(
        "x,y,u,v",
        "x^2 + y^2 - 9/4",
        "(u-2)^2 + v^2 - 1",
        "(u-x)^2 + (v-y)^2 - 9/4",
    )
    j = jacobian(i)
    assert j.rows == 3 and j.cols == 4
    assert j.entries[0][0] == poly("2x", "x,y,u,v")
    assert j.entries[0][1] == poly("2y", "x,y,u,v")
    assert j.entries[0][2].is_zero()
    assert j.entries[0][3].is_zero()


def test_rank_at_node_points(node):
    j = jacobian(node)
    assert rank_at(j, [0, 0]) == 0
    assert rank_at(j, [-1, 0]) == 1


def test_minors_of_node_jacobian(node):
    m = minors_ideal(jacobian(node), 1)
    gens = set(m.generators)
    assert poly("3x^2 + 2x") in gens  # sign-normalized partial
    assert poly("y") in gens


def test_minors_rank_zero_is_unit():
    assert is_unit_ideal(minors_ideal(jacobian(make_ideal("x,y", "x")), 0))


def test_minors_too_large_rejected():
    with pytest.raises(RankTooLarge):
        minors_ideal(jacobian(make_ideal("x,y", "x")), 2)


def test_singular_locus_of_node(node):
    j = singular_locus_ideal(node)
    assert krull_dimension(j) == 0
    assert is_on_variety(j, [0, 0])


def test_singular_locus_of_smooth_line():
    assert is_unit_ideal(singular_locus_ideal(make_ideal("x,y", "x - y")))


def test_singular_locus_requires_certificate():
    with pytest.raises(DimensionUnknown):
        singular_locus_ideal(make_ideal("x,y,z", "(z-1)xy", "z(z-1)"))


def test_smoothness_on_node(node):
    assert not is_smooth_at(node, [0, 0])
    assert is_smooth_at(node, [-1, 0])


def test_smoothness_rejects_off_variety_points(node):
    with pytest.raises(PointNotOnVariety):
        is_smooth_at(node, [1, 1])


def test_smoothness_of_rational_cubic_line():
    i = make_ideal("x,y", "x^3 - 5y^3")
    assert not is_smooth_at(i, [0, 0])


def test_certificate_principal_squarefree():
    cert = radicality_certificate(make_ideal("x,y", "y^3 + 2x^2y - x^4"))
    assert cert.verdict is RadicalityVerdict.RADICAL
    assert cert.reason is RadicalityReason.PRINCIPAL_SQUAREFREE
    assert cert.covers_equidimensionality


def test_certificate_unknown_for_nonradical():
    cert = radicality_certificate(make_ideal("x,y", "x^2", "xy"))
    assert cert.verdict is RadicalityVerdict.UNKNOWN
    assert cert.reason is RadicalityReason.NONE


def test_certificate_unknown_for_fat_principal():
    cert = radicality_certificate(make_ideal("x,y", "x^2"))
    assert cert.verdict is RadicalityVerdict.UNKNOWN


def test_principal_squarefree_singular_locus_is_small():
    for gen in ("y^2 - x^2 - x^3", "y^3 + 2x^2y - x^4", "x^3 - 5y^3"):
        i = make_ideal("x,y", gen)
        assert krull_dimension(singular_locus_ideal(i)) < krull_dimension(i)
