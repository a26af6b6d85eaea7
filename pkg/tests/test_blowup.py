"""Blow-up charts, strict transforms, fibers, resolution."""

from __future__ import annotations

from fractions import Fraction

import pytest

from realcurve import (
    blowup_origin,
    fiber_ideal,
    fiber_summary,
    ideal_equal,
    ideal_membership,
    is_unit_ideal,
    quotient,
    resolve_curve,
    ring_map,
)
from realcurve.errors import OriginNotOnVariety
from realcurve.ideals import ideal
from realcurve.parsing import parse_polynomial

from conftest import make_ideal, poly

Q = Fraction


def chart_poly(text, chart):
    return parse_polynomial(text, chart.chart_variables)


def test_node_chart_x_strict(node):
    chart = blowup_origin(node)[0]
    assert chart.chart_variables.names == ("x", "y_h")
    expected = ideal(chart.chart_variables, (chart_poly("y_h^2 - 1 - x", chart),))
    assert ideal_equal(chart.strict_ideal, expected)


def test_cusp_chart_x_strict(cusp):
    chart = blowup_origin(cusp)[0]
    expected = ideal(chart.chart_variables, (chart_poly("y_h^2 - x", chart),))
    assert ideal_equal(chart.strict_ideal, expected)


def test_blowup_rejects_missing_origin():
    with pytest.raises(OriginNotOnVariety):
        blowup_origin(make_ideal("x,y", "y^2 - x^2 - x^3 + 1"))


def test_node_chart_x_fiber(node):
    chart = blowup_origin(node)[0]
    fib = fiber_ideal(chart, dedup=True)
    expected = ideal(
        chart.chart_variables,
        (chart_poly("x", chart), chart_poly("y_h^2 - 1", chart)),
    )
    assert ideal_equal(fib, expected)


def test_cusp_chart_x_fiber_nonreduced(cusp):
    chart = blowup_origin(cusp)[0]
    fib = fiber_ideal(chart, dedup=True)
    expected = ideal(
        chart.chart_variables, (chart_poly("x", chart), chart_poly("y_h^2", chart))
    )
    assert ideal_equal(fib, expected)


def test_example_vi_chart_x_fiber():
    i = make_ideal("x,y", "y^3 + 2x^2y - x^4")
    chart = blowup_origin(i)[0]
    fib = fiber_ideal(chart, dedup=True)
    expected = ideal(
        chart.chart_variables,
        (chart_poly("x", chart), chart_poly("y_h^3 + 2y_h", chart)),
    )
    assert ideal_equal(fib, expected)


def test_exceptional_generator_is_nonzerodivisor(node):
    for chart in blowup_origin(node):
        exc = ideal(
            chart.chart_variables,
            (parse_polynomial(chart.exceptional_generator, chart.chart_variables),),
        )
        assert ideal_equal(quotient(chart.strict_ideal, exc), chart.strict_ideal)


def test_pullback_soundness(node):
    for chart in blowup_origin(node):
        for g in node.generators:
            image = ring_map(g, chart.chart_variables, list(chart.pullbacks))
            assert ideal_membership(image, chart.strict_ideal)


def test_dedup_constraints_shape(node):
    charts = blowup_origin(node)
    assert charts[0].dedup_constraints == ()
    assert len(charts[1].dedup_constraints) == 1
    assert charts[1].dedup_constraints[0] == parse_polynomial(
        "x_h", charts[1].chart_variables
    )


def test_node_resolution(node):
    model = resolve_curve(node)
    assert model.depth == 1
    summary = fiber_summary(model)
    assert (summary.real_points, summary.complex_points) == (2, 2)
    assert summary.nonreduced_real_points == 0


def test_cusp_resolution(cusp):
    summary = fiber_summary(resolve_curve(cusp))
    assert (summary.real_points, summary.complex_points, summary.nonreduced_real_points) == (1, 1, 1)


def test_deep_resolution_y3_x10():
    i = make_ideal("x,y", "y^3 - x^10")
    model = resolve_curve(i, max_depth=8)
    assert model.depth > 1
    summary = fiber_summary(model)
    assert (summary.real_points, summary.nonreduced_real_points) == (1, 1)


def test_smooth_input_returns_depth_zero():
    i = make_ideal("x,y", "y - x^2")
    model = resolve_curve(i)
    assert model.depth == 0
    summary = fiber_summary(model)
    assert (summary.real_points, summary.complex_points, summary.nonreduced_real_points) == (1, 1, 0)


def test_definite_form_fiber():
    summary = fiber_summary(resolve_curve(make_ideal("x,y", "x^2 + y^2")))
    assert (summary.real_points, summary.complex_points, summary.nonreduced_real_points) == (0, 2, 0)


def test_chart_partition_counts_each_point_once(node):
    # without dedup, chart y_h=1 re-sees the two node directions
    charts = blowup_origin(node)
    total_dedup = 0
    for chart in charts:
        fib = fiber_ideal(chart, dedup=True)
        if not is_unit_ideal(fib):
            from realcurve import build, count_points

            total_dedup += count_points(build(fib)).complex_distinct
    assert total_dedup == 2


def test_resolve_requires_a_curve():
    from realcurve.errors import NotACurve

    with pytest.raises(NotACurve):
        resolve_curve(make_ideal("x,y", "x", "y"))


def test_blowup_of_smooth_origin_recovers_single_reduced_point(node):
    # regression for the smooth shortcut: forcing the blow-up machinery on a
    # smooth origin still reports one reduced real fiber point
    from realcurve.blowup import SmoothModel, _identity_chart, _resolve_chart
    from realcurve.decide import translate_ideal

    moved = translate_ideal(node, [-1, 0])
    leaves = []
    _resolve_chart(moved, _identity_chart(moved), 0, 6, leaves, moved)
    summary = fiber_summary(SmoothModel(tuple(leaves)))
    assert (summary.real_points, summary.nonreduced_real_points) == (1, 0)


def test_leaf_smoothness_certificate(node):
    from realcurve import ideal_sum
    from realcurve.singular import singular_locus_ideal

    model = resolve_curve(node)
    for chart in model.charts:
        if is_unit_ideal(chart.strict_ideal):
            continue
        sing = singular_locus_ideal(chart.strict_ideal, assume_equidimensional=True)
        assert is_unit_ideal(ideal_sum(sing, fiber_ideal(chart, dedup=True)))
