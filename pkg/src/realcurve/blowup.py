"""Iterated point blow-ups of curves and their exceptional fibers.

A blow-up of the origin is computed chart by chart: chart k substitutes
x_i -> x_k * x_i^ for i != k and divides out the exceptional divisor x_k by
saturation, giving the strict transform on that chart.  Each chart records
pullback expressions for every ORIGINAL ambient variable, composed through
the whole chain of blow-ups and translations, so the scheme-theoretic fiber
over the original point is always available as

    strict transform + pullbacks of the original variables.

Charts of one blow-up overlap; to count each geometric fiber point exactly
once, a point is attributed to the chart of its first nonzero homogeneous
coordinate.  Chart k realizes this with the linear constraints
x_1^ = ... = x_{k-1}^ = 0, and those constraints are composed down the chain
exactly like the pullbacks.

Resolution recurses: whenever the strict transform is singular at a rational
point of the dedup-restricted fiber, that point is translated to the origin
and blown up again.  Leaves are certified smooth along their restricted fiber
by checking that the singular-locus ideal plus the fiber ideal is the unit
ideal, a certificate over the complex numbers and not merely at real points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DepthExceeded,
    IrrationalSingularFiberPoint,
    NotACurve,
    OriginNotOnVariety,
)
from .groebner import normal_form
from .ideals import (
    IdealPresentation,
    groebner_basis,
    ideal,
    ideal_sum,
    is_unit_ideal,
    krull_dimension,
    saturate,
)
from .polynomials import Polynomial, VariableSet, ring_map
from .singular import (
    RadicalityCertificate,
    is_smooth_at,
    radicality_certificate,
    singular_locus_ideal,
)
from .zerodim import build, count_points, nonreduced_locus, rational_points

Q = Fraction


@dataclass(frozen=True)
class BlowupChart:
    """One chart of an (iterated) blow-up.

    pullbacks[i] expresses original variable i in this chart's coordinates;
    dedup_constraints select first-nonzero-coordinate representatives, both
    composed through every blow-up and translation on the way here.  depth
    counts the blow-ups performed; the identity chart of an unresolved smooth
    origin has depth 0 and no exceptional generator.
    """

    chart_index: int
    chart_variables: VariableSet
    strict_ideal: IdealPresentation
    exceptional_generator: str | None
    pullbacks: tuple[Polynomial, ...]
    depth: int
    dedup_constraints: tuple[Polynomial, ...] = ()


@dataclass(frozen=True)
class SmoothModel:
    """Leaves of a resolution tree, smooth along their restricted fibers."""

    charts: tuple[BlowupChart, ...]

    @property
    def depth(self) -> int:
        return max((c.depth for c in self.charts), default=0)

    @property
    def fiber_dedup(self) -> tuple[tuple[Polynomial, ...], ...]:
        return tuple(c.dedup_constraints for c in self.charts)


@dataclass(frozen=True)
class FiberSummary:
    real_points: int
    complex_points: int
    nonreduced_real_points: int


def _hat_names(names: Sequence[str], keep: int) -> VariableSet:
    out = []
    taken = set(names)
    for i, name in enumerate(names):
        if i == keep:
            out.append(name)
            continue
        candidate = name + "_h"
        while candidate in taken:
            candidate += "h"
        taken.add(candidate)
        out.append(candidate)
    return VariableSet(tuple(out))


def _check_pullback_soundness(chart: BlowupChart, original: IdealPresentation) -> None:
    # every original generator must land in the strict ideal once the chart
    # substitution is applied; violating this means the bookkeeping broke
    gb = groebner_basis(chart.strict_ideal)
    for g in original.generators:
        image = ring_map(g, chart.chart_variables, list(chart.pullbacks))
        if gb.is_zero_ideal():
            if not image.is_zero():
                raise AssertionError("pullback of a generator escapes the strict ideal")
        elif not normal_form(image, gb).is_zero():
            raise AssertionError("pullback of a generator escapes the strict ideal")


def blowup_origin(i: IdealPresentation) -> list[BlowupChart]:
    """Blow up the origin: one chart per ambient variable.

    On chart k the substituted ideal is saturated with respect to the chart
    variable x_k, whose vanishing is the exceptional divisor.
    """
    n = len(i.variables)
    for g in i.generators:
        if g.constant_term() != 0:
            raise OriginNotOnVariety("a generator does not vanish at the origin")
    charts = []
    for k in range(n):
        chart_vars = _hat_names(i.variables.names, k)
        center = Polynomial.variable(chart_vars, k)
        images = [
            center if idx == k else center * Polynomial.variable(chart_vars, idx)
            for idx in range(n)
        ]
        substituted = ideal(chart_vars, (ring_map(g, chart_vars, images) for g in i.generators))
        strict = saturate(substituted, ideal(chart_vars, (center,))).ideal
        chart = BlowupChart(
            chart_index=k,
            chart_variables=chart_vars,
            strict_ideal=strict,
            exceptional_generator=chart_vars.names[k],
            pullbacks=tuple(images),
            depth=1,
            dedup_constraints=tuple(
                Polynomial.variable(chart_vars, idx) for idx in range(k)
            ),
        )
        _check_pullback_soundness(chart, i)
        charts.append(chart)
    return charts


def fiber_ideal(chart: BlowupChart, dedup: bool) -> IdealPresentation:
    """Scheme-theoretic fiber over the original point on this chart.

    strict transform + pullbacks of every original variable, optionally cut
    down to first-nonzero-coordinate representatives.
    """
    gens = list(chart.strict_ideal.generators) + list(chart.pullbacks)
    if dedup:
        gens += list(chart.dedup_constraints)
    return ideal(chart.chart_variables, gens)


def _identity_chart(i: IdealPresentation) -> BlowupChart:
    return BlowupChart(
        chart_index=-1,
        chart_variables=i.variables,
        strict_ideal=i,
        exceptional_generator=None,
        pullbacks=tuple(
            Polynomial.variable(i.variables, idx) for idx in range(len(i.variables))
        ),
        depth=0,
    )


def resolve_curve(
    i: IdealPresentation,
    max_depth: int = 6,
    *,
    certificate: RadicalityCertificate | None = None,
    assume_radical: bool = False,
) -> SmoothModel:
    """Resolve the curve at the origin by iterated point blow-ups.

    Smooth input is tolerated: it returns a depth-0 model whose single chart
    is the identity.  Recursion only passes through rational singular fiber
    points; a non-rational one aborts with the zero-dimensional ideal that
    isolates it.
    """
    if krull_dimension(i) != 1:
        raise NotACurve("resolution expects a one-dimensional ideal")
    if certificate is None and not assume_radical:
        certificate = radicality_certificate(i)
    origin = [Q(0)] * len(i.variables)
    for g in i.generators:
        if g.constant_term() != 0:
            raise OriginNotOnVariety("the origin is not on the variety")
    if is_smooth_at(i, origin, certificate=certificate, assume_radical=assume_radical):
        return SmoothModel((_identity_chart(i),))
    leaves: list[BlowupChart] = []
    identity = _identity_chart(i)
    _resolve_chart(i, identity, 0, max_depth, leaves, i)
    return SmoothModel(tuple(leaves))


def _compose_chart(previous: BlowupChart, chart: BlowupChart) -> BlowupChart:
    images = list(chart.pullbacks)
    target = chart.chart_variables
    return BlowupChart(
        chart_index=chart.chart_index,
        chart_variables=target,
        strict_ideal=chart.strict_ideal,
        exceptional_generator=chart.exceptional_generator,
        pullbacks=tuple(ring_map(p, target, images) for p in previous.pullbacks),
        depth=previous.depth + 1,
        dedup_constraints=tuple(ring_map(q, target, images) for q in previous.dedup_constraints)
        + chart.dedup_constraints,
    )


def _translate_chart(chart: BlowupChart, point: Sequence[Fraction]) -> BlowupChart:
    return BlowupChart(
        chart_index=chart.chart_index,
        chart_variables=chart.chart_variables,
        strict_ideal=IdealPresentation(
            chart.chart_variables,
            tuple(g.translate(point) for g in chart.strict_ideal.generators),
        ),
        exceptional_generator=None,
        pullbacks=tuple(p.translate(point) for p in chart.pullbacks),
        depth=chart.depth,
        dedup_constraints=tuple(q.translate(point) for q in chart.dedup_constraints),
    )


def _resolve_chart(
    current: IdealPresentation,
    state: BlowupChart,
    depth: int,
    max_depth: int,
    leaves: list[BlowupChart],
    original: IdealPresentation,
) -> None:
    if depth >= max_depth:
        raise DepthExceeded(max_depth)
    for raw in blowup_origin(current):
        chart = _compose_chart(state, raw)
        _check_pullback_soundness(chart, original)
        strict = chart.strict_ideal
        strict_gb = groebner_basis(strict)
        if strict_gb.is_unit():
            leaves.append(chart)
            continue
        sing = singular_locus_ideal(strict, assume_equidimensional=True)
        bad = ideal_sum(sing, fiber_ideal(chart, dedup=True))
        if is_unit_ideal(bad):
            leaves.append(chart)
            continue
        points, all_rational = rational_points(bad)
        if not all_rational:
            raise IrrationalSingularFiberPoint(bad)
        center = points[0]
        moved = _translate_chart(chart, center)
        _resolve_chart(moved.strict_ideal, moved, depth + 1, max_depth, leaves, original)


def fiber_summary(model: SmoothModel) -> FiberSummary:
    """Point counts of the fiber over the original point, across all leaves.

    Real and complex counts use the dedup-restricted fiber so every geometric
    point lands in exactly one chart.  Non-reducedness is read off the full
    fiber scheme first (multiplicity is intrinsic) and only then restricted.
    """
    real = complex_count = nonreduced_real = 0
    for chart in model.charts:
        restricted = fiber_ideal(chart, dedup=True)
        if not is_unit_ideal(restricted):
            counts = count_points(build(restricted))
            real += counts.real_distinct
            complex_count += counts.complex_distinct
        full = fiber_ideal(chart, dedup=False)
        if is_unit_ideal(full):
            continue
        bad_part = nonreduced_locus(full)
        if is_unit_ideal(bad_part):
            continue
        bad_restricted = ideal_sum(
            bad_part, ideal(chart.chart_variables, chart.dedup_constraints)
        )
        if not is_unit_ideal(bad_restricted):
            nonreduced_real += count_points(build(bad_restricted)).real_distinct
    return FiberSummary(real, complex_count, nonreduced_real)
