"""Structure of zero-dimensional quotient algebras.

A zero-dimensional ideal has a finite-dimensional quotient; its standard
monomials (those outside the leading-term ideal) form a vector-space basis and
multiplication by each variable becomes a rational matrix.  Distinct complex
and real solution counts then come out of the Hermite trace form: its rank is
the number of distinct complex points and its signature the number of real
ones, both computed exactly.

The zero-dimensional radical is Seidenberg's: adjoin the squarefree part of
the minimal polynomial of every coordinate.  The non-reduced locus is the
quotient (I : radical(I)); its variety consists exactly of the points where
the fiber scheme carries nilpotents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd as int_gcd, isqrt

from .errors import NotZeroDimensional
from .groebner import GroebnerBasis, normal_form
from .ideals import (
    IdealPresentation,
    from_basis,
    groebner_basis,
    ideal,
    ideal_sum,
    krull_dimension,
    quotient,
)
from .linalg import (
    RationalMatrix,
    UnivariatePolynomial,
    symmetric_signature,
    squarefree_part_univariate,
    upoly,
)
from .polynomials import GREVLEX, Exponent, Polynomial, monomial_divides

Q = Fraction


@dataclass(frozen=True)
class PointCounts:
    complex_distinct: int
    real_distinct: int


@dataclass(frozen=True)
class ZeroDimAlgebra:
    """Quotient algebra data: standard monomial basis and multiplication matrices."""

    ideal: IdealPresentation
    gb: GroebnerBasis
    basis: tuple[Exponent, ...]
    mult_matrices: tuple[RationalMatrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _standard_monomials(gb: GroebnerBasis, n: int) -> list[Exponent]:
    lms = [g.leading_monomial(gb.order) for g in gb.basis]
    bounds = [None] * n
    for lm in lms:
        active = [(i, e) for i, e in enumerate(lm) if e]
        if len(active) == 1:
            i, e = active[0]
            if bounds[i] is None or e < bounds[i]:
                bounds[i] = e
    if any(b is None for b in bounds):
        raise NotZeroDimensional("leading-term ideal admits infinitely many standard monomials")
    out = [
        e
        for e in product(*(range(b) for b in bounds))
        if not any(monomial_divides(lm, e) for lm in lms)
    ]
    out.sort(key=GREVLEX.key)
    return out


def build(i: IdealPresentation) -> ZeroDimAlgebra:
    """Assemble basis and commuting multiplication matrices for a 0-dim ideal."""
    if krull_dimension(i) != 0:
        raise NotZeroDimensional("ideal is not zero-dimensional")
    gb = groebner_basis(i, GREVLEX)
    n = len(i.variables)
    basis = _standard_monomials(gb, n)
    index = {e: pos for pos, e in enumerate(basis)}
    d = len(basis)
    matrices = []
    for var in range(n):
        cols = []
        for e in basis:
            shifted = list(e)
            shifted[var] += 1
            mono = Polynomial.from_terms(i.variables, {tuple(shifted): 1})
            nf = normal_form(mono, gb)
            col = [Q(0)] * d
            for te, tc in nf.terms.items():
                col[index[te]] = tc
            cols.append(col)
        matrices.append(
            RationalMatrix(d, d, tuple(cols[j][r] for r in range(d) for j in range(d)))
        )
    for a in range(n):
        for b in range(a + 1, n):
            if matrices[a] * matrices[b] != matrices[b] * matrices[a]:
                raise AssertionError("multiplication matrices fail to commute")
    return ZeroDimAlgebra(i, gb, tuple(basis), tuple(matrices))


def _monomial_operator_traces(algebra: ZeroDimAlgebra) -> dict[Exponent, Fraction]:
    """Trace of multiplication by each basis monomial, by chained products."""
    d = algebra.dimension
    mats: dict[Exponent, RationalMatrix] = {}
    traces: dict[Exponent, Fraction] = {}
    for e in algebra.basis:  # grevlex-ascending, so divisors come first
        if not any(e):
            mats[e] = RationalMatrix.identity(d)
        else:
            var = next(i for i, x in enumerate(e) if x)
            parent = list(e)
            parent[var] -= 1
            mats[e] = mats[tuple(parent)] * algebra.mult_matrices[var]
        traces[e] = mats[e].trace()
    return traces


def trace_form(algebra: ZeroDimAlgebra) -> RationalMatrix:
    """Hermite bilinear form B[i][j] = Trace(multiplication by b_i * b_j)."""
    d = algebra.dimension
    traces = _monomial_operator_traces(algebra)
    nf_cache: dict[Exponent, Fraction] = {}

    def trace_of_monomial(e: Exponent) -> Fraction:
        got = traces.get(e)
        if got is not None:
            return got
        got = nf_cache.get(e)
        if got is not None:
            return got
        mono = Polynomial.from_terms(algebra.ideal.variables, {e: 1})
        nf = normal_form(mono, algebra.gb)
        val = sum((c * traces[te] for te, c in nf.terms.items()), Q(0))
        nf_cache[e] = val
        return val

    entries = []
    for i in range(d):
        for j in range(d):
            e = tuple(x + y for x, y in zip(algebra.basis[i], algebra.basis[j]))
            entries.append(trace_of_monomial(e))
    return RationalMatrix(d, d, tuple(entries))


def count_points(algebra: ZeroDimAlgebra) -> PointCounts:
    """Distinct complex and real point counts from the trace form.

    rank(B) counts distinct complex points and signature(B) the real ones
    (Hermite / Pedersen-Roy-Szpirglas).  Clearing denominators first is safe:
    a positive rescaling changes neither rank nor signature.
    """
    b = trace_form(algebra)
    den = 1
    for x in b.entries:
        den = den * x.denominator // int_gcd(den, x.denominator)
    if den != 1:
        b = RationalMatrix(b.rows, b.cols, tuple(x * den for x in b.entries))
    n_plus, n_minus = symmetric_signature(b)
    return PointCounts(complex_distinct=n_plus + n_minus, real_distinct=n_plus - n_minus)


def minimal_polynomial(m: RationalMatrix) -> UnivariatePolynomial:
    """Monic minimal polynomial via exact Krylov elimination on matrix powers."""
    d = m.rows
    if d == 0:
        return upoly([1])
    pivots: list[tuple[int, list[Fraction], list[Fraction]]] = []
    power = RationalMatrix.identity(d)
    for k in range(d + 1):
        vec = list(power.entries)
        combo = [Q(0)] * k + [Q(1)]  # current row represents sum(combo[j] * M^j)
        for col, pvec, pcombo in pivots:
            if vec[col]:
                f = vec[col] / pvec[col]
                vec = [a - f * b for a, b in zip(vec, pvec)]
                for j, c in enumerate(pcombo):
                    combo[j] -= f * c
        nz = next((idx for idx, v in enumerate(vec) if v), None)
        if nz is None:
            return upoly(combo)
        pivots.append((nz, vec, combo))
        power = power * m
    raise AssertionError("no minimal polynomial of degree <= dimension found")


def eliminant(algebra: ZeroDimAlgebra, var: int | str) -> UnivariatePolynomial:
    """Minimal polynomial of the multiplication-by-variable operator.

    Every coordinate (in the chosen position) of every solution is a root.
    """
    i = algebra.ideal.variables.index(var) if isinstance(var, str) else var
    return minimal_polynomial(algebra.mult_matrices[i])


def _lift_univariate(p: UnivariatePolynomial, variables, var: int) -> Polynomial:
    terms = {}
    n = len(variables)
    for k, c in enumerate(p.coefficients):
        if c:
            e = [0] * n
            e[var] = k
            terms[tuple(e)] = c
    return Polynomial.from_terms(variables, terms)


def zerodim_radical(i: IdealPresentation) -> IdealPresentation:
    """Radical of a zero-dimensional ideal (Seidenberg's lemma).

    Adjoin the squarefree part of every coordinate eliminant and re-base to a
    Groebner basis; the result is radical with the same complex points.
    """
    algebra = build(i)
    extra = []
    for var in range(len(i.variables)):
        m = eliminant(algebra, var)
        extra.append(_lift_univariate(squarefree_part_univariate(m), i.variables, var))
    enlarged = ideal_sum(i, ideal(i.variables, extra))
    return from_basis(i.variables, groebner_basis(enlarged))


def nonreduced_locus(i: IdealPresentation) -> IdealPresentation:
    """(I : radical(I)); vanishes exactly at the non-reduced fiber points."""
    if krull_dimension(i) != 0:
        raise NotZeroDimensional("non-reduced locus needs a zero-dimensional ideal")
    return quotient(i, zerodim_radical(i))


# ---------------------------------------------------------------------------
# rational point extraction (for blow-up recursion centers)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return []
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def rational_roots(p: UnivariatePolynomial) -> list[Fraction]:
    """All rational roots, by the rational root theorem on the primitive part."""
    if p.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    coeffs = list(p.coefficients)
    den = 1
    for c in coeffs:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in coeffs]
    roots = []
    shift = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        shift += 1
    if shift:
        roots.append(Q(0))
    if len(ints) <= 1:
        return roots
    for num in _divisors(ints[0]):
        for d in _divisors(ints[-1]):
            for cand in (Q(num, d), Q(-num, d)):
                if cand not in roots and p(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def rational_points(i: IdealPresentation) -> tuple[list[tuple[Fraction, ...]], bool]:
    """(rational points of V(i), flag: every complex point is rational).

    Candidates come from rational roots of the per-variable eliminants and are
    confirmed against all generators; comparing against the distinct complex
    point count certifies whether any non-rational point remains.
    """
    algebra = build(i)
    per_var = []
    for var in range(len(i.variables)):
        per_var.append(rational_roots(eliminant(algebra, var)))
    found = []
    for candidate in product(*per_var):
        if all(g.evaluate(candidate) == 0 for g in i.generators):
            found.append(candidate)
    found.sort()
    all_rational = len(found) == count_points(algebra).complex_distinct
    return found, all_rational
