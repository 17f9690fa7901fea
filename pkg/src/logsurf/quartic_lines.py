"""Lines on quartic surfaces in P^3 over finite fields and Q.

A quartic with integer or order Z[alpha] coefficients is reduced modulo a
prime into F_{p^n}; per pivot chart an echelon-parametrized line is
substituted into the quartic and the five binary-quartic coefficients cut out
the chart's slice of the scheme of lines, solved exactly with Groebner bases.
Canonical reduced row echelon matrices make the six charts a partition, so the
union over charts is duplicate-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import ExtensionField, Field, FieldError, PrimeField, QQ, make_extension
from .groebner import (GroebnerBasis, buchberger, enumerate_solutions,
                       is_reduced_zero_dim, is_zero_dimensional, quotient_dimension)
from .linalg import rank, right_kernel, rref
from .multipoly import MultiPoly
from .unipoly import UniPoly, roots_in_field

CHARTS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class LineEnumerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class QuarticForm:
    """Homogeneous quartic in x0..x3; coefficients are integer polynomials in
    alpha of degree < deg(minpoly) (plain integers when minpoly is None)."""

    terms: tuple[tuple[tuple[int, int, int, int], tuple[int, ...]], ...]
    minpoly: tuple[int, ...] | None = None

    @classmethod
    def of(cls, terms: dict, minpoly=None) -> "QuarticForm":
        mp = tuple(int(c) for c in minpoly) if minpoly is not None else None
        deg = len(mp) - 1 if mp is not None else 1
        if mp is not None and deg < 1:
            raise ValueError("minpoly must have positive degree")
        norm = {}
        for exp, coeff in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != 4 or any(e < 0 for e in exp) or sum(exp) != 4:
                raise ValueError(f"exponent {exp} is not homogeneous of degree 4")
            cs = [coeff] if isinstance(coeff, int) else [int(c) for c in coeff]
            if len(cs) > deg:
                cs = _reduce_mod_minpoly(cs, mp)
            cs = tuple(cs) + (0,) * (deg - len(cs))
            if any(cs):
                norm[exp] = cs
        if not norm:
            raise ValueError("quartic form is identically zero")
        return cls(tuple(sorted(norm.items())), mp)

    def term_dict(self) -> dict:
        return dict(self.terms)


def _reduce_mod_minpoly(cs, mp):
    """Reduce an integer polynomial in alpha modulo a monic minimal polynomial."""
    if mp is None:
        raise ValueError("coefficient degree exceeds the order degree")
    if mp[-1] != 1:
        raise ValueError("coefficient reduction needs a monic minimal polynomial")
    cs = list(cs)
    deg = len(mp) - 1
    while len(cs) > deg:
        lead = cs.pop()
        if lead:
            for i in range(deg):
                cs[len(cs) - deg + i] -= lead * mp[i]
    return cs


@dataclass(frozen=True)
class ReductionContext:
    p: int
    n: int
    field: ExtensionField
    alpha_image: tuple | None


@dataclass(frozen=True)
class ReducedQuartic:
    field: Field
    terms: tuple  # ((exponent, raw coefficient), ...), nonzero only

    def term_dict(self) -> dict:
        return dict(self.terms)


@dataclass(frozen=True)
class Line:
    """A line in P^3: canonical 2x4 reduced-row-echelon matrix whose rows span
    the line's points; chart = the pivot pair."""

    chart: tuple[int, int]
    matrix: tuple[tuple, tuple]
    field: Field

    @classmethod
    def from_rows(cls, rows, field) -> "Line":
        m, pivots = rref(rows, field)
        if len(pivots) != 2:
            raise ValueError("rows do not span a line")
        return cls((pivots[0], pivots[1]), (tuple(m[0]), tuple(m[1])), field)

    def rows(self):
        return self.matrix

    def spanning_planes(self):
        """Two independent linear forms vanishing on the line."""
        return [tuple(v) for v in right_kernel([list(r) for r in self.matrix], self.field, 4)]

    def sort_key(self):
        F = self.field
        return (self.chart, tuple(tuple(F.sort_key(c) for c in row) for row in self.matrix))


def reduce_quartic(q: QuarticForm, p: int, n: int, seed: int | None = None):
    """Reduce the quartic modulo p into F_{p^n}; alpha maps to the canonically
    smallest root of the minimal polynomial."""
    F = make_extension(p, n)
    alpha = None
    if q.minpoly is not None:
        if q.minpoly[-1] % p == 0:
            raise FieldError("bad prime")  # p divides the leading coefficient of m
        m_red = UniPoly.from_ints(PrimeField(p), q.minpoly)
        roots = roots_in_field(m_red, F, seed=seed)
        if not roots:
            raise FieldError("incompatible extension degree")
        alpha = roots[0].rep
    terms = {}
    for exp, coeffs in q.terms:
        if alpha is None:
            value = F.from_int(coeffs[0])
        else:
            value = F.zero
            power = F.one
            for c in coeffs:
                value = F.add(value, F.mul(F.from_int(c), power))
                power = F.mul(power, alpha)
        if not F.is_zero(value):
            terms[exp] = value
    if not terms:
        raise FieldError("bad prime")
    reduced = ReducedQuartic(F, tuple(sorted(terms.items())))
    return reduced, ReductionContext(p, n, F, alpha)


def quartic_over_q(q: QuarticForm) -> ReducedQuartic:
    """Interpret an integer-coefficient quartic over Q."""
    if q.minpoly is not None:
        raise ValueError("number-field coefficients have no canonical Q image")
    terms = tuple(sorted((exp, Fraction(cs[0])) for exp, cs in q.terms))
    return ReducedQuartic(QQ, terms)


def _binary_quartic_coefficients(qterms, field, row1, row2, nvars):
    """Coefficients of s^4..t^4 in F(s*row1 + t*row2).

    row entries are MultiPoly in the chart parameters (nvars of them); the
    result is a list of five MultiPoly indexed by the power of s.
    """
    zero = MultiPoly.zero(field, nvars)
    total = [zero] * 5
    for exp, coeff in qterms:
        # expand prod_k (s*row1[k] + t*row2[k])^{e_k} as a binary form in (s, t)
        form = [MultiPoly.constant(field, nvars, coeff)]
        for k in range(4):
            for _ in range(exp[k]):
                a, b = row1[k], row2[k]
                new = [zero] * (len(form) + 1)
                for i, f in enumerate(form):
                    if f.is_zero():
                        continue
                    new[i + 1] = new[i + 1] + f * a
                    new[i] = new[i] + f * b
                form = new
        for i, f in enumerate(form):
            total[i] = total[i] + f
    return total


def _generic_rows(field, chart, nvars=4):
    """Spec rows for a chart: pivots get unit vectors, the two non-pivot
    columns get parameters (a, b) in row one and (c, d) in row two."""
    i, j = chart
    nonpiv = [c for c in range(4) if c not in chart]
    one = MultiPoly.constant(field, nvars, field.one)
    zero = MultiPoly.zero(field, nvars)
    row1 = [zero] * 4
    row2 = [zero] * 4
    row1[i] = one
    row2[j] = one
    row1[nonpiv[0]] = MultiPoly.variable(field, nvars, 0)
    row1[nonpiv[1]] = MultiPoly.variable(field, nvars, 1)
    row2[nonpiv[0]] = MultiPoly.variable(field, nvars, 2)
    row2[nonpiv[1]] = MultiPoly.variable(field, nvars, 3)
    return row1, row2


def echelon_free_slots(chart):
    """Free (row, column) slots of the canonical echelon pattern, in order:
    row one from left to right, then row two."""
    i, j = chart
    nonpiv = [c for c in range(4) if c not in chart]
    slots = [(0, c) for c in nonpiv if c > i and c != j]
    slots += [(1, c) for c in nonpiv if c > j]
    return slots


def _echelon_rows(field, chart):
    """Canonical-chart rows: the echelon zero pattern applied to the generic
    rows, with one polynomial variable per free slot."""
    i, j = chart
    slots = echelon_free_slots(chart)
    nv = len(slots)
    one = MultiPoly.constant(field, nv, field.one)
    zero = MultiPoly.zero(field, nv)
    rows = [[zero] * 4 for _ in range(2)]
    rows[0][i] = one
    rows[1][j] = one
    for idx, (r, c) in enumerate(slots):
        rows[r][c] = MultiPoly.variable(field, nv, idx)
    return rows[0], rows[1], nv


@dataclass(frozen=True)
class LineSchemeSystem:
    chart: tuple[int, int]
    generators: tuple[MultiPoly, ...]  # coefficients of s^4, s^3 t, ..., t^4


def line_scheme_equations(q: ReducedQuartic, chart) -> LineSchemeSystem:
    """The five coefficient polynomials of F(s*row1 + t*row2) in the four
    chart parameters for the generic (unconstrained) chart rows."""
    row1, row2 = _generic_rows(q.field, chart)
    coeffs = _binary_quartic_coefficients(q.terms, q.field, row1, row2, 4)
    return LineSchemeSystem(tuple(chart), tuple(reversed(coeffs)))


def _chart_prime_system(q: ReducedQuartic, chart):
    """Echelon-constrained chart system, over the prime subfield whenever the
    reduced quartic's coefficients allow it (faster basis computation)."""
    F = q.field
    qterms = q.terms
    if isinstance(F, ExtensionField) and F.n > 1 \
            and all(F.in_prime_subfield(c) for _, c in qterms):
        base = PrimeField(F.p)
        qterms = tuple((exp, F.to_base(c)) for exp, c in qterms)
        F = base
    row1, row2, nv = _echelon_rows(F, chart)
    gens = _binary_quartic_coefficients(qterms, F, row1, row2, nv)
    return [g for g in gens if not g.is_zero()], nv, F


@dataclass(frozen=True)
class ChartSolution:
    chart: tuple[int, int]
    solutions: tuple
    reduced: bool
    degree: int


def _solve_chart(q: ReducedQuartic, chart, seed, budget) -> ChartSolution:
    gens, nv, base = _chart_prime_system(q, chart)
    F = q.field
    if not gens:
        # identically zero restriction: every line of the chart lies on q
        if nv > 0:
            raise LineEnumerationError(
                "infinitely many lines (non-smooth or ruled reduction)")
        return ChartSolution(tuple(chart), ((),), True, 1)
    gb = buchberger([MultiPoly(base, nv, dict(g.terms)) for g in gens], budget=budget)
    if not is_zero_dimensional(gb):
        raise LineEnumerationError(
            "infinitely many lines (non-smooth or ruled reduction)")
    reduced = is_reduced_zero_dim(gb, budget=budget)
    degree = quotient_dimension(gb)
    sols = enumerate_solutions(gb, F, seed=seed, budget=budget)
    return ChartSolution(tuple(chart), tuple(sols.raw_points()), reduced, degree)


def _solution_to_line(field, chart, values) -> Line:
    slots = echelon_free_slots(chart)
    i, j = chart
    rows = [[field.zero] * 4 for _ in range(2)]
    rows[0][i] = field.one
    rows[1][j] = field.one
    for (r, c), v in zip(slots, values):
        rows[r][c] = v
    return Line(tuple(chart), (tuple(rows[0]), tuple(rows[1])), field)


def find_all_lines(q: ReducedQuartic, seed: int | None = None,
                   budget: int = 10_000_000, jobs: int = 1) -> tuple[Line, ...]:
    """All lines on the quartic with coordinates in its field, one canonical
    representative per line, charts in lexicographic pivot order."""
    charts = _solve_charts(q, seed, budget, jobs)
    lines = []
    for sol in charts:
        for values in sol.solutions:
            line = _solution_to_line(q.field, sol.chart, values)
            if not verify_line_on_quartic(line, q):
                raise AssertionError("enumerated line fails to lie on the quartic")
            lines.append(line)
    return tuple(lines)


def _solve_charts(q: ReducedQuartic, seed, budget, jobs):
    if jobs and jobs > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=min(jobs, 6)) as pool:
            futures = [pool.submit(_solve_chart, q, chart, seed, budget) for chart in CHARTS]
            return [f.result() for f in futures]
    return [_solve_chart(q, chart, seed, budget) for chart in CHARTS]


def verify_line_on_quartic(line: Line, q: ReducedQuartic) -> bool:
    """True iff F(s*row1 + t*row2) vanishes identically."""
    if line.field != q.field:
        raise FieldError("field mismatch")
    F = q.field
    row1 = [MultiPoly.constant(F, 0, v) for v in line.matrix[0]]
    row2 = [MultiPoly.constant(F, 0, v) for v in line.matrix[1]]
    coeffs = _binary_quartic_coefficients(q.terms, F, row1, row2, 0)
    return all(c.is_zero() for c in coeffs)


def line_from_planes(h, htilde, field) -> Line:
    """Canonical Line cut out by two independent plane forms."""
    h = [field.coerce(v) for v in h]
    ht = [field.coerce(v) for v in htilde]
    if rank([h, ht], field) != 2:
        raise ValueError("dependent plane pair")
    kernel = right_kernel([h, ht], field, 4)
    return Line.from_rows(kernel, field)


def verify_line_table(planes, q: QuarticForm):
    """Convert plane pairs over Q to canonical Lines and check membership on
    the quartic; returns (lines, per-row verdicts)."""
    qq = quartic_over_q(q)
    lines = []
    verdicts = []
    for h, htilde in planes:
        line = line_from_planes(h, htilde, QQ)
        lines.append(line)
        verdicts.append(verify_line_on_quartic(line, qq))
    return lines, verdicts


@dataclass(frozen=True)
class GoodReductionReport:
    p: int
    n: int
    scheme_reduced: bool
    pairwise_reduced: bool
    line_count: int
    scheme_degree: int
    all_lines_rational: bool
    lines: tuple[Line, ...]

    @property
    def good(self) -> bool:
        return self.scheme_reduced and self.pairwise_reduced and self.all_lines_rational


def good_reduction_check(q: QuarticForm, p: int, n: int, seed: int | None = None,
                         budget: int = 10_000_000, jobs: int = 1) -> GoodReductionReport:
    """Verify the practical good-reduction conditions at p: each chart slice of
    the line scheme is reduced, and every intersecting line pair meets
    transversally in a single reduced point (stacked matrix of rank 3)."""
    reduced_q, _ctx = reduce_quartic(q, p, n, seed=seed)
    charts = _solve_charts(reduced_q, seed, budget, jobs)
    scheme_reduced = all(c.reduced for c in charts)
    degree = sum(c.degree for c in charts)
    lines = []
    for sol in charts:
        for values in sol.solutions:
            lines.append(_solution_to_line(reduced_q.field, sol.chart, values))
    for line in lines:
        if not verify_line_on_quartic(line, reduced_q):
            raise AssertionError("enumerated line fails to lie on the quartic")
    from .incidence import intersect_lines  # local import to avoid a cycle

    pairwise = True
    for a in range(len(lines)):
        for b in range(a + 1, len(lines)):
            stacked = [list(lines[a].matrix[0]), list(lines[a].matrix[1]),
                       list(lines[b].matrix[0]), list(lines[b].matrix[1])]
            r = rank(stacked, reduced_q.field)
            if r == 4:
                continue
            if r != 3 or intersect_lines(lines[a], lines[b]) is None:
                pairwise = False
    return GoodReductionReport(p, n, scheme_reduced, pairwise,
                               len(lines), degree, len(lines) == degree, tuple(lines))


def two_prime_agreement(q: QuarticForm, first: tuple[int, int], second: tuple[int, int],
                        seed: int | None = None, budget: int = 10_000_000,
                        jobs: int = 1) -> bool:
    """Graph-invariant agreement of two reductions: both pass the
    good-reduction checks and produce the same line count, intersection
    multiplicity counts, and sorted line-degree sequence."""
    from .incidence import build_incidence, line_degree_sequence

    reports = [good_reduction_check(q, p, n, seed=seed, budget=budget, jobs=jobs)
               for p, n in (first, second)]
    if not all(r.good for r in reports):
        return False
    if reports[0].line_count != reports[1].line_count:
        return False
    invariants = []
    for r in reports:
        graph, t = build_incidence(r.lines)
        invariants.append((dict(t), line_degree_sequence(graph)))
    return invariants[0] == invariants[1]
