"""Buchberger's algorithm (pure lex), zero-dimensional solving, reducedness.

Solving is triangular back-substitution: the univariate eliminant in the last
variable is split with roots_in_field, each root is substituted, and when the
specialized system loses its triangular shape a fresh basis is computed.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .fields import Field, FieldElement, FieldError
from .multipoly import LEX, MultiPoly, mono_divide, mono_lcm, mono_mul
from .unipoly import UniPoly, poly_gcd, roots_in_field, squarefree_check

DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    def __init__(self):
        super().__init__("budget exceeded")


class NotZeroDimensional(ValueError):
    pass


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, steps):
        self.remaining = steps

    def spend(self, k=1):
        self.remaining -= k
        if self.remaining < 0:
            raise BudgetExceeded


@dataclass(frozen=True)
class Ideal:
    generators: tuple[MultiPoly, ...]
    nvars: int
    field: Field

    @classmethod
    def of(cls, generators):
        gens = tuple(generators)
        if not gens:
            raise ValueError("ideal needs at least one generator")
        nv, F = gens[0].nvars, gens[0].field
        for g in gens:
            if g.nvars != nv or g.field != F:
                raise FieldError("generators live in different rings")
        return cls(gens, nv, F)


@dataclass(frozen=True)
class GroebnerBasis:
    polys: tuple[MultiPoly, ...]
    nvars: int
    field: Field
    order: str = LEX


@dataclass(frozen=True)
class SolutionSet:
    field: Field
    points: tuple[tuple[FieldElement, ...], ...]

    def __len__(self):
        return len(self.points)

    def raw_points(self):
        return [tuple(c.rep for c in pt) for pt in self.points]


def _reduce_full(p: MultiPoly, basis, budget: _Budget) -> MultiPoly:
    """Full normal form of p against (lm, lc, terms) triples."""
    F = p.field
    work = dict(p.terms)
    rem = {}
    while work:
        m = max(work)
        c = work.pop(m)
        if F.is_zero(c):
            continue
        for lm, lc, terms in basis:
            q = mono_divide(m, lm)
            if q is None:
                continue
            factor = F.div(c, lc)
            budget.spend(len(terms))
            for gm, gc in terms.items():
                if gm == lm:
                    continue
                mm = mono_mul(gm, q)
                s = F.sub(work.get(mm, F.zero), F.mul(factor, gc))
                if F.is_zero(s):
                    work.pop(mm, None)
                else:
                    work[mm] = s
            break
        else:
            rem[m] = c
    return MultiPoly(F, p.nvars, rem)


def normal_form(p: MultiPoly, gb: GroebnerBasis, budget_steps: int = DEFAULT_BUDGET) -> MultiPoly:
    basis = [(g.lm(), g.lc(), g.terms) for g in gb.polys if not g.is_zero()]
    return _reduce_full(p, basis, _Budget(budget_steps))


def _spoly(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    F = f.field
    lmf, lmg = f.lm(), g.lm()
    lcm = mono_lcm(lmf, lmg)
    mf = mono_divide(lcm, lmf)
    mg = mono_divide(lcm, lmg)
    a = MultiPoly(F, f.nvars, {mono_mul(m, mf): F.div(c, f.lc()) for m, c in f.terms.items()})
    b = MultiPoly(F, g.nvars, {mono_mul(m, mg): F.div(c, g.lc()) for m, c in g.terms.items()})
    return a - b


def buchberger(ideal, budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced lexicographic Groebner basis (normal selection strategy,
    Buchberger's coprime and chain criteria)."""
    if isinstance(ideal, Ideal):
        gens = list(ideal.generators)
        nv, F = ideal.nvars, ideal.field
    else:
        gens = list(ideal)
        if not gens:
            raise ValueError("no generators")
        nv, F = gens[0].nvars, gens[0].field
    tracker = _Budget(budget)

    gens = sorted((g for g in gens if not g.is_zero()), key=lambda g: (g.lm(), g.sort_key()))
    G: list[MultiPoly] = []
    basis_rows: list[tuple] = []
    pending: list = []
    processed: set[frozenset] = set()
    in_heap: set[frozenset] = set()

    def push_pairs(j):
        lmj = G[j].lm()
        for i in range(j):
            key = frozenset((i, j))
            lcm = mono_lcm(G[i].lm(), lmj)
            heapq.heappush(pending, (lcm, i, j))
            in_heap.add(key)

    def add_poly(h):
        h = h.monic()
        G.append(h)
        basis_rows.append((h.lm(), h.lc(), h.terms))
        push_pairs(len(G) - 1)

    for g in gens:
        red = _reduce_full(g, basis_rows, tracker)
        if not red.is_zero():
            add_poly(red)

    while pending:
        lcm, i, j = heapq.heappop(pending)
        key = frozenset((i, j))
        if key not in in_heap:
            continue
        in_heap.discard(key)
        processed.add(key)
        lmi, lmj = G[i].lm(), G[j].lm()
        if mono_lcm(lmi, lmj) != lcm:
            continue  # stale entry
        if mono_mul(lmi, lmj) == lcm:
            continue  # coprime leading monomials
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divide(lcm, G[k].lm()) is None:
                continue
            if frozenset((i, k)) in processed and frozenset((j, k)) in processed:
                skip = True
                break
        if skip:
            continue
        s = _spoly(G[i], G[j])
        red = _reduce_full(s, basis_rows, tracker)
        if not red.is_zero():
            add_poly(red)

    # minimalize: ascending lex over leading monomials, keep only those whose
    # leading monomial no kept (hence smaller) one divides
    order = sorted(range(len(G)), key=lambda i: (G[i].lm(), G[i].sort_key()))
    keep: list[int] = []
    for i in order:
        lm = G[i].lm()
        if not any(mono_divide(lm, G[j].lm()) is not None for j in keep):
            keep.append(i)
    minimal = [G[i] for i in keep]
    # interreduce tails (leading monomials are now pairwise non-divisible)
    reduced = []
    for idx, g in enumerate(minimal):
        others = [(h.lm(), h.lc(), h.terms) for k, h in enumerate(minimal) if k != idx]
        reduced.append(_reduce_full(g, others, tracker).monic())
    reduced.sort(key=lambda g: g.lm(), reverse=True)
    return GroebnerBasis(tuple(reduced), nv, F)


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """Every variable has a pure power among the leading monomials (a basis
    containing a nonzero constant defines the empty, hence 0-dim, variety)."""
    if gb.nvars == 0:
        return True
    for g in gb.polys:
        if not g.is_zero() and g.is_constant():
            return True
    seen = [False] * gb.nvars
    for g in gb.polys:
        lm = g.lm()
        if lm is None:
            continue
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            seen[nz[0]] = True
    return all(seen)


def quotient_dimension(gb: GroebnerBasis) -> int:
    """Vector-space dimension of F[x]/I, i.e. the degree of the scheme."""
    if not is_zero_dimensional(gb):
        raise NotZeroDimensional("quotient is infinite-dimensional")
    if gb.nvars == 0:
        return 0 if any(not g.is_zero() for g in gb.polys) else 1
    for g in gb.polys:
        if not g.is_zero() and g.is_constant():
            return 0
    lms = [g.lm() for g in gb.polys if not g.is_zero()]
    bounds = []
    for i in range(gb.nvars):
        pure = [lm[i] for lm in lms if all(e == 0 for j, e in enumerate(lm) if j != i) and lm[i]]
        bounds.append(min(pure))
    count = 0
    exps = [0] * gb.nvars

    def rec(i):
        nonlocal count
        if i == gb.nvars:
            m = tuple(exps)
            if all(mono_divide(m, lm) is None for lm in lms):
                count += 1
            return
        for e in range(bounds[i]):
            exps[i] = e
            rec(i + 1)
        exps[i] = 0

    rec(0)
    return count


def _univariate_in_last(polys, nvars):
    """Monic gcd of the members univariate in the last variable, as a UniPoly."""
    unis = [p for p in polys if not p.is_constant() and p.univariate_variable() == nvars - 1]
    if not unis:
        return None
    acc = unis[0].to_unipoly(nvars - 1)
    for p in unis[1:]:
        acc = poly_gcd(acc, p.to_unipoly(nvars - 1))
    return acc.monic()


def _solve_triangular(polys, nvars, F, seed, budget):
    polys = [p for p in polys if not p.is_zero()]
    for p in polys:
        if p.is_constant():
            return []
    if nvars == 0:
        return [()]
    eliminant = _univariate_in_last(polys, nvars)
    if eliminant is None:
        gb = buchberger(polys, budget=budget)
        polys = [p for p in gb.polys if not p.is_zero()]
        for p in polys:
            if p.is_constant():
                return []
        eliminant = _univariate_in_last(polys, nvars)
        if eliminant is None:
            raise NotZeroDimensional("no univariate eliminant in the last variable")
    out = []
    for root in roots_in_field(eliminant, F, seed=seed):
        specialized = [q for q in (p.substitute_last(root.rep) for p in polys) if not q.is_zero()]
        for sub in _solve_triangular(specialized, nvars - 1, F, seed, budget):
            out.append(sub + (root.rep,))
    return out


def enumerate_solutions(gb: GroebnerBasis, F: Field, seed: int | None = None,
                        budget: int = DEFAULT_BUDGET) -> SolutionSet:
    """All solutions of a zero-dimensional basis with coordinates in F,
    canonically sorted; every point is re-verified against the basis."""
    if not is_zero_dimensional(gb):
        raise NotZeroDimensional("basis is not zero-dimensional")
    lifted = [p.lift_to(F) for p in gb.polys]
    raw = _solve_triangular(lifted, gb.nvars, F, seed, budget)
    raw.sort(key=lambda pt: tuple(F.sort_key(c) for c in pt))
    for pt in raw:
        for p in lifted:
            if not F.is_zero(p.evaluate(pt)):
                raise AssertionError("solution fails to satisfy the basis")
    points = tuple(tuple(FieldElement(F, c) for c in pt) for pt in raw)
    return SolutionSet(F, points)


def eliminant_of_variable(gb: GroebnerBasis, index: int,
                          budget: int = DEFAULT_BUDGET) -> UniPoly:
    """Generator of I ∩ F[x_index]: recompute a lex basis with that variable
    last and read off the univariate member."""
    nv = gb.nvars
    perm = [i for i in range(nv) if i != index] + [index]  # new last = x_index
    permuted = [g.permute_vars(perm) for g in gb.polys]
    pgb = buchberger(permuted, budget=budget)
    polys = [p for p in pgb.polys if not p.is_zero()]
    for p in polys:
        if p.is_constant():
            return UniPoly.constant(gb.field, gb.field.one)
    uni = _univariate_in_last(polys, nv)
    if uni is None:
        raise NotZeroDimensional("no univariate eliminant in the last variable")
    return uni


def is_reduced_zero_dim(gb: GroebnerBasis, budget: int = DEFAULT_BUDGET) -> bool:
    """Seidenberg criterion: the ideal is radical iff the minimal univariate
    polynomial of every variable is squarefree.  The empty scheme is reduced."""
    if not is_zero_dimensional(gb):
        raise NotZeroDimensional("basis is not zero-dimensional")
    if gb.nvars == 0:
        return True
    for g in gb.polys:
        if not g.is_zero() and g.is_constant():
            return True
    for i in range(gb.nvars):
        uni = eliminant_of_variable(gb, i, budget=budget)
        if uni.degree == 0:
            continue
        if not squarefree_check(uni):
            return False
    return True
