"""Bounded exhaustive searches over weak combinatorics.

Enumeration runs over multiplicity vectors pruned by the pairwise-intersection
budget (sum C(r,2) t_r bounded by the number of available curve pairs); all
constraint filtering goes through geography.check_inequalities so no
inequality logic is duplicated here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geography import WeakCombinatorics, check_inequalities, log_chern

DEFAULT_STATE_BUDGET = 2_000_000

CONSTRAINT_NAMES = (
    "naive_count", "naive_count_conic_lines", "melchior", "hirzebruch",
    "hirzebruch_strong", "sommese_step", "conic_line_hirzebruch",
    "conic_line_corollary", "conic_line_denominator", "k3_hirzebruch",
    "k3_slope_criterion",
)


@dataclass(frozen=True)
class SearchSpec:
    kind: str
    d_range: tuple[int, int] | None = None
    k_range: tuple[int, int] | None = None
    n_range: tuple[int, int] | None = None
    t_budget: int | None = None          # required for K3 scans
    max_multiplicity: int | None = None
    constraints: tuple[str, ...] = ()
    objective_op: str = ">"              # one of > >= ==
    threshold: Fraction = Fraction(0)
    state_budget: int = DEFAULT_STATE_BUDGET

    def __post_init__(self):
        for c in self.constraints:
            if c not in CONSTRAINT_NAMES:
                raise ValueError(f"unknown constraint {c!r}")
        if self.objective_op not in (">", ">=", "=="):
            raise ValueError("objective must be one of > >= ==")


@dataclass(frozen=True)
class SearchHit:
    combinatorics: WeakCombinatorics
    slope: Fraction
    slacks: dict


@dataclass(frozen=True)
class SearchResult:
    hits: tuple[SearchHit, ...]

    def __len__(self):
        return len(self.hits)


def _tvectors(r_max: int, budget: int, force_equality: bool):
    """All multiplicity vectors with sum C(r,2) t_r <= budget (== when
    forced); multiplicities descending, counts ascending."""
    acc: dict[int, int] = {}

    def rec(r, remaining):
        if r < 2:
            if not force_equality or remaining == 0:
                yield {m: c for m, c in acc.items() if c}
            return
        if r == 2 and force_equality:
            acc[2] = remaining  # C(2,2) = 1, so the count is forced
            yield {m: c for m, c in acc.items() if c}
            acc.pop(2, None)
            return
        weight = r * (r - 1) // 2
        for count in range(remaining // weight + 1):
            acc[r] = count
            yield from rec(r - 1, remaining - weight * count)
        acc.pop(r, None)

    yield from rec(r_max, budget)


def _estimate_states(r_max: int, budget: int) -> int:
    est = 1
    for r in range(2, r_max + 1):
        est *= budget // (r * (r - 1) // 2) + 1
        if est > 10 ** 12:
            break
    return est


def _passes(wc: WeakCombinatorics, constraints) -> tuple[bool, dict]:
    preds = {p.name: p for p in check_inequalities(wc)}
    slacks = {}
    for name in constraints:
        p = preds[name]
        if not p.applicable or not p.holds:
            return False, {}
        slacks[name] = p.slack
    return True, slacks


def _objective(slope, op, threshold) -> bool:
    if slope is None:
        return False
    if op == ">":
        return slope > threshold
    if op == ">=":
        return slope >= threshold
    return slope == threshold


def threshold_scan(spec: SearchSpec) -> SearchResult:
    """All combinatorics within the bounds passing the enabled constraints
    whose slope clears the objective, sorted by slope descending.

    Only the positive-denominator regime is emitted: candidates with
    c2bar <= 0 sit outside every slope theorem and their ratio is not
    comparable against a threshold (slope-3 sign anomalies are enumerated
    separately by slope3_enumerate).
    """
    candidates = list(_outer_parameters(spec))
    total = 0
    for _wc_builder, r_max, budget in candidates:
        total += _estimate_states(r_max, budget)
        if total > spec.state_budget:
            raise ValueError("bounds too large for the configured search budget")
    force_eq = ("naive_count" in spec.constraints
                or "naive_count_conic_lines" in spec.constraints)
    hits = []
    for wc_builder, r_max, budget in candidates:
        for t in _tvectors(r_max, budget, force_eq):
            wc = wc_builder(t)
            if wc is None:
                continue
            ok, slacks = _passes(wc, spec.constraints)
            if not ok:
                continue
            result = log_chern(wc)
            if result.c2 <= 0:
                continue
            if _objective(result.slope, spec.objective_op, spec.threshold):
                hits.append(SearchHit(wc, result.slope, slacks))
    hits.sort(key=lambda h: (-h.slope, h.combinatorics.d, h.combinatorics.k,
                             h.combinatorics.n, sorted(h.combinatorics.t.items())))
    return SearchResult(tuple(hits))


def _outer_parameters(spec: SearchSpec):
    """Yield (tvector -> WeakCombinatorics | None, r_max, pair budget)."""

    def clamp(r, total):
        top = total - 1 if total >= 3 else total
        return min(spec.max_multiplicity, top) if spec.max_multiplicity else top

    if spec.kind == "p2_lines":
        if spec.d_range is None:
            raise ValueError("p2_lines scans need d_range")
        for d in range(spec.d_range[0], spec.d_range[1] + 1):
            budget = d * (d - 1) // 2
            r_max = max(clamp(None, d), 2)

            def build(t, d=d):
                try:
                    return WeakCombinatorics.lines(d, t)
                except ValueError:
                    return None

            yield build, r_max, budget
    elif spec.kind in ("p2_conic_lines", "p2_conics"):
        if spec.n_range is None:
            raise ValueError("conic scans need n_range for the total curve count")
        d_lo, d_hi = spec.d_range or (0, spec.n_range[1])
        k_lo, k_hi = spec.k_range or (0, spec.n_range[1])
        if spec.kind == "p2_conics":
            d_lo = d_hi = 0
        for total in range(spec.n_range[0], spec.n_range[1] + 1):
            for k in range(k_lo, min(k_hi, total) + 1):
                d = total - k
                if not d_lo <= d <= d_hi:
                    continue
                budget = 4 * (k * (k - 1) // 2) + 2 * k * d + d * (d - 1) // 2
                r_max = max(clamp(None, total), 2)

                def build(t, d=d, k=k):
                    try:
                        if k and d:
                            return WeakCombinatorics.conic_lines(d, k, t)
                        if k:
                            return WeakCombinatorics.conics(k, t)
                        return WeakCombinatorics.lines(d, t)
                    except ValueError:
                        return None

                yield build, r_max, budget
    elif spec.kind == "k3_rational":
        if spec.n_range is None:
            raise ValueError("k3 scans need n_range")
        if spec.t_budget is None:
            raise ValueError("k3 scans need an explicit t_budget")
        for n in range(spec.n_range[0], spec.n_range[1] + 1):
            r_max = max(clamp(None, n), 2)

            def build(t, n=n):
                try:
                    return WeakCombinatorics.k3(n, t)
                except ValueError:
                    return None

            yield build, r_max, spec.t_budget
    else:
        raise ValueError(f"cannot scan kind {spec.kind!r}")


def sommese_search(strict: bool = False, d_values=None,
                   state_budget: int = DEFAULT_STATE_BUDGET) -> SearchResult:
    """Exhaustive reproduction of the extremal complex-line classification:
    d in 6..9, pairwise count exact, t_d = t_{d-1} = 0, the auxiliary bound
    d + 2 t2 + sum_{r>=5}(r-4) t_r <= 9 and the stronger Hirzebruch
    inequality, slope >= 8/3 (or > with strict=True)."""
    d_values = tuple(d_values) if d_values is not None else (6, 7, 8, 9)
    hits = []
    for d in d_values:
        spec = SearchSpec(
            kind="p2_lines", d_range=(d, d), max_multiplicity=d - 2,
            constraints=("naive_count", "sommese_step", "hirzebruch_strong"),
            objective_op=">" if strict else ">=", threshold=Fraction(8, 3),
            state_budget=state_budget)
        hits.extend(threshold_scan(spec).hits)
    hits.sort(key=lambda h: (-h.slope, h.combinatorics.d, sorted(h.combinatorics.t.items())))
    return SearchResult(tuple(hits))


@dataclass(frozen=True)
class Slope3Candidate:
    n: int
    t2: int
    t3: int
    slope: Fraction | None
    flags: tuple[str, ...]


def slope3_enumerate(n_max: int) -> tuple[Slope3Candidate, ...]:
    """All (n, t2, t3) with n <= n_max and 4n = 72 + t2 + t3 (multiplicities
    at most 3), annotated with connectivity and sign flags."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    out = []
    for n in range(18, n_max + 1):
        total = 4 * n - 72
        if total < 0:
            continue
        for t2 in range(total + 1):
            t3 = total - t2
            t = {r: c for r, c in ((2, t2), (3, t3)) if c}
            result = log_chern(WeakCombinatorics.k3(n, t))
            if result.slope is not None and result.slope != 3:
                raise AssertionError("slope-3 enumeration produced a non-3 slope")
            out.append(Slope3Candidate(n, t2, t3, result.slope, result.flags))
    return tuple(out)
