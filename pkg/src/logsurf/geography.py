"""Log Chern numbers, slopes, Hirzebruch-type inequalities, Kummer covers.

Every formula is evaluated in exact integer/rational arithmetic.  The general
blow-up formula is

    c1bar^2 = c1^2(X) - sum C_i^2 + sum_{r>=2} (3r-4) t_r + 4 sum (g_i - 1)
    c2bar   = c2(X)              + sum_{r>=2} (r-1)  t_r + 2 sum (g_i - 1)

and the plane-line, conic-line, conic-only and K3 variants are its
specializations (lines: C^2=1, g=0 in P^2; conics: C^2=4, g=0; K3 rational
curves: C^2=-2, g=0, c1^2=0, c2=24).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

KINDS = ("p2_lines", "p2_conic_lines", "p2_conics", "k3_rational", "general")

Rational = Fraction


def validate_tvector(t: dict) -> dict[int, int]:
    out = {}
    for r, count in t.items():
        r = int(r)
        count = int(count)
        if r < 2:
            raise ValueError("multiplicities start at 2")
        if count < 0:
            raise ValueError("point counts are nonnegative")
        if count:
            out[r] = count
    return dict(sorted(out.items()))


def f_invariants(t: dict) -> tuple[int, int]:
    """f0 = sum t_r and f1 = sum r*t_r."""
    t = validate_tvector(t)
    return sum(t.values()), sum(r * c for r, c in t.items())


@dataclass(frozen=True)
class CurveData:
    self_intersection: int
    genus: int


@dataclass(frozen=True)
class WeakCombinatorics:
    """Numerical data of a transversal curve arrangement."""

    kind: str
    n: int
    t: dict
    d: int = 0
    k: int = 0
    ambient_c1sq: int | None = None
    ambient_c2: int | None = None
    curves: tuple[CurveData, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; one of {KINDS}")
        object.__setattr__(self, "t", validate_tvector(self.t))
        if self.n < 0 or self.d < 0 or self.k < 0:
            raise ValueError("curve counts are nonnegative")
        if self.kind in ("p2_lines", "p2_conic_lines", "p2_conics") and self.n != self.d + self.k:
            raise ValueError("n must equal d + k for plane arrangements")
        if any(r > self.n for r in self.t):
            raise ValueError("a point cannot lie on more curves than exist")
        if self.kind == "general":
            if self.ambient_c1sq is None or self.ambient_c2 is None or self.curves is None:
                raise ValueError("general arrangements need ambient Chern numbers and curve data")
            if len(self.curves) != self.n:
                raise ValueError("need one curve record per curve")

    @classmethod
    def lines(cls, d: int, t: dict) -> "WeakCombinatorics":
        return cls("p2_lines", n=d, d=d, t=t)

    @classmethod
    def conic_lines(cls, d: int, k: int, t: dict) -> "WeakCombinatorics":
        return cls("p2_conic_lines", n=d + k, d=d, k=k, t=t)

    @classmethod
    def conics(cls, k: int, t: dict) -> "WeakCombinatorics":
        return cls("p2_conics", n=k, k=k, t=t)

    @classmethod
    def k3(cls, n: int, t: dict) -> "WeakCombinatorics":
        return cls("k3_rational", n=n, t=t)


@dataclass(frozen=True)
class LogChernPair:
    c1sq: int
    c2: int


@dataclass(frozen=True)
class SlopeResult:
    pair: LogChernPair
    slope: Fraction | None
    flags: tuple[str, ...]

    @property
    def c1sq(self):
        return self.pair.c1sq

    @property
    def c2(self):
        return self.pair.c2


def log_chern(wc: WeakCombinatorics) -> SlopeResult:
    """Exact log Chern numbers and slope; violated hypotheses come back as
    flags, never as silent assumptions."""
    f0, f1 = f_invariants(wc.t)
    d, k, n = wc.d, wc.k, wc.n
    if wc.kind == "p2_lines":
        c1 = 9 - 5 * d + 3 * f1 - 4 * f0
        c2 = 3 - 2 * d + f1 - f0
    elif wc.kind == "p2_conic_lines":
        c1 = 9 - 8 * k - 5 * d + 3 * f1 - 4 * f0
        c2 = 3 - 2 * k - 2 * d + f1 - f0
    elif wc.kind == "p2_conics":
        c1 = 9 - 8 * k + 3 * f1 - 4 * f0
        c2 = 3 - 2 * k + f1 - f0
    elif wc.kind == "k3_rational":
        c1 = -2 * n + 3 * f1 - 4 * f0
        c2 = 24 - 2 * n + f1 - f0
    else:
        selfint = sum(c.self_intersection for c in wc.curves)
        genus_excess = sum(c.genus - 1 for c in wc.curves)
        c1 = wc.ambient_c1sq - selfint + sum((3 * r - 4) * c for r, c in wc.t.items()) \
            + 4 * genus_excess
        c2 = wc.ambient_c2 + sum((r - 1) * c for r, c in wc.t.items()) + 2 * genus_excess
    flags = []
    if c2 == 0:
        flags.append("slope-undefined")
    elif c2 < 0:
        flags.append("denominator-nonpositive")
    if c1 < 0:
        flags.append("c1sq-negative")
    if n >= 2 and f1 - f0 < n - 1:
        flags.append("possibly-disconnected")
    if wc.kind == "p2_lines" and not (d >= 4 and wc.t.get(d, 0) == 0 and wc.t.get(d - 1, 0) == 0):
        flags.append("outside-positivity-regime")
    if wc.kind in ("p2_conic_lines", "p2_conics") and k < 3:
        flags.append("fewer-than-three-conics")
    slope = Fraction(c1, c2) if c2 != 0 else None
    return SlopeResult(LogChernPair(c1, c2), slope, tuple(flags))


@dataclass(frozen=True)
class KummerData:
    """Chern data of the degree n^(d-1) abelian cover branched along d lines,
    scaled by n^(d-3); H is the nonnegativity polynomial 3e - K^2 (scaled)."""

    d: int
    exponent: int
    ksq_scaled: int
    e_scaled: int
    h_value: int
    gamma_limit: Fraction | None


def kummer_chern(d: int, t: dict, exponent: int) -> KummerData:
    t = validate_tvector(t)
    if d < 1:
        raise ValueError("need at least one line")
    if t.get(d, 0):
        raise ValueError("pencil: all lines through one point")
    if exponent < 2:
        raise ValueError("cover exponent must be >= 2")
    f0, f1 = f_invariants(t)
    n = exponent
    ksq = n * n * (9 - 5 * d + 3 * f1 - 4 * f0) + 4 * n * (d - f1 + f0) \
        + f1 - f0 + d + t.get(2, 0)
    e = n * n * (3 - 2 * d + f1 - f0) + 2 * n * (d - f1 + f0) + f1 - t.get(2, 0)
    h = n * n * (f0 - d) + 2 * n * (d - f1 + f0) + 2 * f1 + f0 - d - 4 * t.get(2, 0)
    assert h == 3 * e - ksq
    denom = 3 - 2 * d + f1 - f0
    gamma = Fraction(9 - 5 * d + 3 * f1 - 4 * f0, denom) if denom else None
    return KummerData(d, n, ksq, e, h, gamma)


@dataclass(frozen=True)
class Predicate:
    name: str
    applicable: bool
    reason: str | None       # violated hypothesis when not applicable
    holds: bool | None
    slack: Fraction | None   # oriented so that holds <=> slack >= 0 (or > 0)
    equality: bool | None
    strict: bool = False


def _predicate(name, applicable_reason, slack, strict=False):
    if applicable_reason is not None:
        return Predicate(name, False, applicable_reason, None, None, None, strict)
    slack = Fraction(slack)
    holds = slack > 0 if strict else slack >= 0
    return Predicate(name, True, None, holds, slack, slack == 0, strict)


def check_inequalities(wc: WeakCombinatorics) -> list[Predicate]:
    """Every named inequality with exact slack; inapplicable ones report the
    violated hypothesis."""
    t = wc.t
    f0, f1 = f_invariants(t)
    d, k, n = wc.d, wc.k, wc.n
    t2, t3 = t.get(2, 0), t.get(3, 0)
    high = sum((r - 4) * c for r, c in t.items() if r >= 5)
    pair_count = sum(r * (r - 1) // 2 * c for r, c in t.items())
    plane_lines = wc.kind == "p2_lines"
    conicish = wc.kind in ("p2_conic_lines", "p2_conics")
    k3 = wc.kind == "k3_rational"
    out = []

    def hypo(condition, message):
        return None if condition else message

    # Melchior (real arrangements): t2 >= 3 + sum_{r>=4} (r-3) t_r
    reason = hypo(plane_lines, "kind is not p2_lines") \
        or hypo(d >= 3, "needs d >= 3") or hypo(t.get(d, 0) == 0, "pencil (t_d > 0)")
    out.append(_predicate(
        "melchior", reason,
        t2 - 3 - sum((r - 3) * c for r, c in t.items() if r >= 4) if reason is None else 0))

    # complex-line Hirzebruch: t2 + t3 >= d + sum_{r>=5} (r-4) t_r
    line_hypo = hypo(plane_lines, "kind is not p2_lines") or hypo(d >= 6, "needs d >= 6") \
        or hypo(t.get(d, 0) == 0 and t.get(d - 1, 0) == 0, "needs t_d = t_{d-1} = 0")
    out.append(_predicate("hirzebruch", line_hypo,
                          t2 + t3 - d - high if line_hypo is None else 0))

    # stronger variant: t2 + (3/4) t3 >= d + sum_{r>=5} (r-4) t_r
    out.append(_predicate("hirzebruch_strong", line_hypo,
                          t2 + Fraction(3, 4) * t3 - d - high if line_hypo is None else 0))

    # auxiliary bound from the slope >= 8/3 analysis: d + 2 t2 + high <= 9
    out.append(_predicate("sommese_step", line_hypo,
                          9 - d - 2 * t2 - high if line_hypo is None else 0))

    # naive pairwise-intersection count (equality predicates)
    out.append(_predicate(
        "naive_count", hypo(plane_lines, "kind is not p2_lines"),
        (d * (d - 1) // 2 - pair_count) if plane_lines else 0))
    cl_pairs = 4 * (k * (k - 1) // 2) + 2 * k * d + d * (d - 1) // 2
    out.append(_predicate(
        "naive_count_conic_lines", hypo(conicish, "kind has no conics"),
        (cl_pairs - pair_count) if conicish else 0))
    # the naive counts assert equalities: flip holds to "slack == 0"
    for idx in (-2, -1):
        p = out[idx]
        if p.applicable:
            out[idx] = Predicate(p.name, True, None, p.slack == 0, p.slack, p.slack == 0)

    # conic-line Hirzebruch-type: 5k + t2 + t3 >= d + sum_{r>=5} (r-4) t_r
    cl_hypo = hypo(conicish, "kind has no conics") or hypo(k >= 3, "needs k >= 3") \
        or hypo(t.get(d + k, 0) == 0, "needs t_{d+k} = 0")
    out.append(_predicate("conic_line_hirzebruch", cl_hypo,
                          5 * k + t2 + t3 - d - high if cl_hypo is None else 0))

    # its corollary (strict): 8k + 2 t2 + t3 > 3 + d + sum_{r>=5} (r-4) t_r
    out.append(_predicate("conic_line_corollary", cl_hypo,
                          8 * k + 2 * t2 + t3 - 3 - d - high if cl_hypo is None else 0,
                          strict=True))

    # denominator positivity (strict): 3 - 2k - 2d + sum (r-1) t_r > 0
    out.append(_predicate("conic_line_denominator", cl_hypo,
                          3 - 2 * k - 2 * d + f1 - f0 if cl_hypo is None else 0,
                          strict=True))

    # K3 Hirzebruch-type: 4n - t2 + sum_{r>=3} (r-4) t_r <= 72
    k3_hypo = hypo(k3, "kind is not k3_rational") or hypo(n >= 2, "needs n >= 2")
    k3_lhs = 4 * n - t2 + sum((r - 4) * c for r, c in t.items() if r >= 3)
    out.append(_predicate("k3_hirzebruch", k3_hypo,
                          72 - k3_lhs if k3_hypo is None else 0))

    # high-slope criterion (strict): n > 20 + t2/6
    out.append(_predicate("k3_slope_criterion", k3_hypo,
                          n - 20 - Fraction(t2, 6) if k3_hypo is None else 0,
                          strict=True))
    return out


@dataclass(frozen=True)
class Slope3Result:
    is_slope_3: bool
    slope: Fraction | None
    flags: tuple[str, ...]


def slope3_criterion(n: int, t: dict) -> Slope3Result:
    """Slope equals 3 for a K3 arrangement iff 4n = 72 + t2 + t3 with no
    points of multiplicity above 3; cross-asserted against the slope whenever
    the second log Chern number is nonzero."""
    if n < 2:
        raise ValueError("need n >= 2")
    t = validate_tvector(t)
    combinatorial = (4 * n == 72 + t.get(2, 0) + t.get(3, 0)) \
        and all(r <= 3 for r in t)
    result = log_chern(WeakCombinatorics.k3(n, t))
    if result.slope is not None:
        if combinatorial != (result.slope == 3):
            raise AssertionError("slope-3 criterion disagrees with the slope formula")
    return Slope3Result(combinatorial, result.slope, result.flags)


# --- catalog of named arrangements ---


def _ceva(n: int) -> WeakCombinatorics:
    if n < 2:
        raise ValueError("ceva takes a parameter >= 2")
    t = {3: n * n}
    t[n] = t.get(n, 0) + 3
    return WeakCombinatorics.lines(3 * n, t)


def _polyhedral(k: int) -> WeakCombinatorics:
    if k < 3:
        raise ValueError("polyhedral takes a parameter >= 3")
    t = {2: k, 3: k * (k - 1) // 2}
    t[k] = t.get(k, 0) + 1
    return WeakCombinatorics.lines(2 * k, t)


_CATALOG = {
    "hesse": lambda: WeakCombinatorics.lines(12, {2: 12, 4: 9}),
    "dual-hesse": lambda: WeakCombinatorics.lines(9, {3: 12}),
    "a1-6": lambda: WeakCombinatorics.lines(6, {2: 3, 3: 4}),
    "klein": lambda: WeakCombinatorics.conic_lines(21, 21, {2: 42, 3: 252, 4: 189}),
    "fermat-48": lambda: WeakCombinatorics.k3(48, {2: 192, 4: 24}),
    "fermat-32": lambda: WeakCombinatorics.k3(32, {2: 64, 4: 16}),
    "fermat-16": lambda: WeakCombinatorics.k3(16, {4: 8}),
    "schur-64": lambda: WeakCombinatorics.k3(64, {2: 336, 3: 64, 4: 8}),
    "schur-48": lambda: WeakCombinatorics.k3(48, {2: 144, 3: 64}),
    "schur-16": lambda: WeakCombinatorics.k3(16, {4: 8}),
    "k3-25": lambda: WeakCombinatorics.k3(25, {2: 30}),
    "nodal-24": lambda: WeakCombinatorics.k3(24, {2: 96}),
}

_PARAMETRIC = {"ceva": _ceva, "polyhedral": _polyhedral}


def catalog_names() -> list[str]:
    return sorted(_CATALOG) + [f"{name}:<param>" for name in sorted(_PARAMETRIC)]


def catalog(name: str, param: int | None = None) -> WeakCombinatorics:
    """Named arrangement combinatorics; parametric families use 'family:param'."""
    if ":" in name:
        name, _, raw = name.partition(":")
        param = int(raw)
    if name in _PARAMETRIC:
        if param is None:
            raise ValueError(f"{name} needs a parameter, e.g. {name}:4")
        return _PARAMETRIC[name](param)
    if name in _CATALOG:
        if param is not None:
            raise ValueError(f"{name} takes no parameter")
        return _CATALOG[name]()
    raise ValueError(f"unknown catalog name {name!r}; available: {', '.join(catalog_names())}")
