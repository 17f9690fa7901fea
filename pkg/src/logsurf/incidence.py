"""Bipartite incidence graph of a line configuration in P^3.

Intersection points are identified by canonical projective normalization
(first nonzero coordinate scaled to 1), which exact arithmetic makes
collision-free; t_r counts the points where exactly r lines meet.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .fields import Field, FieldError
from .linalg import right_kernel
from .quartic_lines import Line


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple
    field: Field

    @classmethod
    def normalized(cls, coords, field) -> "ProjectivePoint":
        coords = list(coords)
        lead = next((c for c in coords if not field.is_zero(c)), None)
        if lead is None:
            raise ValueError("projective point cannot be zero")
        inv = field.inv(lead)
        return cls(tuple(field.mul(inv, c) for c in coords), field)

    def sort_key(self):
        return tuple(self.field.sort_key(c) for c in self.coords)


@dataclass(frozen=True)
class IncidenceGraph:
    lines: tuple[Line, ...]
    points: tuple[ProjectivePoint, ...]
    edges: tuple[tuple[int, int], ...]  # (point index, line index)

    def point_multiplicities(self) -> list[int]:
        counts = [0] * len(self.points)
        for pi, _li in self.edges:
            counts[pi] += 1
        return counts

    def lines_through(self, point_index: int) -> list[int]:
        return sorted(li for pi, li in self.edges if pi == point_index)

    def points_on(self, line_index: int) -> list[int]:
        return sorted(pi for pi, li in self.edges if li == line_index)


def _line_planes(line: Line):
    return right_kernel([list(r) for r in line.matrix], line.field, 4)


def _meet(row_pair, planes, field):
    """Intersection of a line (spanning rows) with another line's planes:
    the 2x2 system in the row coefficients."""
    r1, r2 = row_pair
    a = [[_dot(h, r1, field), _dot(h, r2, field)] for h in planes]
    det = field.sub(field.mul(a[0][0], a[1][1]), field.mul(a[0][1], a[1][0]))
    if not field.is_zero(det):
        return None
    # one-dimensional kernel of a nonzero 2x2 matrix
    if not field.is_zero(a[0][0]) or not field.is_zero(a[0][1]):
        alpha, beta = field.neg(a[0][1]), a[0][0]
    elif not field.is_zero(a[1][0]) or not field.is_zero(a[1][1]):
        alpha, beta = field.neg(a[1][1]), a[1][0]
    else:
        return None  # zero matrix: the lines coincide
    coords = [field.add(field.mul(alpha, x), field.mul(beta, y)) for x, y in zip(r1, r2)]
    return coords


def _dot(u, v, field):
    acc = field.zero
    for a, b in zip(u, v):
        acc = field.add(acc, field.mul(a, b))
    return acc


def intersect_lines(l1: Line, l2: Line):
    """The unique common point of two distinct lines, or None when skew."""
    if l1.field != l2.field:
        raise FieldError("field mismatch")
    if l1.matrix == l2.matrix:
        raise ValueError("lines are identical")
    coords = _meet(l1.matrix, _line_planes(l2), l1.field)
    if coords is None:
        return None
    return ProjectivePoint.normalized(coords, l1.field)


def build_incidence(lines) -> tuple[IncidenceGraph, dict]:
    """All pairwise intersections; returns the bipartite graph and the map
    r -> t_r.  The handshake identity (meeting pairs = sum C(r,2) t_r) is
    asserted on every build."""
    lines = tuple(lines)
    if len(lines) < 2:
        raise ValueError("need at least two lines")
    field = lines[0].field
    for line in lines:
        if line.field != field:
            raise FieldError("field mismatch")
    planes = [_line_planes(line) for line in lines]
    seen: dict[tuple, set] = {}
    meeting_pairs = 0
    for i in range(len(lines)):
        rows_i = lines[i].matrix
        for j in range(i + 1, len(lines)):
            coords = _meet(rows_i, planes[j], field)
            if coords is None:
                continue
            meeting_pairs += 1
            pt = ProjectivePoint.normalized(coords, field)
            seen.setdefault(pt.coords, set()).update((i, j))
    points = sorted((ProjectivePoint(c, field) for c in seen), key=lambda p: p.sort_key())
    edges = []
    t: dict[int, int] = {}
    for pi, pt in enumerate(points):
        incident = sorted(seen[pt.coords])
        t[len(incident)] = t.get(len(incident), 0) + 1
        for li in incident:
            edges.append((pi, li))
    check = sum(r * (r - 1) // 2 * count for r, count in t.items())
    if check != meeting_pairs:
        raise AssertionError("handshake identity violated")
    graph = IncidenceGraph(lines, tuple(points), tuple(edges))
    return graph, dict(sorted(t.items()))


def induced_combinatorics(graph: IncidenceGraph, subset) -> dict:
    """t_r of the sub-arrangement on the given line indices; points meeting
    fewer than two subset lines are dropped."""
    subset = set(subset)
    if len(subset) < 2:
        raise ValueError("subset must contain at least two lines")
    per_point: dict[int, int] = {}
    for pi, li in graph.edges:
        if li in subset:
            per_point[pi] = per_point.get(pi, 0) + 1
    t: dict[int, int] = {}
    for mult in per_point.values():
        if mult >= 2:
            t[mult] = t.get(mult, 0) + 1
    return dict(sorted(t.items()))


def components_by_multiplicity(graph: IncidenceGraph, m_min: int) -> list[list[int]]:
    """Connected components of the lines through points of multiplicity at
    least m_min; untouched lines are singletons.  Components are sorted by
    descending size, then smallest member."""
    if m_min < 2:
        raise ValueError("multiplicity threshold must be >= 2")
    mult = graph.point_multiplicities()
    parent = list(range(len(graph.lines)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    by_point: dict[int, list[int]] = {}
    for pi, li in graph.edges:
        if mult[pi] >= m_min:
            by_point.setdefault(pi, []).append(li)
    for members in by_point.values():
        for li in members[1:]:
            union(members[0], li)
    groups: dict[int, list[int]] = {}
    for li in range(len(graph.lines)):
        groups.setdefault(find(li), []).append(li)
    comps = [sorted(g) for g in groups.values()]
    comps.sort(key=lambda g: (-len(g), g[0]))
    return comps


def line_degree_sequence(graph: IncidenceGraph) -> tuple[int, ...]:
    counts = [0] * len(graph.lines)
    for _pi, li in graph.edges:
        counts[li] += 1
    return tuple(sorted(counts))


def export_graph(graph: IncidenceGraph, format: str) -> bytes:
    """DOT or JSON serialization with canonical ordering."""
    if format == "dot":
        out = ["graph incidence {"]
        for li in range(len(graph.lines)):
            out.append(f'  L{li} [shape=box];')
        for pi in range(len(graph.points)):
            out.append(f'  P{pi} [shape=circle];')
        for pi, li in sorted(graph.edges):
            out.append(f"  P{pi} -- L{li};")
        out.append("}")
        return ("\n".join(out) + "\n").encode()
    if format == "json":
        field = graph.lines[0].field if graph.lines else None
        payload = {
            "lines": [
                {"index": li, "chart": list(line.chart),
                 "matrix": [[line.field.fmt(c) for c in row] for row in line.matrix]}
                for li, line in enumerate(graph.lines)
            ],
            "points": [
                {"index": pi, "coords": [pt.field.fmt(c) for c in pt.coords]}
                for pi, pt in enumerate(graph.points)
            ],
            "edges": [[pi, li] for pi, li in sorted(graph.edges)],
        }
        return json.dumps(payload, indent=2, sort_keys=True).encode()
    raise ValueError(f"unknown format {format!r}")
