"""Hollow coronoid HC(a,b,c) and starphene SP(a,b,c) graph construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .graph import Family, GraphError, LabeledGraph, VertexLabel, graph_from_edges

F = Family

OUTER = frozenset({F.P1, F.P2, F.Q1, F.Q2, F.R1, F.R2})
INNER = frozenset({F.S1, F.S2, F.T1, F.T2, F.U1, F.U2})


@dataclass(frozen=True)
class HcParams:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in "abc":
            if getattr(self, name) < 2:
                raise GraphError(f"HC parameter {name} must be >= 2, got {getattr(self, name)}")

    @property
    def i(self) -> int:
        return 2 * self.a - 1

    @property
    def j(self) -> int:
        return 2 * self.c - 1

    @property
    def k(self) -> int:
        return 2 * self.b - 1

    def family_sizes(self, layout: str = "verbatim") -> dict[Family, int]:
        a, b, c = self.a, self.b, self.c
        sizes = {
            F.P1: 2 * a - 1, F.P2: 2 * a - 1,
            F.Q1: 2 * c - 1, F.Q2: 2 * c - 1,
            F.R1: 2 * b - 1, F.R2: 2 * b - 1,
            F.S1: 2 * a - 3, F.S2: 2 * a - 3,
            F.U1: 2 * b - 3, F.T2: 2 * b - 3,
            F.T1: 2 * c - 3, F.U2: 2 * c - 3,
        }
        if layout == "hexagonal":
            # opposite sides equal: q2/u2 follow b, r2/t2 follow c
            sizes.update({F.Q2: 2 * b - 1, F.U2: 2 * b - 3, F.R2: 2 * c - 1, F.T2: 2 * c - 3})
        elif layout != "verbatim":
            raise GraphError(f"unknown HC layout {layout!r}")
        return sizes


@dataclass(frozen=True)
class SpParams:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in "abc":
            if getattr(self, name) < 1:
                raise GraphError(f"SP parameter {name} must be >= 1, got {getattr(self, name)}")

    def family_sizes(self) -> dict[Family, int]:
        a, b, c = self.a, self.b, self.c
        return {
            F.P1: 2 * b - 1, F.P2: 2 * b - 1,
            F.Q1: 2 * c - 1, F.Q2: 2 * c - 1,
            F.R1: 2 * a - 1, F.R2: 2 * a - 1,
        }


class _Builder:
    def __init__(self, sizes: dict[Family, int]):
        self.ids: dict[VertexLabel, int] = {}
        # family order fixes vertex ids, so witnesses are reproducible
        for fam in Family:
            for g in range(1, sizes.get(fam, 0) + 1):
                self.ids[VertexLabel(fam, g)] = len(self.ids)
        self.edges: list[tuple[int, int]] = []

    def add(self, f1: Family, g1: int, f2: Family, g2: int) -> None:
        self.edges.append((self.ids[VertexLabel(f1, g1)], self.ids[VertexLabel(f2, g2)]))

    def paths(self, sizes: dict[Family, int]) -> None:
        for fam, size in sizes.items():
            for g in range(1, size):
                self.add(fam, g, fam, g + 1)

    def graph(self, name: str) -> LabeledGraph:
        labels = {v: lab for lab, v in self.ids.items()}
        return graph_from_edges(len(self.ids), self.edges, labels, validate_connected=True, name=name)


def build_hc(
    a: int | HcParams, b: int | None = None, c: int | None = None, *, layout: str = "verbatim"
) -> LabeledGraph:
    """Hollow coronoid HC(a,b,c).

    Outer cycle runs p1, q1, r1, p2 (reversed), r2 (reversed), q2 (reversed);
    the inner cycle s1, t1, u1, s2, t2, u2 mirrors it and spokes join the two.

    ``layout="verbatim"`` uses the printed family ranges (q2, u2 sized by c;
    r2, t2 by b). For b != c that ring has unequal opposite sides and does not
    close up in the hexagonal lattice. ``layout="hexagonal"`` sizes q2, u2 by b
    and r2, t2 by c, which gives sides a, c, b, a, c, b. Both agree when b == c.
    """
    p = a if isinstance(a, HcParams) else HcParams(a, b, c)
    a, b, c = p.a, p.b, p.c
    sizes = p.family_sizes(layout)
    i, j, k = sizes[F.P1], sizes[F.Q1], sizes[F.R1]
    j2, k2 = sizes[F.Q2], sizes[F.R2]
    bld = _Builder(sizes)
    bld.paths(sizes)

    for g in range(1, a):
        bld.add(F.P1, 2 * g, F.S1, 2 * g - 1)
        bld.add(F.P2, 2 * g, F.S2, 2 * g - 1)
    for g in range(1, (j + 1) // 2):
        bld.add(F.Q1, 2 * g, F.T1, 2 * g - 1)
    for g in range(1, (j2 + 1) // 2):
        bld.add(F.Q2, 2 * g, F.U2, 2 * g - 1)
    for g in range(1, (k + 1) // 2):
        bld.add(F.R1, 2 * g, F.U1, 2 * g - 1)
    for g in range(1, (k2 + 1) // 2):
        bld.add(F.R2, 2 * g, F.T2, 2 * g - 1)

    # outer connectors
    bld.add(F.P1, 1, F.Q2, 1)
    bld.add(F.P1, i, F.Q1, 1)
    bld.add(F.Q1, j, F.R1, 1)
    bld.add(F.R1, k, F.P2, i)
    bld.add(F.P2, 1, F.R2, k2)
    bld.add(F.R2, 1, F.Q2, j2)
    # inner connectors; the u1 end joins the terminal s2 vertex
    bld.add(F.S1, 1, F.U2, 1)
    bld.add(F.S1, i - 2, F.T1, 1)
    bld.add(F.T1, j - 2, F.U1, 1)
    bld.add(F.U1, k - 2, F.S2, 2 * a - 3)
    bld.add(F.S2, 1, F.T2, k2 - 2)
    bld.add(F.T2, 1, F.U2, j2 - 2)
    suffix = "" if layout == "verbatim" else f"_{layout}"
    return bld.graph(f"HC_{a}_{b}_{c}{suffix}")


def build_sp(a: int | SpParams, b: int | None = None, c: int | None = None) -> LabeledGraph:
    """Starphene SP(a,b,c): three ladder arms around a central hexagon."""
    p = a if isinstance(a, SpParams) else SpParams(a, b, c)
    a, b, c = p.a, p.b, p.c
    sizes = p.family_sizes()
    bld = _Builder(sizes)
    bld.paths(sizes)
    for g in range(1, b + 1):
        bld.add(F.P1, 2 * g - 1, F.P2, 2 * g - 1)
    for g in range(1, c + 1):
        bld.add(F.Q1, 2 * g - 1, F.Q2, 2 * g - 1)
    for g in range(1, a + 1):
        bld.add(F.R1, 2 * g - 1, F.R2, 2 * g - 1)
    bld.add(F.P1, 1, F.R2, 1)
    bld.add(F.R1, 1, F.Q2, 1)
    bld.add(F.Q1, 1, F.P2, 1)
    return bld.graph(f"SP_{a}_{b}_{c}")


# -- structural validation ---------------------------------------------------


def _hc_cut(g: LabeledGraph, u: int, v: int) -> bool:
    # spoke edges join the outer and inner cycles
    fu, fv = g.labels[u].family, g.labels[v].family
    return (fu in OUTER) != (fv in OUTER)


def _sp_cut(g: LabeledGraph, u: int, v: int) -> bool:
    # rungs and central edges are the only edges between different families
    return g.labels[u].family != g.labels[v].family


@dataclass(frozen=True)
class StructureProfile:
    kind: str
    vertices: int
    edges: int
    degree2: int
    degree3: int
    # sorted component sizes after removing the cut edges, and whether each is a cycle
    components: tuple[int, ...] = ()
    component_shape: str = ""
    family_sizes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": self.vertices,
            "edges": self.edges,
            "degree2": self.degree2,
            "degree3": self.degree3,
            "components": list(self.components),
            "component_shape": self.component_shape,
        }


def hc_profile(a: int, b: int, c: int, layout: str = "verbatim") -> StructureProfile:
    p = HcParams(a, b, c)
    s = a + b + c
    return StructureProfile(
        kind="hc",
        vertices=8 * (s - 3),
        edges=10 * (s - 3),
        degree2=4 * s - 12,
        degree3=4 * s - 12,
        components=tuple(sorted((4 * s - 6, 4 * s - 18))),
        component_shape="cycle",
        family_sizes={f.value: n for f, n in p.family_sizes(layout).items()},
    )


def sp_profile(a: int, b: int, c: int) -> StructureProfile:
    p = SpParams(a, b, c)
    s = a + b + c
    return StructureProfile(
        kind="sp",
        vertices=2 * (2 * a + 2 * b + 2 * c - 3),
        edges=5 * s - 9,
        degree2=2 * s,
        degree3=2 * (s - 3),
        components=tuple(sorted(n for n in p.family_sizes().values())),
        component_shape="path",
        family_sizes={f.value: n for f, n in p.family_sizes().items()},
    )


@dataclass
class Check:
    name: str
    passed: bool
    expected: object
    actual: object


@dataclass
class ValidationReport:
    checks: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "expected": c.expected, "actual": c.actual}
                for c in self.checks
            ],
        }


def _components_after_cut(g: LabeledGraph, cut: Callable[[LabeledGraph, int, int], bool]):
    keep = [[w for w in g.adjacency[v] if not cut(g, v, w)] for v in range(g.n)]
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack, members = [s], []
        seen[s] = True
        while stack:
            x = stack.pop()
            members.append(x)
            for y in keep[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        m = sum(len(keep[x]) for x in members) // 2
        degs = {len(keep[x]) for x in members}
        if degs == {2} and m == len(members):
            shape = "cycle"
        elif m == len(members) - 1 and max(degs) <= 2:
            shape = "path"
        else:
            shape = "other"
        comps.append((len(members), shape))
    return comps


def validate_structure(g: LabeledGraph, profile: StructureProfile) -> ValidationReport:
    """Compare ``g`` against closed-form counts; failures are reported, never raised."""
    degs = g.degrees()
    checks = [
        Check("vertex_count", g.n == profile.vertices, profile.vertices, g.n),
        Check("edge_count", g.m == profile.edges, profile.edges, g.m),
        Check("degree2_count", degs.count(2) == profile.degree2, profile.degree2, degs.count(2)),
        Check("degree3_count", degs.count(3) == profile.degree3, profile.degree3, degs.count(3)),
        Check("degree_range", set(degs) <= {2, 3}, [2, 3], sorted(set(degs))),
        Check("connected", g.is_connected(), True, g.is_connected()),
    ]
    labelled = len(g.labels) == g.n and g.n > 0
    if profile.family_sizes:
        actual: dict[str, int] = {}
        for lab in g.labels.values():
            actual[lab.family.value] = actual.get(lab.family.value, 0) + 1
        ranges_ok = labelled and actual == profile.family_sizes and all(
            g.has_label(VertexLabel(Family(f), idx))
            for f, size in profile.family_sizes.items()
            for idx in range(1, size + 1)
        )
        checks.append(Check("label_ranges", ranges_ok, profile.family_sizes, actual))
    if profile.components:
        if labelled:
            cut = _hc_cut if profile.kind == "hc" else _sp_cut
            comps = _components_after_cut(g, cut)
            sizes = tuple(sorted(n for n, _ in comps))
            shapes = sorted({s for _, s in comps})
        else:
            sizes, shapes = (), []
        checks.append(Check("cut_components", sizes == profile.components, list(profile.components), list(sizes)))
        checks.append(
            Check("cut_component_shape", shapes == [profile.component_shape], [profile.component_shape], shapes)
        )
    return ValidationReport(checks)
