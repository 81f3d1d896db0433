"""Compare published codes and tables against BFS distances on the generated graphs."""

from __future__ import annotations

import csv
import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from itertools import combinations

import numpy as np

from . import formulas as fm
from .generators import OUTER, build_hc, build_sp
from .graph import Edge, LabeledGraph, VertexLabel, all_pairs_distances, edge_distance_table
from .resolvability import Variant, is_resolving

FIXTURE_FILE = "hc444_tables.csv"


@dataclass
class AuditRow:
    family: str
    element: str
    index: int
    expected: list[int] | None
    oracle: list[int] | None
    match: bool
    group: str = ""
    note: str = ""


@dataclass
class AuditReport:
    kind: str
    instance: dict
    landmarks: list[str]
    rows: list[AuditRow]
    extras: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        out: dict[str, dict[str, int]] = {}
        for r in self.rows:
            key = f"{r.group}/{r.family}" if r.group else r.family
            s = out.setdefault(key, {"match": 0, "mismatch": 0})
            s["match" if r.match else "mismatch"] += 1
        return out

    def mismatches(self) -> list[AuditRow]:
        return [r for r in self.rows if not r.match]

    @property
    def ok(self) -> bool:
        return not self.mismatches()

    def mismatched_families(self) -> list[str]:
        return [k for k, v in self.summary.items() if v["mismatch"]]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "instance": self.instance,
            "landmarks": self.landmarks,
            "rows": [asdict(r) for r in self.rows],
            "summary": self.summary,
            "totals": {
                "rows": len(self.rows),
                "match": sum(1 for r in self.rows if r.match),
                "mismatch": len(self.mismatches()),
            },
            "extras": self.extras,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self, only_mismatches: bool = False) -> str:
        fmt = lambda c: "-" if c is None else "(" + ",".join(map(str, c)) + ")"
        lines = [f"{self.kind} audit {self.instance} landmarks={','.join(self.landmarks)}"]
        header = f"{'group':<10} {'family':<12} {'element':<18} {'expected':<14} {'oracle':<14} ok"
        lines.append(header)
        lines.append("-" * len(header))
        for r in self.rows:
            if only_mismatches and r.match:
                continue
            lines.append(
                f"{r.group:<10} {r.family:<12} {r.element:<18} {fmt(r.expected):<14} "
                f"{fmt(r.oracle):<14} {'yes' if r.match else 'NO'}"
                + (f"  # {r.note}" if r.note else "")
            )
        t = self.to_dict()["totals"]
        lines.append(f"rows={t['rows']} match={t['match']} mismatch={t['mismatch']}")
        for key, s in self.summary.items():
            if s["mismatch"]:
                lines.append(f"  {key}: {s['mismatch']} of {s['match'] + s['mismatch']} rows disagree")
        return "\n".join(lines) + "\n"


# -- HC formulas ---------------------------------------------------------------


def _element_of(g: LabeledGraph, labels: tuple[str, ...]):
    ids = [g.vertex(VertexLabel.parse(x)) for x in labels]
    if len(ids) == 1:
        return ids[0]
    if not g.has_edge(*ids):
        raise KeyError(f"{'-'.join(labels)} is not an edge")
    return Edge.of(*ids)


def _oracle(dm, landmark_ids, element) -> tuple[int, ...]:
    if isinstance(element, tuple):
        return tuple(int(min(dm[l, element.u], dm[l, element.v])) for l in landmark_ids)
    return tuple(int(dm[l, element]) for l in landmark_ids)


def _collisions(g: LabeledGraph, dm, landmark_ids) -> dict:
    """Pairs of V∪E elements with identical codes, split by kind."""
    rows = np.asarray(dm)[landmark_ids]
    edge_rows = edge_distance_table(dm, g.edges)[landmark_ids]
    codes = [("v", tuple(col)) for col in rows.T.tolist()] + [("e", tuple(col)) for col in edge_rows.T.tolist()]
    groups: dict[tuple, Counter] = {}
    for kind, c in codes:
        groups.setdefault(c, Counter())[kind] += 1
    vv = ee = ve = 0
    for cnt in groups.values():
        nv, ne = cnt["v"], cnt["e"]
        vv += nv * (nv - 1) // 2
        ee += ne * (ne - 1) // 2
        ve += nv * ne
    return {"vertex_vertex": vv, "edge_edge": ee, "vertex_edge": ve}


def _hc_family_rows(fam: fm.FormulaFamily, g: LabeledGraph, dm, lids, a, b, c) -> tuple[list[AuditRow], set]:
    rows, covered = [], set()
    for idx in fam.index_range(a, b, c):
        labels = fam.labels(idx, a, b, c)
        expected = list(fam.evaluate(idx, a, b, c))
        try:
            element = _element_of(g, labels)
        except Exception as exc:  # label or edge missing from the generated graph
            rows.append(AuditRow(fam.name, "-".join(labels), idx, expected, None, False, note=str(exc)))
            continue
        covered.add(element)
        oracle = list(_oracle(dm, lids, element))
        rows.append(AuditRow(fam.name, "-".join(labels), idx, expected, oracle, expected == oracle))
    return rows, covered


def audit_hc(a: int, b: int, c: int, landmarks=fm.HC_LANDMARKS, threads: int = 1) -> AuditReport:
    """Every published HC code family vs. BFS codes on ``build_hc(a, b, c)``."""
    g = build_hc(a, b, c)
    dm = all_pairs_distances(g)
    lids = [g.vertex(VertexLabel.parse(x)) for x in landmarks]
    work = lambda fam: _hc_family_rows(fam, g, dm, lids, a, b, c)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, fm.HC_FAMILIES))
    else:
        parts = [work(f) for f in fm.HC_FAMILIES]
    rows = [r for part, _ in parts for r in part]
    covered = set().union(*(cov for _, cov in parts))
    all_elements = set(range(g.n)) | set(g.edges)
    uncovered = sorted(
        (g.label(x) if isinstance(x, int) else g.edge_label(x)) for x in all_elements - covered
    )

    per_family = Counter(r.family for r in rows)
    classes = []
    for name, fam_name, printed in fm.HC_CLASS_SIZES:
        claimed = fm.size_of(printed, a, b, c)
        actual = sum(v for k, v in per_family.items() if k.startswith("eta")) if fam_name == "eta*" \
            else per_family[fam_name]
        classes.append({"class": name, "family": fam_name, "claimed": claimed, "actual": actual,
                        "agree": claimed == actual})
    claimed_total = sum(x["claimed"] for x in classes)
    s = a + b + c
    bookkeeping = {
        "classes": classes,
        "claimed_total": claimed_total,
        "closed_form_total": 18 * (s - 3),
        "graph_total": g.n + g.m,
        "audited_rows": len(rows),
        "uncovered_elements": uncovered,
        "satisfied": claimed_total == 18 * (s - 3) == g.n + g.m == len(rows) and not uncovered,
    }
    expected_codes = [tuple(r.expected) for r in rows]
    extras = {
        "bookkeeping": bookkeeping,
        "oracle_collisions": _collisions(g, dm, lids),
        "oracle_resolving": is_resolving(g, dm, lids, Variant.MIXED)[0],
        "published_codes_distinct": len(set(expected_codes)) == len(expected_codes),
        "case_partition_ok": {f.name: f.partition_ok(a, b, c) for f in fm.HC_FAMILIES
                              if not f.partition_ok(a, b, c) or f.printed_ranges},
        "printed_case_ranges": {f.name: [r for _, r in f.printed_ranges] for f in fm.HC_FAMILIES
                                if f.printed_ranges},
        "boundary_consistency": [x for f in fm.HC_FAMILIES for x in fm.boundary_consistency(f, a, b, c)],
    }
    return AuditReport("hc", {"a": a, "b": b, "c": c}, list(landmarks), rows, extras)


# -- SP multiset claims ------------------------------------------------------------


def sp_hypotheses(a: int, b: int, c: int) -> dict[str, list[str]]:
    """The stated landmark 4-set and each of its 3-subsets, by label."""
    full = [f"p1:{2 * b - 1}", f"r1:{2 * a - 1}", "q2:1", "q2:3"]
    hyps = {"U4": full}
    for drop in range(4):
        sub = [x for i, x in enumerate(full) if i != drop]
        hyps[f"U3-{full[drop].replace(':', '')}"] = sub
    return hyps


def audit_sp(a: int, b: int, c: int, hypotheses: dict[str, list[str]] | None = None) -> AuditReport:
    """Published SP triples vs. BFS multirepresentations under each landmark hypothesis.

    Triples are compared as multisets. A hypothesis whose landmarks do not exist
    in the graph is reported and contributes mismatching rows.
    """
    g = build_sp(a, b, c)
    dm = all_pairs_distances(g)
    hypotheses = hypotheses or sp_hypotheses(a, b, c)
    rows: list[AuditRow] = []
    per_hyp: dict[str, dict] = {}
    printed_by_family: dict[str, list[tuple[int, ...]]] = {}
    for fam in fm.SP_FAMILIES:
        printed_by_family[fam.name] = [tuple(sorted(fam.evaluate(i, a, b, c))) for i in fam.index_range(a, b, c)]

    for hname, labels in hypotheses.items():
        missing = [x for x in labels if not g.has_label(VertexLabel.parse(x))]
        lids = [] if missing else [g.vertex(VertexLabel.parse(x)) for x in labels]
        matched = total = 0
        for fam in fm.SP_FAMILIES:
            for idx in fam.index_range(a, b, c):
                (lab,) = fam.labels(idx, a, b, c)
                expected = sorted(fam.evaluate(idx, a, b, c))
                if missing:
                    oracle, note = None, f"landmarks absent: {','.join(missing)}"
                else:
                    v = g.vertex(VertexLabel.parse(lab))
                    oracle = sorted(int(dm[l, v]) for l in lids)
                    note = "" if len(oracle) == len(expected) else \
                        f"length mismatch: {len(oracle)} landmarks vs printed triple"
                ok = oracle == expected
                rows.append(AuditRow(fam.name, lab, idx, expected, oracle, ok, group=hname, note=note))
                matched += ok
                total += 1
        resolving = None if missing else is_resolving(g, dm, lids, Variant.MULTISET)[0]
        per_hyp[hname] = {
            "landmarks": labels,
            "missing_landmarks": missing,
            "matched": matched,
            "rows": total,
            "match_fraction": round(matched / total, 6) if total else 0.0,
            "multiset_resolving": resolving,
        }

    all_printed = [t for reps in printed_by_family.values() for t in reps]
    classes = []
    for name, fam_name, printed in fm.SP_CLASS_SIZES:
        reps = printed_by_family[fam_name]
        classes.append({
            "class": name,
            "family": fam_name,
            "claimed": fm.size_of(printed, a, b, c),
            "members": len(reps),
            "distinct_reps": len(set(reps)),
        })
    cross = sorted(
        [f1, f2] for f1, f2 in combinations(printed_by_family, 2)
        if set(printed_by_family[f1]) & set(printed_by_family[f2])
    )
    extras = {
        "hypotheses": per_hyp,
        "reproducing_hypotheses": sorted(h for h, s in per_hyp.items() if s["matched"] == s["rows"]),
        "resolving_hypotheses": sorted(h for h, s in per_hyp.items() if s["multiset_resolving"]),
        "published_claims": dict(fm.SP_CLAIMS),
        "claims_consistent": fm.SP_CLAIMS["msdim_in_statement"] == fm.SP_CLAIMS["msdim_in_conclusion"],
        "class_sizes": classes,
        "published_reps_distinct": len(set(all_printed)) == len(all_printed),
        "families_sharing_reps": cross,
    }
    return AuditReport("sp", {"a": a, "b": b, "c": c}, list(hypotheses), rows, extras)


# -- HC(4,4,4) tables ---------------------------------------------------------------


@dataclass(frozen=True)
class FixtureRow:
    element_kind: str
    family: str
    index: int
    index2: int | None
    code: tuple[int, int, int]
    printed: str
    note: str

    def labels(self) -> tuple[str, ...]:
        if self.element_kind == "vertex":
            return (f"{self.family}:{self.index}",)
        f1, _, f2 = self.family.partition("/")
        return (f"{f1}:{self.index}", f"{f2 or f1}:{self.index2}")


def load_fixture(path=None) -> list[FixtureRow]:
    """Read the HC(4,4,4) table fixture; ``#`` lines are comments."""
    if path is None:
        text = resources.files("resolvset.data").joinpath(FIXTURE_FILE).read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    out = []
    for rec in csv.DictReader(lines):
        out.append(FixtureRow(
            rec["element_kind"],
            rec["family"],
            int(rec["index"]),
            int(rec["index2"]) if rec["index2"] else None,
            (int(rec["c1"]), int(rec["c2"]), int(rec["c3"])),
            rec["printed"],
            rec["note"],
        ))
    return out


def fixture_check_hc444(path=None) -> AuditReport:
    """Every stored table row vs. BFS codes on HC(4,4,4)."""
    g = build_hc(4, 4, 4)
    dm = all_pairs_distances(g)
    lids = [g.vertex(VertexLabel.parse(x)) for x in fm.HC_LANDMARKS]
    rows = []
    seen = set()
    for fr in load_fixture(path):
        labels = fr.labels()
        group = "vertices" if fr.element_kind == "vertex" else "edges"
        try:
            element = _element_of(g, labels)
        except Exception as exc:
            rows.append(AuditRow(fr.family, "-".join(labels), fr.index, list(fr.code), None, False,
                                 group=group, note=f"{fr.note} {exc}".strip()))
            continue
        seen.add(element)
        oracle = list(_oracle(dm, lids, element))
        note = fr.note if fr.printed == "-".join(labels) or not fr.note else f"printed {fr.printed}: {fr.note}"
        rows.append(AuditRow(fr.family, "-".join(labels), fr.index, list(fr.code), oracle,
                             list(fr.code) == oracle, group=group, note=note))
    not_listed = sorted(g.edge_label(e) for e in g.edges if e not in seen)
    missing_vertices = sorted(g.label(v) for v in range(g.n) if v not in seen)
    extras = {
        "vertex_rows": sum(1 for r in rows if r.group == "vertices"),
        "edge_rows": sum(1 for r in rows if r.group == "edges"),
        "graph_edges_not_in_table": not_listed,
        "graph_vertices_not_in_table": missing_vertices,
        "relabelled_rows": [r.element for r in rows if r.note],
    }
    return AuditReport("hc444-tables", {"a": 4, "b": 4, "c": 4}, list(fm.HC_LANDMARKS), rows, extras)


def outer_inner(label: VertexLabel) -> str:
    return "outer" if label.family in OUTER else "inner"
