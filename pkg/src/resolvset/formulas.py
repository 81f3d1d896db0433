"""Printed closed-form codes for HC(a,b,c) and SP(a,b,c), kept exactly as published.

Expressions are stored as text in the published notation (implicit
multiplication, e.g. ``2a+2c-g-1``) and compiled once. Nothing here is
corrected: wrong entries are data for the audit to surface.

HC codes are taken w.r.t. the landmark list (p1:1, r1:1, p2:1). SP entries are
the published multirepresentation triples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

_IMPLICIT = re.compile(r"(\d)([abcg(])")


def _compile(text: str) -> Callable[..., tuple[int, ...] | int]:
    src = _IMPLICIT.sub(r"\1*\2", text)
    code = compile(f"lambda a, b, c, g=0: {src}", "<formula>", "eval")
    return eval(code, {"__builtins__": {}})


@dataclass(frozen=True)
class Case:
    lo: str
    hi: str
    expr: str

    @property
    def printed(self) -> str:
        rng = f"g={self.lo}" if self.lo == self.hi else f"{self.lo}<=g<={self.hi}"
        return f"{self.expr}, {rng}"

    def bounds(self, a: int, b: int, c: int) -> tuple[int, int]:
        return _fn(self.lo)(a, b, c), _fn(self.hi)(a, b, c)

    def evaluate(self, a: int, b: int, c: int, g: int) -> tuple[int, ...]:
        return tuple(_fn(self.expr)(a, b, c, g))


@lru_cache(maxsize=None)
def _fn(text: str):
    return _compile(text)


@dataclass(frozen=True)
class FormulaFamily:
    """One published family: piecewise cases over an index range ``1..size``.

    ``element`` describes the member with index g as label templates, e.g.
    ``("p1:2g", "s1:2g-1")`` for spokes.
    """

    name: str
    kind: str
    size: str
    cases: tuple[Case, ...]
    element: tuple[str, ...]
    # printed range of a case when it differs from the effective one
    printed_ranges: tuple[tuple[int, str], ...] = ()

    def index_range(self, a: int, b: int, c: int) -> range:
        return range(1, _fn(self.size)(a, b, c) + 1)

    def case_for(self, g: int, a: int, b: int, c: int) -> Case:
        # first matching case wins
        for case in self.cases:
            lo, hi = case.bounds(a, b, c)
            if lo <= g <= hi:
                return case
        raise IndexError(f"{self.name}: index {g} outside every case for (a,b,c)=({a},{b},{c})")

    def evaluate(self, g: int, a: int, b: int, c: int) -> tuple[int, ...]:
        if g not in self.index_range(a, b, c):
            raise IndexError(f"{self.name}: index {g} outside 1..{_fn(self.size)(a, b, c)}")
        return self.case_for(g, a, b, c).evaluate(a, b, c, g)

    def labels(self, g: int, a: int, b: int, c: int) -> tuple[str, ...]:
        out = []
        for tmpl in self.element:
            fam, idx = tmpl.split(":")
            out.append(f"{fam}:{_fn(idx)(a, b, c, g)}")
        return tuple(out)

    def partition_ok(self, a: int, b: int, c: int) -> bool:
        """Do the case ranges tile ``1..size`` with no gap or overlap?"""
        covered: list[int] = []
        for case in self.cases:
            lo, hi = case.bounds(a, b, c)
            covered.extend(range(lo, hi + 1))
        return sorted(covered) == list(self.index_range(a, b, c))


def _fam(name, kind, size, element, *cases, printed_ranges=()):
    return FormulaFamily(name, kind, size, tuple(Case(*c) for c in cases), tuple(element), printed_ranges)


HC_LANDMARKS = ("p1:1", "r1:1", "p2:1")

HC_FAMILIES: tuple[FormulaFamily, ...] = (
    # vertices
    _fam("V:p1", "vertex", "2a-1", ["p1:g"],
         ("1", "1", "(g-1,2a+2c-g-1,2b+2c-1)"),
         ("2", "2a-1", "(g-1,2a+2c-g-1,2b+2c+g-4)")),
    _fam("V:q1", "vertex", "2c-1", ["q1:g"],
         ("1", "2c-2", "(2a+g-2,2c-g,2a+2b+2c-g-5)"),
         ("2c-1", "2c-1", "(2a+g-2,2c-g,2a+2b-2)")),
    _fam("V:r1", "vertex", "2b-1", ["r1:g"],
         ("1", "1", "(2a+2c-2,g-1,2a+2b-g-2)"),
         ("2", "2b-1", "(2a+2c+g-5,g-1,2a+2b-g-2)")),
    _fam("V:p2", "vertex", "2a-1", ["p2:g"],
         ("1", "1", "(2b+2c-1,2a+2b-g-2,g-1)"),
         ("2", "2a-1", "(2b+2c+g-4,2a+2b-g-2,g-1)")),
    _fam("V:q2", "vertex", "2c-1", ["q2:g"],
         ("1", "1", "(g,2b+2c-g-1,2a+2c-1)"),
         ("2", "2c-1", "(g,2b+2c-g-1,2a+2c+g-4)")),
    _fam("V:r2", "vertex", "2b-1", ["r2:g"],
         ("1", "2b-2", "(2c+g-1,2b-g,2a+4b-g-5)"),
         ("2b-1", "2b-1", "(2c+g-1,2b-g,2a+2b-2)")),
    _fam("V:s1", "vertex", "2a-3", ["s1:g"], ("1", "2a-3", "(g+1,2a+2c-g-3,2b+2c+g-4)")),
    _fam("V:t1", "vertex", "2c-3", ["t1:g"], ("1", "2c-3", "(2a+g-2,2c-g,2a+2b+2c-g-7)")),
    _fam("V:u1", "vertex", "2b-3", ["u1:g"], ("1", "2b-3", "(2a+2c+g-5,g+1,2a+2b-g-4)")),
    _fam("V:s2", "vertex", "2a-3", ["s2:g"], ("1", "2a-3", "(2a+2c+g-6,2a+2b-g-4,g+1)")),
    _fam("V:u2", "vertex", "2c-3", ["u2:g"], ("1", "2c-3", "(g+2,2a+2c+g-4,2b+2c-g-3)")),
    _fam("V:t2", "vertex", "2b-3", ["t2:g"], ("1", "2b-3", "(2c+g-1,2a+4b-g-7,2b-g)")),
    # path edges x:g - x:g+1
    _fam("E:p1", "path_edge", "2a-2", ["p1:g", "p1:g+1"],
         ("1", "1", "(g-1,2a+2c-g-2,2b+2c-2)"),
         ("2", "2a-2", "(g-1,2a+2c-g-2,2b+2c+g-4)")),
    _fam("E:q1", "path_edge", "2c-2", ["q1:g", "q1:g+1"],
         ("1", "2c-3", "(2a+g-2,2c-g-1,2a+2b+2c-g-6)"),
         ("2c-2", "2c-2", "(2a+g-2,2c-g-1,2a+2b-3)"),
         printed_ranges=((1, "2<=g<=2c-2"),)),
    _fam("E:r1", "path_edge", "2b-2", ["r1:g", "r1:g+1"],
         ("1", "1", "(2a+2c-3,g-1,2a+2b-g-3)"),
         ("2", "2b-2", "(2a+2c+g-5,g-1,2a+2b-g-3)")),
    _fam("E:s1", "path_edge", "2a-4", ["s1:g", "s1:g+1"], ("1", "2a-4", "(g+1,2a+2c-g-4,2b+2c+g-4)")),
    _fam("E:t1", "path_edge", "2c-4", ["t1:g", "t1:g+1"], ("1", "2c-4", "(2a+g-2,2c-g-1,2a+2b+2c-g-8)")),
    _fam("E:u1", "path_edge", "2b-4", ["u1:g", "u1:g+1"], ("1", "2b-4", "(2a+2c+g-5,g+1,2a+2b-g-5)")),
    _fam("E:p2", "path_edge", "2a-2", ["p2:g", "p2:g+1"],
         ("1", "1", "(2b+2c-2,2a+2b-g-3,g-1)"),
         ("2", "2a-2", "(2b+2c+g-4,2a+2b-g-3,g-1)")),
    _fam("E:q2", "path_edge", "2c-2", ["q2:g", "q2:g+1"],
         ("1", "1", "(g,2a+2c-2,2b+2c-g-2)"),
         ("2", "2c-2", "(g,2a+2c+g-4,2b+2c-g-2)")),
    _fam("E:r2", "path_edge", "2b-2", ["r2:g", "r2:g+1"],
         ("1", "2b-3", "(2c+g-1,2a+4b-g-6,2b-g-1)"),
         ("2b-2", "2b-2", "(2c+g-1,2a+2b-3,2b-g-1)")),
    _fam("E:s2", "path_edge", "2a-4", ["s2:g", "s2:g+1"], ("1", "2a-4", "(2b+2c+g-4,2a+2b-g-5,g+1)")),
    _fam("E:t2", "path_edge", "2b-4", ["t2:g", "t2:g+1"], ("1", "2b-4", "(2c+g-1,2a+4b-g-8,2b-g-1)")),
    _fam("E:u2", "path_edge", "2c-4", ["u2:g", "u2:g+1"], ("1", "2c-4", "(g+2,2a+2c+g-4,2b+2c-g-4)")),
    # the twelve cycle-closing edges (index is always 1)
    _fam("eta1", "connector", "1", ["p1:1", "q2:1"], ("1", "1", "(0,2a+2c-2,2b+2c-4)")),
    _fam("eta2", "connector", "1", ["s1:1", "u2:1"], ("1", "1", "(2,2a+2c-4,2b+2c-6)")),
    _fam("eta3", "connector", "1", ["p1:2a-1", "q1:1"], ("1", "1", "(2a-2,2c-1,2a+2b+2c-6)")),
    _fam("eta4", "connector", "1", ["s1:2a-3", "t1:1"], ("1", "1", "(2a-2,2c-1,2a+2b+2c-8)")),
    _fam("eta5", "connector", "1", ["q1:2c-1", "r1:1"], ("1", "1", "(2a+2c-3,0,2a+2b-3)")),
    _fam("eta6", "connector", "1", ["t1:2c-3", "u1:1"], ("1", "1", "(2a+2c-5,2,2a+2b-5)")),
    _fam("eta7", "connector", "1", ["r1:2b-1", "p2:2a-1"], ("1", "1", "(2a+2b+2c-6,2b-2,2a-2)")),
    _fam("eta8", "connector", "1", ["u1:2b-3", "s2:2a-3"], ("1", "1", "(2a+2b+2c-8,2b-2,2a-2)")),
    _fam("eta9", "connector", "1", ["p2:1", "r2:2b-1"], ("1", "1", "(2b+2c-2,2a+2b-3,0)")),
    _fam("eta10", "connector", "1", ["s2:1", "t2:2b-3"], ("1", "1", "(2b+2c-4,2a+2b-5,2)")),
    _fam("eta11", "connector", "1", ["r2:1", "q2:2c-1"], ("1", "1", "(2c-1,2a+4b-6,2b-1)")),
    _fam("eta12", "connector", "1", ["t2:1", "u2:2c-3"], ("1", "1", "(2c-1,2a+4b-8,2b-1)")),
    # spokes between the outer and inner cycle
    _fam("S:p1s1", "spoke", "a-1", ["p1:2g", "s1:2g-1"],
         ("1", "a-1", "(2g-1,4a+2c-2g-12,4b+2c+2g-13)")),
    _fam("S:q1t1", "spoke", "c-1", ["q1:2g", "t1:2g-1"],
         ("1", "c-1", "(4a+2g-13,4c-2g-8,4a+2b+2c-2g-16)")),
    _fam("S:r1u1", "spoke", "b-1", ["r1:2g", "u1:2g-1"],
         ("1", "b-1", "(4a+2c+2g-16,2g-1,4a+2b-2g-13)")),
    _fam("S:p2s2", "spoke", "a-1", ["p2:2g", "s2:2g-1"],
         ("1", "a-1", "(4c+2b+2g-13,4a+2b-2g-13,2g-1)")),
    _fam("S:r2t2", "spoke", "b-1", ["r2:2g", "t2:2g-1"],
         ("1", "b-1", "(4c+2g-10,4a+4b-2g-16,4b-2g-8)")),
    _fam("S:q2u2", "spoke", "c-1", ["q2:2g", "u2:2g-1"],
         ("1", "c-1", "(2g,4a+2c+2g-15,4b+2c-2g-10)")),
)

SP_FAMILIES: tuple[FormulaFamily, ...] = (
    _fam("M:p1", "sp_vertex", "2b-1", ["p1:g"],
         ("1", "2b-3", "(2b-g-1,2b-g-2,g+1)"),
         ("2b-2", "2b-2", "(1,2,2b-1)"),
         ("2b-1", "2b-1", "(0,3,2b)")),
    _fam("M:p2", "sp_vertex", "2b-1", ["p2:g"],
         ("1", "2b-3", "(2b-g,2b-g-3,g+2)"),
         ("2b-2", "2b-2", "(2,1,2b)"),
         ("2b-1", "2b-1", "(1,2,2b+1)")),
    _fam("M:q1", "sp_vertex", "2c-1", ["q1:g"], ("1", "2c-1", "(2b+g-1,2b+g-4,g+1)")),
    _fam("M:q2", "sp_vertex", "2c-1", ["q2:g"], ("1", "2c-1", "(2b+g,2b+g-3,g)")),
    _fam("M:r1", "sp_vertex", "2a-1", ["r1:g"], ("1", "2a-1", "(2b+g-1,2a+g-2,g-1)")),
    _fam("M:r2", "sp_vertex", "2a-1", ["r2:g"], ("1", "2a-1", "(2b+g-2,2b+g-3,g)")),
)

# stated landmark set for the SP multiset claim: p1:2b-1, r1:2a-1, q2:1, q2:3
SP_LANDMARKS = ("p1:2b-1", "r1:2a-1", "q2:1", "q2:3")

# published claims about SP(a,b,c), a,b,c >= 3
SP_CLAIMS = {
    "msdim_in_statement": 4,
    "msdim_in_conclusion": 3,
    "landmark_set_size": 4,
    "printed_rep_length": 3,
}

# class-size bookkeeping printed for HC: name -> (formula-family name, printed size)
HC_CLASS_SIZES = (
    ("V1", "V:p1", "2a-1"), ("V4", "V:p2", "2a-1"),
    ("V2", "V:q1", "2c-1"), ("V5", "V:q2", "2c-1"),
    ("V3", "V:r1", "2b-1"), ("V6", "V:r2", "2b-1"),
    ("W1", "V:s1", "2a-3"), ("W4", "V:s2", "2a-3"),
    ("W2", "V:t1", "2c-3"), ("W5", "V:u2", "2c-3"),
    ("W3", "V:u1", "2b-3"), ("W6", "V:t2", "2b-3"),
    ("P1", "E:p1", "2a-2"), ("P2", "E:p2", "2a-2"),
    ("Q1", "E:q1", "2c-2"), ("Q2", "E:q2", "2c-2"),
    ("R1", "E:r1", "2b-2"), ("R2", "E:r2", "2b-2"),
    ("S1", "E:s1", "2a-4"), ("S2", "E:s2", "2a-4"),
    ("T1", "E:t1", "2c-4"), ("U2", "E:u2", "2c-4"),
    ("T2", "E:t2", "2b-4"), ("U1", "E:u1", "2b-4"),
    ("PS1", "S:p1s1", "a-1"), ("PS2", "S:p2s2", "a-1"),
    ("RU1", "S:r1u1", "b-1"), ("RT2", "S:r2t2", "b-1"),
    ("QT1", "S:q1t1", "c-1"), ("QU2", "S:q2u2", "c-1"),
    ("V7", "eta*", "12"),
)

# printed SP class sizes, including the M5/M2 pairing as published
SP_CLASS_SIZES = (
    ("M1", "M:p1", "2b-1"), ("M2", "M:p2", "2b-1"),
    ("M3", "M:q1", "2c-1"), ("M4", "M:q2", "2c-1"),
    ("M5", "M:r1", "2a-1"), ("M2", "M:p2", "2a-1"),
)

_BY_NAME = {f.name: f for f in HC_FAMILIES + SP_FAMILIES}


def family(name: str) -> FormulaFamily:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown formula family {name!r}") from None


def size_of(expr: str, a: int, b: int, c: int) -> int:
    return _fn(expr)(a, b, c)


def hc_formula_code(fam: str | FormulaFamily, g: int, a: int, b: int, c: int) -> tuple[int, ...]:
    """Published mixed code of member ``g`` of an HC family."""
    f = family(fam) if isinstance(fam, str) else fam
    if f.kind == "sp_vertex":
        raise KeyError(f"{f.name} is an SP family")
    return f.evaluate(g, a, b, c)


def sp_formula_multirep(fam: str | FormulaFamily, g: int, a: int, b: int, c: int) -> tuple[int, ...]:
    """Published (unsorted) multirepresentation triple of SP vertex ``g``."""
    if isinstance(fam, str) and not fam.startswith("M:"):
        fam = "M:" + fam
    f = family(fam) if isinstance(fam, str) else fam
    if f.kind != "sp_vertex":
        raise KeyError(f"{f.name} is not an SP family")
    return f.evaluate(g, a, b, c)


def boundary_consistency(fam: FormulaFamily, a: int, b: int, c: int) -> list[dict]:
    """Evaluate each single-index case against its neighbouring general case at that index."""
    out = []
    for idx, case in enumerate(fam.cases):
        lo, hi = case.bounds(a, b, c)
        if lo != hi or len(fam.cases) == 1:
            continue
        for other in fam.cases:
            if other is case:
                continue
            olo, ohi = other.bounds(a, b, c)
            if olo == ohi:
                continue
            special = case.evaluate(a, b, c, lo)
            general = other.evaluate(a, b, c, lo)
            out.append({
                "family": fam.name,
                "index": lo,
                "special_case": list(special),
                "general_case_extended": list(general),
                "agree": special == general,
            })
            break
    return out
