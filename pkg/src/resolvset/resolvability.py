"""Distance codes, resolving-set checks and exhaustive minimum-dimension search.

Four variants are supported: vertex metric, edge metric, mixed metric (all of
V and E, compared as one disjoint pool) and multiset (vertices compared by the
sorted tuple of their landmark distances).
"""

from __future__ import annotations

import enum
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

from .graph import DistanceMatrix, Edge, GraphError, LabeledGraph, all_pairs_distances, edge_distance_table

Element = Union[int, Edge]

DEFAULT_BUDGET = 10**8


class Variant(str, enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    MIXED = "mixed"
    MULTISET = "multiset"

    @classmethod
    def parse(cls, text: "str | Variant") -> "Variant":
        if isinstance(text, Variant):
            return text
        aliases = {"vertexmetric": "vertex", "dim": "vertex", "edgemetric": "edge", "edim": "edge",
                   "mixedmetric": "mixed", "mdim": "mixed", "msdim": "multiset"}
        key = text.lower().replace("_", "").replace("-", "")
        return cls(aliases.get(key, key))


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, size: int, count: int, budget: int):
        super().__init__(
            f"C(n,{size}) = {count} subsets exceeds the search budget of {budget}; "
            "raise the budget or lower the cap"
        )
        self.size = size
        self.count = count
        self.budget = budget


def elements(g: LabeledGraph, variant: Variant) -> list[Element]:
    """Elements a variant must tell apart: vertices first (by id), then edges (lexicographic)."""
    variant = Variant.parse(variant)
    if variant is Variant.EDGE:
        return list(g.edges)
    if variant is Variant.MIXED:
        return list(range(g.n)) + list(g.edges)
    return list(range(g.n))


def distance_table(g: LabeledGraph, dm: DistanceMatrix, variant: Variant) -> np.ndarray:
    """Array ``T`` of shape (n, N) with ``T[l, x]`` = d(l, element x)."""
    variant = Variant.parse(variant)
    if variant is Variant.EDGE:
        return edge_distance_table(dm, g.edges)
    if variant is Variant.MIXED:
        return np.hstack([np.asarray(dm), edge_distance_table(dm, g.edges)])
    return np.asarray(dm)


def _check_landmarks(dm: DistanceMatrix, landmarks: Sequence[int]) -> list[int]:
    landmarks = [int(v) for v in landmarks]
    n = dm.shape[0]
    if len(set(landmarks)) != len(landmarks):
        raise GraphError("landmarks must be distinct")
    for v in landmarks:
        if not 0 <= v < n:
            raise GraphError(f"landmark id {v} out of range")
    return landmarks


def code(dm: DistanceMatrix, element: Element, landmarks: Sequence[int]) -> tuple[int, ...]:
    """Ordered distance vector of a vertex or edge to the landmark list."""
    landmarks = _check_landmarks(dm, landmarks)
    if not landmarks:
        raise GraphError("landmark list is empty")
    n = dm.shape[0]
    if isinstance(element, tuple):
        x, y = element
        if not (0 <= x < n and 0 <= y < n) or x == y:
            raise GraphError(f"invalid edge {element}")
        return tuple(int(min(dm[l, x], dm[l, y])) for l in landmarks)
    if not 0 <= int(element) < n:
        raise GraphError(f"vertex id {element} out of range")
    return tuple(int(dm[l, element]) for l in landmarks)


def multiset_rep(dm: DistanceMatrix, v: int, landmarks: Iterable[int]) -> tuple[int, ...]:
    """Multiset of distances from ``v`` to the landmarks, as a sorted tuple."""
    landmarks = list(landmarks)
    if not landmarks:
        raise GraphError("landmark set is empty")
    if isinstance(v, tuple):
        raise GraphError("multiset representations are defined for vertices only")
    return tuple(sorted(code(dm, v, landmarks)))


def _first_collision(key: np.ndarray) -> tuple[int, int] | None:
    """Lexicographically first pair (i, j), i < j, with key[i] == key[j]."""
    order = np.argsort(key, kind="stable")
    sk = key[order]
    same = sk[1:] == sk[:-1]
    if not same.any():
        return None
    # start of each duplicated group; its first slot holds the group's smallest index
    group_start = np.r_[True, sk[1:-1] != sk[:-2]]
    starts = np.flatnonzero(same & group_start)
    s = starts[int(np.argmin(order[starts]))]
    return int(order[s]), int(order[s + 1])


def _codes_key(table: np.ndarray, landmarks: Sequence[int], multiset: bool) -> np.ndarray:
    rows = table[list(landmarks)]
    if multiset:
        rows = np.sort(rows, axis=0)
    # lexicographic rank of each column tuple
    _, inverse = np.unique(rows.T, axis=0, return_inverse=True)
    return inverse.reshape(-1)


def is_resolving(
    g: LabeledGraph,
    dm: DistanceMatrix,
    landmarks: Sequence[int],
    variant: Variant | str,
) -> tuple[bool, tuple[Element, Element] | None]:
    """Whether ``landmarks`` separate every relevant pair.

    On failure also returns the lexicographically first unseparated pair
    (element order as in :func:`elements`).
    """
    variant = Variant.parse(variant)
    landmarks = _check_landmarks(dm, landmarks)
    elems = elements(g, variant)
    if len(elems) < 2:
        return True, None
    if not landmarks:
        return False, (elems[0], elems[1])
    table = distance_table(g, dm, variant)
    pair = _first_collision(_codes_key(table, landmarks, variant is Variant.MULTISET))
    if pair is None:
        return True, None
    return False, (elems[pair[0]], elems[pair[1]])


def is_independent(g: LabeledGraph, s: Iterable[int]) -> bool:
    s = list(s)
    members = set(s)
    return not any(w in members for v in s for w in g.neighbors(v))


def lower_bound(g: LabeledGraph, variant: Variant) -> int:
    """Size the search starts from when known lower bounds are trusted."""
    variant = Variant.parse(variant)
    if variant is Variant.MIXED:
        return 2
    if variant is Variant.MULTISET:
        return 1 if g.is_path() else 3
    return 1


# -- search ------------------------------------------------------------------


@dataclass
class SearchStats:
    tested: int = 0
    pruned: int = 0
    per_size: dict[int, dict[str, int]] = field(default_factory=dict)
    elapsed: float = 0.0


@dataclass
class DimensionResult:
    variant: Variant
    value: int | None
    witness: tuple[int, ...] | None
    certified: bool
    lower_bound: int
    cap: int
    refuted_sizes: list[int]
    require_independent: bool = False
    # sizes where resolving sets exist but none of them is independent
    dependent_only_sizes: list[int] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def found(self) -> bool:
        return self.value is not None

    def to_dict(self, g: LabeledGraph | None = None) -> dict:
        """JSON-ready dict; run-time dependent data lives under ``metadata`` only."""
        witness = None
        if self.witness is not None:
            witness = [g.label(v) if g is not None else v for v in self.witness]
        return {
            "variant": self.variant.value,
            "value": self.value if self.value is not None else "not found up to cap",
            "witness": witness,
            "witness_ids": list(self.witness) if self.witness is not None else None,
            "certified": self.certified,
            "lower_bound": self.lower_bound,
            "cap": self.cap,
            "refuted_sizes": self.refuted_sizes,
            "require_independent": self.require_independent,
            "dependent_only_sizes": self.dependent_only_sizes,
            "stats": {
                "subsets_tested": self.stats.tested,
                "subsets_pruned": self.stats.pruned,
                "per_size": {str(k): v for k, v in sorted(self.stats.per_size.items())},
            },
            "metadata": {"elapsed_seconds": round(self.stats.elapsed, 6)},
        }


@dataclass
class _ScanOutcome:
    witness: tuple[int, ...] | None = None
    tested: int = 0
    pruned: int = 0
    dependent_resolving: bool = False


class _Searcher:
    """Lexicographic k-subset scan with the last landmark vectorized."""

    def __init__(self, g: LabeledGraph, table: np.ndarray, multiset: bool, prune: bool,
                 require_independent: bool):
        self.g = g
        self.table = np.ascontiguousarray(table, dtype=np.int64)
        self.n, self.N = self.table.shape
        self.multiset = multiset
        self.prune = prune
        self.require_independent = require_independent
        self.base = int(self.table.max(initial=0)) + 1
        adj = np.zeros((self.n, self.n), dtype=bool)
        for e in g.edges:
            adj[e.u, e.v] = adj[e.v, e.u] = True
        self.adj = adj

    def _extend_key(self, key: np.ndarray, row: np.ndarray) -> np.ndarray:
        # ordered codes: (rank, distance) pairs re-ranked to stay small
        _, inv = np.unique(key * self.base + row, return_inverse=True)
        return inv.reshape(-1)

    def _multiset_key(self, rows: np.ndarray) -> np.ndarray:
        return _codes_key(rows, range(rows.shape[0]), True)

    def _final_ok(self, prefix: list[int], key: np.ndarray | None, cands: np.ndarray) -> np.ndarray:
        """Boolean mask: which prefix + [c] resolve."""
        if cands.size == 0:
            return np.zeros(0, dtype=bool)
        rows = self.table[cands]
        if self.multiset:
            k = len(prefix) + 1
            if self.base ** k < 2**62:
                stack = np.empty((cands.size, k, self.N), dtype=np.int64)
                stack[:, : k - 1, :] = self.table[prefix][None, :, :]
                stack[:, k - 1, :] = rows
                stack.sort(axis=1)
                keys = np.zeros((cands.size, self.N), dtype=np.int64)
                for pos in range(k):
                    keys = keys * self.base + stack[:, pos, :]
            else:
                out = np.empty(cands.size, dtype=bool)
                for idx, c in enumerate(cands):
                    kk = _codes_key(self.table, prefix + [int(c)], True)
                    out[idx] = np.unique(kk).size == self.N
                return out
        else:
            if key is None:
                keys = rows
            else:
                keys = key[None, :] * self.base + rows
        keys = np.sort(keys, axis=1)
        return ~(keys[:, 1:] == keys[:, :-1]).any(axis=1)

    def _prefix_key(self, prefix: list[int], parent: np.ndarray | None) -> np.ndarray:
        if self.multiset:
            return self._multiset_key(self.table[prefix])
        if parent is None:
            return self.table[prefix[0]].copy()
        return self._extend_key(parent, self.table[prefix[-1]])

    def scan(self, k: int, first: int) -> _ScanOutcome:
        """All k-subsets whose smallest element is ``first``, in lexicographic order."""
        out = _ScanOutcome()
        if k == 1:
            mask = self._final_ok([], None, np.array([first]))
            out.tested = 1
            if mask[0]:
                out.witness = (first,)
            return out
        self._recurse([first], None, k, out)
        return out

    def _recurse(self, prefix, parent_key, k, out: _ScanOutcome) -> bool:
        n = self.n
        key = self._prefix_key(prefix, parent_key)
        r = k - len(prefix)
        lo = prefix[-1] + 1
        hi = n - r  # largest allowed next element
        if lo > hi:
            return False
        pair = _first_collision(key) if self.prune else None
        if pair is not None:
            x, y = pair
            sep = self.table[lo:, x] != self.table[lo:, y]
            if not sep.any():
                out.pruned += math.comb(n - lo, r)
                return False
        if r == 1:
            cands = np.arange(lo, n)
            if pair is not None:
                kept = cands[sep]
                out.pruned += cands.size - kept.size
                cands = kept
            ok = self._final_ok(prefix, None if self.multiset else key, cands)
            hits = cands[ok]
            if self.require_independent and hits.size:
                if is_independent(self.g, prefix):
                    dep = self.adj[np.ix_(hits, prefix)].any(axis=1)
                else:
                    dep = np.ones(hits.size, dtype=bool)
                if dep.any():
                    out.dependent_resolving = True
                hits = hits[~dep]
            if hits.size:
                # count only the subsets lexicographically up to the witness
                out.tested += int(np.searchsorted(cands, hits[0])) + 1
                out.witness = tuple(prefix) + (int(hits[0]),)
                return True
            out.tested += cands.size
            return False
        for nxt in range(lo, hi + 1):
            if self._recurse(prefix + [nxt], key, k, out):
                return True
        return False


def min_dimension(
    g: LabeledGraph,
    variant: Variant | str,
    cap: int | None = None,
    certify: bool = True,
    require_independent: bool = False,
    *,
    dm: DistanceMatrix | None = None,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    prune: bool = True,
    trust_lower_bounds: bool = True,
    start: int | None = None,
) -> DimensionResult:
    """Smallest resolving set by exhaustive lexicographic search.

    Sizes are tried upward from the variant's lower bound (or from 1 when
    ``trust_lower_bounds`` is false). The witness is the lexicographically
    smallest accepted subset of the minimal size. With ``certify=False`` a
    ``start`` size may be given to skip refutation of smaller sizes; the result
    is then marked uncertified.

    Refutation always ranges over all subsets; ``require_independent`` only
    restricts which resolving subsets are accepted as witnesses.
    """
    variant = Variant.parse(variant)
    t0 = time.perf_counter()
    if g.n < 2:
        raise GraphError("need a graph with at least two vertices")
    if dm is None:
        dm = all_pairs_distances(g)
    lb = lower_bound(g, variant) if trust_lower_bounds else 1
    cap = g.n if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be >= 1")
    first_size = lb
    if not certify and start is not None:
        first_size = max(1, start)
    table = distance_table(g, dm, variant)
    searcher = _Searcher(g, table, variant is Variant.MULTISET, prune, require_independent)
    stats = SearchStats()
    refuted: list[int] = []
    dependent_only: list[int] = []
    witness = None
    value = None
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for k in range(first_size, min(cap, g.n) + 1):
            total = math.comb(g.n, k)
            if total > budget:
                raise SearchBudgetExceeded(k, total, budget)
            outcomes = _scan_size(searcher, g.n, k, pool, threads)
            tested = sum(o.tested for o in outcomes)
            pruned = sum(o.pruned for o in outcomes)
            stats.tested += tested
            stats.pruned += pruned
            stats.per_size[k] = {"tested": tested, "pruned": pruned, "total": total}
            hit = next((o.witness for o in outcomes if o.witness is not None), None)
            if hit is not None:
                witness, value = hit, k
                break
            if any(o.dependent_resolving for o in outcomes):
                dependent_only.append(k)
            else:
                refuted.append(k)
    finally:
        if pool is not None:
            pool.shutdown()
    expected = list(range(lb, (value if value is not None else min(cap, g.n) + 1)))
    certified = refuted == expected
    stats.elapsed = time.perf_counter() - t0
    return DimensionResult(
        variant=variant,
        value=value,
        witness=witness,
        certified=certified,
        lower_bound=lb,
        cap=cap,
        refuted_sizes=refuted,
        require_independent=require_independent,
        dependent_only_sizes=dependent_only,
        stats=stats,
    )


def _scan_size(searcher: _Searcher, n: int, k: int, pool, threads: int) -> list[_ScanOutcome]:
    """Scan every k-subset grouped by smallest element; keep outcomes up to the first witness.

    The kept list is the same for any thread count, so results and counters
    match the single-threaded run.
    """
    firsts = range(0, n - k + 1)
    kept: list[_ScanOutcome] = []
    if pool is None:
        for f in firsts:
            o = searcher.scan(k, f)
            kept.append(o)
            if o.witness is not None:
                break
        return kept
    wave = max(1, threads)
    fs = list(firsts)
    for s in range(0, len(fs), wave):
        chunk = fs[s : s + wave]
        for o in pool.map(lambda f: searcher.scan(k, f), chunk):
            kept.append(o)
            if o.witness is not None:
                return kept
    return kept


def refute_all(g: LabeledGraph, variant: Variant | str, k: int, dm: DistanceMatrix | None = None) -> bool:
    """Brute force without pruning or vectorization: True iff no k-subset resolves."""
    from itertools import combinations

    dm = all_pairs_distances(g) if dm is None else dm
    return not any(is_resolving(g, dm, s, variant)[0] for s in combinations(range(g.n), k))
