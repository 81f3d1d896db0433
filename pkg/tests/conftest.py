import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from resolvset.graph import LabeledGraph, graph_from_edges


def to_nx(g: LabeledGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_distances(g: LabeledGraph) -> np.ndarray:
    """Independent distance oracle (networkx BFS)."""
    out = np.zeros((g.n, g.n), dtype=np.int64)
    for u, row in nx.all_pairs_shortest_path_length(to_nx(g)):
        for v, d in row.items():
            out[u, v] = d
    return out


def path_graph(n: int) -> LabeledGraph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle_graph(n: int) -> LabeledGraph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def naive_dimension(g: LabeledGraph, dm, variant: str) -> int:
    """Plain itertools search over all subsets, smallest size first."""
    from resolvset.resolvability import elements, code

    elems = elements(g, variant)
    for k in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            if variant == "multiset":
                keys = [tuple(sorted(code(dm, x, s))) for x in elems]
            else:
                keys = [code(dm, x, s) for x in elems]
            if len(set(keys)) == len(keys):
                return k
    return None


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Random connected simple graph: a random spanning tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    extra = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if extra:
        chosen = draw(st.lists(st.sampled_from(extra), max_size=min(len(extra), n), unique=True))
        edges.update(chosen)
    return graph_from_edges(n, sorted(edges))


@pytest.fixture(scope="session")
def hc444():
    from resolvset import build_hc

    return build_hc(4, 4, 4)


@pytest.fixture(scope="session")
def sp333():
    from resolvset import build_sp

    return build_sp(3, 3, 3)


def nx_element_table(g: LabeledGraph, variant: str) -> np.ndarray:
    """Rows = landmarks, columns = elements, from networkx distances only."""
    d = nx_distances(g)
    edges = np.array(sorted(tuple(sorted(e)) for e in to_nx(g).edges()), dtype=np.int64)
    et = np.minimum(d[:, edges[:, 0]], d[:, edges[:, 1]])
    if variant == "edge":
        return et
    if variant == "mixed":
        return np.concatenate([d, et], axis=1)
    return d


def nx_resolving_subsets(table: np.ndarray, k: int, multiset: bool = False, limit: int | None = None):
    """All k-subsets of rows whose columns are pairwise distinct (k in {2, 3}).

    The last landmark is vectorized: for each prefix, every candidate row is
    appended and uniqueness is tested by sorting.
    """
    n = table.shape[0]
    base = int(table.max()) + 1
    found = []
    for prefix in itertools.combinations(range(n), k - 1):
        last = np.arange(prefix[-1] + 1, n)
        if not len(last):
            continue
        stack = np.stack([np.broadcast_to(table[p], (len(last), table.shape[1])) for p in prefix]
                         + [table[last]], axis=-1)
        if multiset:
            stack = np.sort(stack, axis=-1)
        key = np.zeros(stack.shape[:2], dtype=np.int64)
        for i in range(k):
            key = key * base + stack[..., i]
        key.sort(axis=1)
        ok = ~(np.diff(key, axis=1) == 0).any(axis=1)
        for x in last[ok]:
            found.append(prefix + (int(x),))
            if limit and len(found) >= limit:
                return found
    return found


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
