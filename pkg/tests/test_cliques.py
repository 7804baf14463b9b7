from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from lambdasv.cliques import COMPILED_AVAILABLE, maximal_clique_histogram, split_tasks

backends = ["python"] + (["compiled"] if COMPILED_AVAILABLE else [])


@st.composite
def graphs(draw, max_n=40):
    n = draw(st.integers(0, max_n))
    density = draw(st.floats(0.05, 0.95))
    seed = draw(st.integers(0, 2**32 - 1))
    return nx.gnp_random_graph(n, density, seed=seed)


def to_rows(g: nx.Graph) -> list[int]:
    rows = [0] * g.number_of_nodes()
    for u, v in g.edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def oracle(g: nx.Graph) -> dict[int, int]:
    if g.number_of_nodes() == 0:
        return {0: 1}
    return dict(Counter(len(c) for c in nx.find_cliques(g)))


@pytest.mark.parametrize("backend", backends)
@settings(max_examples=60, deadline=None)
@given(g=graphs())
def test_matches_networkx(backend, g):
    n = g.number_of_nodes()
    assert maximal_clique_histogram(to_rows(g), n, backend=backend) == oracle(g)


@settings(max_examples=40, deadline=None)
@given(g=graphs(max_n=60))
def test_split_tasks_partition_the_search(g):
    n = g.number_of_nodes()
    rows = to_rows(g)
    full = maximal_clique_histogram(rows, n, backend="python")
    from lambdasv._cliques_py import CliqueKernel
    k = CliqueKernel(rows, n)
    total = Counter()
    for t in split_tasks(rows, n) if n else []:
        for size, c in enumerate(k.count(*t)):
            if c:
                total[size] += c
    assert (dict(total) if n else {0: 1}) == full


@pytest.mark.skipif(not COMPILED_AVAILABLE, reason="extension not built")
@pytest.mark.parametrize("threads", [2, 3, 8])
def test_compiled_thread_independence(threads):
    g = nx.gnp_random_graph(90, 0.6, seed=11)
    rows, n = to_rows(g), 90
    assert (maximal_clique_histogram(rows, n, threads=threads, backend="compiled")
            == maximal_clique_histogram(rows, n, threads=1, backend="compiled"))


def test_python_processes_agree():
    g = nx.gnp_random_graph(50, 0.5, seed=3)
    rows = to_rows(g)
    assert (maximal_clique_histogram(rows, 50, threads=2, backend="python")
            == oracle(g))


@pytest.mark.skipif(not COMPILED_AVAILABLE, reason="extension not built")
def test_compiled_handles_128_vertices():
    g = nx.gnp_random_graph(128, 0.3, seed=5)
    assert maximal_clique_histogram(to_rows(g), 128, backend="compiled") == oracle(g)


def test_unknown_backend():
    with pytest.raises(ValueError):
        maximal_clique_histogram([0], 1, backend="fortran")


@pytest.mark.parametrize("rows, n, expected", [
    ([0, 0, 0], 3, {1: 3}),
    ([0b110, 0b101, 0b011], 3, {3: 1}),
    ([0b10, 0b01, 0], 3, {2: 1, 1: 1}),
])
def test_tiny(rows, n, expected):
    for b in backends:
        assert maximal_clique_histogram(rows, n, backend=b) == expected


@pytest.mark.parametrize("env, expected", [("python", "python")]
                         + ([("compiled", "compiled"), ("", "compiled")] if COMPILED_AVAILABLE
                            else [("", "python")]))
def test_backend_selected_at_import(env, expected):
    import os
    import subprocess
    import sys

    out = subprocess.run([sys.executable, "-c", "import lambdasv.cliques as c; print(c.BACKEND)"],
                         env={**os.environ, "LAMBDASV_BACKEND": env}, capture_output=True,
                         text=True, check=True)
    assert out.stdout.strip() == expected
