import itertools
import os
import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from ilth import Hypergraph

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def hypergraphs(draw, k=None, max_n=9, max_m=12, min_m=0):
    """Small simple k-uniform hypergraphs (possibly with isolated vertices)."""
    k = draw(st.integers(2, 4)) if k is None else k
    n = draw(st.integers(k, max_n))
    pool = list(itertools.combinations(range(n), k))
    picks = draw(st.lists(st.sampled_from(pool), min_size=min(min_m, len(pool)),
                          max_size=min(max_m, len(pool)), unique=True))
    return Hypergraph.from_edges(k, n, picks)


def random_hypergraph(rng: random.Random, k: int, n: int, m: int) -> Hypergraph:
    pool = list(itertools.combinations(range(n), k))
    return Hypergraph.from_edges(k, n, rng.sample(pool, min(m, len(pool))))


def connected_fixture(rng: random.Random, k: int, n_edges: int) -> Hypergraph:
    """Connected hypergraph without isolated vertices, grown edge by edge."""
    edges = [tuple(range(k))]
    n = k
    while len(edges) < n_edges:
        anchor = rng.choice(edges)
        keep = rng.randint(1, k - 1)
        shared = rng.sample(anchor, keep)
        pool = list(range(n))
        extra_old = rng.randint(0, k - keep)
        others = [v for v in pool if v not in shared]
        chosen = rng.sample(others, min(extra_old, len(others)))
        fresh = k - keep - len(chosen)
        new = tuple(sorted(shared + chosen + list(range(n, n + fresh))))
        if new not in edges:
            edges.append(new)
            n += fresh
    return Hypergraph.from_edges(k, n, edges)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])
