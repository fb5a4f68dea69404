"""Graph homomorphisms and induced embeddings into ILTH 2-sections.

A graph ``G`` with a homomorphism ``f`` into the 2-section of ``H_0`` embeds
as an induced subgraph of the 2-section of some ``H_t``. ``embed`` builds
that embedding one generation at a time: first collisions ``f(u) = f(v)``
are split by sending one vertex to the clone, then every non-edge of ``G``
whose image is an edge is erased by moving both endpoints to their clones.

In generation ``i`` the clone of ``x`` is ``x + 2**i * n0``, and in the
2-section a clone is adjacent exactly to the neighbours of its parent.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Sequence

from .hypergraph import Graph, Hypergraph, Lineage, project_to_initial, two_section

DEFAULT_BUDGET = 10**8


class BudgetExhausted(RuntimeError):
    """The search hit its node budget before reaching a verdict."""


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class VertexMap:
    image: tuple[int, ...]
    injective: bool = False
    induced: bool = False

    @property
    def domain_size(self) -> int:
        return len(self.image)

    def __getitem__(self, u: int) -> int:
        return self.image[u]

    @classmethod
    def of(cls, image: Sequence[int], g: Graph | None = None, host: Graph | None = None) -> "VertexMap":
        """Wrap ``image`` and compute the flags (``induced`` needs both graphs)."""
        image = tuple(int(x) for x in image)
        injective = len(set(image)) == len(image)
        induced = bool(injective and g is not None and host is not None and verify_embedding(g, host, image))
        return cls(image, injective, induced)

    def as_dict(self) -> dict:
        return {"image": list(self.image), "injective": self.injective, "induced": self.induced}


def _image(m: VertexMap | Sequence[int]) -> tuple[int, ...]:
    return m.image if isinstance(m, VertexMap) else tuple(m)


def is_homomorphism(g: Graph, target: Graph, m: VertexMap | Sequence[int]) -> bool:
    img = _image(m)
    if len(img) != g.n or any(not 0 <= x < target.n for x in img):
        return False
    return all(target.has_edge(img[u], img[v]) for u, v in g.edges())


def find_homomorphism(g: Graph, target: Graph, budget: int = DEFAULT_BUDGET) -> VertexMap | None:
    """Backtracking search; ``None`` means no homomorphism exists.

    Vertices are assigned in degree-descending order and each candidate must
    be adjacent to the images of all already assigned neighbours. Raises
    ``BudgetExhausted`` after ``budget`` search nodes.
    """
    if g.n == 0:
        return VertexMap((), True, False)
    if target.n == 0:
        return None
    order = sorted(range(g.n), key=lambda u: (-len(g.adjacency[u]), u))
    position = {u: i for i, u in enumerate(order)}
    earlier = [[w for w in g.adjacency[u] if position[w] < position[u]] for u in order]
    everyone = range(target.n)
    nbrs = target.neighbor_sets
    image = [-1] * g.n
    nodes = 0

    def candidates(i: int):
        back = earlier[i]
        if not back:
            return everyone
        pool = set(nbrs[image[back[0]]])
        for w in back[1:]:
            pool &= nbrs[image[w]]
            if not pool:
                break
        return sorted(pool)

    # explicit stack of candidate iterators avoids recursion limits
    stack = [iter(candidates(0))]
    while stack:
        i = len(stack) - 1
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            image[order[i]] = -1
            continue
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"gave up after {budget} search nodes")
        image[order[i]] = nxt
        if i + 1 == g.n:
            return VertexMap.of(image)
        stack.append(iter(candidates(i + 1)))
    return None


def verify_embedding(g: Graph, host: Graph, m: VertexMap | Sequence[int]) -> bool:
    """True iff ``m`` is injective and ``uv`` is an edge of ``g`` exactly when its image is."""
    img = _image(m)
    if len(img) != g.n or len(set(img)) != len(img):
        return False
    if any(not 0 <= x < host.n for x in img):
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) != host.has_edge(img[u], img[v]):
                return False
    return True


def adjacent_in_generation(base: Graph, t: int, a: int, b: int) -> bool:
    """Adjacency of ``a`` and ``b`` in the 2-section of ``H_t`` from the base 2-section alone."""
    for gen in range(t, 0, -1):
        half = base.n << (gen - 1)
        a_clone, b_clone = a >= half, b >= half
        if a_clone and b_clone:
            return False
        if a_clone:
            a -= half
        elif b_clone:
            b -= half
        if a == b:
            return False
    return a != b and base.has_edge(a, b)


@dataclass(frozen=True)
class EmbeddingStep:
    generation: int
    phase: int  # 1 splits a collision, 2 erases a spurious edge
    moved: tuple[int, ...]
    image: tuple[int, ...]
    collisions: int
    spurious: int


def _collision_count(image: Sequence[int]) -> int:
    return len(image) - len(set(image))


def _spurious(g: Graph, base: Graph, t: int, image: Sequence[int]) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v) and adjacent_in_generation(base, t, image[u], image[v])
    ]


def embedding_steps(g: Graph, h0: Hypergraph, f: VertexMap | Sequence[int]) -> Iterator[EmbeddingStep]:
    """Yield the state after every generation of the construction."""
    base = two_section(h0)
    image = list(_image(f))
    if not is_homomorphism(g, base, image):
        raise EmbeddingError("f is not a homomorphism into the 2-section of h0")
    t = 0
    while True:
        classes: dict[int, list[int]] = defaultdict(list)
        for u, x in enumerate(image):
            classes[x].append(u)
        clashing = sorted(x for x, us in classes.items() if len(us) > 1)
        if not clashing:
            break
        x = clashing[0]
        mover = classes[x][1]
        image[mover] = x + (base.n << t)
        t += 1
        yield EmbeddingStep(t, 1, (mover,), tuple(image), _collision_count(image), -1)

    spurious = _spurious(g, base, t, image)
    while spurious:
        u, v = spurious[0]
        shift = base.n << t
        image[u] += shift
        image[v] += shift
        t += 1
        left = _spurious(g, base, t, image)
        if len(left) != len(spurious) - 1 or _collision_count(image):
            raise AssertionError("spurious-edge removal broke its invariant")
        spurious = left
        yield EmbeddingStep(t, 2, (u, v), tuple(image), 0, len(spurious))


def embed(g: Graph, h0: Hypergraph, f: VertexMap | Sequence[int]) -> tuple[int, VertexMap]:
    """Generation ``t`` and an induced embedding of ``g`` into the 2-section of ``H_t``."""
    t, image = 0, _image(f)
    for step in embedding_steps(g, h0, f):
        t, image = step.generation, step.image
    return t, VertexMap(tuple(image), True, True)


def project_map(m: VertexMap | Sequence[int], lineages: Sequence[Lineage]) -> VertexMap:
    """Compose a map into ``H_t`` with the ancestor projection down to ``H_0``."""
    return VertexMap.of([project_to_initial(lineages, x) for x in _image(m)])


def max_clique(g: Graph) -> tuple[int, ...]:
    """A maximum clique, by Bron-Kerbosch with pivoting."""
    nbrs = g.neighbor_sets
    best: tuple[int, ...] = ()

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        nonlocal best
        if not p and not x:
            if len(r) > len(best):
                best = tuple(sorted(r))
            return
        if len(r) + len(p) <= len(best):
            return
        pivot = max(p | x, key=lambda w: len(nbrs[w] & p))
        for v in sorted(p - nbrs[pivot]):
            expand(r + [v], p & nbrs[v], x & nbrs[v])
            p.discard(v)
            x.add(v)

    expand([], set(range(g.n)), set())
    return best
