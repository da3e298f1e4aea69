"""Fixture generators shared by the orderability tests."""

from __future__ import annotations

import random
from itertools import product
from typing import Iterator, List, Tuple

from lensjones.orderability import (
    BipartiteMultigraph,
    Edge,
    HeegaardDiagram,
    lens_diagram,
    relabel,
    stabilize,
)

# (plus points, minus points) on one alpha/beta pair, at most ``cap`` in total
def pair_patterns(cap: int) -> List[Tuple[int, int]]:
    return [(a, b) for a in range(cap + 1) for b in range(cap + 1 - a)]


def diagram_from_patterns(genus: int, patterns) -> HeegaardDiagram:
    """``patterns[i][j] = (plus, minus)`` for alpha_i against beta_j."""
    beta = []
    for j in range(genus):
        circle = []
        for i in range(genus):
            plus, minus = patterns[i][j]
            circle += [(i, 1)] * plus + [(i, -1)] * minus
        beta.append(tuple(circle))
    return HeegaardDiagram(genus, tuple(beta))


def sign_pattern_diagrams(max_genus: int = 2, cap: int = 6) -> Iterator[HeegaardDiagram]:
    """Every sign multiset on every alpha/beta pair, genus 1 and 2."""
    pats = pair_patterns(cap)
    for g in range(1, max_genus + 1):
        for choice in product(pats, repeat=g * g):
            grid = [choice[i * g:(i + 1) * g] for i in range(g)]
            yield diagram_from_patterns(g, grid)


def stabilized_sphere(k: int, rng: random.Random) -> HeegaardDiagram:
    """The genus-1 sphere diagram stabilized ``k`` times with random extra crossings."""
    H = lens_diagram(1)
    for _ in range(k):
        g = H.genus
        extra = [(rng.randrange(g), rng.choice((1, -1))) for _ in range(rng.randrange(4))]
        H = stabilize(H, extra, leaf_side=rng.choice("AB"), rng=rng)
        ap = list(range(H.genus))
        bp = list(range(H.genus))
        rng.shuffle(ap)
        rng.shuffle(bp)
        H = relabel(H, ap, bp)
    return H


def leafless_graph(size: int, rng: random.Random):
    """A random bipartite multigraph of minimum degree 2 with a planted perfect matching."""
    perm = list(range(size))
    rng.shuffle(perm)
    mu = [Edge(a, perm[a], 1, ("mu", a)) for a in range(size)]
    extra: List[Edge] = []
    deg_a = [1] * size
    deg_b = [1] * size
    n = 0
    while min(deg_a) < 2 or min(deg_b) < 2 or rng.random() < 0.3:
        a = rng.randrange(size) if min(deg_a) >= 2 else deg_a.index(1)
        b = rng.randrange(size) if min(deg_b) >= 2 else deg_b.index(1)
        extra.append(Edge(a, b, rng.choice((1, -1)), ("x", n)))
        n += 1
        deg_a[a] += 1
        deg_b[b] += 1
    edges = mu + extra
    rng.shuffle(edges)
    return BipartiteMultigraph(size, tuple(edges)), tuple(mu)
