"""Brute-force reference implementations used only by the tests.

Nothing here shares code with the package beyond the ``Graph`` container:
homomorphisms are counted over every map, independent sets over every subset,
and isomorphism over every permutation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations, product

from hypothesis import strategies as st

from loopthresh.graph import Graph


def pairs(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1]


def looped(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.loops >> v & 1]


def _h_edge(h: Graph, a: int, b: int) -> bool:
    if a == b:
        return bool(h.loops >> a & 1)
    return bool(h.adj[a] >> b & 1)


def brute_hom(g: Graph, h: Graph, beta=None):
    """Sum over all ``|V(h)|^|V(g)|`` maps of the product of vertex weights."""
    es = pairs(g)
    ls = looped(g)
    total = 0 if beta is None else Fraction(0)
    for phi in product(range(h.n), repeat=g.n):
        if all(_h_edge(h, phi[u], phi[v]) for u, v in es) and all(_h_edge(h, phi[v], phi[v]) for v in ls):
            if beta is None:
                total += 1
            else:
                w = Fraction(1)
                for x in phi:
                    w *= Fraction(beta[x])
                total += w
    return total


def brute_ind_profile(g: Graph) -> list[int]:
    """Test every vertex subset: a set is independent when no member sees another."""
    prof = [0] * (g.n + 1)
    adj = g.adj
    for mask in range(1 << g.n):
        if all(not (mask >> v & 1 and adj[v] & mask) for v in range(g.n)):
            prof[bin(mask).count("1")] += 1
    return prof


def brute_ind_count(g: Graph) -> int:
    return sum(brute_ind_profile(g))


def edge_set(g: Graph) -> frozenset:
    return frozenset(frozenset(e) for e in pairs(g))


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    e2 = edge_set(g2)
    l2 = set(looped(g2))
    for perm in permutations(range(g1.n)):
        if {perm[v] for v in looped(g1)} == l2 and all(frozenset((perm[u], perm[v])) in e2 for u, v in pairs(g1)):
            return True
    return False


def brute_canonical(g: Graph) -> tuple:
    """Smallest sorted edge list over all relabelings (loop-free graphs)."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in pairs(g)))
        if best is None or key < best:
            best = key
    return best


def all_labeled(n: int, m: int):
    all_pairs = list(combinations(range(n), 2))
    for chosen in combinations(all_pairs, m):
        yield Graph.from_edges(n, chosen)


def brute_iso_count(n: int, m: int) -> int:
    return len({brute_canonical(g) for g in all_labeled(n, m)})


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 6, loops: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    all_pairs = list(combinations(range(n), 2))
    chosen = [e for e in all_pairs if draw(st.booleans())]
    lp = [v for v in range(n) if draw(st.booleans())] if loops else []
    return Graph.from_edges(n, chosen, lp)


def codes(max_len: int, min_len: int = 0):
    return st.integers(min_len, max_len).flatmap(
        lambda k: st.tuples(*[st.integers(0, 1)] * k) if k else st.just(())
    )
