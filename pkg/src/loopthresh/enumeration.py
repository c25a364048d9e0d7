"""Exhaustive graph enumeration and canonical forms for small orders."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator

from .errors import InstanceTooLarge
from .graph import Graph, ThresholdCode, decode_threshold, iter_bits, lex_pairs

CLASSES = ("all-labeled", "all-up-to-iso", "threshold-codes")
DEFAULT_LABELED_CAP = 5 * 10**6
DEFAULT_ISO_MAX_N = 8
ISO_HARD_MAX_N = 10


@dataclass(frozen=True)
class GraphClassSpec:
    n: int
    m: int
    cls: str = "all-labeled"

    def __post_init__(self):
        if self.cls not in CLASSES:
            raise ValueError(f"unknown graph class {self.cls!r}; expected one of {CLASSES}")
        if self.n < 0 or not 0 <= self.m <= comb(self.n, 2):
            raise ValueError(f"need 0 <= m <= C(n,2); got n={self.n}, m={self.m}")


def canonical_form(g: Graph) -> tuple[int, tuple]:
    """Lexicographically least adjacency string over all relabelings.

    The string lists, for positions ``j = 0..n-1``, the loop bit of the vertex
    at ``j`` followed by its adjacency to positions ``0..j-1``. Positions are
    filled one at a time keeping only partial labelings whose prefix is
    minimal; labelings that leave every unplaced vertex with the same view of
    the placed ones are merged, which keeps twin-heavy graphs cheap.
    """
    n = g.n
    adj = g.adj
    # state: (unplaced mask, sig) where sig[v] has bit (n-1-i) set when v is
    # adjacent to the vertex at position i, so integer order = string order.
    states = {(g.vertex_mask, (0,) * n)}
    blocks = []
    for j in range(n):
        best = None
        chosen = []
        for unplaced, sig in states:
            for v in iter_bits(unplaced):
                block = (g.loops >> v & 1, sig[v])
                if best is None or block < best:
                    best = block
                    chosen = [(unplaced, sig, v)]
                elif block == best:
                    chosen.append((unplaced, sig, v))
        blocks.append(best)
        bit = 1 << (n - 1 - j)
        nxt = set()
        for unplaced, sig, v in chosen:
            rest = unplaced & ~(1 << v)
            new_sig = list(sig)
            for u in iter_bits(adj[v] & rest):
                new_sig[u] |= bit
            # only the unplaced vertices' views matter from here on
            key_sig = tuple(new_sig[u] if rest >> u & 1 else 0 for u in range(n))
            nxt.add((rest, key_sig))
        states = nxt
    return n, tuple(blocks)


def from_canonical(form: tuple[int, tuple]) -> Graph:
    n, blocks = form
    edges = []
    loops = []
    for j, (lp, sig) in enumerate(blocks):
        if lp:
            loops.append(j)
        for i in range(j):
            if sig >> (n - 1 - i) & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges, loops)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or g1.loop_count != g2.loop_count:
        return False
    if sorted(map(g1.degree, range(g1.n))) != sorted(map(g2.degree, range(g2.n))):
        return False
    return canonical_form(g1) == canonical_form(g2)


def _labeled(n: int, m: int, cap: int) -> Iterator[Graph]:
    total = comb(comb(n, 2), m)
    if total > cap:
        raise InstanceTooLarge(f"C(C({n},2),{m}) = {total} labeled graphs exceeds cap {cap}")
    pairs = list(lex_pairs(n))
    for chosen in combinations(pairs, m):
        adj = [0] * n
        for u, v in chosen:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def iso_classes(n: int, m: int, *, max_n: int = DEFAULT_ISO_MAX_N) -> list[Graph]:
    """One canonically labeled representative per isomorphism class of G(n, m).

    Classes with ``m`` edges are grown from those with ``m - 1`` by adding each
    missing edge and canonicalizing; the sparser of ``m`` and its complement
    size is grown.
    """
    if n > min(max_n, ISO_HARD_MAX_N):
        raise InstanceTooLarge(f"isomorphism-class enumeration is capped at n <= {min(max_n, ISO_HARD_MAX_N)}")
    if not 0 <= m <= comb(n, 2):
        raise ValueError(f"need 0 <= m <= C(n,2); got n={n}, m={m}")
    if m > comb(n, 2) - m:
        forms = sorted(canonical_form(complement(from_canonical(f))) for f in _iso_layer(n, comb(n, 2) - m))
    else:
        forms = sorted(_iso_layer(n, m))
    return [from_canonical(f) for f in forms]


@lru_cache(maxsize=None)
def _iso_layer(n: int, m: int) -> frozenset:
    if m == 0:
        return frozenset({canonical_form(Graph(n, (0,) * n))})
    nxt = set()
    for form in _iso_layer(n, m - 1):
        g = from_canonical(form)
        for u, v in lex_pairs(n):
            if not g.has_edge(u, v):
                adj = list(g.adj)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                nxt.add(canonical_form(Graph(n, tuple(adj))))
    return frozenset(nxt)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def threshold_codes(n: int, m: int) -> list[ThresholdCode]:
    """Codes of length ``n-1`` whose graphs have exactly ``m`` edges."""
    if n < 1:
        return []
    out = []
    for x in range(1 << (n - 1)):
        bits = tuple(x >> i & 1 for i in range(n - 1))
        if sum(i + 1 for i, b in enumerate(bits) if b) == m:
            out.append(ThresholdCode(bits))
    return out


def enumerate_graphs(spec: GraphClassSpec, *, cap: int = DEFAULT_LABELED_CAP,
                     iso_max_n: int = DEFAULT_ISO_MAX_N) -> Iterator[Graph]:
    if spec.cls == "all-labeled":
        return _labeled(spec.n, spec.m, cap)
    if spec.cls == "all-up-to-iso":
        return iter(iso_classes(spec.n, spec.m, max_n=iso_max_n))
    if spec.n == 0:
        return iter(())
    return (decode_threshold(c) for c in threshold_codes(spec.n, spec.m))
