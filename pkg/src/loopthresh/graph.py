"""Graphs as adjacency bitsets, threshold codes, and the lex/colex/split families.

Vertices are ``0..n-1``. ``adj[v]`` is an int bitset of the neighbours of ``v``
(never containing ``v`` itself); looped vertices are recorded separately in the
``loops`` bitset. Python ints are unbounded, so the same representation serves
any order.

Codes are stored in construction order (first-built vertex first). The usual
written form reads right to left, so ``ThresholdCode.parse`` and
``ThresholdCode.display`` reverse at the boundary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb, isqrt
from typing import Iterable, Iterator, Sequence

from .errors import NotThreshold


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    loops: int = 0

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        if self.loops & ~full:
            raise ValueError("loop outside vertex range")
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside the vertex range")
            if nb >> v & 1:
                raise ValueError("self-adjacency must be expressed as a loop")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = (), loops: Iterable[int] = ()) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("use loops= for self-adjacency")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        lp = 0
        for v in loops:
            if not 0 <= v < n:
                raise ValueError(f"loop {v} out of range for n={n}")
            lp |= 1 << v
        return cls(n, tuple(adj), lp)

    @property
    def m(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    @property
    def loop_count(self) -> int:
        return popcount(self.loops)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_looped(self, v: int) -> bool:
        return bool(self.loops >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def hom_neighbourhood(self, v: int) -> int:
        """Vertices ``x`` with ``vx`` an edge of the image, counting a loop at ``v``."""
        return self.adj[v] | (self.loops & (1 << v))

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(list(iter_bits(comp)))
        return out

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()], "loops": list(iter_bits(self.loops))}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> Graph:
        try:
            n = int(d["n"])
            edges = [(int(u), int(v)) for u, v in d.get("edges", [])]
            loops = [int(v) for v in d.get("loops", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from exc
        return cls.from_edges(n, edges, loops)

    @classmethod
    def from_json(cls, text: str) -> Graph:
        return cls.from_dict(json.loads(text))


def _parse_bits(s: str) -> tuple[int, ...]:
    if any(c not in "01" for c in s):
        raise ValueError(f"code must contain only '0' and '1': {s!r}")
    return tuple(int(c) for c in reversed(s))


@dataclass(frozen=True)
class ThresholdCode:
    """Construction-order bits of a threshold graph; bit ``i`` belongs to vertex ``i+1``."""

    bits: tuple[int, ...] = ()

    @classmethod
    def parse(cls, display: str) -> ThresholdCode:
        return cls(_parse_bits(display))

    def display(self) -> str:
        return "".join(map(str, reversed(self.bits)))

    @property
    def n(self) -> int:
        return len(self.bits) + 1

    @property
    def m(self) -> int:
        return sum(i + 1 for i, b in enumerate(self.bits) if b)


@dataclass(frozen=True)
class LoopThresholdCode:
    """Construction-order bits of a loop-threshold graph; bit ``i`` belongs to vertex ``i``."""

    bits: tuple[int, ...]

    @classmethod
    def parse(cls, display: str) -> LoopThresholdCode:
        return cls(_parse_bits(display))

    def display(self) -> str:
        return "".join(map(str, reversed(self.bits)))

    @property
    def n(self) -> int:
        return len(self.bits)


def _as_threshold(code) -> ThresholdCode:
    if isinstance(code, ThresholdCode):
        return code
    if isinstance(code, str):
        return ThresholdCode.parse(code)
    return ThresholdCode(tuple(int(b) for b in code))


def _as_loop_threshold(code) -> LoopThresholdCode:
    if isinstance(code, LoopThresholdCode):
        return code
    if isinstance(code, str):
        return LoopThresholdCode.parse(code)
    return LoopThresholdCode(tuple(int(b) for b in code))


def decode_threshold(code) -> Graph:
    """Build the threshold graph of ``code``.

    ``code`` may be a :class:`ThresholdCode`, a display string, or a sequence
    of construction-order bits. Vertex ``i`` (``i >= 1``) with bit 1 is joined to
    every vertex ``0..i-1``.
    """
    bits = _as_threshold(code).bits
    n = len(bits) + 1
    adj = [0] * n
    for i, b in enumerate(bits, start=1):
        if b:
            adj[i] = (1 << i) - 1
            for u in range(i):
                adj[u] |= 1 << i
    return Graph(n, tuple(adj))


def decode_loop_threshold(code) -> Graph:
    bits = _as_loop_threshold(code).bits
    if not bits:
        raise ValueError("loop-threshold code must have at least one bit")
    n = len(bits)
    adj = [0] * n
    loops = 0
    for i, b in enumerate(bits):
        if b:
            loops |= 1 << i
            adj[i] = (1 << i) - 1
            for u in range(i):
                adj[u] |= 1 << i
    return Graph(n, tuple(adj), loops)


def peel_threshold(g: Graph) -> tuple[ThresholdCode, list[int]]:
    """Return the code of ``g`` and the construction order of its vertices."""
    if g.loops:
        raise ValueError("threshold recognition needs a loop-free graph")
    if g.n == 0:
        raise NotThreshold("the empty graph has no threshold code")
    remaining = g.vertex_mask
    removed = []
    bits = []
    while popcount(remaining) > 1:
        size = popcount(remaining)
        for v in iter_bits(remaining):
            d = popcount(g.adj[v] & remaining)
            if d == 0 or d == size - 1:
                bits.append(1 if d else 0)
                removed.append(v)
                remaining &= ~(1 << v)
                break
        else:
            raise NotThreshold(f"no dominating or isolated vertex among {list(iter_bits(remaining))}")
    removed.append(next(iter_bits(remaining)))
    return ThresholdCode(tuple(reversed(bits))), removed[::-1]


def encode_threshold(g: Graph) -> ThresholdCode:
    return peel_threshold(g)[0]


def is_threshold(g: Graph) -> bool:
    try:
        peel_threshold(g)
    except NotThreshold:
        return False
    return True


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _check_size(n: int, m: int) -> None:
    if n < 0 or not 0 <= m <= comb(n, 2):
        raise ValueError(f"need 0 <= m <= C(n,2); got n={n}, m={m}")


def lex_pairs(n: int) -> Iterator[tuple[int, int]]:
    for u in range(n):
        for v in range(u + 1, n):
            yield u, v


def colex_pairs(n: int) -> Iterator[tuple[int, int]]:
    for v in range(n):
        for u in range(v):
            yield u, v


def lex_graph(n: int, m: int) -> Graph:
    _check_size(n, m)
    pairs = lex_pairs(n)
    return Graph.from_edges(n, (next(pairs) for _ in range(m)))


def colex_graph(n: int, m: int) -> Graph:
    _check_size(n, m)
    pairs = colex_pairs(n)
    return Graph.from_edges(n, (next(pairs) for _ in range(m)))


@dataclass(frozen=True)
class LexParams:
    n: int
    k: int
    w: int

    @property
    def m(self) -> int:
        return split_edge_count(self.n, self.k) + self.w

    @property
    def is_complete(self) -> bool:
        return self.n >= 1 and self.k == self.n - 1 and self.w == 0

    def validate(self) -> LexParams:
        n, k, w = self.n, self.k, self.w
        if n < 1 or k < 0:
            raise ValueError(f"invalid lex parameters {self}")
        if self.is_complete or 0 <= w <= n - k - 2:
            return self
        raise ValueError(f"invalid lex parameters {self}: need 0 <= w <= n-k-2")


def split_edge_count(n: int, k: int) -> int:
    return comb(k, 2) + k * (n - k)


def lex_decompose(n: int, m: int) -> LexParams:
    """Unique ``(k, w)`` with ``m = C(k,2) + k(n-k) + w`` and ``0 <= w <= n-k-2``.

    ``K_n`` falls outside that window and is returned as ``(n-1, 0)``.
    """
    _check_size(n, m)
    if n == 0:
        raise ValueError("lex decomposition needs n >= 1")
    if m == comb(n, 2):
        return LexParams(n, n - 1, 0)
    # e(S(n,k+1)) - e(S(n,k)) = n-k-1, so the w-windows tile [0, C(n,2)).
    # Largest k <= n-2 with e(S(n,k)) <= m: smaller root of k^2 - (2n-1)k + 2m.
    b = 2 * n - 1
    k = max(0, min(n - 2, (b - isqrt(b * b - 8 * m)) // 2))
    while k > 0 and split_edge_count(n, k) > m:
        k -= 1
    while k < n - 2 and split_edge_count(n, k + 1) <= m:
        k += 1
    return LexParams(n, k, m - split_edge_count(n, k))


def split_graph(n: int, k: int) -> Graph:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n; got n={n}, k={k}")
    clique = (1 << k) - 1
    full = (1 << n) - 1
    adj = [full & ~(1 << v) if v < k else clique for v in range(n)]
    return Graph(n, tuple(adj))


def lex_from_params(p: LexParams) -> Graph:
    """``S(n,k)`` plus a ``w``-edge star centred on vertex ``k``."""
    p.validate()
    if p.is_complete:
        return complete_graph(p.n)
    g = split_graph(p.n, p.k)
    star = [(p.k, p.k + 1 + i) for i in range(p.w)]
    return Graph.from_edges(p.n, g.edges() + star)


def clique_looped_split(p: int, q: int) -> Graph:
    """``K_p`` with every vertex looped, joined to ``E_q``; code ``1^p 0^q``."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    if p + q == 0:
        return empty_graph(0)
    return decode_loop_threshold((0,) * q + (1,) * p)


def union(g1: Graph, g2: Graph) -> Graph:
    s = g1.n
    adj = g1.adj + tuple(nb << s for nb in g2.adj)
    return Graph(g1.n + g2.n, adj, g1.loops | (g2.loops << s))


def join(g1: Graph, g2: Graph) -> Graph:
    s = g1.n
    left = (1 << s) - 1
    right = ((1 << g2.n) - 1) << s
    adj = tuple(nb | right for nb in g1.adj) + tuple((nb << s) | left for nb in g2.adj)
    return Graph(g1.n + g2.n, adj, g1.loops | (g2.loops << s))


def count_isolates(g: Graph) -> int:
    return sum(1 for v in range(g.n) if not g.adj[v] and not g.is_looped(v))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    return Graph.from_edges(
        g.n,
        [(perm[u], perm[v]) for u, v in g.edges()],
        [perm[v] for v in iter_bits(g.loops)],
    )


H_IND = decode_loop_threshold((0, 1))
J = decode_loop_threshold((0, 1, 0))
FOX = decode_loop_threshold((1, 0, 1))


def loop_threshold_codes(max_len: int) -> list[LoopThresholdCode]:
    """All loop-threshold codes of length ``1..max_len``, shortest first."""
    out = []
    for length in range(1, max_len + 1):
        for x in range(1 << length):
            out.append(LoopThresholdCode(tuple(x >> i & 1 for i in range(length))))
    return out
