"""Exact homomorphism counting.

Everything here is exact: counts are Python ints and weighted sums are
``fractions.Fraction``. Two independent routes are provided for threshold
sources (generic backtracking and a subset-state DP over the construction
sequence) so each can check the other.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Mapping, Sequence, Union

from .errors import InstanceTooLarge, PatternUnsupported
from .graph import (
    Graph,
    _as_loop_threshold,
    _as_threshold,
    clique_looped_split,
    count_isolates,
    iter_bits,
    popcount,
)

DEFAULT_MAX_WORK = 10**9
MAX_DP_IMAGE = 20

Rational = Union[int, Fraction]
Weighting = Union[Mapping[int, Rational], Sequence[Rational]]


def _search_order(g: Graph, comp: list[int]) -> list[int]:
    # Highest degree first, then whichever vertex sees the most already-placed
    # neighbours, so candidate sets shrink as early as possible.
    remaining = set(comp)
    start = max(comp, key=lambda v: (g.degree(v), -v))
    order = [start]
    placed = 1 << start
    remaining.discard(start)
    while remaining:
        v = max(remaining, key=lambda u: (popcount(g.adj[u] & placed), g.degree(u), -u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def _weights_list(h: Graph, beta: Weighting | None) -> list[Fraction] | None:
    if beta is None:
        return None
    if isinstance(beta, Mapping):
        w = [Fraction(beta.get(x, 1)) for x in range(h.n)]
    else:
        if len(beta) != h.n:
            raise ValueError("weighting must give one weight per image vertex")
        w = [Fraction(b) for b in beta]
    if any(x < 0 for x in w):
        raise ValueError("weights must be nonnegative")
    return w


def _component_sum(g: Graph, h: Graph, comp: list[int], weights, budget: list[int]):
    order = _search_order(g, comp)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[u] for u in iter_bits(g.adj[v]) if pos[u] < i] for i, v in enumerate(order)]
    looped = [g.is_looped(v) for v in order]
    hnb = [h.hom_neighbourhood(x) for x in range(h.n)]
    full = h.vertex_mask
    hloops = h.loops
    last = len(order) - 1
    assign = [0] * len(order)

    def leaf_value(cand: int):
        if weights is None:
            return popcount(cand)
        return sum((weights[x] for x in iter_bits(cand)), Fraction(0))

    def rec(i: int):
        budget[0] -= 1
        if budget[0] < 0:
            raise InstanceTooLarge("homomorphism search exceeded its work bound")
        cand = full
        for p in back[i]:
            cand &= hnb[assign[p]]
        if looped[i]:
            cand &= hloops
        if i == last:
            return leaf_value(cand)
        total = 0
        for x in iter_bits(cand):
            assign[i] = x
            sub = rec(i + 1)
            if sub:
                total += sub if weights is None else weights[x] * sub
        return total

    return rec(0)


def _hom_sum(g: Graph, h: Graph, weights, max_work: int):
    budget = [max_work]
    total = 1 if weights is None else Fraction(1)
    for comp in g.components():
        part = _component_sum(g, h, comp, weights, budget)
        if not part:
            return 0 if weights is None else Fraction(0)
        total *= part
    return total


def hom_count(g: Graph, h: Graph, *, max_work: int = DEFAULT_MAX_WORK) -> int:
    """Number of homomorphisms from ``g`` to ``h``.

    A looped vertex of ``g`` may only go to a looped vertex of ``h``. The count
    factors over connected components of ``g``; within a component, vertices are
    assigned by backtracking with bitset pruning. Raises
    :class:`InstanceTooLarge` once more than ``max_work`` search nodes are visited.
    """
    return _hom_sum(g, h, None, max_work)


def partition_function(g: Graph, h: Graph, beta: Weighting, *, max_work: int = DEFAULT_MAX_WORK) -> Fraction:
    """Sum over homomorphisms of the product of image-vertex weights."""
    return Fraction(_hom_sum(g, h, _weights_list(h, beta), max_work))


def hard_core_weights(lam: Rational) -> dict[int, Fraction]:
    """Weighting on ``H_IND`` putting ``lam`` on the unlooped vertex."""
    return {0: Fraction(lam), 1: Fraction(1)}


def hom_count_threshold(code, h: Graph) -> int:
    """Homomorphisms from the threshold graph of ``code`` into ``h`` by subset DP.

    Walks the construction sequence backwards. The state maps each allowed
    image set ``S`` (a bitset) to the number of ways to place the vertices
    already handled; every vertex still to come must land in ``S`` because all
    handled dominating vertices are adjacent to it.
    """
    bits = _as_threshold(code).bits
    if h.n > MAX_DP_IMAGE:
        raise InstanceTooLarge(f"subset DP supports images with at most {MAX_DP_IMAGE} vertices")
    hnb = [h.hom_neighbourhood(x) for x in range(h.n)]
    states = {h.vertex_mask: 1}
    for b in reversed(bits):
        nxt: dict[int, int] = {}
        if b:
            for s, c in states.items():
                for x in iter_bits(s):
                    t = s & hnb[x]
                    nxt[t] = nxt.get(t, 0) + c
        else:
            for s, c in states.items():
                nxt[s] = nxt.get(s, 0) + c * popcount(s)
        states = nxt
    return sum(c * popcount(s) for s, c in states.items())


def _require_loop_free(g: Graph) -> None:
    if g.loops:
        raise ValueError("independent sets are defined for loop-free graphs")


def ind_count(g: Graph, *, max_work: int = DEFAULT_MAX_WORK) -> int:
    """Number of independent sets, by branching on a maximum-degree vertex."""
    _require_loop_free(g)
    adj = g.adj
    memo: dict[int, int] = {}
    budget = [max_work]

    def count(rest: int) -> int:
        if rest in memo:
            return memo[rest]
        budget[0] -= 1
        if budget[0] < 0:
            raise InstanceTooLarge("independent-set count exceeded its work bound")
        best, best_deg = -1, 0
        for v in iter_bits(rest):
            d = popcount(adj[v] & rest)
            if d > best_deg:
                best, best_deg = v, d
        if best < 0:
            val = 1 << popcount(rest)
        else:
            val = count(rest & ~(1 << best)) + count(rest & ~(1 << best) & ~adj[best])
        memo[rest] = val
        return val

    return count(g.vertex_mask)


def ind_profile(g: Graph, *, max_work: int = DEFAULT_MAX_WORK) -> list[int]:
    """``[i_0, ..., i_n]`` where ``i_t`` counts independent sets of size ``t``."""
    _require_loop_free(g)
    adj = g.adj
    n = g.n
    memo: dict[int, list[int]] = {}
    budget = [max_work]

    def prof(rest: int) -> list[int]:
        if rest in memo:
            return memo[rest]
        budget[0] -= 1
        if budget[0] < 0:
            raise InstanceTooLarge("independent-set profile exceeded its work bound")
        best, best_deg = -1, 0
        for v in iter_bits(rest):
            d = popcount(adj[v] & rest)
            if d > best_deg:
                best, best_deg = v, d
        if best < 0:
            r = popcount(rest)
            val = [comb(r, t) for t in range(n + 1)]
        else:
            without = prof(rest & ~(1 << best))
            with_v = prof(rest & ~(1 << best) & ~adj[best])
            val = [without[t] + (with_v[t - 1] if t else 0) for t in range(n + 1)]
        memo[rest] = val
        return val

    return list(prof(g.vertex_mask))


def independence_poly_eval(g: Graph, lam: Rational) -> Fraction:
    lam = Fraction(lam)
    total = Fraction(0)
    for c in reversed(ind_profile(g)):
        total = total * lam + c
    return total


def closed_form_pattern(code) -> tuple[str, int, int]:
    """Classify a loop-threshold code as ``zeros`` (0^q), ``ones`` (1^p) or
    ``zeros_ones`` (0^q 1^p, written form) and return ``(kind, p, q)``."""
    disp = _as_loop_threshold(code).display()
    if not disp:
        raise PatternUnsupported("empty code")
    p = len(disp) - len(disp.rstrip("1"))
    q = len(disp) - p
    if disp != "0" * q + "1" * p:
        raise PatternUnsupported(f"no closed form for code {disp}")
    if p == 0:
        return "zeros", 0, q
    if q == 0:
        return "ones", p, 0
    return "zeros_ones", p, q


def hom_closed_forms(g: Graph, code) -> int:
    """Count homomorphisms into a ``0^q``, ``1^p`` or ``0^q 1^p`` image without search.

    Isolated vertices of ``g`` may go anywhere; every other vertex must land on
    one of the ``p`` looped dominating vertices.
    """
    _require_loop_free(g)
    kind, p, q = closed_form_pattern(code)
    if kind == "zeros":
        return 0 if g.m else q**g.n
    if kind == "ones":
        return p**g.n
    c = count_isolates(g)
    return (p + q) ** c * p ** (g.n - c)


def s_circ_identity_terms(g: Graph, p: int, q: int) -> int:
    """``sum_t i_t(g) q^t p^(n-t)``: independent sets go to the unlooped side."""
    prof = ind_profile(g)
    return sum(c * q**t * p ** (g.n - t) for t, c in enumerate(prof))


def s_circ_identity_check(g: Graph, p: int, q: int) -> bool:
    """Compare ``hom(g, S°(p,q))`` with ``p^n P_g(q/p)`` cleared of denominators."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    return hom_count(g, clique_looped_split(p, q)) == s_circ_identity_terms(g, p, q)


__all__ = [
    "DEFAULT_MAX_WORK",
    "closed_form_pattern",
    "hard_core_weights",
    "hom_closed_forms",
    "hom_count",
    "hom_count_threshold",
    "ind_count",
    "ind_profile",
    "independence_poly_eval",
    "partition_function",
    "s_circ_identity_check",
    "s_circ_identity_terms",
]
