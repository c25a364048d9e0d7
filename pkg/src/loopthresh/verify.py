"""Brute-force extremal searches and the theorem checks built on them.

Each ``verify_*`` returns a :class:`Verdict`; ``bool(verdict)`` is the pass flag
and ``verdict.counterexample`` holds the offending graph when one is found.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from .enumeration import GraphClassSpec, canonical_form, enumerate_graphs, from_canonical, threshold_codes
from .graph import H_IND, J, Graph, LoopThresholdCode, _as_loop_threshold, decode_loop_threshold, decode_threshold, empty_graph, encode_threshold, lex_graph, union
from .hom import hom_count, hom_count_threshold, ind_count, ind_profile, independence_poly_eval
from .lex import feasible_q_range

DEFAULT_WITNESS_CAP = 64
DEFAULT_LAMBDAS = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))


@dataclass
class ExtremalReport:
    max_value: int
    witnesses: list[Graph]
    image: Graph
    overflow: bool = False
    examined: int = 0

    @property
    def witness_forms(self) -> set:
        return {canonical_form(g) for g in self.witnesses}


@dataclass
class Verdict:
    passed: bool
    counterexample: Graph | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _value_fn(h: Graph) -> Callable[[Graph], int]:
    if h == H_IND:
        return ind_count
    return lambda g: hom_count(g, h)


def max_hom_over_class(spec: GraphClassSpec, h: Graph, *, collect_witnesses: bool = True,
                       witness_cap: int = DEFAULT_WITNESS_CAP) -> ExtremalReport:
    """Maximum of ``hom(G, h)`` over the class and its maximisers up to isomorphism.

    Threshold sources are counted with the subset DP when ``h`` is small
    enough. Distinct witnesses beyond ``witness_cap`` set ``overflow``.
    """
    best = -1
    forms: dict = {}
    overflow = False
    examined = 0
    if spec.cls == "threshold-codes" and h.n <= 20:
        items: Iterable = ((c, lambda c=c: decode_threshold(c)) for c in threshold_codes(spec.n, spec.m))
        value = lambda c: hom_count_threshold(c, h)  # noqa: E731
    else:
        items = ((g, lambda g=g: g) for g in enumerate_graphs(spec))
        value = _value_fn(h)
    for item, build in items:
        examined += 1
        v = value(item)
        if v > best:
            best = v
            forms = {}
            overflow = False
        if v == best and collect_witnesses and not overflow:
            f = canonical_form(build())
            if f not in forms:
                if len(forms) >= witness_cap:
                    overflow = True
                else:
                    forms[f] = None
    witnesses = [from_canonical(f) for f in sorted(forms)]
    return ExtremalReport(best, witnesses, h, overflow, examined)


def verify_lex_extremal(n: int, m: int) -> Verdict:
    """``L(n, m)`` is the unique maximiser of the number of independent sets."""
    rep = max_hom_over_class(GraphClassSpec(n, m), H_IND)
    lex = lex_graph(n, m)
    if rep.overflow:
        return Verdict(False, None, "witness cap exceeded; uniqueness undecided")
    if ind_count(lex) != rep.max_value:
        return Verdict(False, rep.witnesses[0], "lex graph is not a maximiser")
    if rep.witness_forms != {canonical_form(lex)}:
        other = next(g for g in rep.witnesses if canonical_form(g) != canonical_form(lex))
        return Verdict(False, other, "maximiser not isomorphic to the lex graph")
    return Verdict(True)


def verify_level_extremal(n: int, m: int, t: int | None = None) -> Verdict:
    """``i_t(G) <= i_t(L(n, m))`` for every ``G`` (all ``t`` when ``t`` is None).

    Only dominance is checked; ties are not examined here.
    """
    lex_prof = ind_profile(lex_graph(n, m))
    levels = range(n + 1) if t is None else [t]
    for g in enumerate_graphs(GraphClassSpec(n, m)):
        prof = ind_profile(g)
        for s in levels:
            if prof[s] > lex_prof[s]:
                return Verdict(False, g, f"i_{s} exceeds the lex value")
    return Verdict(True)


def verify_wtd_extremal(n: int, m: int, lambdas: Iterable = DEFAULT_LAMBDAS) -> Verdict:
    lambdas = [Fraction(x) for x in lambdas]
    lex = lex_graph(n, m)
    lex_vals = [independence_poly_eval(lex, x) for x in lambdas]
    for g in enumerate_graphs(GraphClassSpec(n, m)):
        prof = ind_profile(g)
        for x, bound in zip(lambdas, lex_vals):
            val = sum((c * x**s for s, c in enumerate(prof)), Fraction(0))
            if val > bound:
                return Verdict(False, g, f"P_G({x}) exceeds the lex value")
    return Verdict(True)


def verify_threshold_sufficiency(n: int, m: int, h_code) -> Verdict:
    """Some threshold graph attains the maximum of ``hom(., H)`` over G(n, m)."""
    h = decode_loop_threshold(h_code)
    thr = max_hom_over_class(GraphClassSpec(n, m, "threshold-codes"), h, collect_witnesses=False)
    best = -1
    arg = None
    for g in enumerate_graphs(GraphClassSpec(n, m)):
        v = hom_count(g, h)
        if v > best:
            best, arg = v, g
    if best != thr.max_value:
        return Verdict(False, arg, f"all-graph maximum {best} vs threshold maximum {thr.max_value}")
    return Verdict(True)


def r_graph(n: int, q: int, m: int) -> Graph:
    """``L(q, m)`` plus ``n - q`` isolated vertices."""
    return union(lex_graph(q, m), empty_graph(n - q))


def verify_J_composition(n: int, m: int) -> Verdict:
    """Every J-maximising threshold graph is ``L(q, m) ∪ E_(n-q)`` for a feasible ``q``."""
    best = -1
    winners = []
    for c in threshold_codes(n, m):
        v = hom_count_threshold(c, J)
        if v > best:
            best, winners = v, [c]
        elif v == best:
            winners.append(c)
    # threshold graphs are determined up to isomorphism by their code
    allowed = {encode_threshold(r_graph(n, q, m)) for q in feasible_q_range(n, m) if q >= 1}
    for c in winners:
        if c not in allowed:
            return Verdict(False, decode_threshold(c), f"extremal code {c.display()} is not a lex graph plus isolates")
    return Verdict(True)


SUITES = ("lex", "level", "wtd", "thrtothr", "j-composition")


@dataclass
class SuiteReport:
    suite: str
    params: dict
    passed: bool
    checked: int = 0
    counterexample: dict | None = None
    failure: dict | None = field(default=None)

    def to_dict(self) -> dict:
        d = {"suite": self.suite, "params": self.params, "passed": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.failure is not None:
            d["failure"] = self.failure
        return d


def run_suite(suite: str, max_n: int, *, images: list[LoopThresholdCode] | None = None,
              lambdas: Iterable = DEFAULT_LAMBDAS, min_n: int = 1) -> SuiteReport:
    """Run one verification suite over every ``(n, m)`` with ``min_n <= n <= max_n``."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    lambdas = [Fraction(x) for x in lambdas]
    params: dict = {"min_n": min_n, "max_n": max_n}
    if suite == "wtd":
        params["lambdas"] = [str(x) for x in lambdas]
    if suite == "thrtothr":
        images = images or []
        params["images"] = [_as_loop_threshold(c).display() for c in images]
    checked = 0
    for n in range(min_n, max_n + 1):
        m_lo = 1 if suite == "j-composition" else 0
        for m in range(m_lo, comb(n, 2) + 1):
            if suite == "thrtothr":
                cases = [(c, lambda c=c: verify_threshold_sufficiency(n, m, c)) for c in images]
            elif suite == "lex":
                cases = [(None, lambda: verify_lex_extremal(n, m))]
            elif suite == "level":
                cases = [(None, lambda: verify_level_extremal(n, m))]
            elif suite == "wtd":
                cases = [(None, lambda: verify_wtd_extremal(n, m, lambdas))]
            else:
                cases = [(None, lambda: verify_J_composition(n, m))]
            for code, run in cases:
                verdict = run()
                checked += 1
                if not verdict:
                    failure = {"n": n, "m": m, "detail": verdict.detail}
                    if code is not None:
                        failure["image"] = _as_loop_threshold(code).display()
                    cx = verdict.counterexample.to_dict() if verdict.counterexample is not None else None
                    return SuiteReport(suite, params, False, checked, cx, failure)
    return SuiteReport(suite, params, True, checked)
