"""Counting on lex graphs and the J-extremal lex-component problem.

A J-extremal threshold graph with ``n`` vertices and ``m >= 1`` edges is a lex
graph ``L(q, m)`` plus ``n - q`` isolated vertices, and
``j = 3^(n-q) * i(L(q, m))``. Choosing ``q`` is the whole problem; every
comparison between candidates is done in exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from .errors import PreconditionOutsideProof
from .graph import LexParams, lex_decompose

def lex_ind_closed(n: int, k: int, w: int) -> int:
    """Independent sets of ``L(n, k, w)``: ``2^(n-k-1) + 2^(n-k-w-1) + k``."""
    LexParams(n, k, w).validate()
    return (1 << (n - k - 1)) + (1 << (n - k - w - 1)) + k


def lex_ind(n: int, m: int) -> int:
    p = lex_decompose(n, m)
    return lex_ind_closed(p.n, p.k, p.w)


@lru_cache(maxsize=4096)
def _pow3(e: int) -> int:
    return 3**e


@dataclass(frozen=True)
class RParams:
    n: int
    q: int
    m: int

    def validate(self) -> RParams:
        n, q, m = self.n, self.q, self.m
        if m == 0 and 0 <= q <= min(n, 1):
            return self
        if m < 1 or not 2 <= q <= min(n, m + 1) or m > comb(q, 2):
            raise ValueError(f"infeasible lex component: n={n}, q={q}, m={m}")
        return self


def feasible_q_range(n: int, m: int) -> range:
    """Orders ``q`` with ``C(q,2) >= m`` and ``q <= min(n, m+1)``."""
    if m == 0:
        return range(0, 1)
    return range(min_order(m), min(n, m + 1) + 1)


def min_order(m: int) -> int:
    """Smallest ``q`` with ``C(q, 2) >= m``."""
    q = (1 + isqrt(1 + 8 * m)) // 2
    while comb(q, 2) < m:
        q += 1
    while q > 0 and comb(q - 1, 2) >= m:
        q -= 1
    return q


def j_of_R(n: int, q: int, m: int) -> int:
    """``hom(L(q,m) ∪ E_(n-q), J)``.

    For ``m = 0`` the graph is ``E_n`` and the count is ``3^n`` whatever ``q``.
    """
    RParams(n, q, m).validate()
    if m == 0:
        return _pow3(n)
    return _pow3(n - q) * lex_ind(q, m)


def _pruning_bound(q: int) -> int:
    # q <= m+1 forces k >= 1, hence i(L(q, m)) <= 2^(q-1) + k <= 2^(q-1) + q.
    # (2^(q-1) + q) / 3^q is decreasing, so the ceiling covers every larger q.
    return (1 << (q - 1)) + q


def extremal_q_set(n: int, m: int, *, full_window: bool = False) -> tuple[list[int], int]:
    """All feasible ``q`` maximising ``j_of_R(n, q, m)`` and the maximum itself.

    Candidates are scanned upward from the smallest feasible order. Unless
    ``full_window`` is set, the scan stops once the ceiling
    ``(2^(q-1) + q) / 3^q`` (decreasing in ``q``) falls strictly below the best
    ``i / 3^q`` seen, which cannot discard a maximiser.
    """
    if n < 1 or not 0 <= m <= comb(n, 2):
        raise ValueError(f"need 0 <= m <= C(n,2); got n={n}, m={m}")
    if m == 0:
        return [0], _pow3(n)
    best_q: list[int] = []
    best_i = 0
    for q in feasible_q_range(n, m):
        i = lex_ind(q, m)
        if best_q:
            bq = best_q[0]
            # i / 3^q versus best_i / 3^bq, cross-multiplied (q > bq)
            lhs = i
            rhs = best_i * _pow3(q - bq)
            if lhs > rhs:
                best_q, best_i = [q], i
            elif lhs == rhs:
                best_q.append(q)
            elif not full_window and _pruning_bound(q) < rhs:
                break
        else:
            best_q, best_i = [q], i
    return best_q, _pow3(n - best_q[0]) * best_i


@dataclass(frozen=True)
class EllRecord:
    m: int
    ell: int
    lower_ok: bool
    upper_ok: bool
    ratio: float = field(compare=False)

    def csv_row(self) -> list[str]:
        return [str(self.m), str(self.ell), str(self.lower_ok).lower(), str(self.upper_ok).lower(), f"{self.ratio:.6f}"]


ELL_HEADER = ["m", "ell", "lower_ok", "upper_ok", "ratio"]


def lower_bound_ok(m: int, ell_value: int) -> bool:
    """``ell >= (1 + sqrt(1 + 8m)) / 2`` in integer form."""
    return 2 * ell_value - 1 >= 0 and (2 * ell_value - 1) ** 2 >= 1 + 8 * m


def upper_bound_ok(m: int, ell_value: int) -> bool:
    """``ell <= (5 + sqrt(9 + 24m)) / 2`` in integer form."""
    return 2 * ell_value <= 5 or (2 * ell_value - 5) ** 2 <= 9 + 24 * m


def ell_value(m: int, *, full_window: bool = False) -> int:
    if m < 1:
        raise ValueError("ell(m) is defined for m >= 1")
    qs, _ = extremal_q_set(m + 1, m, full_window=full_window)
    return max(qs)


def ell(m: int, *, full_window: bool = False) -> EllRecord:
    """Largest lex-component order among J-extremal graphs with ``m+1`` vertices and ``m`` edges."""
    v = ell_value(m, full_window=full_window)
    return EllRecord(m, v, lower_bound_ok(m, v), upper_bound_ok(m, v), v / math.sqrt(m))


def ell_bounds_check(m: int) -> bool:
    r = ell(m)
    return r.lower_ok and r.upper_ok


def stability_check(m: int, n_max: int) -> bool:
    target = ell_value(m)
    if n_max < target:
        raise ValueError(f"n_max must be at least ell(m) = {target}")
    for n in range(target, n_max + 1):
        qs, _ = extremal_q_set(n, m)
        if target not in qs or max(qs) != target:
            return False
    return True


@dataclass(frozen=True)
class SweepRecord:
    n: int
    m: int
    q_star_set: tuple[int, ...]
    j_value: int

    @property
    def q_star_max(self) -> int:
        return max(self.q_star_set)

    def csv_row(self) -> list[str]:
        return [str(self.n), str(self.m), str(self.q_star_max), str(len(self.q_star_set)), str(self.j_value)]


SWEEP_HEADER = ["n", "m", "q_star_max", "q_tie_count", "j_value"]


def sweep_record(n: int, m: int) -> SweepRecord:
    qs, value = extremal_q_set(n, m)
    return SweepRecord(n, m, tuple(qs), value)


def sweep(n: int, m_lo: int, m_hi: int) -> list[SweepRecord]:
    if not 1 <= m_lo <= m_hi <= comb(n, 2):
        raise ValueError(f"need 1 <= m_lo <= m_hi <= C(n,2); got {m_lo}..{m_hi} for n={n}")
    return [sweep_record(n, m) for m in range(m_lo, m_hi + 1)]


def monotonicity(seq) -> tuple[bool, bool]:
    """``(has_strict_increase, has_strict_decrease)`` over consecutive terms."""
    up = any(b > a for a, b in zip(seq, seq[1:]))
    down = any(b < a for a, b in zip(seq, seq[1:]))
    return up, down


def is_non_monotone(seq) -> bool:
    up, down = monotonicity(seq)
    return up and down


# Upper-bound proof ledger -------------------------------------------------


@dataclass
class LedgerRow:
    n: int
    k: int
    w: int
    m: int
    subcase: str
    j_g: int
    j_g1: int
    j_g2: int | None
    checks: dict[str, bool]
    decomposition_as_stated: bool
    formulas_ok: bool

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _pow2(e: int) -> Fraction:
    return Fraction(2) ** e


def _classify(n: int, k: int, w: int) -> str:
    if w <= n - 2 * k - 3:
        if w >= 1:
            return "1a"
        return "1b" if k >= 2 else "1c"
    if w in (n - 2 * k - 2, n - 2 * k - 1):
        return "2a"
    return "2b"


def _side_conditions(sub: str, n: int, k: int, w: int) -> list[str]:
    """Conditions attached to each subcase on top of ``n >= 3k+3``, in integer form."""
    failed = []
    if sub == "1b":
        if n < 2 * k:
            failed.append("n >= 2k")
        if n - 2 * k - 2 < 0 or (1 << (n - 2 * k - 2)) <= k:
            failed.append("n > 2k + log2(k) + 2")
    elif sub == "2a":
        if w == n - 2 * k - 2 and n < 2 * k + 4:
            failed.append("n >= 2k+4")
        if w == n - 2 * k - 1 and n < 2 * k + 1:
            failed.append("n >= 2k+1")
        if n - k - 3 < 0 or (1 << (n - k - 3)) < 2 * k + 3:
            failed.append("n >= k + log2(2k+3) + 3")
    elif sub == "2b":
        if n - k - 3 < 0 or (1 << (n - k - 3)) < 2 * k + 3:
            failed.append("n >= k + log2(2k+3) + 3")
        if w + 3 * k - n + 2 > n - k - 5:
            failed.append("w'+k <= n-k-5")
        if n < 3 * k + 2:
            failed.append("n >= 3k+2")
        if w < 3:
            failed.append("w >= 3")
    return failed


def subcase_ledger(n: int, k: int, w: int) -> LedgerRow:
    """Evaluate one step of the ``ell(m)`` upper-bound argument exactly.

    ``G = L(n,m)``, ``G' = L(n-1,m) ∪ E_1`` and ``G'' = L(n-2,m) ∪ E_2``, each
    j-value divided by the common factor ``3^(m+1-n)``. Only the sign checks
    decide ``passed``. ``decomposition_as_stated`` says whether ``G'``/``G''``
    decompose with the ``(k', w')``/``(k'', w'')`` written in the argument, and
    ``formulas_ok`` whether the closed-form differences equal the exact ones
    (the ``G''`` bound of 1b is an inequality; the ``G''`` formula of 2b uses
    ``w'' = w' + k + 1``, the number of edges actually displaced).
    """
    if k < 1 or n < 3 * k + 3:
        raise PreconditionOutsideProof(f"need k >= 1 and n >= 3k+3; got n={n}, k={k}")
    if not 0 <= w <= n - k - 2:
        raise PreconditionOutsideProof(f"need 0 <= w <= n-k-2; got n={n}, k={k}, w={w}")
    m = comb(k, 2) + k * (n - k) + w
    sub = _classify(n, k, w)
    failed = _side_conditions(sub, n, k, w)
    if failed:
        raise PreconditionOutsideProof(f"subcase {sub} at n={n}, k={k}, w={w} needs " + ", ".join(failed))
    needs_g2 = sub in ("1b", "2b")
    if m > comb(n - 1, 2) or (needs_g2 and m > comb(n - 2, 2)):
        raise PreconditionOutsideProof(f"m={m} does not fit on the smaller lex component")

    p1 = lex_decompose(n - 1, m)
    j_g = lex_ind_closed(n, k, w)
    j_g1 = 3 * lex_ind_closed(p1.n, p1.k, p1.w)
    j_g2 = None
    p2 = None
    if needs_g2:
        p2 = lex_decompose(n - 2, m)
        j_g2 = 9 * lex_ind_closed(p2.n, p2.k, p2.w)

    checks: dict[str, bool] = {}
    if sub == "1a":
        stated = (p1.k, p1.w) == (k, w + k)
        checks["j(G') > j(G)"] = j_g1 > j_g
        d1 = _pow2(n - 2 * k - w - 2) * (_pow2(k + w) + 3 - _pow2(k + 1)) + 2 * k
        formulas = d1 == j_g1 - j_g
    elif sub == "1b":
        stated = (p1.k, p1.w) == (k, k) and (p2.k, p2.w) == (k, 2 * k)
        checks["j(G') < j(G)"] = j_g1 < j_g
        checks["j(G) < j(G'')"] = j_g < j_g2
        d1 = _pow2(n - 2 * k - 2) * (_pow2(k) - 3) - 2 * k
        d2 = _pow2(n - k - 3) + 9 * _pow2(n - 3 * k - 3) + 8 * k
        formulas = d1 == j_g - j_g1 and j_g2 - j_g >= d2
    elif sub == "1c":
        stated = (p1.k, p1.w) == (1, 1)
        checks["j(G') > j(G)"] = j_g1 > j_g
        formulas = _pow2(n - 4) + 2 == j_g1 - j_g
    elif sub == "2a":
        w1 = w + 2 * k - n + 2
        stated = (p1.k, p1.w) == (k + 1, w1)
        checks["j(G') > j(G)"] = j_g1 > j_g
        d1 = _pow2(n - k - 3) * (-1 + 3 * _pow2(-w1) - _pow2(-w + 2)) + 2 * k + 3
        formulas = d1 == j_g1 - j_g
    else:
        w1 = w + 2 * k - n + 2
        stated = (p1.k, p1.w) == (k + 1, w1) and (p2.k, p2.w) == (k + 1, w1 + k)
        checks["j(G') < j(G)"] = j_g1 < j_g
        checks["j(G) < j(G'')"] = j_g < j_g2
        d1 = _pow2(n - k - 3) * (1 - 3 * _pow2(n - 2 * k - w - 2) + _pow2(-w + 2)) - 2 * k - 3
        d2 = _pow2(n - k - 4) + 9 * _pow2(2 * n - 4 * k - w - 7) - _pow2(n - k - w - 1) + 8 * k + 9
        formulas = d1 == j_g - j_g1 and (d2 == j_g2 - j_g or (p2.k, p2.w) != (k + 1, w1 + k + 1))
    return LedgerRow(n, k, w, m, sub, j_g, j_g1, j_g2, checks, stated, formulas)


def ledger_domain(max_n: int):
    """All ``(n, k, w)`` with ``n <= max_n``, ``k >= 1`` and ``0 <= w <= n-k-2``."""
    for n in range(3, max_n + 1):
        for k in range(1, n - 1):
            for w in range(0, n - k - 1):
                yield n, k, w


def run_ledger(max_n: int) -> tuple[list[LedgerRow], list[tuple[int, int, int, str]]]:
    """Rows for every ``(n, k, w)`` inside the argument, and the skipped triples with reasons."""
    rows, skipped = [], []
    for n, k, w in ledger_domain(max_n):
        try:
            rows.append(subcase_ledger(n, k, w))
        except PreconditionOutsideProof as exc:
            skipped.append((n, k, w, str(exc)))
    return rows, skipped
