"""Exhaustive and formula-based counting.

Brute-force scans walk S_n in lexicographic order as a prefix tree. A prefix
is abandoned only when every completion is certain to fail, so counts are
exact; the plain per-permutation scan (``method="scan"``) is kept as the
reference route.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .machine import _check_sigma, is_sortable
from .perms import Permutation, all_perms, as_perm, avoids, occurs_at_start, occurs_through
from .series import Polynomial, PowerSeries, catalan_gf

DEFAULT_MAX_N = 10
EXTENDED_MAX_N = 11


class BudgetExceeded(RuntimeError):
    pass


def default_workers() -> int:
    env = os.environ.get("SIGMA_LAB_THREADS")
    return max(1, int(env)) if env else 1


def check_budget(n: int, extended: bool = False) -> None:
    limit = EXTENDED_MAX_N if extended else DEFAULT_MAX_N
    if n > limit:
        hint = "" if extended else " (pass extended=True / --extended for n = 11)"
        raise BudgetExceeded(f"n = {n} exceeds the budget n <= {limit}{hint}")


@dataclass
class SequenceReport:
    name: str
    offset: int
    values: list[int]
    method: str
    checks: dict[str, bool] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "offset": self.offset,
            "values": list(self.values),
            "method": self.method,
            "checks": dict(self.checks),
        }

    def bfile(self) -> str:
        return "\n".join(f"{self.offset + i} {v}" for i, v in enumerate(self.values))

    def agrees_with(self, other: "SequenceReport") -> bool:
        lo = max(self.offset, other.offset)
        hi = min(self.offset + len(self.values), other.offset + len(other.values))
        return all(
            self.values[i - self.offset] == other.values[i - other.offset] for i in range(lo, hi)
        )


# --- 231 test and the prefix-tree scan ----------------------------------

def avoids_231(w: Sequence[int]) -> bool:
    """Linear-time test via Stacksort: w avoids 231 iff one stack pass sorts it."""
    st: list[int] = []
    last = 0
    for x in w:
        while st and st[-1] < x:
            v = st.pop()
            if v < last:
                return False
            last = v
        st.append(x)
    while st:
        v = st.pop()
        if v < last:
            return False
        last = v
    return True


def _sortable_subtree(sigma: tuple[int, ...], n: int, prefix_first: int, collect: bool):
    """Sortable permutations of length n starting with ``prefix_first``.

    The first pass is simulated incrementally. Output emitted so far, followed
    by the current stack read top to bottom, is a subsequence of the final
    output, so once it contains 231 the whole subtree is unsortable.
    """
    count = 0
    found: list[tuple[int, ...]] = []
    path: list[int] = []

    def rec(remaining: list[int], stack: list[int], out: list[int]) -> None:
        nonlocal count
        if not remaining:
            count += 1
            if collect:
                found.append(tuple(path))
            return
        for idx, x in enumerate(remaining):
            st = stack[:]
            o = out[:]
            while st and occurs_at_start((x, *reversed(st)), sigma):
                o.append(st.pop())
            st.append(x)
            if not avoids_231(o + st[::-1]):
                continue
            path.append(x)
            rec(remaining[:idx] + remaining[idx + 1:], st, o)
            path.pop()

    rest = [v for v in range(1, n + 1) if v != prefix_first]
    path.append(prefix_first)
    rec(rest, [prefix_first], [])
    return count, found


def _scan_subtree(sigma: tuple[int, ...], n: int, prefix_first: int, collect: bool):
    count = 0
    found = []
    rest = [v for v in range(1, n + 1) if v != prefix_first]
    from itertools import permutations

    for tail in permutations(rest):
        p = (prefix_first, *tail)
        if is_sortable(p, sigma):
            count += 1
            if collect:
                found.append(p)
    return count, found


def _run_partitioned(func, args_list, workers: int):
    if workers <= 1 or len(args_list) <= 1:
        return [func(*a) for a in args_list]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, *a) for a in args_list]
        return [f.result() for f in futures]


def brute_sortable(sigma, n: int, mode: str = "count", *, method: str = "tree",
                   workers: int | None = None, extended: bool = False):
    """Exhaustive Sort_n(sigma).

    ``mode="count"`` returns an int, ``mode="list"`` the sortable permutations
    in lexicographic order. Work is split by first entry, i.e. into contiguous
    lexicographic rank ranges, and recombined in order.
    """
    sigma = tuple(_check_sigma(sigma))
    check_budget(n, extended)
    if mode not in ("count", "list"):
        raise ValueError(f"unknown mode {mode!r}")
    collect = mode == "list"
    if n == 0:
        return 1 if not collect else [Permutation()]
    func = {"tree": _sortable_subtree, "scan": _scan_subtree}[method]
    workers = default_workers() if workers is None else workers
    parts = _run_partitioned(func, [(sigma, n, f, collect) for f in range(1, n + 1)], workers)
    if collect:
        return [Permutation._trusted(p) for _, found in parts for p in found]
    return sum(c for c, _ in parts)


def sortable_sets(sigma, max_n: int, **kw) -> dict[int, set[Permutation]]:
    return {n: set(brute_sortable(sigma, n, "list", **kw)) for n in range(max_n + 1)}


# --- avoidance classes ----------------------------------------------------

def _normalize_patterns(patterns) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(as_perm(p)) for p in patterns))


_LEVELS: dict[tuple, list] = {}


def _avoider_levels(pats: tuple[tuple[int, ...], ...], n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Av_0 .. Av_n of ``pats``, grown by inserting the new maximum.

    Deleting the maximum of an avoider leaves an avoider, so every member of
    Av_m arises from some member of Av_{m-1}; nothing in S_m is skipped.
    Levels are cached per pattern set.
    """
    if any(len(p) == 0 for p in pats):
        return [() for _ in range(n + 1)]
    levels = _LEVELS.setdefault(pats, [((),)])
    for m in range(len(levels), n + 1):
        nxt = []
        tops = [(p, p.index(len(p))) for p in pats]
        for tau in levels[-1]:
            for i in range(m):
                cand = (*tau[:i], m, *tau[i:])
                # tau avoids every pattern, so a new occurrence must use m as its maximum
                if not any(occurs_through(cand, p, i, j) for p, j in tops):
                    nxt.append(cand)
        nxt.sort()
        levels.append(tuple(nxt))
    return levels


def avoiders(patterns, n: int) -> list[Permutation]:
    """Av_n(patterns) in lexicographic order."""
    pats = _normalize_patterns(patterns)
    return [Permutation._trusted(p) for p in _avoider_levels(pats, n)[n]]


def av_count(patterns, n: int, *, method: str = "tree", workers: int | None = None,
             extended: bool = True) -> int:
    """|Av_n(patterns)|; ``method="scan"`` tests every permutation of S_n instead."""
    pats = _normalize_patterns(patterns)
    check_budget(n, extended)
    if method == "scan":
        return sum(1 for p in all_perms(n) if all(avoids(p, q) for q in pats))
    if method != "tree":
        raise ValueError(f"unknown method {method!r}")
    return len(_avoider_levels(pats, n)[n])


def av_pair_count(p, q, n: int, **kw) -> int:
    """|Av_n(p, q)| by exhaustive enumeration."""
    return av_count([p, q], n, **kw)


# --- Catalan machinery ----------------------------------------------------

def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def catalan(order: int) -> list[int]:
    return [catalan_number(n) for n in range(order + 1)]


def a_closed_form(n: int) -> int:
    """C_n - 2 C_{n-1} for n >= 2; zero below."""
    if n < 2:
        return 0
    return catalan_number(n) - 2 * catalan_number(n - 1)


def a_seq(order: int) -> list[int]:
    return [a_closed_form(n) for n in range(order + 1)]


def a_gf(order: int) -> PowerSeries:
    """(1 - 4x + 2x^2 - (1 - 2x) sqrt(1 - 4x)) / (2x)."""
    x = PowerSeries.x(order + 1)
    root = PowerSeries([1, -4], order + 1).sqrt()
    num = 1 - 4 * x + 2 * x * x - (1 - 2 * x) * root
    return num.div_x().exact_div_int(2)


def x_power_catalan_fourth(shift: int, order: int) -> PowerSeries:
    """x^shift * C(x)^4."""
    c = catalan_gf(order)
    return (c ** 4).shift(shift)


def a_brute(n: int) -> int:
    """#{pi in Av_n(231) : pi_1 pi_2 pi_3 order-isomorphic to 321}."""
    return sum(1 for p in avoiders([(2, 3, 1)], n) if n >= 3 and p[0] > p[1] > p[2])


def sort123_formula(n: int) -> int:
    """1 + sum_{h=1}^{n-1} (n - h) C_h."""
    return 1 + sum((n - h) * catalan_number(h) for h in range(1, n))


def sort123_count(order: int) -> list[int]:
    return [sort123_formula(n) for n in range(order + 1)]


def sort123_gf(order: int) -> PowerSeries:
    """1/(1-x) + x (C(x) - 1) / (1-x)^2: the H2-only paths plus H2^a Q H2^b with Q nonempty."""
    x = PowerSeries.x(order)
    c = catalan_gf(order)
    geo = (1 - x).reciprocal()
    return geo + geo * (x * (c - 1)) * geo


def sort123_gf_printed(order: int) -> PowerSeries:
    """(1-x)^2 / (1 - 2x + x C(x)), the closing expression exactly as printed."""
    x = PowerSeries.x(order)
    c = catalan_gf(order)
    return (1 - x) ** 2 / (1 - 2 * x + x * c)


# --- Catalan polynomials and bounded height -----------------------------

def catalan_polynomial(k: int) -> Polynomial:
    """G_k from G_{k+1} = G_k - x G_{k-1}, G_0 = G_1 = 1."""
    if k < 0:
        raise ValueError("index must be nonnegative")
    prev, cur = Polynomial([1]), Polynomial([1])
    x = Polynomial.x()
    for _ in range(k - 1):
        prev, cur = cur, cur - x * prev
    return cur


def catalan_polynomial_closed(k: int) -> Polynomial:
    """sum_i binom(k - i, i) (-x)^i."""
    return Polynomial(comb(k - i, i) * (-1) ** i for i in range(k // 2 + 1))


def expand_rational(numerator: Polynomial, denominator: Polynomial, order: int) -> PowerSeries:
    if denominator[0] == 0:
        raise ZeroDivisionError("denominator has zero constant term")
    num = numerator.series(order)
    den = denominator.series(order)
    if denominator[0] in (1, -1):
        return num * den.reciprocal()
    # general constant term: long division, which must stay integral
    d0 = denominator[0]
    out = [0] * (order + 1)
    for k in range(order + 1):
        s = num[k] - sum(den[i] * out[k - i] for i in range(1, k + 1))
        q, r = divmod(s, d0)
        if r:
            from .series import InexactDivision

            raise InexactDivision(f"coefficient {k} is not an integer")
        out[k] = q
    return PowerSeries(out, order)


def bounded_height_gf(k: int, order: int) -> PowerSeries:
    """F_k = G_k / G_{k+1}."""
    return expand_rational(catalan_polynomial(k), catalan_polynomial(k + 1), order)


def dyck_height_dp(k: int, order: int) -> list[int]:
    """Dyck paths of semilength n and height <= k, by a transfer over heights."""
    out = []
    for n in range(order + 1):
        row = [1] + [0] * k
        for _ in range(2 * n):
            new = [0] * (k + 1)
            for h, c in enumerate(row):
                if c:
                    if h + 1 <= k:
                        new[h + 1] += c
                    if h > 0:
                        new[h - 1] += c
            row = new
        out.append(row[0])
    return out


def bounded_height_count(k: int, order: int) -> list[int]:
    if k < 0:
        raise ValueError("height bound must be nonnegative")
    return bounded_height_gf(k, order).coeffs


def rho(k: int) -> Permutation:
    return Permutation.decreasing(k)


def increasing(k: int) -> Permutation:
    return Permutation.identity(k)


def iter_dyck_words(semilength: int) -> Iterator[str]:
    def rec(prefix: str, up: int, down: int):
        if up == down == semilength:
            yield prefix
            return
        if up < semilength:
            yield from rec(prefix + "U", up + 1, down)
        if down < up:
            yield from rec(prefix + "D", up, down + 1)

    yield from rec("", 0, 0)
