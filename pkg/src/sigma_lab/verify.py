"""Budgeted self-check of every reproduced table and cross-check.

Each check runs at ``min(budget, cap)``. Checks that compare against an
expression printed in the source tables which the other routes contradict
are flagged ``erratum``; they still count as failures unless
``accept_errata`` is set.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import enumeration as en
from .classify import count_nonclass, nonclass_witness, sigma_hat
from .machine import first_pass, is_sortable, stacksort
from .paths import (
    av213_from_dyck,
    count_uh2d_avoiding,
    dyck_from_av213,
    iter_dyck_paths,
    phi,
    psi,
    schroder_from_sortable123,
    sortable123_from_schroder,
)
from .perms import Permutation, all_perms, avoids, contains, delete_position, inflate, ltr_maxima
from .tables import golden, reproduce, row_matches

P123 = Permutation._trusted((1, 2, 3))
P132 = Permutation._trusted((1, 3, 2))
P213 = Permutation._trusted((2, 1, 3))
P231 = Permutation._trusted((2, 3, 1))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    erratum: bool = False
    seconds: float = 0.0
    sizes: dict = field(default_factory=dict)


def _check_stacksort(n_max):
    for n in range(n_max + 1):
        sortable = {p for p in all_perms(n) if stacksort(p) == Permutation.identity(n)}
        if sortable != set(en.avoiders([P231], n)) or len(sortable) != en.catalan_number(n):
            return False, f"mismatch at n={n}"
    return True, f"n <= {n_max}"


def _check_12_machine(n_max):
    for n in range(n_max + 1):
        got = en.brute_sortable((1, 2), n, "list")
        if set(got) != set(en.avoiders([P213], n)) or len(got) != en.catalan_number(n):
            return False, f"mismatch at n={n}"
    return True, f"n <= {n_max}"


def _check_nonclass_table(_):
    rows = reproduce("paper:sec3")
    bad = [r["sigma"] for r in rows if not row_matches(r)]
    return not bad, f"bad rows: {bad}" if bad else "5 rows"


def _check_nonclass_count(n_max):
    for n in range(3, n_max + 1):
        if count_nonclass(n, "scan") != en.catalan_number(n):
            return False, f"n={n}"
    return True, f"3 <= n <= {n_max}"


def _check_witness(n_max):
    checked = 0
    for k in range(4, n_max):
        for s in all_perms(k):
            if avoids(sigma_hat(s), P231):
                a = nonclass_witness(s)
                if not (is_sortable(a, s) and contains(a, P132)):
                    return False, f"sigma={s} alpha={a}"
                checked += 1
    return True, f"{checked} patterns"


def _check_rho(n_max, extended=False, **kw):
    rows = golden()["rho_machines"]["rows"]
    for k in range(3, 8):
        printed = rows[str(k)][: n_max + 1]
        machine = [en.brute_sortable(en.rho(k), n, extended=extended, **kw) for n in range(n_max + 1)]
        avoid = [en.av_pair_count(P132, en.increasing(k), n, **kw) for n in range(n_max + 1)]
        gf = en.expand_rational(en.catalan_polynomial(k - 1), en.catalan_polynomial(k), n_max).coeffs
        dp = en.dyck_height_dp(k - 1, n_max)
        if not (machine == avoid == gf == dp == printed):
            return False, f"k={k}"
    return True, f"k = 3..7, n <= {n_max}"


def _check_two_element(n_max, **kw):
    rows = reproduce("paper:fig3", n_max, **kw)
    bad = [r["sigma"] for r in rows if not row_matches(r)]
    return not bad, f"bad rows: {bad}" if bad else f"{len(rows)} patterns, n <= {n_max}"


def _check_a_routes(n_max):
    order = 20
    closed = en.a_seq(order)
    gf = en.a_gf(order).coeffs
    brute = [en.a_brute(n) for n in range(n_max + 1)]
    ok = closed == gf and brute == closed[: n_max + 1]
    return ok, "closed form = GF expansion = brute filter"


def _check_a_printed(n_max):
    printed = golden()["a_sequence"]["values"]
    closed = en.a_seq(len(printed) - 1)
    return closed == printed, f"closed form {closed} vs printed {printed}"


def _check_a_x2c4(_):
    order = 20
    ok = en.a_gf(order).coeffs == en.x_power_catalan_fourth(2, order).coeffs
    x3 = en.a_gf(order).coeffs == en.x_power_catalan_fourth(3, order).coeffs
    return ok, f"A = x^2 C^4: {ok}; A = x^3 C^4: {x3}"


def _check_123_routes(n_max, **kw):
    formula = en.sort123_count(n_max)
    gf = en.sort123_gf(n_max).coeffs
    brute = [en.brute_sortable(P123, n, **kw) for n in range(n_max + 1)]
    paths = [1] + [count_uh2d_avoiding(n - 1) for n in range(1, n_max + 1)]
    ok = formula == gf == brute == paths
    return ok, f"n <= {n_max}"


def _check_123_printed_gf(n_max):
    printed = en.sort123_gf_printed(n_max).coeffs
    formula = en.sort123_count(n_max)
    return printed == formula, f"printed closed form gives {printed[:8]}..."


def _check_bijections(n_max):
    for k in range(min(n_max, 8) + 1):
        for P in iter_dyck_paths(k):
            r = av213_from_dyck(P)
            if not avoids(r, P213) or dyck_from_av213(r) != P:
                return False, f"dyck {P}"
    for n in range(1, min(n_max, 9) + 1):
        members = en.brute_sortable(P123, n, "list")
        images = set()
        for p in members:
            path = schroder_from_sortable123(p, check=False)
            if sortable123_from_schroder(path) != p:
                return False, f"f round trip at {p}"
            images.add(path)
        if len(images) != len(members):
            return False, f"f not injective at n={n}"
        if n >= 3:
            down_prev = [p for p in en.brute_sortable(P123, n - 1, "list") if p[0] > p[1]]
            for p in down_prev:
                q = phi(p, check=False)
                if psi(q) != p or len(ltr_maxima(q)) != len(ltr_maxima(p)) + 1:
                    return False, f"phi at {p}"
            image = {phi(p, check=False) for p in down_prev}
            target = {p for p in members if p[0] > p[1] and p[0] != n}
            if image != target:
                return False, f"phi image at n={n}"
    return True, f"n <= {n_max}"


def _check_length3(n_max, extended=False, **kw):
    rows = golden()["length3_machines"]["rows"]
    for sigma, printed in rows.items():
        got = [en.brute_sortable(sigma, n, extended=extended, **kw) for n in range(n_max + 1)]
        if got != printed[: n_max + 1]:
            return False, f"sigma={sigma}: {got}"
    return True, f"n <= {n_max}"


def structural_lemma_violations(n: int, members=None) -> list[str]:
    """Check the 123-machine lemmas on Sort_n(123); returns a list of violations."""
    if members is None:
        members = en.brute_sortable(P123, n, "list")
    bad = []
    for p in members:
        if n >= 2 and p[1] > p[0] + 1:
            bad.append(f"large ascent {p}")
        if n >= 2 and p[0] > p[1]:
            k = p[0]
            expect = (*range(n, k, -1), *range(k - 1, 0, -1), k)
            if tuple(first_pass(p, P123, fast=True)) != expect:
                bad.append(f"starting descent {p}")
            if p[0] != n:
                i = p.index(n)
                want = n - 2 if p[0] == n - 1 else n - 1
                if p[i - 1] != want:
                    bad.append(f"before maximum {p}")
    return bad


def inflation_violations(n: int, members=None, members_up=None) -> list[str]:
    """Sortability is unchanged by 2-inflating the first entry, checked both ways."""
    members = set(en.brute_sortable(P123, n, "list") if members is None else members)
    if members_up is None:
        members_up = en.brute_sortable(P123, n + 1, "list")
    bad = [f"inflation of {p}" for p in members if not is_sortable(inflate(p, 1, 2), P123)]
    for q in members_up:
        if q[1] == q[0] + 1:
            p = delete_position(q, 2)
            if p not in members:
                bad.append(f"deflation of {q}")
    return bad


def _check_structure(n_max):
    members = en.brute_sortable(P123, 0, "list")
    for n in range(n_max + 1):
        up = en.brute_sortable(P123, n + 1, "list", extended=True)
        bad = structural_lemma_violations(n, members)
        if n >= 1:
            bad += inflation_violations(n, members, up)
        if bad:
            return False, bad[0]
        members = up
    return True, f"n <= {n_max}"


CHECKS: list[tuple[str, int, Callable, bool, bool]] = [
    # name, cap on n, function, takes scan kwargs, erratum
    ("stacksort law", 9, _check_stacksort, False, False),
    ("12-machine", 9, _check_12_machine, False, False),
    ("non-class witnesses", 6, _check_nonclass_table, False, False),
    ("non-class count", 7, _check_nonclass_count, False, False),
    ("witness validity", 6, _check_witness, False, False),
    ("rho_k machines", 11, _check_rho, True, False),
    ("two-element bases", 10, _check_two_element, True, False),
    ("a_n routes", 9, _check_a_routes, False, False),
    ("a_n printed list", 8, _check_a_printed, False, True),
    ("a_n = x^2 C^4", 20, _check_a_x2c4, False, True),
    ("123-machine routes", 10, _check_123_routes, True, False),
    ("123-machine printed GF", 10, _check_123_printed_gf, False, True),
    ("bijections", 9, _check_bijections, False, False),
    ("length-3 machines", 11, _check_length3, True, False),
    ("123 structural lemmas", 9, _check_structure, False, False),
]

# below this budget a check is skipped (its fixed-size data does not fit)
MIN_BUDGET = {"non-class witnesses": 6, "witness validity": 6, "non-class count": 3,
              "a_n printed list": 1, "a_n = x^2 C^4": 1, "123-machine printed GF": 1}


def verify_all(budget: int, *, extended: bool = False, workers: int | None = None,
               accept_errata: bool = False, progress: Callable[[str], None] | None = None) -> dict:
    results: list[CheckResult] = []
    limit = en.EXTENDED_MAX_N if extended else en.DEFAULT_MAX_N
    for name, cap, func, scan_kw, erratum in CHECKS:
        if budget < MIN_BUDGET.get(name, 1):
            continue
        n_max = min(budget, cap)
        if scan_kw:
            n_max = min(n_max, limit)
        if progress:
            progress(f"running {name} (n <= {n_max})")
        t = time.perf_counter()
        if scan_kw:
            ok, detail = func(n_max, extended=extended, workers=workers) if name in (
                "rho_k machines", "length-3 machines") else func(n_max, workers=workers)
        else:
            ok, detail = func(n_max)
        results.append(CheckResult(name, bool(ok), detail, erratum,
                                   round(time.perf_counter() - t, 3), {"n_max": n_max}))
    failed = [r for r in results if not r.passed and not (r.erratum and accept_errata)]
    return {
        "budget": budget,
        "extended": extended,
        "passed": not failed,
        "checks": [asdict(r) for r in results],
    }
