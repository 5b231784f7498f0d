"""Golden tables and code that recomputes them."""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .enumeration import (
    av_pair_count,
    bounded_height_gf,
    brute_sortable,
    catalan_polynomial,
    expand_rational,
    increasing,
    rho,
)
from .perms import as_perm, reverse
from .series import Polynomial

TABLE_NAMES = ("paper:sec3", "paper:fig3", "paper:sec4", "paper:sec6")


@lru_cache(maxsize=None)
def golden() -> dict:
    text = resources.files("sigma_lab").joinpath("data/golden_tables.json").read_text("utf-8")
    return json.loads(text)


def rho_row(k: int, max_n: int, *, method: str = "machine", **kw) -> list[int]:
    """Row k of the rho_k table, n = 0..max_n, by one of three routes."""
    if method == "machine":
        return [brute_sortable(rho(k), n, **kw) for n in range(max_n + 1)]
    if method == "avoidance":
        return [av_pair_count((1, 3, 2), increasing(k), n, **kw) for n in range(max_n + 1)]
    if method == "gf":
        return expand_rational(catalan_polynomial(k - 1), catalan_polynomial(k), max_n).coeffs
    raise ValueError(f"unknown method {method!r}")


def two_element_row_gf(row: dict, order: int) -> list[int]:
    return expand_rational(Polynomial(row["numerator"]), Polynomial(row["denominator"]), order).coeffs


def two_element_row_avoidance(sigma, max_n: int, **kw) -> list[int]:
    s = as_perm(sigma)
    return [av_pair_count((1, 3, 2), reverse(s), n, **kw) for n in range(max_n + 1)]


def length3_row(sigma: str, max_n: int, **kw) -> list[int]:
    return [brute_sortable(sigma, n, **kw) for n in range(max_n + 1)]


def reproduce(name: str, max_n: int = 10, **kw) -> list[dict]:
    """Recompute a golden table; each row carries the printed values for comparison."""
    g = golden()
    rows = []
    if name == "paper:sec3":
        from .machine import is_sortable
        from .perms import contains

        for r in g["nonclass_length3"]["rows"]:
            rows.append({
                "sigma": r["sigma"],
                "sortable": r["sortable"],
                "pattern": r["pattern"],
                "sortable_ok": is_sortable(r["sortable"], r["sigma"]),
                "pattern_unsortable": not is_sortable(r["pattern"], r["sigma"]),
                "contained": contains(as_perm(r["sortable"]), as_perm(r["pattern"])) is not None,
            })
    elif name == "paper:sec4":
        for k, printed in g["rho_machines"]["rows"].items():
            vals = rho_row(int(k), max_n, **kw)
            rows.append({"k": int(k), "offset": 0, "values": vals, "printed": printed[: max_n + 1]})
    elif name == "paper:sec6":
        for sigma, printed in g["length3_machines"]["rows"].items():
            vals = length3_row(sigma, max_n, **kw)
            rows.append({"sigma": sigma, "offset": 0, "values": vals, "printed": printed[: max_n + 1]})
    elif name == "paper:fig3":
        for r in g["two_element_bases"]["rows"]:
            off = r["offset"]
            gf = two_element_row_gf(r, max_n)
            for sigma in r["patterns"]:
                av = two_element_row_avoidance(sigma, max_n, **kw)
                rows.append({
                    "sigma": sigma,
                    "gf": gf,
                    "avoidance": av,
                    "printed_offset": off,
                    "printed": r["values"][: max(0, max_n + 1 - off)],
                })
    else:
        raise KeyError(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}")
    return rows


def row_matches(row: dict) -> bool:
    if "values" in row:
        return row["values"] == row["printed"]
    if "gf" in row:
        off = row["printed_offset"]
        shifted = row["gf"][off:off + len(row["printed"])]
        return row["gf"] == row["avoidance"] and shifted == row["printed"]
    return row["sortable_ok"] and row["pattern_unsortable"] and row["contained"]


def bounded_height_row(k: int, max_n: int) -> list[int]:
    return bounded_height_gf(k, max_n).coeffs
