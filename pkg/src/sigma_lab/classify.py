"""When do the sigma-sortable permutations form a permutation class?"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .enumeration import catalan_number
from .perms import Permutation, all_perms, as_perm, avoids, contains, delete_position, reverse

P132 = Permutation._trusted((1, 3, 2))
P231 = Permutation._trusted((2, 3, 1))
IS_CLASS = "IsClass"
NOT_CLASS = "NotClass"

# witnesses for length 3 (and the length-2 machine 21): (sortable alpha, unsortable pattern of alpha)
SMALL_WITNESSES = {
    "123": ("4132", "132"),
    "132": ("2413", "132"),
    "213": ("4132", "132"),
    "231": ("361425", "1324"),
    "312": ("3142", "132"),
    "21": ("35241", "3241"),
}


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class ClassStatus:
    sigma: Permutation
    verdict: str
    basis: tuple[Permutation, ...] = ()
    witness: tuple[Permutation, Permutation] | None = None
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def is_class(self) -> bool:
        return self.verdict == IS_CLASS

    def as_dict(self) -> dict:
        d: dict = {"sigma": str(self.sigma), "verdict": self.verdict}
        if self.is_class:
            d["basis"] = [str(b) for b in self.basis]
        else:
            alpha, pat = self.witness
            d["witness"] = {"alpha": str(alpha), "pattern": str(pat)}
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_dict(cls, d: Mapping) -> "ClassStatus":
        sigma = as_perm(d["sigma"])
        if d["verdict"] == IS_CLASS:
            return cls(sigma, IS_CLASS, tuple(as_perm(b) for b in d["basis"]))
        w = d["witness"]
        return cls(sigma, NOT_CLASS, witness=(as_perm(w["alpha"]), as_perm(w["pattern"])))


def sigma_hat(sigma) -> Permutation:
    """Swap the first two entries."""
    s = as_perm(sigma)
    if len(s) < 2:
        raise ValueError("sigma_hat needs length >= 2")
    return Permutation._trusted((s[1], s[0], *s[2:]))


def is_antichain(perms) -> bool:
    ps = list(perms)
    return all(a == b or contains(a, b) is None for a in ps for b in ps)


def classify(sigma, *, allow_short: bool = False) -> ClassStatus:
    """Class verdict for Sort(sigma), with basis or non-class witness.

    Length 2 is only answered with ``allow_short=True``: Sort(12) = Av(213)
    and Sort(21) is West's two-stack setting. The swap criterion is not
    applied there (read literally it would call Sort(12) a non-class).
    """
    s = as_perm(sigma)
    if len(s) < 3:
        if not allow_short or len(s) < 2:
            raise PreconditionError("classify needs |sigma| >= 3 (use allow_short for length 2)")
        if s == (1, 2):
            return ClassStatus(s, IS_CLASS, (Permutation._trusted((2, 1, 3)),),
                               notes=("length-2 special case: Sort(12) = Av(213)",))
        alpha, pat = SMALL_WITNESSES["21"]
        return ClassStatus(s, NOT_CLASS, witness=(as_perm(alpha), as_perm(pat)),
                           notes=("length-2 special case: West-2-stack-sortable permutations",))
    if contains(sigma_hat(s), P231) is not None:
        sr = reverse(s)
        basis = (P132, sr) if avoids(sr, P132) else (P132,)
        assert is_antichain(basis)
        return ClassStatus(s, IS_CLASS, basis)
    if len(s) == 3:
        alpha, pat = (as_perm(v) for v in SMALL_WITNESSES[str(s)])
    else:
        alpha, pat = nonclass_witness(s), P132
    return ClassStatus(s, NOT_CLASS, witness=(alpha, pat))


def nonclass_witness(sigma) -> Permutation:
    """A sigma-sortable permutation of length |sigma|+1 containing 132.

    Requires that sigma_hat avoids 231. Length 3 comes from a fixed table,
    longer sigma from the two-case construction on the relative order of
    sigma_1 and sigma_2.
    """
    s = as_perm(sigma)
    k = len(s)
    if k < 3:
        raise PreconditionError("witness construction needs |sigma| >= 3")
    if contains(sigma_hat(s), P231) is not None:
        raise PreconditionError(f"sigma_hat({s}) contains 231: Sort(sigma) is a class")
    if k == 3:
        return as_perm(SMALL_WITNESSES[str(s)][0])
    s1, s2 = s[0], s[1]
    if s1 < s2:
        z = s1
        shifted = [v if v < s1 else v + 1 for v in s]
        alpha = [*reversed(shifted[2:]), z, shifted[1], shifted[0]]
    else:
        z = s2 + 1
        shifted = [v if v <= s2 else v + 1 for v in s]
        alpha = [*reversed(shifted), z]
    return Permutation(alpha)


def count_nonclass(n: int, method: str = "auto") -> int:
    """#{sigma in S_n : sigma_hat avoids 231}.

    ``method`` is "scan" (all of S_n), "formula" (sigma -> sigma_hat is an
    involution onto Av_n(231), so the count is C_n), or "auto" (scan up to 8).
    """
    if n < 3:
        raise PreconditionError("count_nonclass needs n >= 3")
    if method == "auto":
        method = "scan" if n <= 8 else "formula"
    if method == "formula":
        return catalan_number(n)
    if method != "scan":
        raise ValueError(f"unknown method {method!r}")
    return sum(1 for s in all_perms(n) if avoids(sigma_hat(s), P231))


def has_two_element_basis(sigma) -> bool:
    """For sigma avoiding 231: True iff sigma_1 sigma_2 sigma_3 is a 321."""
    s = as_perm(sigma)
    if len(s) < 3:
        raise PreconditionError("needs |sigma| >= 3")
    if not avoids(s, P231):
        raise PreconditionError(f"{s} contains 231 (its reverse contains 132)")
    return s[0] > s[1] > s[2]


def is_downward_closed(members: Mapping[int, set], up_to: int):
    """Look for pi in ``members`` with a pattern that is not in ``members``.

    ``members[n]`` must hold the complete set for every n <= up_to. Returns
    ``(pi, pattern)`` with the shortest such pattern (ties: lexicographically
    smallest pattern, then smallest pi), or None when closed up to ``up_to``.
    Deleting one entry at a time suffices: closure under single deletions
    gives closure under all patterns.
    """
    missing = [n for n in range(up_to + 1) if n not in members]
    if missing:
        raise ValueError(f"members incomplete: no set for lengths {missing}")
    sets = {n: {as_perm(p) for p in members[n]} for n in range(up_to + 1)}
    for n in range(1, up_to + 1):
        bad: dict[Permutation, Permutation] = {}
        for pi in sorted(sets[n]):
            for i in range(1, n + 1):
                child = delete_position(pi, i)
                if child not in sets[n - 1] and child not in bad:
                    bad[child] = pi
        if bad:
            pattern = min(bad)
            return _extend_witness(bad[pattern], pattern, sets)
    return None


def _extend_witness(pi, pattern, sets):
    # report the smallest member (by length, then lexicographically) containing the pattern
    for n in range(len(pattern) + 1, len(pi) + 1):
        for cand in sorted(sets[n]):
            if contains(cand, pattern) is not None:
                return cand, pattern
    return pi, pattern
