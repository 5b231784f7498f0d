"""Permutations in one-line notation, classical patterns and symmetries.

Values and positions are 1-based throughout the public API.
"""
from __future__ import annotations

from itertools import permutations as _itperms
from typing import Iterable, Iterator, Sequence


class NotationError(ValueError):
    """Raised for text that is not a valid permutation.

    ``position`` is the 1-based character offset of the offending token
    (or None when the problem is global, e.g. a missing value).
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class Permutation(tuple):
    """An immutable permutation of {1..n} in one-line notation."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        vals = tuple(int(v) for v in values)
        n = len(vals)
        if sorted(vals) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {vals}")
        return super().__new__(cls, vals)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "Permutation":
        return super().__new__(cls, tuple(values))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return parse(text)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(range(1, n + 1))

    @classmethod
    def decreasing(cls, n: int) -> "Permutation":
        return cls._trusted(range(n, 0, -1))

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Permutation('{format_perm(self)}')"

    def __getitem__(self, item):
        res = super().__getitem__(item)
        if isinstance(item, slice):
            return tuple(res)
        return res

    def __add__(self, other):
        return tuple(self) + tuple(other)

    # convenience wrappers
    def reverse(self) -> "Permutation":
        return reverse(self)

    def complement(self) -> "Permutation":
        return complement(self)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def contains(self, pattern) -> bool:
        return contains(self, pattern) is not None

    def avoids(self, *patterns) -> bool:
        return all(contains(self, p) is None for p in patterns)


def parse(text: str) -> Permutation:
    """Read either the compact digit form ("4132") or the comma form ("10,3,1,2,...").

    The empty string is the empty permutation.
    """
    s = text.strip()
    if s in ("", "e", "()"):
        return Permutation()
    if "," in s:
        tokens = []
        offset = 0
        for tok in s.split(","):
            stripped = tok.strip()
            start = offset + (len(tok) - len(tok.lstrip())) + 1
            if not stripped.isdigit():
                raise NotationError(f"bad entry {stripped!r}", start)
            tokens.append((int(stripped), start))
            offset += len(tok) + 1
    else:
        tokens = []
        for i, ch in enumerate(s, 1):
            if not ch.isdigit() or ch == "0":
                raise NotationError(f"bad digit {ch!r}", i)
            tokens.append((int(ch), i))
    n = len(tokens)
    seen: dict[int, int] = {}
    for v, pos in tokens:
        if not 1 <= v <= n:
            raise NotationError(f"value {v} out of range 1..{n}", pos)
        if v in seen:
            raise NotationError(f"repeated value {v}", pos)
        seen[v] = pos
    return Permutation._trusted(v for v, _ in tokens)


def format_perm(p: Sequence[int]) -> str:
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def as_perm(p) -> Permutation:
    if isinstance(p, Permutation):
        return p
    if isinstance(p, str):
        return parse(p)
    if isinstance(p, int):
        return parse(str(p))
    return Permutation(p)


def standardize(seq: Sequence[int]) -> Permutation:
    """Order-isomorphic permutation of a sequence of distinct numbers."""
    ranks = {v: i for i, v in enumerate(sorted(seq), 1)}
    return Permutation._trusted(ranks[v] for v in seq)


def all_perms(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order."""
    for p in _itperms(range(1, n + 1)):
        yield Permutation._trusted(p)


# --- containment ---------------------------------------------------------

_INF = float("inf")

def _neighbours(pattern: Sequence[int]):
    """For each pattern index j, the earlier indices whose values bracket pattern[j]."""
    out = []
    for j, v in enumerate(pattern):
        lo = hi = -1
        for i in range(j):
            w = pattern[i]
            if w < v and (lo < 0 or w > pattern[lo]):
                lo = i
            elif w > v and (hi < 0 or w < pattern[hi]):
                hi = i
        out.append((lo, hi))
    return out


def contains(host: Sequence[int], pattern: Sequence[int]) -> tuple[int, ...] | None:
    """Leftmost occurrence of ``pattern`` in ``host``.

    Returns the 1-based positions of the lexicographically smallest occurrence,
    or None if ``host`` avoids ``pattern``. The empty pattern occurs everywhere.
    """
    k = len(pattern)
    n = len(host)
    if k == 0:
        return ()
    if k > n:
        return None
    nb = _neighbours(pattern)
    chosen = [0] * k  # 0-based host indices
    vals = [0] * k

    def search(j: int, start: int) -> bool:
        lo_i, hi_i = nb[j]
        lo = vals[lo_i] if lo_i >= 0 else 0
        hi = vals[hi_i] if hi_i >= 0 else _INF
        for i in range(start, n - (k - j) + 1):
            v = host[i]
            if lo < v < hi:
                chosen[j] = i
                vals[j] = v
                if j + 1 == k or search(j + 1, i + 1):
                    return True
        return False

    if search(0, 0):
        return tuple(i + 1 for i in chosen)
    return None


def avoids(host: Sequence[int], pattern: Sequence[int]) -> bool:
    return contains(host, pattern) is None


def contains_bruteforce(host: Sequence[int], pattern: Sequence[int]) -> tuple[int, ...] | None:
    """Reference scan over every index subset, in lexicographic order."""
    from itertools import combinations

    target = tuple(standardize(pattern))
    for idx in combinations(range(len(host)), len(pattern)):
        if tuple(standardize([host[i] for i in idx])) == target:
            return tuple(i + 1 for i in idx)
    return None


# --- symmetries ----------------------------------------------------------

def reverse(p: Sequence[int]) -> Permutation:
    return Permutation._trusted(reversed(p))


def complement(p: Sequence[int]) -> Permutation:
    n = len(p)
    return Permutation._trusted(n + 1 - v for v in p)


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    return Permutation._trusted(inv)


SYMMETRIES = {"reverse": reverse, "complement": complement, "inverse": inverse}


def symmetry(p, kind: str) -> Permutation:
    try:
        f = SYMMETRIES[kind]
    except KeyError:
        raise ValueError(f"unknown symmetry {kind!r}") from None
    return f(as_perm(p))


# --- inflation, LTR maxima ----------------------------------------------

def inflate(p: Sequence[int], i: int, k: int) -> Permutation:
    """Replace the entry at position ``i`` by ``k`` consecutive increasing values."""
    n = len(p)
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range 1..{n}")
    if k < 1:
        raise ValueError("inflation factor must be positive")
    x = p[i - 1]
    out: list[int] = []
    for j, v in enumerate(p, 1):
        if j == i:
            out.extend(range(x, x + k))
        else:
            out.append(v + k - 1 if v > x else v)
    return Permutation._trusted(out)


def delete_position(p: Sequence[int], i: int) -> Permutation:
    """Remove the entry at 1-based position ``i`` and rescale."""
    x = p[i - 1]
    return Permutation._trusted(v - 1 if v > x else v for j, v in enumerate(p, 1) if j != i)


def delete_value(p: Sequence[int], x: int) -> Permutation:
    return Permutation._trusted(v - 1 if v > x else v for v in p if v != x)


def ltr_maxima(p: Sequence[int]) -> tuple[int, ...]:
    """Positions (1-based) of the left-to-right maxima."""
    out = []
    best = 0
    for i, v in enumerate(p, 1):
        if v > best:
            out.append(i)
            best = v
    return tuple(out)


def deflate_leading_run(p: Sequence[int]) -> tuple[int, Permutation]:
    """Collapse the initial run of consecutive increasing values.

    Returns ``(r, reduced)`` where ``p[0..r]`` is the run and
    ``inflate(reduced, 1, r + 1) == p``.
    """
    n = len(p)
    if n == 0:
        raise ValueError("empty permutation has no leading run")
    r = 0
    while r + 1 < n and p[r + 1] == p[r] + 1:
        r += 1
    x = p[0]
    reduced = [v for v in p[r + 1:]]
    reduced = [x] + [v - r if v > x else v for v in reduced]
    return r, Permutation._trusted(reduced)


def occurs_at_start(seq: Sequence[int], pattern: Sequence[int]) -> bool:
    """True if some occurrence of ``pattern`` in ``seq`` uses ``seq[0]`` as its first entry."""
    k = len(pattern)
    n = len(seq)
    if k == 0:
        return True
    if k > n:
        return False
    nb = _neighbours(pattern)
    vals = [0] * k
    vals[0] = seq[0]

    def search(j: int, start: int) -> bool:
        lo_i, hi_i = nb[j]
        lo = vals[lo_i] if lo_i >= 0 else 0
        hi = vals[hi_i] if hi_i >= 0 else _INF
        for i in range(start, n - (k - j) + 1):
            v = seq[i]
            if lo < v < hi:
                vals[j] = v
                if j + 1 == k or search(j + 1, i + 1):
                    return True
        return False

    return k == 1 or search(1, 1)


def occurs_through(host: Sequence[int], pattern: Sequence[int], host_index: int, pattern_index: int) -> bool:
    """True if some occurrence maps ``pattern[pattern_index]`` to ``host[host_index]`` (0-based)."""
    k = len(pattern)
    n = len(host)
    if not 0 <= pattern_index < k or pattern_index > host_index or k - pattern_index > n - host_index:
        return False
    nb = _neighbours(pattern)
    vals = [0] * k

    def search(j: int, start: int) -> bool:
        lo_i, hi_i = nb[j]
        lo = vals[lo_i] if lo_i >= 0 else 0
        hi = vals[hi_i] if hi_i >= 0 else _INF
        if j == pattern_index:
            candidates = (host_index,) if start <= host_index else ()
        elif j < pattern_index:
            candidates = range(start, host_index - (pattern_index - j) + 1)
        else:
            candidates = range(start, n - (k - j) + 1)
        for i in candidates:
            v = host[i]
            if lo < v < hi:
                vals[j] = v
                if j + 1 == k or search(j + 1, i + 1):
                    return True
        return False

    return search(0, 0)
