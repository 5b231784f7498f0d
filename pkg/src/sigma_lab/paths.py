"""Dyck and Schroeder paths, and their bijections with sortable permutations.

Text form: one letter per step, ``U``, ``D`` and ``H`` (a double horizontal
step); ``H2`` and whitespace are accepted on input.
"""
from __future__ import annotations

import json
from typing import Iterable, Iterator

from .machine import is_sortable
from .perms import (
    Permutation,
    as_perm,
    avoids,
    deflate_leading_run,
    delete_value,
    inflate,
    ltr_maxima,
    standardize,
)

U, D, H = "U", "D", "H"
P123 = Permutation._trusted((1, 2, 3))
P213 = Permutation._trusted((2, 1, 3))


class PathError(ValueError):
    pass


def _parse_steps(text: str) -> tuple[str, ...]:
    s = "".join(text.split()).upper().replace("H2", "H").replace("_", "")
    for i, ch in enumerate(s, 1):
        if ch not in "UDH":
            raise PathError(f"bad step {ch!r} at position {i}")
    return tuple(s)


class _Path:
    allowed = "UD"
    __slots__ = ("steps",)

    def __init__(self, steps: Iterable[str] | str = ()):
        st = _parse_steps(steps) if isinstance(steps, str) else tuple(steps)
        if any(s not in self.allowed for s in st):
            raise PathError(f"{type(self).__name__} steps must be among {self.allowed}")
        level = 0
        for i, s in enumerate(st, 1):
            level += (s == U) - (s == D)
            if level < 0:
                raise PathError(f"path falls below the axis at step {i}")
        if level != 0:
            raise PathError("path does not return to the axis")
        self.steps = st

    def __str__(self) -> str:
        return "".join(self.steps)

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self}')"

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.steps == other.steps

    def __hash__(self):
        return hash((type(self).__name__, self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> str:
        return json.dumps(list(self.steps))

    @classmethod
    def from_json(cls, text: str):
        return cls(json.loads(text))

    @property
    def semilength(self) -> int:
        return sum(1 for s in self.steps if s in (U, H))

    def heights(self) -> list[int]:
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (s == U) - (s == D))
        return out


class DyckPath(_Path):
    allowed = "UD"


class SchroderPath(_Path):
    allowed = "UDH"

    @classmethod
    def from_dyck(cls, prefix_h: int, core: DyckPath, suffix_h: int) -> "SchroderPath":
        return cls((H,) * prefix_h + core.steps + (H,) * suffix_h)


def height(path: _Path) -> int:
    return max(path.heights())


def _match(steps) -> dict[int, int]:
    """Index of each up step -> index of its matching down step."""
    pending: list[int] = []
    pairs = {}
    for i, s in enumerate(steps):
        if s == U:
            pending.append(i)
        elif s == D:
            pairs[pending.pop()] = i
    return pairs


def av213_from_dyck(path) -> Permutation:
    """Label down steps k..1 from left to right, copy labels to matching up steps, read the ups."""
    p = path if isinstance(path, DyckPath) else DyckPath(path)
    downs = [i for i, s in enumerate(p.steps) if s == D]
    k = len(downs)
    label = {i: k - j for j, i in enumerate(downs)}
    pairs = _match(p.steps)
    return Permutation(label[pairs[i]] for i, s in enumerate(p.steps) if s == U)


def dyck_from_av213(rho) -> DyckPath:
    """Inverse of av213_from_dyck, via the first-return decomposition U A D B.

    If rho_1 = m + 1 then B carries the labels 1..m (the last m entries) and
    A the labels above m + 1.
    """
    r = as_perm(rho)
    if not avoids(r, P213):
        raise PathError(f"{r} contains 213")

    def build(seq: tuple[int, ...]) -> list[str]:
        if not seq:
            return []
        m = seq[0] - 1
        a_part, b_part = seq[1:len(seq) - m], seq[len(seq) - m:]
        return [U, *build(tuple(standardize(a_part))), D, *build(tuple(b_part))]

    return DyckPath(build(tuple(r)))


def contains_UH2D(path) -> bool:
    seen_u = seen_uh = False
    for s in path.steps:
        if s == U:
            seen_u = True
        elif s == H and seen_u:
            seen_uh = True
        elif s == D and seen_uh:
            return True
    return False


def avoids_UH2D(path) -> bool:
    """No U, H, D at increasing positions."""
    p = path if isinstance(path, _Path) else SchroderPath(path)
    return not contains_UH2D(p)


def has_dyck_core_shape(path) -> bool:
    """Structural test: H^a Q H^b with Q a Dyck path (no H strictly inside Q)."""
    st = path.steps
    i, j = 0, len(st)
    while i < j and st[i] == H:
        i += 1
    while j > i and st[j - 1] == H:
        j -= 1
    return H not in st[i:j]


def split_schroder(path) -> tuple[int, DyckPath, int]:
    """(a, Q, b) with path = H^a Q H^b; for an all-H path Q is empty and b = 0."""
    if not has_dyck_core_shape(path):
        raise PathError(f"{path} contains UH2D")
    st = path.steps
    i, j = 0, len(st)
    while i < j and st[i] == H:
        i += 1
    while j > i and st[j - 1] == H:
        j -= 1
    return i, DyckPath(st[i:j]), len(st) - j


# --- phi / psi ----------------------------------------------------------

def _require_sort_down(pi: Permutation) -> None:
    if len(pi) < 2 or pi[0] < pi[1]:
        raise ValueError(f"{pi} must start with a descent")
    if not is_sortable(pi, P123):
        raise ValueError(f"{pi} is not 123-sortable")


def phi(pi, *, check: bool = True) -> Permutation:
    """Insert the new maximum n after n-1, or after n-2 when pi starts with n-1."""
    p = as_perm(pi)
    if check:
        _require_sort_down(p)
    n = len(p) + 1
    anchor = n - 2 if p[0] == n - 1 else n - 1
    out: list[int] = []
    for v in p:
        out.append(v)
        if v == anchor:
            out.append(n)
    return Permutation(out)


def psi(pi) -> Permutation:
    """Delete the maximum."""
    p = as_perm(pi)
    return delete_value(p, len(p))


# --- f: Sort_n(123) <-> UH2D-avoiding Schroder paths ---------------------

def schroder_from_sortable123(pi, *, check: bool = True) -> SchroderPath:
    p = as_perm(pi)
    if not p:
        raise ValueError("needs a nonempty permutation")
    if check and not is_sortable(p, P123):
        raise ValueError(f"{p} is not 123-sortable")
    r, w = deflate_leading_run(p)
    v = list(w)
    s = 0
    while v[0] != max(v):
        v.remove(max(v))
        s += 1
    rho = standardize(v)
    core = dyck_from_av213(rho[1:]) if len(rho) > 1 else DyckPath()
    return SchroderPath.from_dyck(r, core, s)


def sortable123_from_schroder(path) -> Permutation:
    P = path if isinstance(path, SchroderPath) else SchroderPath(path)
    if contains_UH2D(P):
        raise PathError(f"{P} contains UH2D")
    a, core, b = split_schroder(P)
    if not core.steps:
        return Permutation.identity(P.semilength + 1)
    sigma = av213_from_dyck(core)
    rho = Permutation._trusted((len(sigma) + 1, *sigma))
    for _ in range(b):
        rho = phi(rho, check=False)
    return inflate(rho, 1, a + 1)


# --- enumeration of paths -----------------------------------------------

def iter_dyck_paths(semilength: int) -> Iterator[DyckPath]:
    def rec(prefix, up, down):
        if up == down == semilength:
            yield DyckPath(prefix)
            return
        if up < semilength:
            yield from rec(prefix + (U,), up + 1, down)
        if down < up:
            yield from rec(prefix + (D,), up, down + 1)

    yield from rec((), 0, 0)


def iter_schroder_paths(semilength: int) -> Iterator[SchroderPath]:
    def rec(prefix, level, left):
        # ``left`` = semilength still to spend; a U costs 1 and needs a later D
        if left == 0:
            if level == 0:
                yield SchroderPath(prefix)
            else:
                yield from rec(prefix + (D,), level - 1, 0)
            return
        yield from rec(prefix + (U,), level + 1, left - 1)
        yield from rec(prefix + (H,), level, left - 1)
        if level > 0:
            yield from rec(prefix + (D,), level - 1, left)

    yield from rec((), 0, semilength)


def count_uh2d_avoiding(semilength: int) -> int:
    if semilength < 0:
        return 0
    return sum(1 for p in iter_schroder_paths(semilength) if avoids_UH2D(p))


# --- rendering (presentation only) --------------------------------------

def render_ascii(path, labels: Iterable | None = None) -> str:
    """Draw the path on a character grid; H occupies two columns."""
    st = path.steps
    h = max(1, max(path.heights()))
    width = sum(2 if s == H else 1 for s in st)
    grid = [[" "] * width for _ in range(h)]
    x = y = 0
    for s in st:
        if s == U:
            grid[y][x] = "/"
            y += 1
            x += 1
        elif s == D:
            y -= 1
            grid[y][x] = "\\"
            x += 1
        else:
            grid[y][x] = grid[y][x + 1] = "_"
            x += 2
    lines = ["".join(row).rstrip() for row in reversed(grid)]
    if labels is not None:
        lines.append("labels: " + " ".join(str(v) for v in labels))
    return "\n".join(lines)


def render_svg(path, labels: Iterable | None = None, unit: int = 20) -> str:
    st = path.steps
    width = sum(2 if s == H else 1 for s in st)
    h = max(path.heights())
    pts = [(0, 0)]
    for s in st:
        x, y = pts[-1]
        pts.append((x + (2 if s == H else 1), y + (s == U) - (s == D)))
    W, Hh = (width + 2) * unit, (h + 3) * unit

    def tx(p):
        return (p[0] + 1) * unit, Hh - (p[1] + 1) * unit

    poly = " ".join(f"{a},{b}" for a, b in map(tx, pts))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{Hh}">',
        f'<line x1="{unit}" y1="{Hh - unit}" x2="{W - unit}" y2="{Hh - unit}" stroke="#bbb"/>',
        f'<polyline points="{poly}" fill="none" stroke="black" stroke-width="2"/>',
    ]
    for p in pts:
        cx, cy = tx(p)
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="3"/>')
    if labels is not None:
        ups = [i for i, s in enumerate(st) if s in (U, H)]
        for lab, i in zip(labels, ups):
            cx, cy = tx(pts[i])
            parts.append(f'<text x="{cx}" y="{cy - 6}" font-size="12" font-weight="bold">{lab}</text>')
    parts.append("</svg>")
    return "\n".join(parts)


def sort_down(n: int, sortable: Iterable[Permutation]) -> list[Permutation]:
    """Members of Sort^down_n: sortable and starting with a descent."""
    return [p for p in sortable if len(p) == n and n >= 2 and p[0] > p[1]]


def ltr_count(p) -> int:
    return len(ltr_maxima(p))
