"""Stack sorting devices: Knuth's Stacksort and the sigma-machine.

The sigma-machine is two stacks in series driven right-greedily. The first
stack's contents, read top to bottom, must avoid ``sigma``; the second stack
must stay increasing from top to bottom.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .perms import Permutation, as_perm, avoids, contains, occurs_at_start

PUSH_SIGMA = "Sσ"
PUSH_I = "SI"
OUT = "O"
MOVES = (PUSH_SIGMA, PUSH_I, OUT)
_MOVE_ALIASES = {"Sσ": PUSH_SIGMA, "Ss": PUSH_SIGMA, "Ssigma": PUSH_SIGMA, "SI": PUSH_I, "O": OUT}


def _check_sigma(sigma) -> Permutation:
    sigma = as_perm(sigma)
    if len(sigma) < 2:
        raise ValueError("the restriction pattern must have length at least 2")
    return sigma


class RestrictedStack:
    """A stack whose top-to-bottom reading must avoid a fixed pattern."""

    def __init__(self, restriction, contents: Sequence[int] = ()):
        self.restriction = _check_sigma(restriction)
        self.contents = list(contents)  # bottom to top

    def reading(self) -> tuple[int, ...]:
        return tuple(reversed(self.contents))

    def can_push(self, x: int) -> bool:
        return can_push(self.contents, x, self.restriction)

    def push(self, x: int) -> None:
        if not self.can_push(x):
            raise ValueError(f"pushing {x} would create {self.restriction}")
        self.contents.append(x)

    def pop(self) -> int:
        return self.contents.pop()

    def top(self) -> int:
        return self.contents[-1]

    def __len__(self) -> int:
        return len(self.contents)

    def __bool__(self) -> bool:
        return bool(self.contents)


def can_push(contents: Sequence[int], x: int, sigma) -> bool:
    """Whether ``x`` may go on top of a stack holding ``contents`` (bottom to top)."""
    reading = (x, *reversed(contents))
    return contains(reading, sigma) is None


def _can_push_fast(contents: list[int], x: int, sigma: Sequence[int]) -> bool:
    # contents already avoid sigma, so any new occurrence starts at x
    return not occurs_at_start((x, *reversed(contents)), sigma)


@dataclass
class MachineTrace:
    moves: list[tuple[str, int]] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        c = dict.fromkeys(MOVES, 0)
        for m, _ in self.moves:
            c[m] += 1
        return c

    def to_text(self) -> str:
        return "\n".join(f"{m} {v}" for m, v in self.moves)

    def to_json(self) -> str:
        return json.dumps(self.to_records(), ensure_ascii=False)

    def to_records(self) -> list[dict]:
        return [{"step": i, "move": m, "value": v} for i, (m, v) in enumerate(self.moves, 1)]

    @classmethod
    def from_text(cls, text: str) -> "MachineTrace":
        moves = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            try:
                m, v = line.split()
                moves.append((_MOVE_ALIASES[m], int(v)))
            except (ValueError, KeyError):
                raise ValueError(f"bad trace line {lineno}: {line!r}") from None
        return cls(moves)

    @classmethod
    def from_json(cls, text: str) -> "MachineTrace":
        records = sorted(json.loads(text), key=lambda r: r["step"])
        return cls([(_MOVE_ALIASES[r["move"]], int(r["value"])) for r in records])

    def replay(self, pi) -> Permutation:
        """Re-execute the moves against ``pi``; raises if any move is illegal."""
        pi = list(pi)
        i = 0
        s_sigma: list[int] = []
        s_inc: list[int] = []
        out: list[int] = []
        for m, v in self.moves:
            if m == PUSH_SIGMA:
                if i >= len(pi) or pi[i] != v:
                    raise ValueError(f"Sσ {v} does not match the next input")
                s_sigma.append(pi[i])
                i += 1
            elif m == PUSH_I:
                if not s_sigma or s_sigma[-1] != v:
                    raise ValueError(f"SI {v} does not match TOP(Stack_σ)")
                s_inc.append(s_sigma.pop())
            else:
                if not s_inc or s_inc[-1] != v:
                    raise ValueError(f"O {v} does not match TOP(Stack_I)")
                out.append(s_inc.pop())
        if i != len(pi) or s_sigma or s_inc:
            raise ValueError("trace does not consume the whole input")
        return Permutation(out)


def stacksort(pi) -> Permutation:
    """One pass through an increasing stack (Knuth)."""
    stack: list[int] = []
    out: list[int] = []
    for x in as_perm(pi):
        while stack and x > stack[-1]:
            out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return Permutation(out)


def first_pass(pi, sigma, *, fast: bool = False) -> Permutation:
    """Output of one right-greedy pass through the sigma-avoiding stack."""
    sigma = _check_sigma(sigma)
    test = _can_push_fast if fast else can_push
    stack: list[int] = []
    out: list[int] = []
    for x in as_perm(pi):
        while not test(stack, x, sigma):
            out.append(stack.pop())
        stack.append(x)
    out.extend(reversed(stack))
    return Permutation(out)


def run_machine(pi, sigma) -> tuple[Permutation, MachineTrace]:
    """Run the sigma-machine literally, recording every move."""
    sigma = _check_sigma(sigma)
    pi = as_perm(pi)
    s_sigma: list[int] = []
    s_inc: list[int] = []
    out: list[int] = []
    moves: list[tuple[str, int]] = []

    def to_second_or_out():
        if not s_inc or s_sigma[-1] < s_inc[-1]:
            v = s_sigma.pop()
            s_inc.append(v)
            moves.append((PUSH_I, v))
        else:
            v = s_inc.pop()
            out.append(v)
            moves.append((OUT, v))

    i = 0
    n = len(pi)
    while i < n:
        if can_push(s_sigma, pi[i], sigma):
            s_sigma.append(pi[i])
            moves.append((PUSH_SIGMA, pi[i]))
            i += 1
        else:
            to_second_or_out()
        assert avoids(s_sigma[::-1], sigma)
    while s_sigma:
        to_second_or_out()
    while s_inc:
        v = s_inc.pop()
        out.append(v)
        moves.append((OUT, v))
    return Permutation(out), MachineTrace(moves)


def is_sortable(pi, sigma) -> bool:
    """True iff the sigma-machine outputs the identity on ``pi``."""
    out, _ = run_machine(pi, sigma)
    return all(v == i for i, v in enumerate(out, 1))


def is_sortable_two_pass(pi, sigma, *, fast: bool = True) -> bool:
    """Sortability via the first pass alone: its output must avoid 231."""
    return avoids(first_pass(pi, sigma, fast=fast), (2, 3, 1))
