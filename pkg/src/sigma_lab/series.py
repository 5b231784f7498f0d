"""Exact truncated power series and integer polynomials."""
from __future__ import annotations

from typing import Iterable, Sequence


class InexactDivision(ArithmeticError):
    pass


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class Polynomial:
    """Integer polynomial, coefficients listed from the constant term up."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim([int(c) for c in coeffs])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial([other])
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(m))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Polynomial":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        out = Polynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def series(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs, order)

    def __repr__(self) -> str:
        return f"Polynomial({self.coeffs})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or not mono) else ""
            terms.append(("-" if c < 0 else "+", body + mono))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {t}" for s, t in terms[1:])


def _as_poly(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, int):
        return Polynomial([p])
    raise TypeError(f"cannot treat {type(p).__name__} as a polynomial")


class PowerSeries:
    """A power series known exactly up to and including x^order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int], order: int):
        c = [int(v) for v in coeffs][: order + 1]
        c += [0] * (order + 1 - len(c))
        self.coeffs = c
        self.order = order

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerSeries):
            m = min(self.order, other.order)
            return self.coeffs[: m + 1] == other.coeffs[: m + 1]
        return NotImplemented

    def __repr__(self) -> str:
        return f"PowerSeries({self.coeffs}, order={self.order})"

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, int):
            return PowerSeries([other], self.order)
        if isinstance(other, Polynomial):
            return other.series(self.order)
        raise TypeError(f"cannot combine PowerSeries with {type(other).__name__}")

    def __add__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), n)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries((-a for a in self.coeffs), self.order)

    def __sub__(self, other) -> "PowerSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PowerSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                ai = a[i]
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PowerSeries":
        out = PowerSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, other) -> "PowerSeries":
        if isinstance(other, int):
            return self.exact_div_int(other)
        other = self._coerce(other)
        return self * other.reciprocal(min(self.order, other.order))

    def __rtruediv__(self, other) -> "PowerSeries":
        return self._coerce(other) / self

    def reciprocal(self, order: int | None = None) -> "PowerSeries":
        """1/self; the constant term must be a unit (+1 or -1)."""
        n = self.order if order is None else order
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise InexactDivision(f"constant term {c0} is not a unit")
        a = self.coeffs
        inv = [0] * (n + 1)
        inv[0] = c0  # 1/c0 == c0 for units
        for k in range(1, n + 1):
            s = 0
            for i in range(1, k + 1):
                s += a[i] * inv[k - i]
            inv[k] = -s * c0
        return PowerSeries(inv, n)

    def exact_div_int(self, d: int) -> "PowerSeries":
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise InexactDivision(f"coefficient {c} not divisible by {d}")
            out.append(q)
        return PowerSeries(out, self.order)

    def div_x(self, k: int = 1) -> "PowerSeries":
        """Divide by x^k; the low k coefficients must vanish. Loses k orders of precision."""
        if any(self.coeffs[:k]):
            raise InexactDivision(f"series is not divisible by x^{k}")
        return PowerSeries(self.coeffs[k:], self.order - k)

    def shift(self, k: int = 1) -> "PowerSeries":
        """Multiply by x^k (precision is kept at the same order)."""
        return PowerSeries([0] * k + self.coeffs, self.order)

    def sqrt(self) -> "PowerSeries":
        """Square root with constant term 1, by Newton iteration over the integers.

        Each step computes (y + f/y) / 2; the halving must be exact, otherwise
        the root does not have integer coefficients and InexactDivision is raised.
        """
        if self.coeffs[0] != 1:
            raise InexactDivision("sqrt needs constant term 1")
        y = PowerSeries.one(0)
        prec = 1
        while prec <= self.order:
            prec = min(2 * prec, self.order + 1)
            f = PowerSeries(self.coeffs, prec - 1)
            y = PowerSeries(y.coeffs, prec - 1)
            y = (y + f * y.reciprocal()).exact_div_int(2)
        return PowerSeries(y.coeffs, self.order)


def series(coeffs: Sequence[int], order: int) -> PowerSeries:
    return PowerSeries(coeffs, order)


def catalan_gf(order: int) -> PowerSeries:
    """C(x) = (1 - sqrt(1 - 4x)) / (2x), computed to x^order."""
    s = PowerSeries([1, -4], order + 1).sqrt()
    return (1 - s).div_x().exact_div_int(2)
