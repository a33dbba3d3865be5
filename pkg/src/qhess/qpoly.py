"""Exact arithmetic in Z[q].

Everything downstream (symmetric function coefficients, Poincare polynomials,
the chromatic oracle) is linear algebra over this ring, so coefficients are
plain Python ints (arbitrary precision) and every operation is exact.  A
polynomial is stored as a trimmed tuple of coefficients, ascending in q, so
that structural equality coincides with mathematical equality.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""

    def __init__(self, message, dividend=None, divisor=None):
        super().__init__(message)
        self.dividend = dividend
        self.divisor = divisor


class QPoly:
    """A polynomial in q with integer coefficients.

    Immutable.  ``coeffs[i]`` is the coefficient of ``q**i``; trailing zeros
    are stripped, and the zero polynomial has an empty coefficient tuple.
    All operations are pure, so values are safe to share between threads.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        end = len(cs)
        while end > 0 and cs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs[:end]))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def coeff(self, k: int) -> int:
        """Coefficient of q**k (0 beyond the degree)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def exact_div(self, divisor) -> "QPoly":
        """Divide exactly, raising ExactDivisionError on any remainder."""
        divisor = _coerce(divisor)
        if divisor is NotImplemented or divisor.is_zero():
            raise ExactDivisionError("division by zero", self, divisor)
        if self.is_zero():
            return ZERO
        rem = list(self.coeffs)
        dv = divisor.coeffs
        lead = dv[-1]
        dq = len(rem) - len(dv)
        if dq < 0:
            raise ExactDivisionError(
                f"nonzero remainder: {self} / {divisor}", self, divisor
            )
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(dv) - 1]
            if c % lead != 0:
                raise ExactDivisionError(
                    f"nonzero remainder: {self} / {divisor}", self, divisor
                )
            f = c // lead
            quot[k] = f
            if f:
                for i, d in enumerate(dv):
                    rem[k + i] -= f * d
        if any(rem):
            raise ExactDivisionError(
                f"nonzero remainder: {self} / {divisor}", self, divisor
            )
        return QPoly(quot)

    # -- evaluations and predicates -----------------------------------------

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        if self.is_zero():
            return ZERO
        return QPoly((0,) * k + self.coeffs)

    def reverse(self, d: int) -> "QPoly":
        """Return q**d * p(1/q).  Requires deg(p) <= d."""
        if self.degree > d:
            raise ValueError(f"reverse window d={d} below degree {self.degree}")
        out = [0] * (d + 1)
        for i, c in enumerate(self.coeffs):
            out[d - i] = c
        return QPoly(out)

    def is_palindromic(self, d: int) -> bool:
        """True iff p equals its reversal in the window [0, d]."""
        return self == self.reverse(d)

    def is_unimodal(self) -> bool:
        """True iff the coefficients weakly rise then weakly fall."""
        cs = self.coeffs
        i = 1
        while i < len(cs) and cs[i - 1] <= cs[i]:
            i += 1
        while i < len(cs) and cs[i - 1] >= cs[i]:
            i += 1
        return i >= len(cs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    # -- serialization and display -------------------------------------------

    def to_json(self) -> list:
        """JSON form: array of decimal strings, ascending in q."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "QPoly":
        return cls(int(c) for c in data)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+{term}" if c > 0 else f"-{term}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"


def _coerce(value):
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly((value,))
    return NotImplemented


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def q_power(k: int) -> QPoly:
    return ONE.shift(k)


@lru_cache(maxsize=None)
def q_int(n: int) -> QPoly:
    """The q-integer 1 + q + ... + q**(n-1); zero for n = 0."""
    if n < 0:
        raise ValueError(f"q_int of negative {n}")
    return QPoly((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    """Product of q_int(k) for k = 1..n; one for n = 0."""
    if n < 0:
        raise ValueError(f"q_factorial of negative {n}")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


def q_binomial(m: int, k: int) -> QPoly:
    """Gaussian binomial [m choose k]_q via exact division of q-factorials."""
    if not 0 <= k <= m:
        raise ValueError(f"q_binomial needs 0 <= k <= m, got ({m}, {k})")
    return q_factorial(m).exact_div(q_factorial(k) * q_factorial(m - k))
