"""Generalized Hessenberg functions and their combinatorial calculus.

A generalized Hessenberg function is a map h on I ∪ {n}, for a subset I of
[n-1], taking values in I ∪ {n}, with h(i) >= i and h weakly increasing.
The ordinary case is I = [n-1], written as the value list (h(1), ..., h(n)).

This module owns validation, completion to an ordinary function, the domain
deletion and value shift operators, reducible splitting, the dimension and
fixed point counts, transposition, and deterministic enumeration.  Everything
is a pure function on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator, Optional, Tuple

MAX_ENUMERATE_N = 12


class HessenbergError(ValueError):
    """Invalid function data; the message names every violated clause."""


class OperatorError(ValueError):
    """A kappa/tau operator applied outside its domain of definition."""


@dataclass(frozen=True)
class GenHessFn:
    """A generalized Hessenberg function.

    ``values`` lists h on the domain points in ascending argument order and
    then h(n) = n as the final entry.  Ordinary functions are the special
    case domain = (1, ..., n-1); for those ``values`` is the familiar tuple
    (h(1), ..., h(n)).
    """

    n: int
    domain: Tuple[int, ...]
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "values", tuple(self.values))
        problems = []
        if self.n < 1:
            problems.append(f"ambient n={self.n} must be positive")
        if any(
            self.domain[i] >= self.domain[i + 1] for i in range(len(self.domain) - 1)
        ):
            problems.append("domain not strictly increasing")
        if any(not 1 <= d <= self.n - 1 for d in self.domain):
            problems.append(f"domain not within [n-1] = [{self.n - 1}]")
        if len(self.values) != len(self.domain) + 1:
            problems.append(
                f"expected {len(self.domain) + 1} values (domain then n), "
                f"got {len(self.values)}"
            )
            raise HessenbergError("; ".join(problems))
        allowed = set(self.domain) | {self.n}
        pts = self.points
        for p, v in zip(pts, self.values):
            if v not in allowed:
                problems.append(f"value h({p})={v} outside I u {{{self.n}}}")
            if v < p:
                problems.append(f"value h({p})={v} below argument {p}")
        for k in range(len(pts) - 1):
            if self.values[k] > self.values[k + 1]:
                problems.append(
                    f"non-monotone: h({pts[k]})={self.values[k]} > "
                    f"h({pts[k + 1]})={self.values[k + 1]}"
                )
        if problems:
            raise HessenbergError("; ".join(problems))

    # -- basic structure ---------------------------------------------------

    @property
    def points(self) -> Tuple[int, ...]:
        """The domain I together with n, ascending."""
        return self.domain + (self.n,)

    @property
    def r(self) -> int:
        return len(self.domain)

    def value_at(self, p: int) -> int:
        pts = self.points
        return self.values[pts.index(p)]

    def preimage(self, v: int) -> Tuple[int, ...]:
        return tuple(p for p, x in zip(self.points, self.values) if x == v)

    @property
    def is_ordinary(self) -> bool:
        return self.domain == tuple(range(1, self.n))

    @property
    def has_initial_segment_domain(self) -> bool:
        return self.domain == tuple(range(1, self.r + 1))

    def gaps(self) -> Tuple[int, ...]:
        """The block lengths i_k - i_(k-1), k = 1..r+1, with i_0=0, i_(r+1)=n."""
        pts = (0,) + self.points
        return tuple(pts[k + 1] - pts[k] for k in range(len(pts) - 1))

    def value_sum(self) -> int:
        return sum(self.values)

    # -- constructors --------------------------------------------------------

    @classmethod
    def ordinary(cls, values: Iterable[int]) -> "GenHessFn":
        values = tuple(values)
        return cls(len(values), tuple(range(1, len(values))), values)

    @classmethod
    def trivial(cls, n: int) -> "GenHessFn":
        """The unique function with empty domain (a single point variety)."""
        return cls(n, (), (n,))

    # -- geometry-derived counts -----------------------------------------------

    def dimension(self) -> int:
        """Sum over blocks of (block length) * (h(i_k) - i_k)."""
        prev = 0
        total = 0
        for p, v in zip(self.domain, self.values):
            total += (p - prev) * (v - p)
            prev = p
        return total

    def fixed_point_count(self) -> int:
        count = factorial(self.n)
        for g in self.gaps():
            count //= factorial(g)
        return count

    # -- completion, deletion, shifts ----------------------------------------------

    def complete(self) -> "GenHessFn":
        """The ordinary function taking h(i_k) on the whole block before i_k."""
        out = []
        idx = 0
        pts = self.points
        for i in range(1, self.n + 1):
            while pts[idx] < i:
                idx += 1
            out.append(self.values[idx])
        return GenHessFn.ordinary(out)

    def kappa(self, j: int) -> "GenHessFn":
        """Delete j from the domain, bumping values at preimages of j up to
        the next point of I u {n}."""
        if j not in self.domain:
            raise OperatorError(f"kappa: {j} not in domain {self.domain}")
        pts = self.points
        nxt = pts[pts.index(j) + 1]
        new_domain = tuple(d for d in self.domain if d != j)
        new_values = tuple(
            nxt if v == j else v
            for p, v in zip(pts, self.values)
            if p != j
        )
        return GenHessFn(self.n, new_domain, new_values)

    def tau_down(self, j: int) -> "GenHessFn":
        """Decrease h(j) by one."""
        if j not in self.domain:
            raise OperatorError(f"tau_down: {j} not in domain {self.domain}")
        idx = self.points.index(j)
        v = self.values[idx]
        if idx > 0 and self.values[idx - 1] >= v:
            raise OperatorError(
                f"tau_down at {j}: previous value h({self.points[idx - 1]})="
                f"{self.values[idx - 1]} not below h({j})={v}"
            )
        if v - 1 < j:
            raise OperatorError(f"tau_down at {j}: h({j})-1={v - 1} below argument")
        if v - 1 not in set(self.domain) | {self.n}:
            raise OperatorError(f"tau_down at {j}: {v - 1} outside I u {{{self.n}}}")
        new_values = self.values[:idx] + (v - 1,) + self.values[idx + 1 :]
        return GenHessFn(self.n, self.domain, new_values)

    def tau_up(self, j: int) -> "GenHessFn":
        """Increase h(j) by one."""
        if j not in self.domain:
            raise OperatorError(f"tau_up: {j} not in domain {self.domain}")
        idx = self.points.index(j)
        v = self.values[idx]
        if self.values[idx + 1] <= v:
            raise OperatorError(
                f"tau_up at {j}: next value h({self.points[idx + 1]})="
                f"{self.values[idx + 1]} not above h({j})={v}"
            )
        if v + 1 not in set(self.domain) | {self.n}:
            raise OperatorError(f"tau_up at {j}: {v + 1} outside I u {{{self.n}}}")
        new_values = self.values[:idx] + (v + 1,) + self.values[idx + 1 :]
        return GenHessFn(self.n, self.domain, new_values)

    # -- reducibility ------------------------------------------------------------

    def reducible_point(self) -> Optional[int]:
        """Smallest i in the domain with h(i) = i, if any."""
        for p, v in zip(self.domain, self.values):
            if v == p:
                return p
        return None

    @property
    def is_irreducible(self) -> bool:
        return self.reducible_point() is None

    def split_reducible(self) -> Optional[Tuple["GenHessFn", "GenHessFn", int]]:
        """Split at the smallest i with h(i) = i, or None when irreducible.

        Returns (left part on ambient i, shifted right part on ambient n-i, i).
        """
        i = self.reducible_point()
        if i is None:
            return None
        left_domain = tuple(d for d in self.domain if d < i)
        left_values = tuple(self.value_at(d) for d in left_domain) + (i,)
        right_domain = tuple(d - i for d in self.domain if d > i)
        right_values = tuple(self.value_at(d) - i for d in self.domain if d > i) + (
            self.n - i,
        )
        return (
            GenHessFn(i, left_domain, left_values),
            GenHessFn(self.n - i, right_domain, right_values),
            i,
        )

    # -- transposition -----------------------------------------------------------

    def transpose(self) -> "GenHessFn":
        """Transpose of an ordinary function; an involution."""
        if not self.is_ordinary:
            raise OperatorError("transpose is defined for ordinary functions")
        n = self.n
        out = []
        for i in range(1, n + 1):
            j = next(k for k in range(1, n + 1) if self.values[k - 1] >= n - i + 1)
            out.append(n + 1 - j)
        return GenHessFn.ordinary(out)

    # -- text and JSON forms --------------------------------------------------------

    def to_text(self) -> str:
        if self.is_ordinary:
            return ",".join(map(str, self.values))
        domain = ",".join(map(str, self.domain))
        values = ",".join(map(str, self.values))
        return f"n={self.n}; I={domain}; h={values}"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "domain": list(self.domain),
            "values": list(self.values),
        }

    @classmethod
    def from_json(cls, data: dict) -> "GenHessFn":
        return cls(data["n"], tuple(data["domain"]), tuple(data["values"]))

    def __str__(self) -> str:
        return self.to_text()


def parse(text: str) -> GenHessFn:
    """Parse the text grammar: ordinary "2,3,3" or "n=4; I=1,2; h=2,4,4"."""
    text = text.strip()
    try:
        if "=" not in text:
            values = tuple(int(v) for v in text.strip("() ").split(","))
            return GenHessFn.ordinary(values)
        fields = {}
        for segment in text.split(";"):
            key, _, val = segment.partition("=")
            fields[key.strip()] = val.strip()
        missing = {"n", "I", "h"} - set(fields)
        if missing:
            raise HessenbergError(f"missing fields: {sorted(missing)}")
        n = int(fields["n"])
        domain = (
            tuple(int(d) for d in fields["I"].split(",")) if fields["I"] else ()
        )
        values = tuple(int(v) for v in fields["h"].split(","))
        return GenHessFn(n, domain, values)
    except HessenbergError:
        raise
    except ValueError as exc:
        raise HessenbergError(f"cannot parse {text!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------


def banded_fn(n: int, k: int) -> GenHessFn:
    """The ordinary function i -> min(i + k, n)."""
    return GenHessFn.ordinary(tuple(min(i + k, n) for i in range(1, n + 1)))


def permutohedral_fn(n: int) -> GenHessFn:
    return banded_fn(n, 1)


def cap_first_fn(n: int, r: int) -> GenHessFn:
    """Domain [r] with h(1) = r and h(i) = n for 2 <= i <= r."""
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    values = (r,) + (n,) * r
    return GenHessFn(n, tuple(range(1, r + 1)), values)


def two_level_fn(n: int, low: int, m: int) -> GenHessFn:
    """Domain [n-m] with value n-m on the first ``low`` points and n after."""
    if not (0 <= low and 1 <= m and low + m <= n):
        raise ValueError(f"need 0 <= low, 1 <= m, low + m <= n; got ({low}, {m}, {n})")
    size = n - m
    values = tuple(size if i <= low else n for i in range(1, size + 1)) + (n,)
    return GenHessFn(n, tuple(range(1, size + 1)), values)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def enumerate_on_domain(
    n: int, domain: Tuple[int, ...], bound: int = MAX_ENUMERATE_N
) -> Iterator[GenHessFn]:
    """Every valid function on the given domain, values in ascending lex order."""
    if n > bound:
        raise ValueError(f"enumeration bound exceeded: n={n} > {bound}")
    domain = tuple(domain)
    pts = domain + (n,)
    allowed = sorted(set(domain) | {n})

    def gen(idx, floor):
        if idx == len(pts):
            yield ()
            return
        p = pts[idx]
        for v in allowed:
            if v < max(p, floor):
                continue
            for rest in gen(idx + 1, v):
                yield (v,) + rest

    for values in gen(0, 0):
        yield GenHessFn(n, domain, values)


def enumerate_ordinary(n: int, bound: int = MAX_ENUMERATE_N) -> Iterator[GenHessFn]:
    yield from enumerate_on_domain(n, tuple(range(1, n)), bound)


def enumerate_generalized(n: int, bound: int = MAX_ENUMERATE_N) -> Iterator[GenHessFn]:
    """Every generalized function on every domain, domains in lex order."""
    if n > bound:
        raise ValueError(f"enumeration bound exceeded: n={n} > {bound}")
    domains = []
    for size in range(0, n):
        domains.extend(combinations(range(1, n), size))
    for domain in sorted(domains):
        yield from enumerate_on_domain(n, domain, bound)


def enumerate_initial_segment(
    n: int, bound: int = MAX_ENUMERATE_N
) -> Iterator[GenHessFn]:
    """Functions whose domain is an initial segment [r], r = 0..n-1."""
    if n > bound:
        raise ValueError(f"enumeration bound exceeded: n={n} > {bound}")
    for r in range(0, n):
        yield from enumerate_on_domain(n, tuple(range(1, r + 1)), bound)
