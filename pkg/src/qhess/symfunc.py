"""Degree-n symmetric functions over Z[q].

Values are sparse maps from partitions of n to QPoly coefficients, tagged
with the basis they are written in (h = complete homogeneous, e = elementary,
m = monomial, s = Schur).  The basis is part of the value: mixing bases in
arithmetic is an error, never an implicit conversion.

All algorithms downstream live in the h basis.  The m and s bases exist only
as conversion targets, for comparison against the coloring oracle and for
positivity/unimodality reports:

* h -> m uses the count of nonnegative-integer matrices with prescribed row
  and column sums, e -> m the count of 0/1 matrices (computed by a small
  memoized recursion over rows);
* h -> s and s -> m use Kostka numbers, counted by brute-force enumeration of
  semistandard Young tableaux.

The two table families are independent of each other, which the test suite
exploits as a cross-check.  Tables are cached per degree, in memory and
optionally on disk (set QHESS_CACHE_DIR).  A concurrent race to build a table
is harmless: both writers compute identical values.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Tuple

from .qpoly import ZERO, ExactDivisionError, QPoly

Partition = Tuple[int, ...]

DEFAULT_CONVERSION_BOUND = 9

CACHE_DIR_ENV = "QHESS_CACHE_DIR"


class BasisError(ValueError):
    """Operation applied in a basis it is not defined for."""


class DegreeBoundError(ValueError):
    """Conversion requested above the configured degree bound."""


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


def is_partition(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Partition, ...]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("negative weight")
    if n == 0:
        return ((),)

    def gen(rem, cap):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def sort_parts(parts: Iterable[int]) -> Partition:
    """Sort positive integers into partition (weakly decreasing) form."""
    out = tuple(sorted((p for p in parts if p != 0), reverse=True))
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {parts}")
    return out


def module_dimension(parts: Partition) -> int:
    """Dimension n!/prod(parts!) of the permutation module indexed by parts."""
    n = sum(parts)
    d = factorial(n)
    for p in parts:
        d //= factorial(p)
    return d


# ---------------------------------------------------------------------------
# the SymFunc value
# ---------------------------------------------------------------------------

BASES = ("h", "e", "m", "s")


class SymFunc:
    """A symmetric function of fixed degree over Z[q], in a tagged basis.

    Treated as immutable: the term dict is never mutated after construction.
    """

    __slots__ = ("degree", "basis", "terms")

    def __init__(self, degree: int, basis: str, terms: Dict[Partition, QPoly]):
        if basis not in BASES:
            raise BasisError(f"unknown basis {basis!r}")
        clean: Dict[Partition, QPoly] = {}
        for parts, coeff in terms.items():
            parts = tuple(parts)
            if not is_partition(parts) or sum(parts) != degree:
                raise ValueError(f"key {parts} is not a partition of {degree}")
            if isinstance(coeff, int):
                coeff = QPoly((coeff,))
            if not coeff.is_zero():
                clean[parts] = coeff
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, degree: int, basis: str = "h") -> "SymFunc":
        return cls(degree, basis, {})

    @classmethod
    def term(cls, parts: Iterable[int], coeff=1, basis: str = "h") -> "SymFunc":
        parts = tuple(parts)
        return cls(sum(parts), basis, {parts: coeff})

    # -- linear structure ------------------------------------------------------

    def _check_compatible(self, other: "SymFunc"):
        if self.basis != other.basis:
            raise BasisError(f"basis mismatch: {self.basis} vs {other.basis}")
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check_compatible(other)
        out = dict(self.terms)
        for parts, coeff in other.terms.items():
            out[parts] = out.get(parts, ZERO) + coeff
        return SymFunc(self.degree, self.basis, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        if isinstance(c, int):
            c = QPoly((c,))
        return SymFunc(
            self.degree, self.basis, {p: coeff * c for p, coeff in self.terms.items()}
        )

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        """Product via index concatenation; defined in the h and e bases."""
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis or self.basis not in ("h", "e"):
            raise BasisError(
                f"multiplication needs matching h or e bases, got "
                f"{self.basis!r} * {other.basis!r}"
            )
        out: Dict[Partition, QPoly] = {}
        for pa, ca in self.terms.items():
            for pb, cb in other.terms.items():
                key = sort_parts(pa + pb)
                prod = ca * cb
                out[key] = out.get(key, ZERO) + prod
        return SymFunc(self.degree + other.degree, self.basis, out)

    def exact_div(self, c: QPoly) -> "SymFunc":
        """Divide every coefficient exactly by c."""
        out = {}
        for parts in self.support():
            try:
                out[parts] = self.terms[parts].exact_div(c)
            except ExactDivisionError as exc:
                raise ExactDivisionError(
                    f"coefficient of {list(parts)} not divisible: "
                    f"{self.terms[parts]} / {c}",
                    self.terms[parts],
                    c,
                ) from exc
        return SymFunc(self.degree, self.basis, out)

    # -- involution and queries -------------------------------------------------

    def omega(self) -> "SymFunc":
        """The omega involution, as a relabeling h <-> e of the basis tag."""
        if self.basis not in ("h", "e"):
            raise BasisError(f"omega implemented on h and e bases, not {self.basis!r}")
        target = "e" if self.basis == "h" else "h"
        return SymFunc(self.degree, target, dict(self.terms))

    def coefficient(self, parts: Iterable[int]) -> QPoly:
        return self.terms.get(tuple(parts), ZERO)

    def support(self) -> Tuple[Partition, ...]:
        """Partitions with nonzero coefficient, descending lexicographic."""
        return tuple(sorted(self.terms, reverse=True))

    def layer(self, p: int) -> Dict[Partition, int]:
        """Integer coefficients of q**p, per partition (zeros dropped)."""
        out = {}
        for parts, coeff in self.terms.items():
            c = coeff.coeff(p)
            if c:
                out[parts] = c
        return out

    def max_q_degree(self) -> int:
        """Largest q-degree over all coefficients; -1 for the zero function."""
        return max((c.degree for c in self.terms.values()), default=-1)

    def rep_dimension(self) -> QPoly:
        """Graded dimension: sum of c_parts(q) * dim of the permutation module."""
        if self.basis != "h":
            raise BasisError("rep_dimension is defined on the h basis")
        total = ZERO
        for parts, coeff in self.terms.items():
            total = total + coeff * module_dimension(parts)
        return total

    def is_nonnegative(self) -> bool:
        return all(c.is_nonnegative() for c in self.terms.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.degree, self.basis, tuple(sorted(self.terms.items()))))

    # -- conversions -----------------------------------------------------------

    def to_monomial(self, bound: int = DEFAULT_CONVERSION_BOUND) -> "SymFunc":
        """Exact expansion in the monomial basis (from h, e, s or m)."""
        if self.basis == "m":
            return self
        if self.degree > bound:
            raise DegreeBoundError(
                f"degree {self.degree} above conversion bound {bound}"
            )
        if self.basis == "h":
            table = h_to_m_table(self.degree)
        elif self.basis == "e":
            table = e_to_m_table(self.degree)
        else:
            table = s_to_m_table(self.degree)
        out: Dict[Partition, QPoly] = {}
        for parts, coeff in self.terms.items():
            for mu, mult in table[parts].items():
                out[mu] = out.get(mu, ZERO) + coeff * mult
        return SymFunc(self.degree, "m", out)

    def to_schur(self, bound: int = DEFAULT_CONVERSION_BOUND) -> "SymFunc":
        """Exact expansion in the Schur basis (from the h basis)."""
        if self.basis == "s":
            return self
        if self.basis != "h":
            raise BasisError(f"to_schur converts from the h basis, not {self.basis!r}")
        if self.degree > bound:
            raise DegreeBoundError(
                f"degree {self.degree} above conversion bound {bound}"
            )
        table = h_to_s_table(self.degree)
        out: Dict[Partition, QPoly] = {}
        for parts, coeff in self.terms.items():
            for mu, mult in table[parts].items():
                out[mu] = out.get(mu, ZERO) + coeff * mult
        return SymFunc(self.degree, "s", out)

    # -- serialization and display ------------------------------------------------

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                {"partition": list(parts), "coeffs": self.terms[parts].to_json()}
                for parts in self.support()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymFunc":
        terms = {
            tuple(entry["partition"]): QPoly.from_json(entry["coeffs"])
            for entry in data["terms"]
        }
        return cls(data["degree"], data["basis"], terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({self.terms[p]}) * {self.basis}[{','.join(map(str, p))}]"
            for p in self.support()
        )

    def __repr__(self) -> str:
        return f"SymFunc({self.degree}, {self.basis!r}, {self.terms!r})"


def h_term(parts: Iterable[int], coeff=1) -> SymFunc:
    """Shorthand for a single h-basis term."""
    return SymFunc.term(sort_parts(parts), coeff, "h")


# ---------------------------------------------------------------------------
# transition tables
# ---------------------------------------------------------------------------


def _bounded_compositions(total, bounds):
    """Tuples a with 0 <= a_j <= bounds[j] and sum(a) == total."""
    if not bounds:
        if total == 0:
            yield ()
        return
    first = bounds[0]
    for a in range(min(total, first), -1, -1):
        for rest in _bounded_compositions(total - a, bounds[1:]):
            yield (a,) + rest


@lru_cache(maxsize=None)
def _matrix_count(rows: Partition, cols: Partition, zero_one: bool) -> int:
    """Matrices with the given row/column sums; 0/1 entries when zero_one.

    Columns are sorted descending on entry (counts are invariant under column
    permutation), which keeps the memo small.
    """
    if not rows:
        return 1 if not cols else 0
    caps = tuple(min(c, 1) for c in cols) if zero_one else cols
    total = 0
    for comp in _bounded_compositions(rows[0], caps):
        rest = tuple(
            sorted((c - a for c, a in zip(cols, comp) if c - a > 0), reverse=True)
        )
        total += _matrix_count(rows[1:], rest, zero_one)
    return total


def _count_ssyt(shape: Partition, content: Partition) -> int:
    """Kostka number: semistandard tableaux of the given shape and content.

    Plain cell-by-cell backtracking; rows weakly increase, columns strictly
    increase, entry v appears content[v-1] times.
    """
    if sum(shape) != sum(content):
        return 0
    cells = [(r, c) for r, row_len in enumerate(shape) for c in range(row_len)]
    remaining = list(content)
    grid = [[0] * row_len for row_len in shape]
    nvals = len(content)
    count = 0

    def fill(pos):
        nonlocal count
        if pos == len(cells):
            count += 1
            return
        r, c = cells[pos]
        lo = grid[r][c - 1] if c > 0 else 1
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, nvals + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[r][c] = v
            fill(pos + 1)
            remaining[v - 1] += 1

    fill(0)
    return count


def _cache_dir():
    return os.environ.get(CACHE_DIR_ENV)


def _load_table(kind: str, n: int):
    directory = _cache_dir()
    if not directory:
        return None
    path = os.path.join(directory, f"{kind}_{n}.json")
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        raw = json.load(fh)
    return {
        _parts_from_key(outer): {
            _parts_from_key(inner): mult for inner, mult in row.items()
        }
        for outer, row in raw.items()
    }


def _save_table(kind: str, n: int, table):
    directory = _cache_dir()
    if not directory:
        return
    os.makedirs(directory, exist_ok=True)
    raw = {
        _parts_key(outer): {_parts_key(inner): mult for inner, mult in row.items()}
        for outer, row in table.items()
    }
    path = os.path.join(directory, f"{kind}_{n}.json")
    with open(path, "w") as fh:
        json.dump(raw, fh, sort_keys=True)


def _parts_key(parts: Partition) -> str:
    return ",".join(map(str, parts)) if parts else "-"


def _parts_from_key(key: str) -> Partition:
    return () if key == "-" else tuple(int(p) for p in key.split(","))


_TABLE_MEMO: Dict[Tuple[str, int], dict] = {}


def _table(kind: str, n: int, build):
    key = (kind, n)
    table = _TABLE_MEMO.get(key)
    if table is None:
        table = _load_table(kind, n)
        if table is None:
            table = build(n)
            _save_table(kind, n, table)
        _TABLE_MEMO[key] = table
    return table


def h_to_m_table(n: int):
    """lam -> {mu: number of nonnegative-integer matrices, margins (lam, mu)}."""
    return _table(
        "h2m",
        n,
        lambda n: {
            lam: {
                mu: c
                for mu in partitions(n)
                if (c := _matrix_count(lam, mu, False))
            }
            for lam in partitions(n)
        },
    )


def e_to_m_table(n: int):
    """lam -> {mu: number of 0/1 matrices with margins (lam, mu)}."""
    return _table(
        "e2m",
        n,
        lambda n: {
            lam: {
                mu: c
                for mu in partitions(n)
                if (c := _matrix_count(lam, mu, True))
            }
            for lam in partitions(n)
        },
    )


def kostka_table(n: int):
    """(shape mu, content lam) -> Kostka number, from SSYT enumeration."""
    return _table(
        "kostka",
        n,
        lambda n: {
            mu: {
                lam: c for lam in partitions(n) if (c := _count_ssyt(mu, lam))
            }
            for mu in partitions(n)
        },
    )


def kostka(mu: Partition, lam: Partition) -> int:
    return kostka_table(sum(mu)).get(tuple(mu), {}).get(tuple(lam), 0)


def h_to_s_table(n: int):
    """lam -> {mu: K(mu, lam)}, the h -> s transition."""
    by_shape = kostka_table(n)
    out: Dict[Partition, Dict[Partition, int]] = {lam: {} for lam in partitions(n)}
    for mu, row in by_shape.items():
        for lam, mult in row.items():
            out[lam][mu] = mult
    return out


def s_to_m_table(n: int):
    """mu -> {nu: K(mu, nu)}, the s -> m transition."""
    return kostka_table(n)
