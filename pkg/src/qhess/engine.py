"""Evaluators for the S_n-equivariant Poincare polynomial of X_h.

Three independent routes compute the same h-basis symmetric function:

* ``alg1`` rewrites an ordinary function toward the permutohedral one,
  splitting off reducible blocks as products along the way;
* ``alg2`` peels the largest domain point of an initial-segment function,
  through projective-bundle and blowup identities, down to projective space;
* ``admissible`` expands the full branch tree of weighted rewrite sequences
  and sums weighted products of permutohedral values over the terminal
  functions.

``general`` extends ``alg1`` to arbitrary domains: delete forgettable domain
points (Grassmannian bundles) first, then complete to an ordinary function
and divide the result exactly by the product of block q-factorials.

Every evaluator memoizes on the function value, keyed also by the evaluator
name, so the agreement tests never silently read one another's cache.  Memo
writes are idempotent (same key, same value), hence harmless under
concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .hessfn import GenHessFn, two_level_fn
from .qpoly import ONE, Q, QPoly, q_factorial, q_int
from .symfunc import Partition, SymFunc, h_term, sort_parts


@dataclass(frozen=True)
class ModifyStep:
    """One exact rewrite of F(h) at a pivot j with h(j) = h(j+1) != j+1.

    ``terms`` lists (multiplier, successor) pairs summing to F(h):
    two successors when j has no preimage, three when it has one.
    """

    pivot: int
    case: str
    terms: Tuple[Tuple[QPoly, GenHessFn], ...]


def modification_at(h: GenHessFn, j: int) -> ModifyStep:
    """The rewrite of F(h) at pivot j; requires h(j) = h(j+1) != j+1 and
    j, j+1 both in the domain, with h strictly larger at j than before it."""
    if j not in h.domain or j + 1 not in h.points:
        raise ValueError(f"pivot {j} invalid for {h}: j and j+1 must be points")
    vj = h.value_at(j)
    if h.value_at(j + 1) != vj or vj == j + 1:
        raise ValueError(f"pivot {j} invalid for {h}: needs h(j)=h(j+1)!=j+1")
    third = h.tau_down(j).tau_down(j + 1)
    pre = h.preimage(j)
    if not pre:
        return ModifyStep(
            j,
            "empty-preimage",
            ((q_int(2), h.tau_down(j)), (-Q, third)),
        )
    j0 = pre[0]
    return ModifyStep(
        j,
        "single-preimage",
        (
            (ONE, h.tau_down(j).tau_up(j0)),
            (-Q, third),
            (Q, h.tau_down(j0).tau_down(j)),
        ),
    )


def modify_step(h: GenHessFn) -> Optional[ModifyStep]:
    """The rewrite at the smallest pivot of an ordinary function, or None
    when no pivot exists (the function is at or below the permutohedral one)."""
    if not h.is_ordinary:
        raise ValueError("modify_step expects an ordinary function")
    for i in range(1, h.n):
        if h.values[i - 1] == h.values[i] and h.values[i - 1] != i + 1:
            return modification_at(h, i)
    return None


def _fixed_block_partition(h: GenHessFn) -> Partition:
    """Partition of n from the runs between fixed points of an ordinary h."""
    fixed = [p for p in range(1, h.n + 1) if h.values[p - 1] == p]
    prev = 0
    parts = []
    for p in fixed:
        parts.append(p - prev)
        prev = p
    return sort_parts(parts)


class Engine:
    """Memoizing evaluator collection.  Caches are keyed by evaluator name."""

    def __init__(self):
        self._memo: Dict[Tuple[str, GenHessFn], SymFunc] = {}
        self._q: Dict[int, SymFunc] = {}
        self._adm: Dict[GenHessFn, Dict[Partition, QPoly]] = {}

    # -- permutohedral values ------------------------------------------------

    def permutohedral_q(self, n: int) -> SymFunc:
        """F of the permutohedral function i -> min(i+1, n), by the
        recursion Q_n = [n]_q h_n + q * sum [n-j-1]_q h_(n-j) Q_j."""
        if n < 1:
            raise ValueError("n must be positive")
        cached = self._q.get(n)
        if cached is not None:
            return cached
        total = h_term((n,), q_int(n))
        for j in range(1, n - 1):
            piece = (h_term((n - j,)) * self.permutohedral_q(j)).scale(
                Q * q_int(n - j - 1)
            )
            total = total + piece
        self._q[n] = total
        return total

    def permutohedral_q_product(self, parts: Partition) -> SymFunc:
        """Product of permutohedral values over the parts of a partition."""
        result = None
        for p in sort_parts(parts):
            factor = self.permutohedral_q(p)
            result = factor if result is None else result * factor
        if result is None:
            raise ValueError("empty partition")
        return result

    # -- Algorithm 1: reduction to the permutohedral function ---------------------

    def alg1(self, h: GenHessFn) -> SymFunc:
        if not h.is_ordinary:
            raise ValueError("alg1 expects an ordinary function")
        key = ("alg1", h)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        split = h.split_reducible()
        if split is not None:
            left, right, _ = split
            result = self.alg1(left) * self.alg1(right)
        else:
            step = modify_step(h)
            if step is None:
                # irreducible with no pivot: the permutohedral function itself
                result = self.permutohedral_q(h.n)
            else:
                result = SymFunc.zero(h.n)
                for mult, succ in step.terms:
                    result = result + self.alg1(succ).scale(mult)
        self._memo[key] = result
        return result

    # -- the admissible-sequence expansion ------------------------------------

    def admissible_q_expansion(self, h: GenHessFn) -> Dict[Partition, QPoly]:
        """Coefficients d_lam with F(h) = sum d_lam * Q_lam, obtained by
        running the rewrite tree without reducible splitting until every
        branch reaches a function at or below the permutohedral one."""
        if not h.is_ordinary:
            raise ValueError("admissible expansion expects an ordinary function")
        cached = self._adm.get(h)
        if cached is not None:
            return cached
        step = modify_step(h)
        if step is None:
            result = {_fixed_block_partition(h): ONE}
        else:
            result = {}
            for mult, succ in step.terms:
                for parts, coeff in self.admissible_q_expansion(succ).items():
                    acc = result.get(parts)
                    term = mult * coeff
                    result[parts] = term if acc is None else acc + term
            result = {p: c for p, c in result.items() if not c.is_zero()}
        self._adm[h] = result
        return result

    def admissible(self, h: GenHessFn) -> SymFunc:
        key = ("adm", h)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        result = SymFunc.zero(h.n)
        for parts, coeff in self.admissible_q_expansion(h).items():
            result = result + self.permutohedral_q_product(parts).scale(coeff)
        self._memo[key] = result
        return result

    # -- Algorithm 2: reduction to projective space ------------------------------

    def alg2(self, h: GenHessFn, _steps: int = 0) -> SymFunc:
        if not h.has_initial_segment_domain:
            raise ValueError(
                f"alg2 expects an initial-segment domain, got {h.domain}"
            )
        key = ("alg2", h)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        n, r = h.n, h.r
        split = h.split_reducible()
        if r == 0:
            result = h_term((n,))
        elif split is not None:
            left, right, _ = split
            result = self.alg2(left) * self.alg2(right)
        elif r == 1:
            # irreducible with one domain point forces h(1) = n: projective space
            result = h_term((n,), q_int(n))
        else:
            # irreducible with r >= 2 forces h(r) = n
            pre = [p for p in h.domain if h.value_at(p) == r]
            if len(pre) == 0:
                result = self.alg2(h.kappa(r)).scale(q_int(n - r + 1))
            elif len(pre) == 1:
                j0 = pre[0]
                result = self.alg2(h.kappa(r)) + self.alg2(
                    h.tau_down(j0).kappa(r)
                ).scale(Q * q_int(n - r))
            else:
                if _steps > n * h.value_sum():
                    raise RuntimeError(
                        f"modification chain for {h} exceeded its step budget; "
                        "this indicates a termination bug"
                    )
                step = modification_at(h, self._chain_pivot(h))
                result = SymFunc.zero(n)
                for mult, succ in step.terms:
                    result = result + self.alg2(succ, _steps + 1).scale(mult)
        self._memo[key] = result
        return result

    @staticmethod
    def _chain_pivot(h: GenHessFn) -> int:
        """Follow r, min h^-1(r), min h^-1(min h^-1(r)), ... until a value
        with at most one preimage; that value is the modification pivot."""
        cur = h.r
        while True:
            cand = h.preimage(cur)[0]
            if len(h.preimage(cand)) <= 1:
                return cand
            cur = cand

    # -- arbitrary domains -------------------------------------------------------

    def general(self, h: GenHessFn) -> SymFunc:
        """F(h) for any valid h: delete forgettable domain points first
        (each contributes a Gaussian-binomial factor), then evaluate the
        completion and divide out the block q-factorials exactly."""
        key = ("general", h)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        multiplier = ONE
        work = h
        while True:
            deletable = self._deletable_point(work)
            if deletable is None:
                break
            j = deletable
            pts = (0,) + work.points
            k = pts.index(j)
            prev, nxt = pts[k - 1], pts[k + 1]
            multiplier = multiplier * q_factorial(nxt - prev).exact_div(
                q_factorial(j - prev) * q_factorial(nxt - j)
            )
            work = work.kappa(j)
        if work.r == 0:
            base = h_term((work.n,))
        else:
            base = self.alg1(work.complete())
            for g in work.gaps():
                base = base.exact_div(q_factorial(g))
        result = base.scale(multiplier)
        self._memo[key] = result
        return result

    @staticmethod
    def _deletable_point(h: GenHessFn) -> Optional[int]:
        """A domain point i_k with h(i_k) = h(next point) and no preimage;
        forgetting it is a Grassmannian bundle."""
        pts = h.points
        for k, j in enumerate(h.domain):
            if h.values[k] == h.values[k + 1] and not h.preimage(j):
                return j
        return None

    # -- the two-level family -----------------------------------------------------

    def two_level(self, n: int, low: int, m: int) -> SymFunc:
        """Direct engine value for the function with value n-m on the first
        ``low`` domain points of [n-m] and n afterwards."""
        return self.general(two_level_fn(n, low, m))

    def two_level_recursive(self, n: int, low: int, m: int) -> SymFunc:
        """The same value by the two-term recursion in (low, m), grounded in
        the closed forms for low = 0 (a partial flag variety) and
        low + m = n (a disjoint union of full flag varieties)."""
        if not (0 <= low and 1 <= m and low + m <= n):
            raise ValueError(f"invalid parameters ({low}, {m}, {n})")
        if low == 0:
            coeff = q_factorial(n).exact_div(q_factorial(m))
            return h_term((n,), coeff)
        if low + m == n:
            return h_term(sort_parts((low, n - low)), q_factorial(low))
        first = self.two_level_recursive(n, low - 1, m + 1).scale(q_int(low))
        d = m + 1 - low
        if d >= 0:
            second_mult = q_int(d).shift(low)
        else:
            # q^low * [d]_q extends to -q^(m+1) * [-d]_q for negative d
            second_mult = -q_int(-d).shift(m + 1)
        second = self.two_level_recursive(n, low, m + 1).scale(second_mult)
        return first + second


DEFAULT_ENGINE = Engine()


def permutohedral_q(n: int) -> SymFunc:
    return DEFAULT_ENGINE.permutohedral_q(n)


def poincare_alg1(h: GenHessFn) -> SymFunc:
    return DEFAULT_ENGINE.alg1(h)


def poincare_alg2(h: GenHessFn) -> SymFunc:
    return DEFAULT_ENGINE.alg2(h)


def poincare_admissible(h: GenHessFn) -> SymFunc:
    return DEFAULT_ENGINE.admissible(h)


def poincare_general(h: GenHessFn) -> SymFunc:
    return DEFAULT_ENGINE.general(h)


@dataclass(frozen=True)
class PoincarePoly:
    """A computed Poincare polynomial with its provenance."""

    fn: GenHessFn
    value: SymFunc
    method: str

    def dimension(self) -> int:
        return self.fn.dimension()

    def fixed_point_count(self) -> int:
        return self.fn.fixed_point_count()

    def to_json(self) -> dict:
        return {
            "function": self.fn.to_json(),
            "method": self.method,
            "dimension": self.dimension(),
            "fixed_points": self.fixed_point_count(),
            "value": self.value.to_json(),
        }


def compute(h: GenHessFn, method: str = "auto", engine: Engine = None) -> PoincarePoly:
    """Front-door evaluation: 'auto' routes ordinary input through alg1 and
    anything else through the general evaluator."""
    engine = engine or DEFAULT_ENGINE
    if method == "auto":
        method = "alg1" if h.is_ordinary else "general"
    evaluators = {
        "alg1": engine.alg1,
        "alg2": engine.alg2,
        "admissible": engine.admissible,
        "general": engine.general,
    }
    if method not in evaluators:
        raise ValueError(f"unknown method {method!r}")
    return PoincarePoly(h, evaluators[method](h), method)
