"""Executable checks tying the Poincare engine to independently computable facts.

Each check compares engine output against a closed form, an exhaustive
oracle, or a second engine route, and returns a CheckReport.  A failing
report always carries a witness (the offending input and both values) that
reproduces the failure when fed back to the same check.

Sweeps enumerate their input space exhaustively up to a bound.  They are
embarrassingly parallel: pass jobs > 1 to partition a sweep across worker
processes (each worker builds its own engine; values are pure).
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, List, Optional, Tuple

from .chromatic import DEFAULT_ORACLE_BOUND, csf
from .engine import DEFAULT_ENGINE, Engine
from .hessfn import (
    GenHessFn,
    banded_fn,
    cap_first_fn,
    enumerate_generalized,
    enumerate_initial_segment,
    enumerate_ordinary,
)
from .qpoly import QPoly, q_factorial, q_int
from .symfunc import DEFAULT_CONVERSION_BOUND, sort_parts


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check or one merged sweep."""

    check: str
    status: str  # "pass" or "fail"
    instances: int
    wall_time: float
    witness: Optional[dict] = None
    notes: Tuple[str, ...] = ()
    findings: Tuple[dict, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "status": self.status,
            "instances": self.instances,
            "wall_time": round(self.wall_time, 3),
            "witness": self.witness,
            "notes": list(self.notes),
            "findings": list(self.findings),
        }

    def summary(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.check}"
        head += f" (instances={self.instances}, {self.wall_time:.2f}s)"
        if self.witness is not None:
            head += f"\n  witness: {self.witness}"
        for note in self.notes:
            head += f"\n  note: {note}"
        for finding in self.findings:
            head += f"\n  finding: {finding}"
        return head


# ---------------------------------------------------------------------------
# single-instance checks
# ---------------------------------------------------------------------------

ItemResult = Tuple[bool, Optional[dict]]


def _sw_item(h: GenHessFn, engine: Engine, bound: int = DEFAULT_ORACLE_BOUND) -> ItemResult:
    lhs = engine.general(h).omega().to_monomial()
    rhs = csf(h, bound)
    if lhs == rhs:
        return True, None
    return False, {
        "input": h.to_text(),
        "engine": str(lhs),
        "oracle": str(rhs),
    }


def _multiplicities_item(h: GenHessFn, engine: Engine) -> ItemResult:
    f = engine.general(h)
    total = QPoly((1,))
    for i in h.domain:
        total = total * q_int(h.value_at(i) - i + 1)
    got_total = QPoly()
    for coeff in f.terms.values():
        got_total = got_total + coeff
    if got_total != total:
        return False, {
            "input": h.to_text(),
            "formula": "coefficient sum",
            "engine": str(got_total),
            "closed form": str(total),
        }
    if h.is_irreducible and h.r >= 1:
        expected = q_int(h.n)
        for i in h.domain[:-1]:
            expected = expected * q_int(h.value_at(i) - i)
        got = f.coefficient((h.n,))
        if got != expected:
            return False, {
                "input": h.to_text(),
                "formula": "trivial-module coefficient",
                "engine": str(got),
                "closed form": str(expected),
            }
    return True, None


def _degree1_expected(h: GenHessFn) -> Dict[tuple, int]:
    n, r = h.n, h.r
    counts = {(n,): 1}
    for i in range(1, r):
        prev = h.value_at(i - 1) if i >= 2 else 1  # h(0) reads as 1
        vi = h.value_at(i)
        if prev == i and vi == i + 1:
            beta = sort_parts((n - i, i))
        elif prev == vi == i + 1:
            beta = (n - 1, 1)
        else:
            beta = (n,)
        counts[beta] = counts.get(beta, 0) + 1
    return counts

def _degree1_item(h: GenHessFn, engine: Engine) -> ItemResult:
    got = engine.general(h).layer(1)
    want = _degree1_expected(h)
    if got == want:
        return True, None
    return False, {"input": h.to_text(), "engine": str(got), "closed form": str(want)}


def _flag_poly(n: int, r: int) -> QPoly:
    return q_factorial(n).exact_div(q_factorial(n - r))


def _low_degree_item(item: Tuple[GenHessFn, int], engine: Engine) -> ItemResult:
    h, k = item
    n, r = h.n, h.r
    if any(h.value_at(i) < min(i + k, n) for i in h.domain):
        return False, {"input": h.to_text(), "k": k, "error": "hypothesis violated"}
    f = engine.general(h)
    fp = _flag_poly(n, r)
    for p in range(k):
        want = {(n,): fp.coeff(p)} if fp.coeff(p) else {}
        got = f.layer(p)
        if got != want:
            return False, {
                "input": h.to_text(),
                "k": k,
                "degree": p,
                "engine": str(got),
                "flag value": str(want),
            }
    m = sum(1 for i in h.domain if h.value_at(i) == i + k < n)
    want = {(n,): fp.coeff(k)} if fp.coeff(k) else {}
    if m:
        want[(n,)] = want.get((n,), 0) - m
        want[(n - 1, 1)] = want.get((n - 1, 1), 0) + m
        want = {kk: v for kk, v in want.items() if v}
    got = f.layer(k)
    if got == want:
        return True, None
    return False, {
        "input": h.to_text(),
        "k": k,
        "degree": k,
        "engine": str(got),
        "closed form": str(want),
    }


def _schur_item(h: GenHessFn, engine: Engine, bound: int = DEFAULT_CONVERSION_BOUND) -> ItemResult:
    s = engine.general(h).to_schur(bound)
    for parts, coeff in s.terms.items():
        if not coeff.is_nonnegative() or not coeff.is_unimodal():
            return False, {
                "input": h.to_text(),
                "partition": list(parts),
                "coefficient": str(coeff),
            }
    return True, None


def _positivity_item(h: GenHessFn, engine: Engine) -> ItemResult:
    f = engine.general(h)
    for parts, coeff in f.terms.items():
        if not coeff.is_nonnegative():
            return False, {
                "input": h.to_text(),
                "partition": list(parts),
                "coefficient": str(coeff),
            }
    return True, None


def _structural_item(h: GenHessFn, engine: Engine) -> ItemResult:
    f = engine.general(h)
    dim = h.dimension()
    if f.max_q_degree() != dim:
        return False, {
            "input": h.to_text(),
            "invariant": "top degree",
            "engine": f.max_q_degree(),
            "dimension": dim,
        }
    fixed = f.rep_dimension().eval_at_one()
    if fixed != h.fixed_point_count():
        return False, {
            "input": h.to_text(),
            "invariant": "graded dimension at q=1",
            "engine": fixed,
            "fixed points": h.fixed_point_count(),
        }
    for parts, coeff in f.terms.items():
        if coeff != coeff.reverse(dim):
            return False, {
                "input": h.to_text(),
                "invariant": "palindromicity",
                "partition": list(parts),
                "coefficient": str(coeff),
            }
    return True, None


def _modular_item(h: GenHessFn, engine: Engine) -> ItemResult:
    """All applicable three-term relations [2]_q F(h) = F(up) + q F(down)."""
    n = h.n
    two = q_int(2)
    q = QPoly((0, 1))
    for j in range(1, n):
        vj, vj1 = h.values[j - 1], h.values[j]
        pre = h.preimage(j)
        if vj == vj1 and len(pre) == 1:
            j0 = pre[0]
            lhs = engine.alg1(h).scale(two)
            rhs = engine.alg1(h.tau_up(j0)) + engine.alg1(h.tau_down(j0)).scale(q)
        elif vj1 == vj + 1 > j + 1 and not pre:
            lhs = engine.alg1(h).scale(two)
            rhs = engine.alg1(h.tau_up(j)) + engine.alg1(h.tau_down(j + 1)).scale(q)
        else:
            continue
        if lhs != rhs:
            return False, {
                "input": h.to_text(),
                "j": j,
                "lhs": str(lhs),
                "rhs": str(rhs),
            }
    return True, None


def _three_way_item(h: GenHessFn, engine: Engine) -> ItemResult:
    a = engine.alg1(h)
    b = engine.alg2(h)
    if a != b:
        return False, {"input": h.to_text(), "alg1": str(a), "alg2": str(b)}
    if h.is_irreducible:
        c = engine.admissible(h)
        if a != c:
            return False, {"input": h.to_text(), "alg1": str(a), "admissible": str(c)}
    return True, None


def _blowup_item(h: GenHessFn, engine: Engine) -> ItemResult:
    """Both blowup identities, at every j where their hypotheses hold."""
    n, r = h.n, h.r
    q = QPoly((0, 1))
    for j in h.domain:
        j_plus = j + 1 if j < r else n
        pre = h.preimage(j)
        if h.value_at(j) == h.value_at(j_plus) and len(pre) == 1:
            j0 = pre[0]
            lhs = engine.general(h)
            rhs = engine.general(h.kappa(j)) + engine.general(
                h.tau_down(j0).kappa(j)
            ).scale(q * q_int(j_plus - j))
            if lhs != rhs:
                return False, {
                    "input": h.to_text(),
                    "identity": "center of codimension j+ - j + 1",
                    "j": j,
                    "lhs": str(lhs),
                    "rhs": str(rhs),
                }
        if j < r and h.value_at(j + 1) == h.value_at(j) + 1 > j + 1 and not pre:
            lhs = engine.general(h)
            rhs = engine.general(h.kappa(j)) + engine.general(
                h.kappa(j).tau_down(j + 1)
            ).scale(q)
            if lhs != rhs:
                return False, {
                    "input": h.to_text(),
                    "identity": "center of codimension 2",
                    "j": j,
                    "lhs": str(lhs),
                    "rhs": str(rhs),
                }
    return True, None


def _projective_bundle_item(h: GenHessFn, engine: Engine) -> ItemResult:
    """Deleting a forgettable unit-gap domain point divides F exactly."""
    pts = (0,) + h.points
    for k, j in enumerate(h.domain, start=1):
        if (
            j == pts[k - 1] + 1
            and h.value_at(j) == h.value_at(pts[k + 1])
            and not h.preimage(j)
        ):
            lhs = engine.general(h)
            rhs = engine.general(h.kappa(j)).scale(q_int(pts[k + 1] - pts[k - 1]))
            if lhs != rhs:
                return False, {
                    "input": h.to_text(),
                    "j": j,
                    "lhs": str(lhs),
                    "rhs": str(rhs),
                }
    return True, None


def _route_independence_item(h: GenHessFn, engine: Engine) -> ItemResult:
    a = engine.general(h)
    b = engine.alg2(h)
    if a == b:
        return True, None
    return False, {"input": h.to_text(), "general": str(a), "alg2": str(b)}


def _transpose_item(h: GenHessFn, engine: Engine) -> ItemResult:
    a = engine.alg1(h)
    b = engine.alg1(h.transpose())
    if a == b:
        return True, None
    return False, {"input": h.to_text(), "transpose": h.transpose().to_text(),
                   "F(h)": str(a), "F(h^t)": str(b)}


def _two_level_item(item: Tuple[int, int, int], engine: Engine) -> ItemResult:
    n, low, m = item
    direct = engine.two_level(n, low, m)
    recursive = engine.two_level_recursive(n, low, m)
    if direct == recursive:
        return True, None
    return False, {
        "n": n,
        "low": low,
        "m": m,
        "direct": str(direct),
        "recursion": str(recursive),
    }


def _cap_first_item(item: Tuple[int, int], engine: Engine) -> ItemResult:
    n, r = item
    f = engine.general(cap_first_fn(n, r))
    rest = {p: c for p, c in f.terms.items() if p != (n,)}
    coeff = q_factorial(n - 2).exact_div(q_factorial(n - r - 1)).shift(r - 1)
    if rest == {(n - 1, 1): coeff}:
        return True, None
    return False, {
        "n": n,
        "r": r,
        "engine (away from trivial)": {str(list(p)): str(c) for p, c in rest.items()},
        "closed form": str(coeff),
    }


def _degree_k_plus_1_item(item: Tuple[int, int], engine: Engine) -> ItemResult:
    n, k = item
    f = engine.alg1(banded_fn(n, k))
    got = f.layer(k + 1)
    route_a = (q_int(n) * q_factorial(k - 1) * q_int(k) ** (n - k)).coeff(k + 1)
    route_b = (q_factorial(k) * q_int(k + 1) ** (n - k)).coeff(k + 1)
    if k == 2:
        want = {(n,): sum(comb(n - 2, i) for i in range(4))}
        if n * n - 7 * n + 14:
            want[(n - 1, 1)] = n * n - 7 * n + 14
        if n - 4:
            want[(n - 2, 2)] = n - 4
        for i in range(3, n - 2):
            key = sort_parts((n - i, i))
            want[key] = want.get(key, 0) + 1
    else:
        want = {(n,): route_a}
        coeff = n * n - (k + 3) * n + 2 * k + 1
        if coeff:
            want[(n - 1, 1)] = coeff
    if route_b != sum(want.values()):
        return False, {
            "n": n,
            "k": k,
            "error": "route consistency",
            "coefficient-sum route": route_b,
            "display total": sum(want.values()),
        }
    if route_a != want[(n,)]:
        return False, {
            "n": n,
            "k": k,
            "error": "route consistency",
            "trivial-module route": route_a,
            "display value": want[(n,)],
        }
    if got != want:
        return False, {
            "n": n,
            "k": k,
            "engine": {str(list(p)): c for p, c in got.items()},
            "display": {str(list(p)): c for p, c in want.items()},
        }
    return True, None


def conjectured_two_row_coefficient(n: int, j: int) -> QPoly:
    """The conjectured coefficient of h_(n-j, j) in F of the k=2 banded function."""
    if not 1 <= j <= n // 2:
        raise ValueError(f"need 1 <= j <= n/2, got j={j}, n={n}")
    two = q_int(2)
    if 2 * j < n:
        base = ((q_int(n - j - 1) * q_int(j)) + (q_int(n - j) * q_int(j - 1))) * (
            two ** (n - 2)
        ).shift(1)
        d = QPoly()
        for t in range(1, j):
            d = d - (two ** (n - 2 * t - 1)).shift(t) * 2
        d = d - (two ** (n - 2 * j - 1)).shift(j)
        if n - 2 * j - 2 > 0:
            d = d + (two ** (n - 2 * j - 3)).shift(j + 1) * (n - 2 * j - 2)
        return base + d * q_int(n - j) * q_int(j)
    half = n // 2
    base = (q_int(half - 1) * q_int(half)) * (two ** (n - 2)).shift(1)
    d = QPoly()
    for t in range(1, half):
        d = d - (two ** (n - 2 * t - 1)).shift(t)
    return base + d * q_int(half) ** 2


def _conjecture_item(n: int, engine: Engine) -> ItemResult:
    f = engine.alg1(banded_fn(n, 2))
    for j in range(1, n // 2 + 1):
        got = f.coefficient((n - j, j))
        want = conjectured_two_row_coefficient(n, j)
        if got != want:
            return False, {
                "n": n,
                "j": j,
                "engine": str(got),
                "conjectured": str(want),
            }
    return True, None


# ---------------------------------------------------------------------------
# sweep machinery
# ---------------------------------------------------------------------------

_ITEM_CHECKS: Dict[str, Callable] = {
    "sw": _sw_item,
    "multiplicities": _multiplicities_item,
    "degree1": _degree1_item,
    "low-degree": _low_degree_item,
    "schur": _schur_item,
    "h-positivity": _positivity_item,
    "structural": _structural_item,
    "modular-law": _modular_item,
    "three-way": _three_way_item,
    "blowup": _blowup_item,
    "projective-bundle": _projective_bundle_item,
    "route-independence": _route_independence_item,
    "transpose-duality": _transpose_item,
    "two-level": _two_level_item,
    "cap-first": _cap_first_item,
    "degree-k1": _degree_k_plus_1_item,
    "conjecture-h2": _conjecture_item,
}


def _run_batch(args):
    """Worker entry point: run named item checks with a process-local engine."""
    name, items = args
    engine = Engine()
    checker = _ITEM_CHECKS[name]
    count = 0
    witnesses = []
    for item in items:
        count += 1
        ok, witness = checker(item, engine)
        if not ok:
            witnesses.append(witness)
    return count, witnesses


def _run_sweep(
    name: str,
    items: List,
    jobs: int = 1,
    engine: Optional[Engine] = None,
    notes: Tuple[str, ...] = (),
    collect_findings: bool = False,
) -> CheckReport:
    start = time.time()
    witnesses: List[dict] = []
    count = 0
    if jobs > 1 and len(items) > 1:
        chunks = [items[i::jobs] for i in range(jobs) if items[i::jobs]]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for c, w in pool.map(_run_batch, [(name, chunk) for chunk in chunks]):
                count += c
                witnesses.extend(w)
    else:
        engine = engine or DEFAULT_ENGINE
        checker = _ITEM_CHECKS[name]
        for item in items:
            count += 1
            ok, witness = checker(item, engine)
            if not ok:
                witnesses.append(witness)
    status = "pass" if not witnesses else "fail"
    return CheckReport(
        check=name,
        status=status,
        instances=count,
        wall_time=time.time() - start,
        witness=None if not witnesses else witnesses[0],
        notes=notes,
        findings=tuple(witnesses) if collect_findings else (),
    )


def _single(name: str, item, engine: Optional[Engine], **kwargs) -> CheckReport:
    start = time.time()
    engine = engine or DEFAULT_ENGINE
    ok, witness = _ITEM_CHECKS[name](item, engine, **kwargs)
    return CheckReport(
        check=name,
        status="pass" if ok else "fail",
        instances=1,
        wall_time=time.time() - start,
        witness=witness,
    )


# -- public single-input checks -----------------------------------------------


def check_sw(h: GenHessFn, engine: Engine = None, bound: int = DEFAULT_ORACLE_BOUND) -> CheckReport:
    return _single("sw", h, engine, bound=bound)


def check_multiplicities(h: GenHessFn, engine: Engine = None) -> CheckReport:
    if not h.has_initial_segment_domain:
        raise ValueError("multiplicity formulas need an initial-segment domain")
    return _single("multiplicities", h, engine)


def check_degree1(h: GenHessFn, engine: Engine = None) -> CheckReport:
    if not (h.has_initial_segment_domain and h.is_irreducible and h.r >= 1):
        raise ValueError("degree-1 formula needs an irreducible initial-segment domain")
    return _single("degree1", h, engine)


def check_low_degree(h: GenHessFn, k: int, engine: Engine = None) -> CheckReport:
    return _single("low-degree", (h, k), engine)


def check_schur(h: GenHessFn, engine: Engine = None, bound: int = DEFAULT_CONVERSION_BOUND) -> CheckReport:
    return _single("schur", h, engine, bound=bound)


def check_h_positivity(h: GenHessFn, engine: Engine = None) -> CheckReport:
    return _single("h-positivity", h, engine)


def check_degree_k_plus_1(n: int, k: int, engine: Engine = None) -> CheckReport:
    if not (k >= 2 and n >= k + 2):
        raise ValueError("need k >= 2 and n >= k + 2")
    report = _single("degree-k1", (n, k), engine)
    return CheckReport(
        check=report.check,
        status=report.status,
        instances=report.instances,
        wall_time=report.wall_time,
        witness=report.witness,
        notes=(_DEGREE_K1_NOTE,),
    )


_DEGREE_K1_NOTE = (
    "the trivial-module coefficient is read at exponent k+1, where the two "
    "closed-form routes (trivial-module product and coefficient-sum product) "
    "agree; they diverge at exponent 3 for k > 2, so each instance asserts "
    "their consistency at k+1"
)


def check_modular_law_sweep(max_n: int = 7, engine: Engine = None, jobs: int = 1) -> CheckReport:
    items = [h for n in range(2, max_n + 1) for h in enumerate_ordinary(n)]
    return _run_sweep("modular-law", items, jobs, engine)


def conjecture_h2_scan(max_n: int = 9, engine: Engine = None, jobs: int = 1) -> CheckReport:
    items = list(range(2, max_n + 1))
    report = _run_sweep(
        "conjecture-h2",
        items,
        jobs,
        engine,
        notes=(
            "conjecture scan: a failure would be a mathematical finding, "
            "not an engine bug",
            _DEGREE_K1_NOTE,
        ),
        collect_findings=True,
    )
    return report


# ---------------------------------------------------------------------------
# sweep registry for the CLI
# ---------------------------------------------------------------------------


def sweep_sw(max_n: int = 6, engine=None, jobs: int = 1) -> CheckReport:
    """Engine vs coloring oracle: generalized h below max_n, ordinary at max_n."""
    items = []
    for n in range(1, min(max_n, DEFAULT_ORACLE_BOUND) + 1):
        if n < max_n:
            items.extend(enumerate_generalized(n))
        else:
            items.extend(enumerate_ordinary(n))
    return _run_sweep("sw", items, jobs, engine)


def sweep_multiplicities(max_n: int = 7, engine=None, jobs: int = 1) -> CheckReport:
    items = [h for n in range(1, max_n + 1) for h in enumerate_initial_segment(n)]
    return _run_sweep("multiplicities", items, jobs, engine)


def sweep_degree1(max_n: int = 7, engine=None, jobs: int = 1) -> CheckReport:
    items = [
        h
        for n in range(2, max_n + 1)
        for h in enumerate_initial_segment(n)
        if h.is_irreducible and h.r >= 1
    ]
    return _run_sweep("degree1", items, jobs, engine)


def sweep_low_degree(max_n: int = 7, engine=None, jobs: int = 1) -> CheckReport:
    items = []
    for n in range(2, max_n + 1):
        for h in enumerate_initial_segment(n):
            if h.r < 1:
                continue
            for k in range(2, n + 1):
                if all(h.value_at(i) >= min(i + k, n) for i in h.domain):
                    items.append((h, k))
    return _run_sweep("low-degree", items, jobs, engine)


def sweep_degree_k_plus_1(max_n: int = 9, engine=None, jobs: int = 1) -> CheckReport:
    items = [(n, 2) for n in range(5, max_n + 1)]
    for k in (3, 4):
        items.extend((n, k) for n in range(k + 2, max_n + 1))
    return _run_sweep("degree-k1", items, jobs, engine, notes=(_DEGREE_K1_NOTE,))


def sweep_schur(max_n: int = 6, engine=None, jobs: int = 1) -> CheckReport:
    items = [h for n in range(1, max_n + 1) for h in enumerate_generalized(n)]
    return _run_sweep("schur", items, jobs, engine)


def sweep_positivity(max_n: int = 6, engine=None, jobs: int = 1) -> CheckReport:
    items = [h for n in range(1, max_n + 1) for h in enumerate_generalized(n)]
    return _run_sweep(
        "h-positivity",
        items,
        jobs,
        engine,
        notes=("conjecture scan: failures are findings, not engine bugs",),
        collect_findings=True,
    )


def sweep_structural(max_n: int = 6, engine=None, jobs: int = 1) -> CheckReport:
    items = [h for n in range(1, max_n + 1) for h in enumerate_generalized(n)]
    return _run_sweep("structural", items, jobs, engine)


def sweep_three_way(max_n: int = 7, engine=None, jobs: int = 1) -> CheckReport:
    items = [h for n in range(1, max_n + 1) for h in enumerate_ordinary(n)]
    return _run_sweep("three-way", items, jobs, engine)


def sweep_blowup(max_n: int = 6, engine=None, jobs: int = 1) -> CheckReport:
    items = [h for n in range(2, max_n + 1) for h in enumerate_initial_segment(n)]
    return _run_sweep("blowup", items, jobs, engine)


def sweep_projective_bundle(max_n: int = 6, engine=None, jobs: int = 1) -> CheckReport:
    items = [h for n in range(2, max_n + 1) for h in enumerate_generalized(n)]
    return _run_sweep("projective-bundle", items, jobs, engine)


def sweep_route_independence(max_n: int = 6, engine=None, jobs: int = 1) -> CheckReport:
    items = [h for n in range(1, max_n + 1) for h in enumerate_initial_segment(n)]
    return _run_sweep("route-independence", items, jobs, engine)


def sweep_transpose_duality(max_n: int = 6, engine=None, jobs: int = 1) -> CheckReport:
    items = [h for n in range(1, max_n + 1) for h in enumerate_ordinary(n)]
    return _run_sweep("transpose-duality", items, jobs, engine)


def sweep_two_level(max_n: int = 7, engine=None, jobs: int = 1) -> CheckReport:
    items = [
        (n, low, m)
        for n in range(2, max_n + 1)
        for m in range(1, n)
        for low in range(1, n - m + 1)
    ]
    return _run_sweep("two-level", items, jobs, engine)


def sweep_cap_first(max_n: int = 7, engine=None, jobs: int = 1) -> CheckReport:
    items = [(n, r) for n in range(3, max_n + 1) for r in range(2, n)]
    return _run_sweep("cap-first", items, jobs, engine)


def sweep_modular_law(max_n: int = 7, engine=None, jobs: int = 1) -> CheckReport:
    return check_modular_law_sweep(max_n, engine, jobs)


def sweep_conjecture_h2(max_n: int = 9, engine=None, jobs: int = 1) -> CheckReport:
    return conjecture_h2_scan(max_n, engine, jobs)


SWEEPS: Dict[str, Callable[..., CheckReport]] = {
    "sw": sweep_sw,
    "multiplicities": sweep_multiplicities,
    "degree1": sweep_degree1,
    "low-degree": sweep_low_degree,
    "degree-k1": sweep_degree_k_plus_1,
    "schur": sweep_schur,
    "h-positivity": sweep_positivity,
    "structural": sweep_structural,
    "three-way": sweep_three_way,
    "modular-law": sweep_modular_law,
    "blowup": sweep_blowup,
    "projective-bundle": sweep_projective_bundle,
    "route-independence": sweep_route_independence,
    "transpose-duality": sweep_transpose_duality,
    "two-level": sweep_two_level,
    "cap-first": sweep_cap_first,
    "conjecture-h2": sweep_conjecture_h2,
}


def run_checks(
    names, max_n: Optional[int] = None, engine=None, jobs: int = 1
) -> List[CheckReport]:
    """Run the named sweeps (or all of them) and return their reports."""
    if names == "all" or names == ["all"]:
        names = list(SWEEPS)
    reports = []
    for name in names:
        if name not in SWEEPS:
            raise KeyError(f"unknown check {name!r}; known: {', '.join(sorted(SWEEPS))}")
        sweep = SWEEPS[name]
        if max_n is None:
            reports.append(sweep(engine=engine, jobs=jobs))
        else:
            reports.append(sweep(max_n, engine=engine, jobs=jobs))
    return reports
