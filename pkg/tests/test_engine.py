import pytest

from qhess.engine import (
    DEFAULT_ENGINE,
    Engine,
    compute,
    modification_at,
    modify_step,
    permutohedral_q,
    poincare_admissible,
    poincare_alg1,
    poincare_alg2,
    poincare_general,
)
from qhess.hessfn import (
    GenHessFn,
    cap_first_fn,
    enumerate_generalized,
    enumerate_initial_segment,
    enumerate_ordinary,
    parse,
    permutohedral_fn,
)
from qhess.qpoly import ONE, Q, QPoly, q_binomial, q_factorial, q_int
from qhess.symfunc import SymFunc, h_term


def ordinary(*values):
    return GenHessFn.ordinary(values)


# -- permutohedral values ------------------------------------------------------


def test_permutohedral_small_values():
    E = Engine()
    assert E.permutohedral_q(1) == h_term((1,))
    assert E.permutohedral_q(2) == h_term((2,), q_int(2))
    assert E.permutohedral_q(3) == h_term((3,), q_int(3)) + h_term((2, 1), Q)
    q4 = (
        h_term((4,), q_int(4))
        + h_term((3, 1), Q * q_int(2))
        + h_term((2, 2), Q * q_int(2))
    )
    assert E.permutohedral_q(4) == q4
    q5 = (
        h_term((5,), q_int(5))
        + h_term((4, 1), Q * q_int(3))
        + h_term((3, 2), Q * (q_int(3) + q_int(2) ** 2))
        + h_term((2, 2, 1), Q * Q)
    )
    assert E.permutohedral_q(5) == q5


def test_permutohedral_equals_alg1_of_banded_one():
    E = Engine()
    for n in range(1, 8):
        assert E.alg1(permutohedral_fn(n)) == E.permutohedral_q(n)


def test_q_product():
    E = Engine()
    assert E.permutohedral_q_product((2, 1)) == E.permutohedral_q(2) * E.permutohedral_q(1)
    with pytest.raises(ValueError):
        E.permutohedral_q_product(())


# -- worked Poincare values ----------------------------------------------------


def F333():
    return h_term((3,), q_factorial(3))


def F3444():
    return h_term((4,), q_int(4) * q_int(2) ** 2) + h_term(
        (3, 1), q_int(2).shift(2)
    )


def F34555():
    return (
        h_term((5,), QPoly((1, 4, 7, 8, 8, 7, 4, 1)))
        + h_term((4, 1), QPoly((0, 0, 2, 4, 4, 2)))
        + h_term((3, 2), QPoly((0, 0, 0, 1, 1)))
    )


def F24455():
    return (
        h_term((5,), q_int(5) * q_int(2))
        + h_term((4, 1), Q * (q_int(4) + q_int(3) * q_int(2)))
        + h_term((3, 2), q_int(2).shift(2))
        + h_term((3, 1, 1), q_int(2).shift(2))
    )


def test_alg1_worked_values():
    E = Engine()
    assert E.alg1(ordinary(3, 3, 3)) == F333()
    assert E.alg1(ordinary(3, 4, 4, 4)) == F3444()
    assert E.alg1(ordinary(3, 4, 5, 5, 5)) == F34555()


def test_alg2_worked_values():
    E = Engine()
    assert E.alg2(ordinary(2, 4, 4, 5, 5)) == F24455()
    assert E.alg2(parse("n=4; I=1,2; h=2,4,4")) == h_term((4,), q_int(4)) + h_term(
        (3, 1), Q * q_int(2)
    )
    # one domain point mapping to n is projective space
    assert E.alg2(GenHessFn(5, (1,), (5, 5))) == h_term((5,), q_int(5))
    with pytest.raises(ValueError):
        E.alg2(GenHessFn(5, (2,), (5, 5)))


def test_general_worked_values():
    E = Engine()
    for n in range(1, 6):
        assert E.general(GenHessFn.trivial(n)) == h_term((n,))
    # Grassmannians and partial flag varieties carry Gaussian-binomial values
    for n in range(2, 7):
        for r in range(1, n):
            got = E.general(GenHessFn(n, (r,), (n, n)))
            assert got == h_term((n,), q_binomial(n, r)), (n, r)
    flag_pts = (1, 3)
    h = GenHessFn(5, flag_pts, (5, 5, 5))
    coeff = q_factorial(5).exact_div(
        q_factorial(1) * q_factorial(2) * q_factorial(2)
    )
    assert E.general(h) == h_term((5,), coeff)
    assert E.general(parse("n=4; I=1,2; h=2,4,4")) == h_term(
        (4,), q_int(4)
    ) + h_term((3, 1), Q * q_int(2))


def test_general_full_flag():
    E = Engine()
    for n in range(1, 6):
        full = GenHessFn.ordinary((n,) * n)
        assert E.general(full) == h_term((n,), q_factorial(n))


# -- modify_step ----------------------------------------------------------------


def test_modify_step_case_empty_preimage():
    step = modify_step(ordinary(3, 3, 3))
    assert step.pivot == 1
    assert step.case == "empty-preimage"
    assert step.terms == (
        (q_int(2), ordinary(2, 3, 3)),
        (-Q, ordinary(2, 2, 3)),
    )


def test_modify_step_case_single_preimage():
    step = modify_step(ordinary(2, 4, 4, 5, 5))
    assert step.pivot == 2
    assert step.case == "single-preimage"
    assert step.terms == (
        (ONE, ordinary(3, 3, 4, 5, 5)),
        (-Q, ordinary(2, 3, 3, 5, 5)),
        (Q, ordinary(1, 3, 4, 5, 5)),
    )


def test_modify_step_none_on_banded_one():
    for n in range(2, 7):
        assert modify_step(permutohedral_fn(n)) is None
    assert modify_step(ordinary(2, 2, 3)) is None
    with pytest.raises(ValueError):
        modify_step(GenHessFn(4, (1, 2), (2, 4, 4)))
    with pytest.raises(ValueError):
        modification_at(ordinary(2, 3, 3), 1)


def test_modify_step_rewrites_exactly():
    E = Engine()
    for n in range(2, 7):
        for h in enumerate_ordinary(n):
            step = modify_step(h)
            if step is None:
                continue
            total = SymFunc.zero(n)
            for mult, succ in step.terms:
                total = total + E.alg1(succ).scale(mult)
            assert total == E.alg1(h), h


# -- admissible sequences ---------------------------------------------------------


def test_admissible_expansion_worked_values():
    E = Engine()
    assert E.admissible_q_expansion(ordinary(3, 3, 3)) == {
        (3,): q_int(2),
        (2, 1): -Q,
    }
    two = q_int(2)
    assert E.admissible_q_expansion(ordinary(3, 4, 4, 4)) == {
        (4,): two * two,
        (3, 1): -Q * two,
        (2, 2): -Q * two,
        (2, 1, 1): Q * Q,
    }
    assert E.admissible_q_expansion(ordinary(3, 4, 5, 5, 5)) == {
        (5,): two**3,
        (4, 1): -Q * two**2 + Q * Q,
        (3, 2): -Q * two**2 * 2 - Q * Q,
        (3, 1, 1): Q * Q * two,
        (2, 2, 1): Q * Q * two * 2,
        (2, 1, 1, 1): -Q * Q * Q,
    }


def test_admissible_base_case_is_single_sequence():
    E = Engine()
    for n in range(1, 7):
        assert E.admissible_q_expansion(permutohedral_fn(n)) == {(n,): ONE}
        assert E.admissible(permutohedral_fn(n)) == E.permutohedral_q(n)


def test_admissible_equals_alg1():
    E = Engine()
    for n in range(1, 7):
        for h in enumerate_ordinary(n):
            if h.is_irreducible:
                assert E.admissible(h) == E.alg1(h), h


# -- cross-evaluator agreement -----------------------------------------------------


def test_alg1_equals_alg2_ordinary():
    E = Engine()
    for n in range(1, 7):
        for h in enumerate_ordinary(n):
            assert E.alg1(h) == E.alg2(h), h


def test_general_equals_alg2_on_initial_segments():
    E = Engine()
    for n in range(1, 7):
        for h in enumerate_initial_segment(n):
            assert E.general(h) == E.alg2(h), h


def test_transpose_duality():
    E = Engine()
    for n in range(1, 7):
        for h in enumerate_ordinary(n):
            assert E.alg1(h.transpose()) == E.alg1(h), h


# -- memo hygiene -------------------------------------------------------------------


def test_memo_keyed_by_evaluator():
    E = Engine()
    h = ordinary(3, 3, 3)
    E.alg1(h)
    assert ("alg1", h) in E._memo
    assert ("alg2", h) not in E._memo
    assert ("general", h) not in E._memo
    E.alg2(h)
    assert ("alg2", h) in E._memo


def test_default_engine_wrappers():
    h = ordinary(3, 3, 3)
    assert poincare_alg1(h) == F333()
    assert poincare_alg2(h) == F333()
    assert poincare_admissible(h) == F333()
    assert poincare_general(h) == F333()
    assert permutohedral_q(3) == DEFAULT_ENGINE.permutohedral_q(3)


# -- the two-level family --------------------------------------------------------------


def test_two_level_base_cases():
    E = Engine()
    # all-n values: a partial flag variety
    assert E.two_level_recursive(5, 0, 2) == h_term(
        (5,), q_factorial(5).exact_div(q_factorial(2))
    )
    # low + m = n: disjoint full flags
    assert E.two_level_recursive(5, 3, 2) == h_term((3, 2), q_factorial(3))
    assert E.two_level(5, 3, 2) == h_term((3, 2), q_factorial(3))


def test_two_level_recursion_agrees_with_direct():
    E = Engine()
    hit_negative = 0
    for n in range(2, 8):
        for m in range(1, n):
            for low in range(1, n - m + 1):
                if m + 1 - low < 0 and low + m < n:
                    hit_negative += 1
                assert E.two_level(n, low, m) == E.two_level_recursive(n, low, m), (
                    n,
                    low,
                    m,
                )
    assert hit_negative > 0  # the sweep exercises the negative-shift convention
    with pytest.raises(ValueError):
        E.two_level_recursive(5, 6, 1)


# -- structural invariants (small, fast ranges; full ranges in acceptance) ---------------


def test_structure_of_values():
    E = Engine()
    for n in range(1, 6):
        for h in enumerate_generalized(n):
            f = E.general(h)
            dim = h.dimension()
            assert f.max_q_degree() == dim
            assert f.rep_dimension().eval_at_one() == h.fixed_point_count()
            for parts, coeff in f.terms.items():
                assert coeff == coeff.reverse(dim), (h, parts)


def test_cap_first_closed_form():
    E = Engine()
    for n in range(3, 8):
        for r in range(2, n):
            f = E.general(cap_first_fn(n, r))
            away_from_trivial = {p: c for p, c in f.terms.items() if p != (n,)}
            coeff = q_factorial(n - 2).exact_div(q_factorial(n - r - 1)).shift(r - 1)
            assert away_from_trivial == {(n - 1, 1): coeff}, (n, r)
    # the r = 1 base: n coordinate points in projective space
    for n in range(2, 6):
        assert Engine().general(cap_first_fn(n, 1)) == h_term((n - 1, 1))


# -- wrapper type -------------------------------------------------------------------------


def test_compute_and_poincare_poly():
    h = ordinary(3, 4, 4, 4)
    result = compute(h)
    assert result.method == "alg1"
    assert result.value == F3444()
    assert result.dimension() == 5
    assert result.fixed_point_count() == 24
    data = result.to_json()
    assert data["function"] == {"n": 4, "domain": [1, 2, 3], "values": [3, 4, 4, 4]}
    assert data["dimension"] == 5
    assert data["fixed_points"] == 24
    assert SymFunc.from_json(data["value"]) == F3444()
    gen = compute(parse("n=4; I=1,2; h=2,4,4"))
    assert gen.method == "general"
    assert compute(h, "admissible").method == "admissible"
    with pytest.raises(ValueError):
        compute(h, "bogus")
