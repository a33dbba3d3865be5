from itertools import permutations

import pytest

from qhess.chromatic import (
    OracleBoundError,
    block_refinement_check,
    chromatic_count,
    csf,
    graph_of,
    monomial_coefficient,
    refine_block,
)
from qhess.hessfn import GenHessFn, enumerate_generalized, enumerate_ordinary
from qhess.qpoly import QPoly, q_binomial, q_factorial, q_int
from qhess.symfunc import SymFunc, partitions


def e_term(parts, coeff=1):
    parts = tuple(sorted(parts, reverse=True))
    return SymFunc(sum(parts), "e", {parts: coeff})


def test_graph_of_path():
    h = GenHessFn(4, (1,), (4, 4))
    g = graph_of(h)
    assert g.vertices == (1, 4)
    assert g.weights == (1, 3)
    assert g.edges == ((1, 4),)


def test_graph_of_triangle():
    h = GenHessFn(5, (1, 2), (5, 5, 5))
    g = graph_of(h)
    assert g.vertices == (1, 2, 5)
    assert g.weights == (1, 1, 3)
    assert set(g.edges) == {(1, 2), (1, 5), (2, 5)}


def test_graph_of_ordinary_is_unit_weighted():
    h = GenHessFn.ordinary((2, 3, 3))
    g = graph_of(h)
    assert g.weights == (1, 1, 1)
    assert set(g.edges) == {(1, 2), (2, 3)}


def test_csf_single_vertex_is_elementary():
    for n in range(1, 6):
        f = csf(GenHessFn.trivial(n))
        assert f == e_term([n]).to_monomial()
        assert f.terms == {(1,) * n: QPoly((1,))}


def test_csf_path_two_vertices():
    for n in range(2, 6):
        h = GenHessFn(n, (1,), (n, n))
        assert csf(h) == e_term([n], q_int(n)).to_monomial()


def test_csf_grassmannian():
    for n in range(2, 7):
        for r in range(1, n):
            h = GenHessFn(n, (r,), (n, n))
            assert csf(h) == e_term([n], q_binomial(n, r)).to_monomial()


def test_csf_triangle():
    for n in range(3, 6):
        h = GenHessFn(n, (1, 2), (n, n, n))
        assert csf(h) == e_term([n], q_int(n) * q_int(n - 1)).to_monomial()


def test_csf_complete_graph():
    for n in range(1, 6):
        h = GenHessFn.ordinary((n,) * n)
        assert csf(h) == e_term([n], q_factorial(n)).to_monomial()


def test_csf_short_path_three_vertices():
    # domain {1,2}, h(1)=2, h(2)=n: [n]_q e_n + q[n-2]_q e_(n-1,1)
    for n in range(3, 7):
        h = GenHessFn(n, (1, 2), (2, n, n))
        expected = (
            e_term([n], q_int(n))
            + e_term([n - 1, 1], QPoly((0, 1)) * q_int(n - 2))
        ).to_monomial()
        assert csf(h) == expected


def test_csf_bound():
    with pytest.raises(OracleBoundError):
        csf(GenHessFn.trivial(8))
    assert csf(GenHessFn.trivial(8), bound=8).degree == 8


def test_chromatic_count_worked_values():
    assert chromatic_count(GenHessFn.trivial(4), 4) == 1
    # path with weights (1, 2): pick the 1-set, then a disjoint 2-set
    h = GenHessFn(3, (1,), (3, 3))
    assert chromatic_count(h, 3) == 3
    # fewer colors than a clique's total weight
    full3 = GenHessFn.ordinary((3, 3, 3))
    assert chromatic_count(full3, 2) == 0
    assert chromatic_count(full3, 3) == 6


def test_chromatic_count_matches_csf_at_q_one():
    def rearrangements(mu, colors):
        padded = tuple(mu) + (0,) * (colors - len(mu))
        return len(set(permutations(padded)))

    for n in range(1, 6):
        for h in enumerate_generalized(n):
            f = csf(h)
            total = sum(
                coeff.eval_at_one() * rearrangements(mu, n)
                for mu, coeff in f.terms.items()
            )
            assert total == chromatic_count(h, n), h


def test_symmetry_spot_check():
    # the coefficient of x^mu must not depend on which colors carry which part
    for n in range(2, 7):
        for h in [
            GenHessFn(n, (1,), (n, n)),
            GenHessFn.ordinary(tuple(min(i + 1, n) for i in range(1, n + 1))),
        ]:
            g = graph_of(h)
            for mu in partitions(n):
                base = monomial_coefficient(g, mu)
                for perm in set(permutations(mu)):
                    assert monomial_coefficient(g, perm) == base


def test_ordinary_specialization_matches_single_color_enumeration():
    # For unit weights, an independent enumeration over per-vertex single
    # colors (maps, not sets) must give the same m-coefficients.
    def single_color_coeff(h, mu):
        n = h.n
        edges = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
                 if i < j <= h.values[i - 1]]
        counts = {}

        def place(v, coloring):
            if v > n:
                asc = sum(1 for i, j in edges if coloring[i] < coloring[j])
                counts[asc] = counts.get(asc, 0) + 1
                return
            for c in range(1, len(mu) + 1):
                if sum(1 for x in coloring.values() if x == c) < mu[c - 1] and all(
                    coloring.get(i) != c for i, j in edges if j == v
                ):
                    coloring[v] = c
                    place(v + 1, coloring)
                    del coloring[v]

        place(1, {})
        return QPoly([counts.get(k, 0) for k in range(max(counts, default=0) + 1)])

    for n in range(1, 7):
        for h in enumerate_ordinary(n):
            f = csf(h)
            for mu in partitions(n):
                assert f.coefficient(mu) == single_color_coeff(h, mu), (h, mu)


def test_refine_block():
    h = GenHessFn.trivial(4)
    refined = refine_block(h, 1)
    assert refined == GenHessFn.ordinary((4, 4, 4, 4))
    g = GenHessFn(5, (2,), (5, 5))
    assert refine_block(g, 1) == GenHessFn(5, (1, 2), (5, 5, 5))
    assert refine_block(g, 2) == GenHessFn(5, (2, 3, 4), (5, 5, 5, 5))
    with pytest.raises(ValueError):
        refine_block(g, 3)


def test_block_refinement_identity_exhaustive():
    for n in range(1, 6):
        for h in enumerate_generalized(n):
            for k in range(1, len(h.points) + 1):
                assert block_refinement_check(h, k), (h, k)


def test_block_refinement_trivial_on_unit_gaps():
    h = GenHessFn.ordinary((2, 3, 3))
    for k in range(1, 4):
        assert refine_block(h, k) == h
        assert block_refinement_check(h, k)
