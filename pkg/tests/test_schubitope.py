import itertools

import pytest

from schubcalc import perm, schub, schubitope


def p(text):
    return perm.parse(text)


def test_theta_worked_example():
    D = frozenset({(1, 1), (2, 1), (1, 2), (4, 4)})
    assert schubitope.theta(D, {1, 2}, 4) == 4
    assert schubitope.theta(D, {3}, 4) == 1
    assert schubitope.theta(D, set(), 4) == 0
    # per-column values for I = {1, 2}
    cols = schubitope.column_sets(D, 4)
    vals = [schubitope.theta_column(c, {1, 2}, 4) for c in cols]
    assert vals == [2, 1, 0, 1]


def test_member_examples():
    w = p("32154")
    assert schubitope.schubitope_member((3, 1, 0, 0), w, 5)
    assert not schubitope.schubitope_member((1, 1, 1, 1), w, 5)
    assert schubitope.schubitope_member((), ())
    with pytest.raises(ValueError):
        schubitope.schubitope_member((-1, 1), p("21"))


def test_member_matches_displayed_inequalities():
    # the displayed facet system for the 32154 diagram
    w = p("32154")
    for alpha in itertools.product(range(5), repeat=4):
        if sum(alpha) != 4:
            continue
        a1, a2, a3, a4 = alpha
        by_system = (a1 + a3 + a4 <= 3 and a2 + a3 + a4 <= 2 and
                     a3 + a4 <= 1)
        assert schubitope.schubitope_member(alpha, w, 5) == by_system


def test_snp_s5():
    for w in perm.all_perms(5):
        n = 5
        support = {xe + (0,) * (n - len(xe))
                   for xe, _ in schub.schubert(w).terms}
        points = {pt + (0,) * (n - len(pt))
                  for pt in schubitope.lattice_points(w, n)}
        assert support == points


def test_coefficient_nonzero_examples():
    assert schubitope.coefficient_nonzero(p("1432"), (1, 2, 0))
    assert not schubitope.coefficient_nonzero(p("1432"), (0, 0, 3))
    assert schubitope.coefficient_nonzero((), ())


def test_coefficient_nonzero_matches_coefficients_s5():
    for w in perm.all_perms(5):
        f = schub.schubert(w)
        ell = perm.length(w)
        for alpha in itertools.product(range(ell + 1), repeat=5):
            if sum(alpha) != ell:
                continue
            direct = f.coeff(alpha) != 0
            assert schubitope.coefficient_nonzero(w, alpha) == direct
            assert schubitope.coefficient_nonzero_backtracking(w, alpha) \
                == direct


def test_flow_agrees_with_backtracking_s4():
    for w in perm.all_perms(4):
        ell = perm.length(w)
        for alpha in itertools.product(range(ell + 1), repeat=4):
            if sum(alpha) != ell:
                continue
            assert schubitope.coefficient_nonzero(w, alpha) == \
                schubitope.coefficient_nonzero_backtracking(w, alpha)


def test_minkowski_sum_s4():
    # lattice points of the column-wise Minkowski sum of Schubert matroid
    # polytopes coincide with the polytope's lattice points
    from itertools import combinations

    def gale_leq(A, B):
        return all(a <= b for a, b in zip(sorted(A), sorted(B)))

    for w in perm.all_perms(4):
        n = 4
        D = perm.rothe_diagram(w)
        cols = schubitope.column_sets(D, n)
        summands = []
        for col in cols:
            if not col:
                continue
            B = tuple(sorted(col))
            vertices = []
            for A in combinations(range(1, n + 1), len(B)):
                if gale_leq(A, B):
                    v = [0] * n
                    for i in A:
                        v[i - 1] = 1
                    vertices.append(tuple(v))
            summands.append(vertices)
        points = {tuple([0] * n)}
        for vertices in summands:
            points = {tuple(x + y for x, y in zip(pt, v))
                      for pt in points for v in vertices}
        expected = {pt + (0,) * (n - len(pt))
                    for pt in schubitope.lattice_points(w, n)}
        assert points == expected


def test_zero_one():
    assert schubitope.zero_one(p("1432"))
    assert not schubitope.zero_one(p("12543"))
    assert schubitope.zero_one(())


def test_zero_one_matches_direct_s5():
    for w in perm.all_perms(5):
        assert schubitope.zero_one(w) == schubitope.zero_one_direct(w)
