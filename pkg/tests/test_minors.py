import random
from fractions import Fraction

import pytest

from schubcalc import bruhat, minors, perm


def p(text):
    return perm.parse(text)


EXAMPLE = minors.matrix([[6, 4, 9, 0], [3, 0, 0, 1], [0, 2, 1, 0],
                         [0, 0, 1, 0]])


def test_canonical_matrix_example():
    c = minors.canonical_matrix(EXAMPLE)
    assert c == minors.matrix([[2, 2, 7, 1], [1, 0, 0, 0], [0, 1, 0, 0],
                               [0, 0, 1, 0]])
    # pivots at (2,1), (3,2), (4,3), (1,4)
    assert minors.canonical_matrix(minors.identity_matrix(4)) == \
        minors.identity_matrix(4)
    with pytest.raises(ValueError):
        minors.canonical_matrix(minors.matrix([[1, 1], [1, 1]]))


def test_canonical_matrix_invariant_under_upper_triangular():
    rng = random.Random(2)
    for _ in range(20):
        m = minors.random_invertible(4, 11, rng)
        b = [[Fraction(0)] * 4 for _ in range(4)]
        for i in range(4):
            b[i][i] = Fraction(rng.randrange(1, 10))
            for j in range(i + 1, 4):
                b[i][j] = Fraction(rng.randrange(-5, 6))
        mb = tuple(tuple(sum(m[i][k] * b[k][j] for k in range(4))
                         for j in range(4)) for i in range(4))
        assert minors.canonical_matrix(m) == minors.canonical_matrix(mb)


def test_plucker_example():
    coords = minors.plucker(EXAMPLE)
    assert coords[0] == [2, 1, 0, 0]
    assert coords[1] == [-2, 2, 0, 1, 0, 0]
    assert coords[2] == [7, -2, 2, 1]


def test_plucker_identity_flag():
    coords = minors.plucker(minors.identity_matrix(4))
    for block in coords:
        assert block[0] == 1
        assert all(x == 0 for x in block[1:])


def test_plucker_relation_degree_two():
    rng = random.Random(4)
    for _ in range(10):
        m = minors.random_invertible(4, 101, rng)
        p12, p13, p14, p23, p24, p34 = minors.plucker(m)[1]
        assert p12 * p34 - p13 * p24 + p14 * p23 == 0


def test_plucker_scaling_invariance():
    # right multiplication by upper triangular b rescales each degree-k
    # block of flag minors by the k-th leading principal minor of b, so
    # the projective coordinates are unchanged
    from itertools import combinations
    rng = random.Random(6)
    for _ in range(20):
        n = 4
        m = minors.random_invertible(n, 13, rng)
        b = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            b[i][i] = Fraction(rng.randrange(1, 7))
            for j in range(i + 1, n):
                b[i][j] = Fraction(rng.randrange(-3, 4))
        mb = tuple(tuple(sum(m[i][k] * b[k][j] for k in range(n))
                         for j in range(n)) for i in range(n))
        for k in range(1, n):
            scale = Fraction(1)
            for i in range(k):
                scale *= b[i][i]
            for I in combinations(range(1, n + 1), k):
                assert minors.flag_minor(mb, I) == \
                    minors.flag_minor(m, I) * scale


def test_general_plucker_relations_on_random_flags():
    # swapping the first element of J into I in all ways
    from itertools import combinations
    rng = random.Random(8)
    for n in (3, 4):
        for _ in range(25):
            m = minors.random_invertible(n, 97, rng)

            def d(I):
                return minors.flag_minor(m, sorted(I))

            for ksub in (2, 3):
                if ksub > n:
                    continue
                for I in combinations(range(1, n + 1), ksub):
                    for J in combinations(range(1, n + 1), ksub):
                        lhs = d(I) * d(J)
                        rhs = Fraction(0)
                        j0 = J[0]
                        for t in range(ksub):
                            I2 = list(I)
                            J2 = list(J)
                            I2[t], J2[0] = J2[0], I2[t]
                            sign_i = _sort_sign(I2)
                            sign_j = _sort_sign(J2)
                            if sign_i and sign_j:
                                rhs += sign_i * sign_j * \
                                    d(sorted(I2)) * d(sorted(J2))
                        assert lhs == rhs


def _sort_sign(seq):
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def test_position_of():
    assert minors.position_of(minors.canonical_matrix(EXAMPLE)) == p("2341")
    for w in perm.all_perms(3):
        assert minors.position_of(minors.perm_matrix(w, 3)) == w
    rng = random.Random(10)
    w0 = perm.longest(5)
    hits = sum(minors.position_of(minors.random_invertible(5, 1009, rng))
               == w0 for _ in range(100))
    assert hits >= 95
    with pytest.raises(ValueError):
        minors.position_of(minors.matrix([[1, 1], [1, 1]]))


def test_matrix_schubert_member():
    zero = minors.matrix([[0] * 4] * 4)
    for w in perm.all_perms(4):
        assert minors.matrix_schubert_member(zero, w)
    # the permutation-matrix criterion is Bruhat order
    for v in perm.all_perms(4):
        for w in perm.all_perms(4):
            assert minors.matrix_schubert_member(
                minors.perm_matrix(v, 4), w) == bruhat.bruhat_leq(v, w)


def test_matrix_schubert_vanishing_description_3124():
    rng = random.Random(12)
    for _ in range(200):
        a = minors.matrix([[rng.randrange(-2, 3) for _ in range(4)]
                           for _ in range(4)])
        member = minors.matrix_schubert_member(a, p("3124"))
        vanish = (a[3][0] == 0 and a[3][1] == 0 and a[3][2] == 0 and
                  a[1][0] * a[2][1] - a[1][1] * a[2][0] == 0)
        assert member == vanish


def test_essential_set_examples():
    cells, specs = minors.essential_minors(p("3124"), 4)
    assert cells == [(2, 2), (4, 3)]
    # the identity's matrix variety is the upper triangulars, cut out by
    # the subdiagonal staircase of rank-zero conditions
    assert minors.essential_set((), 4) == [(2, 1), (3, 2), (4, 3)]
    cells2, specs2 = minors.essential_minors(p("2341"), 4)
    assert cells2 == [(3, 1), (4, 2)]
    entries = {(s.rows[0], s.cols[0]) for s, r in specs2 if r == 0}
    assert entries == {(3, 1), (4, 1), (4, 2)}


def test_essential_rank_conditions_suffice_s4():
    # essential-minor membership agrees with the full rank-table test on
    # permutation matrices and their small perturbations
    rng = random.Random(14)
    for w in perm.all_perms(4):
        _, specs = minors.essential_minors(w, 4)
        for v in perm.all_perms(4):
            a = [list(row) for row in minors.perm_matrix(v, 4)]
            if rng.random() < 0.5:
                a[rng.randrange(4)][rng.randrange(4)] += 1
            a = minors.matrix(a)
            ess_ok = all(
                minors.rank(minors.submatrix(a, s.rows, s.cols)) <= r
                for s, r in specs)
            assert ess_ok == minors.matrix_schubert_member(a, w)


def test_sylvester():
    rng = random.Random(16)
    for n, t_set in [(3, [1, 2]), (4, [2, 3]), (4, [1]), (3, [])]:
        for _ in range(34):
            a = minors.matrix([[rng.randrange(-4, 5) for _ in range(n)]
                               for _ in range(n)])
            b = minors.matrix([[rng.randrange(-4, 5) for _ in range(n)]
                               for _ in range(n)])
            assert minors.sylvester_verify(a, b, t_set)
    assert minors.sylvester_verify(minors.matrix([[2]]),
                                   minors.matrix([[3]]), [])
    with pytest.raises(ValueError):
        minors.sylvester_verify(minors.identity_matrix(2),
                                minors.identity_matrix(3), [1])


def _involution_term_matrix(S, pi, sigma, a, b, r, n):
    """The product of the two column-substituted one-entry-per-column
    matrices indexed by a triple (S, pi, sigma)."""
    S = sorted(S)
    pi, sigma = perm.pad(pi, n), perm.pad(sigma, n)
    P = [[Fraction(0)] * n for _ in range(n)]
    for c in range(1, n + 1):
        if c in S:
            d = S.index(c) + 1
            P[pi[c - 1] - 1][c - 1] = b[pi[c - 1] - 1][d - 1]
        else:
            P[pi[c - 1] - 1][c - 1] = a[pi[c - 1] - 1][c - 1]
    Q = [[Fraction(0)] * n for _ in range(n)]
    for c in range(1, n + 1):
        if c <= r:
            Q[sigma[c - 1] - 1][c - 1] = a[sigma[c - 1] - 1][S[c - 1] - 1]
        else:
            Q[sigma[c - 1] - 1][c - 1] = b[sigma[c - 1] - 1][c - 1]
    prod = tuple(tuple(sum(P[i][k] * Q[k][j] for k in range(n))
                       for j in range(n)) for i in range(n))
    return prod


def test_sylvester_involution_pair_example():
    # the worked involution pair: determinants differ exactly by a sign
    rng = random.Random(18)
    n, r = 6, 4
    a = [[Fraction(rng.randrange(2, 50)) for _ in range(n)]
         for _ in range(n)]
    b = [[Fraction(rng.randrange(2, 50)) for _ in range(n)]
         for _ in range(n)]
    m1 = _involution_term_matrix((1, 3, 4, 6), p("513264"), p("245136"),
                                 a, b, r, n)
    m2 = _involution_term_matrix((1, 2, 3, 4), p("532461"), p("214536"),
                                 a, b, r, n)
    d1, d2 = minors.det(m1), minors.det(m2)
    assert d1 != 0
    assert d1 == -d2
