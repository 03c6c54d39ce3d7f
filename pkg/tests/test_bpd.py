from collections import Counter

import pytest

from schubcalc import bpd, perm, pipedream as pd, schub
from schubcalc.poly import IntPolynomial


def p(text):
    return perm.parse(text)


def test_rothe_examples():
    R = bpd.rothe_bpd(p("2143"))
    assert R.permutation() == p("2143")
    assert set(R.blanks()) == {(1, 1), (3, 3)}
    assert set(R.blanks()) == set(perm.rothe_diagram(p("2143")))
    ident = bpd.rothe_bpd((), 4)
    assert ident.blanks() == []
    assert ident.permutation() == ()
    # blanks of the Rothe tiling always fill the diagram
    for w in perm.all_perms(4):
        assert set(bpd.rothe_bpd(w, 4).blanks()) == \
            set(perm.rothe_diagram(w))


def test_enumerate_2143():
    ds = bpd.enumerate_bpds(p("2143"))
    assert len(ds) == 3
    assert sorted(D.weight() for D in ds) == \
        [(1, 0, 1, 0), (1, 1, 0, 0), (2, 0, 0, 0)]
    total = sum((D.monomial() for D in ds), start=IntPolynomial.zero())
    assert total == schub.schubert(p("2143"))


def test_dominant_unique():
    for text in ("321", "312", "4321", "43125"):
        w = p(text)
        if perm.avoids(w, (1, 3, 2)):
            assert len(bpd.enumerate_bpds(w)) == 1


def test_counts_match_pipe_dreams_s4():
    for w in perm.all_perms(4):
        assert len(bpd.enumerate_bpds(w)) == \
            len(pd.enumerate_pipe_dreams(w))


def test_weight_multisets_agree_s4():
    for w in perm.all_perms(4):
        a = Counter(D.weight() for D in bpd.enumerate_bpds(w))
        b = Counter(D.weight() + (0,) * (4 - len(D.weight()))
                    for D in pd.enumerate_pipe_dreams(w))
        a2 = Counter(k + (0,) * (4 - len(k)) for k in a)
        assert a2 == b


def test_double_weights_agree_s4():
    for w in perm.all_perms(4):
        total = sum((D.double_monomial() for D in bpd.enumerate_bpds(w)),
                    start=IntPolynomial.zero())
        assert total == schub.double_schubert(w)


def test_double_weight_2143_factored_forms():
    x, y = IntPolynomial.x, IntPolynomial.y
    ds = bpd.enumerate_bpds(p("2143"))
    terms = {D.double_monomial() for D in ds}
    assert (x(1) - y(1)) * (x(3) - y(3)) in terms
    assert (x(1) - y(1)) * (x(2) - y(1)) in terms
    assert (x(1) - y(1)) * (x(1) - y(2)) in terms


def test_droop_closure_matches_exhaustive_search():
    for n in (2, 3, 4):
        byperm = {}
        for D in bpd.all_bpds(n, reduced_only=True):
            byperm.setdefault(D.permutation(), set()).add(D)
        for w, expected in byperm.items():
            assert bpd.enumerate_bpds(w, n) == expected
        # every permutation of the rank is realized
        assert len(byperm) == [1, 2, 6, 24][n - 1]


def test_all_bpds_count_asm_numbers():
    # 1, 2, 7, 42 ...
    assert sum(1 for _ in bpd.all_bpds(1)) == 1
    assert sum(1 for _ in bpd.all_bpds(2)) == 2
    assert sum(1 for _ in bpd.all_bpds(3)) == 7
    assert sum(1 for _ in bpd.all_bpds(4)) == 42


def test_asm_roundtrip():
    for D in bpd.all_bpds(3):
        m = bpd.to_asm(D)
        assert bpd.is_asm(m)
        assert bpd.from_asm(m) == D
    # the Rothe tiling has no down elbows, so its matrix is a
    # permutation matrix with ones at (i, w(i))
    w = p("24153")
    m = bpd.to_asm(bpd.rothe_bpd(w))
    ww = perm.pad(w, 5)
    assert m == tuple(tuple(1 if j + 1 == ww[i] else 0 for j in range(5))
                      for i in range(5))
    with pytest.raises(ValueError):
        bpd.from_asm(((1, 0), (1, -1)))


def test_pop_golden():
    w = p("2157346")
    target = ((4, 1, 6, 5, 3, 4), (1, 1, 2, 3, 3, 4))
    hits = [D for D in bpd.enumerate_bpds(w) if bpd.phi(D) == target]
    assert len(hits) == 1
    D = hits[0]
    nd, r, i = bpd.pop(D)
    assert (r, i) == (4, 1)
    assert nd.permutation() == p("2147356")
    assert nd.is_reduced()


def test_pop_single_blank():
    for k in (1, 2, 3):
        D = bpd.rothe_bpd(perm.simple(k))
        nd, r, i = bpd.pop(D)
        assert r == k
        assert nd.permutation() == ()
        assert i == k  # the single blank of s_k sits in row k


def test_pop_weight_bookkeeping():
    for w in perm.all_perms(4):
        if perm.length(w) == 0:
            continue
        for D in bpd.enumerate_bpds(w):
            nd, r, i = bpd.pop(D)
            assert nd.permutation() == perm.t_times(w, r, r + 1)
            assert D.monomial() == nd.monomial() * IntPolynomial.x(i)
    with pytest.raises(ValueError):
        bpd.pop(bpd.rothe_bpd((), 3))


def test_phi_golden_sequence():
    w = p("2157346")
    results = {bpd.phi(D) for D in bpd.enumerate_bpds(w)}
    assert ((4, 1, 6, 5, 3, 4), (1, 1, 2, 3, 3, 4)) in results


def test_phi_bijection_s4():
    for w in perm.all_perms(4):
        images = [bpd.phi(D) for D in bpd.enumerate_bpds(w)]
        assert len(images) == len(set(images))
        expected = {(D.words()[0], D.words()[1])
                    for D in pd.enumerate_pipe_dreams(w)}
        assert set(images) == expected
        # weight preservation: x^D equals the product over the i-word
        for D in bpd.enumerate_bpds(w):
            _, i_seq = bpd.phi(D)
            weight = [0] * 4
            for i in i_seq:
                weight[i - 1] += 1
            assert tuple(weight) == D.weight() + \
                (0,) * (4 - len(D.weight()))


def test_ascii_round_trip():
    for D in bpd.enumerate_bpds(p("2143")):
        assert bpd.BumplessPipeDream.parse(D.ascii()) == D
