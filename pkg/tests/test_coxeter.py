import random

import pytest
from hypothesis import given, settings, strategies as st

from koszulhecke.coxeter import (
    CoxeterError,
    CoxeterGroup,
    CoxeterMatrix,
    EnumerationCapExceeded,
    dihedral,
    type_A,
)

import kl_oracle

S3 = CoxeterGroup(type_A(2))
B2 = CoxeterGroup(dihedral(4))
G2 = CoxeterGroup(dihedral(6))
AFF = CoxeterGroup(dihedral(None))
H2 = CoxeterGroup(dihedral(5))
A2_AFF = CoxeterGroup(CoxeterMatrix(((1, 3, 3), (3, 1, 3), (3, 3, 1))))


def test_braid_relation_s3():
    assert S3.parse("sts") == S3.parse("tst")
    assert S3.parse("sts").length == 3


def test_involution():
    e = S3.parse("ss")
    assert e == S3.identity and e.length == 0


def test_stst_matches_permutation_oracle():
    G = kl_oracle.s3()
    x = G.from_word((0, 1, 0, 1))
    assert S3.element((0, 1, 0, 1)) == S3.element(G.word[x])
    assert S3.element((0, 1, 0, 1)).length == 2


def test_bruhat_examples():
    assert S3.bruhat_leq(S3.parse("s"), S3.parse("sts"))
    assert not S3.bruhat_leq(S3.parse("st"), S3.parse("ts"))
    for w in S3.enumerate_upto(3):
        assert S3.bruhat_leq(S3.identity, w)


def test_descents():
    assert S3.descents(S3.identity) == set()
    s = S3.parse("s")
    assert S3.descents(s, "left") == {0} and S3.descents(s, "right") == {0}
    assert S3.descents(S3.parse("sts"), "right") == {0, 1}
    assert S3.descents(S3.parse("st"), "left") == {0}
    assert S3.descents(S3.parse("st"), "right") == {1}


def test_enumerate_examples():
    assert [str(w) for w in CoxeterGroup(CoxeterMatrix(((1,),))).enumerate_upto(5)] == ["id", "s"]
    assert len(S3.enumerate_upto(3)) == 6
    assert len(AFF.enumerate_upto(3)) == 7
    assert len(B2.enumerate_upto(10)) == 8
    assert len(G2.enumerate_upto(10)) == 12
    assert len(H2.enumerate_upto(10)) == 10


def test_enumerate_sorted_shortlex():
    els = S3.enumerate_upto(3)
    assert [e.length for e in els] == sorted(e.length for e in els)
    assert len(set(els)) == len(els)


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded):
        A2_AFF.enumerate_upto(12, cap=50)


def test_bad_matrices():
    with pytest.raises(CoxeterError):
        CoxeterMatrix(((1, 3), (2, 1)))
    with pytest.raises(CoxeterError):
        CoxeterMatrix(((1, 1), (1, 1)))
    with pytest.raises(ValueError):
        S3.parse("sx")


@pytest.mark.parametrize("G,oracle", [(S3, kl_oracle.s3), (B2, kl_oracle.b2), (G2, kl_oracle.g2)])
def test_word_problem_matches_permutation_oracle(G, oracle):
    P = oracle()
    rng = random.Random(1)
    for _ in range(200):
        w = tuple(rng.randrange(2) for _ in range(rng.randrange(12)))
        x = P.from_word(w)
        assert G.element(w) == G.element(P.word[x])
        assert G.element(w).length == P.length(x)


@pytest.mark.parametrize("G,oracle", [(S3, kl_oracle.s3), (B2, kl_oracle.b2)])
def test_bruhat_matches_subword_oracle(G, oracle):
    P = oracle()
    for x in P.elements():
        for y in P.elements():
            assert G.bruhat_leq(G.element(P.word[x]), G.element(P.word[y])) == P.bruhat_leq(x, y)


def _braid_move(G, word, rng):
    """One random braid or cancellation move (or insertion of ss)."""
    w = list(word)
    n = G.rank
    choice = rng.randrange(3)
    if choice == 0 or len(w) < 2:
        i, s = rng.randrange(len(w) + 1), rng.randrange(n)
        return tuple(w[:i] + [s, s] + w[i:])
    for i in range(len(w)):
        for s in range(n):
            for t in range(n):
                m = G.matrix.order(s, t)
                if s == t or m is None:
                    continue
                pat = [s, t] * m
                pat = pat[:m]
                if w[i:i + m] == pat:
                    alt = ([t, s] * m)[:m]
                    return tuple(w[:i] + alt + w[i + m:])
    for i in range(len(w) - 1):
        if w[i] == w[i + 1]:
            return tuple(w[:i] + w[i + 2:])
    return tuple(w)


@pytest.mark.parametrize("G", [S3, B2, AFF, H2, A2_AFF])
def test_normal_form_invariant_under_moves(G):
    rng = random.Random(7)
    for _ in range(60):
        w = tuple(rng.randrange(G.rank) for _ in range(rng.randrange(8)))
        x = G.element(w)
        for _ in range(5):
            w = _braid_move(G, w, rng)
            assert G.element(w) == x


@settings(max_examples=60)
@given(st.lists(st.integers(0, 2), max_size=7), st.lists(st.integers(0, 2), max_size=7))
def test_length_subadditive_and_parity(a, b):
    x, y = A2_AFF.element(a), A2_AFF.element(b)
    xy = x * y
    assert xy.length <= x.length + y.length
    assert (xy.length - x.length - y.length) % 2 == 0


def test_bruhat_partial_order_s3():
    els = S3.enumerate_upto(3)
    for x in els:
        assert S3.bruhat_leq(x, x)
        for y in els:
            if x != y and S3.bruhat_leq(x, y):
                assert not S3.bruhat_leq(y, x)
            for z in els:
                if S3.bruhat_leq(x, y) and S3.bruhat_leq(y, z):
                    assert S3.bruhat_leq(x, z)


def test_inverse_and_identity():
    w = B2.parse("stt")
    assert w * w.inverse() == B2.identity
    assert str(B2.identity) == "id"
