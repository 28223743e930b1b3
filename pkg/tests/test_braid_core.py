from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from braidclass import (
    BraidWord,
    LatticeSide,
    PermutationBraid,
    all_permutation_braids,
    complement,
    delta,
    is_prefix,
    join,
    meet,
    permutation_braid_to_word,
    tau,
    word_to_permutation_braid,
)
from braidclass.errors import (
    InvalidLetter,
    InvalidStrandCount,
    NegativeLetter,
    NotSimple,
    ParseError,
    StrandMismatch,
)
from braidclass.oracle import brute_join, brute_meet

from strategies import simples

L, R = LatticeSide.LEFT, LatticeSide.RIGHT


def pb(n, *letters):
    return word_to_permutation_braid(BraidWord(n, letters))


# --- words ------------------------------------------------------------------

def test_parse_and_print():
    w = BraidWord.parse("3: 1 -2  # a comment")
    assert w == BraidWord(3, (1, -2))
    assert str(w) == "3: 1 -2"
    assert BraidWord.parse("4:") == BraidWord(4, ())
    assert BraidWord.parse(str(BraidWord(5, (4, -1, 2)))) == BraidWord(5, (4, -1, 2))


@pytest.mark.parametrize("text", ["", "3 1 2", "x: 1", "3: 1 a"])
def test_parse_rejects_garbage(text):
    with pytest.raises(ParseError):
        BraidWord.parse(text)


@pytest.mark.parametrize("n,letters", [(3, (3,)), (3, (0,)), (3, (-3,)), (2, (2,))])
def test_word_letters_must_be_generators(n, letters):
    with pytest.raises(InvalidLetter):
        BraidWord(n, letters)


def test_word_needs_two_strands():
    with pytest.raises(InvalidStrandCount):
        BraidWord(1, ())


def test_word_inverse_and_product():
    w = BraidWord(4, (1, -3, 2))
    assert w.inverse() == BraidWord(4, (-2, 3, -1))
    assert (w * w.inverse()).letters == (1, -3, 2, -2, 3, -1)
    with pytest.raises(StrandMismatch):
        w * BraidWord(3, (1,))


# --- delta and tau ------------------------------------------------------------

def test_delta_examples():
    assert delta(3).perm == (3, 2, 1)
    assert delta(3).word().letters == (1, 2, 1)
    assert delta(2).perm == (2, 1) and delta(2).word().letters == (1,)
    assert delta(4).perm == (4, 3, 2, 1) and delta(4).length == 6
    with pytest.raises(InvalidStrandCount):
        delta(1)


def test_tau_examples():
    assert tau(pb(3, 1)) == pb(3, 2)
    assert tau(delta(3)) == delta(3)
    assert tau(BraidWord(4, (1, -3))) == BraidWord(4, (3, -1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_tau_is_an_involution(n):
    for p in all_permutation_braids(n):
        assert tau(tau(p)) == p
        assert tau(p).length == p.length


# --- words <-> permutations ---------------------------------------------------

def test_word_to_permutation_examples():
    assert pb(3, 1, 2).perm == (2, 3, 1)
    assert pb(3) == PermutationBraid.identity(3)
    with pytest.raises(NotSimple):
        pb(3, 1, 1)
    with pytest.raises(NegativeLetter):
        word_to_permutation_braid(BraidWord(3, (1, -2)))


def test_permutation_to_word_examples():
    assert permutation_braid_to_word(PermutationBraid.identity(3)).letters == ()
    assert permutation_braid_to_word(PermutationBraid(3, (3, 2, 1))).letters == (1, 2, 1)
    assert permutation_braid_to_word(PermutationBraid(3, (2, 3, 1))).letters == (1, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_word_permutation_round_trip(n):
    for p in all_permutation_braids(n):
        w = permutation_braid_to_word(p)
        assert len(w) == p.length
        assert word_to_permutation_braid(w) == p


def test_canonical_word_takes_lowest_generator_first():
    # sigma_1 sigma_3 and sigma_3 sigma_1 are the same braid
    assert permutation_braid_to_word(pb(4, 3, 1)).letters == (1, 3)


def test_permutation_braid_validates():
    with pytest.raises(ValueError):
        PermutationBraid(3, (1, 1, 2))
    with pytest.raises(ValueError):
        PermutationBraid(3, (1, 2))


# --- complements --------------------------------------------------------------

def test_complement_examples():
    s1 = pb(3, 1)
    assert complement(s1, R) == pb(3, 2, 1)
    assert complement(delta(3), R) == PermutationBraid.identity(3)
    assert complement(PermutationBraid.identity(3), R) == delta(3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_complement_duality(n):
    D = delta(n).length
    for p in all_permutation_braids(n):
        r, l = complement(p, R), complement(p, L)
        assert p.length + r.length == D and l.length + p.length == D
        # p . p* = Delta and *p . p = Delta, with additive lengths
        assert is_prefix(p, delta(n), L) and is_prefix(r, delta(n), R)
        assert word_to_permutation_braid(p.word() * r.word()) == delta(n)
        assert word_to_permutation_braid(l.word() * p.word()) == delta(n)


# --- lattice ------------------------------------------------------------------

def test_lattice_examples():
    s1, s2, e = pb(3, 1), pb(3, 2), PermutationBraid.identity(3)
    assert meet(s1, s2) == e
    assert join(s1, s2) == delta(3)
    assert is_prefix(s1, pb(3, 1, 2))
    assert not is_prefix(s2, pb(3, 1, 2))
    for a in all_permutation_braids(3):
        assert meet(a, a) == a and join(a, a) == a
        assert meet(a, delta(3)) == a
        assert is_prefix(e, a)


def test_lattice_strand_mismatch():
    with pytest.raises(StrandMismatch):
        meet(pb(3, 1), pb(4, 1))


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("side", [L, R])
def test_lattice_matches_brute_force_exhaustively(n, side):
    ps = all_permutation_braids(n)
    for a, b in itertools.product(ps, ps):
        assert meet(a, b, side) == brute_meet(a, b, side)
        assert join(a, b, side) == brute_join(a, b, side)


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("side", [L, R])
def test_lattice_laws_exhaustive(n, side):
    ps = all_permutation_braids(n)
    e, d = PermutationBraid.identity(n), delta(n)
    for a, b in itertools.product(ps, ps):
        m, j = meet(a, b, side), join(a, b, side)
        assert m == meet(b, a, side) and j == join(b, a, side)
        assert is_prefix(m, a, side) and is_prefix(m, b, side)
        assert is_prefix(a, j, side) and is_prefix(b, j, side)
        assert meet(a, join(a, b, side), side) == a
        assert join(a, meet(a, b, side), side) == a
        assert (meet(a, b, side) == a) == is_prefix(a, b, side)
    for a in ps:
        assert meet(a, e, side) == e and join(a, d, side) == d


def test_associativity_exhaustive_n3():
    ps = all_permutation_braids(3)
    for side in (L, R):
        for a, b, c in itertools.product(ps, repeat=3):
            assert meet(meet(a, b, side), c, side) == meet(a, meet(b, c, side), side)
            assert join(join(a, b, side), c, side) == join(a, join(b, c, side), side)


@pytest.mark.parametrize("n", [5, 6])
@given(data=st.data())
def test_lattice_laws_sampled(n, data):
    a, b, c = (data.draw(simples(n)) for _ in range(3))
    side = data.draw(st.sampled_from([L, R]))
    assert meet(meet(a, b, side), c, side) == meet(a, meet(b, c, side), side)
    assert join(join(a, b, side), c, side) == join(a, join(b, c, side), side)
    assert meet(a, join(a, b, side), side) == a
    assert join(a, meet(a, b, side), side) == a
    m = meet(a, b, side)
    assert is_prefix(m, a, side) and is_prefix(m, b, side)


@pytest.mark.parametrize("n", [3, 4])
def test_tau_compatibility_exhaustive(n):
    ps = all_permutation_braids(n)
    for a, b in itertools.product(ps, ps):
        assert tau(meet(a, b)) == meet(tau(a), tau(b))
        assert tau(join(a, b)) == join(tau(a), tau(b))


@given(data=st.data())
def test_right_lattice_is_left_lattice_reversed(data):
    n = data.draw(st.integers(3, 6))
    a, b = data.draw(simples(n)), data.draw(simples(n))
    assert meet(a, b, R) == meet(a.reverse(), b.reverse(), L).reverse()
    assert join(a, b, R) == join(a.reverse(), b.reverse(), L).reverse()


def test_large_n_lattice_smoke():
    n = 16
    a = PermutationBraid(n, tuple(range(n, 0, -1)))
    b = pb(n, 1, 2, 3)
    assert meet(a, b) == b and join(a, b) == a
