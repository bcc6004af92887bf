import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freeneck.symbols import (
    GroupContext,
    are_inverses,
    canonical_bracelet,
    conjugate,
    cyclic_reduce,
    format_word,
    free_reduce,
    invert_word,
    is_reduced,
    least_rotation,
    parse_word,
    reduction_status,
)


def words(k=4, max_size=8, min_size=0):
    return st.lists(st.integers(0, k - 1), min_size=min_size, max_size=max_size).map(tuple)


def all_rotations(w):
    return [tuple(w[i:] + w[:i]) for i in range(len(w))]


def free_reduce_random_order(w, rng):
    # independent reducer: cancel a randomly chosen adjacent pair until none remain
    w = list(w)
    while True:
        spots = [i for i in range(len(w) - 1) if {w[i], w[i + 1]} == {w[i] & ~1, (w[i] & ~1) + 1}]
        if not spots:
            return tuple(w)
        i = rng.choice(spots)
        del w[i:i + 2]


def random_reduced_word(rng, g, length):
    k = 2 * g
    while True:
        w = [rng.randrange(k)]
        while len(w) < length:
            s = rng.randrange(k)
            if s ^ 1 != w[-1]:
                w.append(s)
        if w[0] ^ 1 != w[-1] or length == 1:
            return tuple(w)


class TestInverses:
    def test_examples(self):
        assert are_inverses(0, 1)
        assert not are_inverses(0, 0)
        assert are_inverses(3, 2)
        assert not are_inverses(0, 2)

    def test_exhaustive_k4(self):
        # S' = {a, A, b, B}: the inverse pairs are exactly {0,1} and {2,3}
        pairs = {frozenset((0, 1)), frozenset((2, 3))}
        for x, y in product(range(4), repeat=2):
            assert are_inverses(x, y) == (frozenset((x, y)) in pairs)

    def test_invert_word_examples(self):
        assert invert_word(()) == ()
        assert invert_word((0, 2)) == (3, 1)
        assert invert_word((0, 0, 2)) == (3, 1, 1)

    @given(words(k=6))
    def test_involution_and_cancellation(self, w):
        assert invert_word(invert_word(w)) == w
        assert free_reduce(w + invert_word(w)) == ()
        assert free_reduce(invert_word(w) + w) == ()


class TestReduction:
    def test_free_reduce_examples(self):
        assert free_reduce((0, 1)) == ()
        assert free_reduce((0, 2, 3, 1)) == ()
        assert free_reduce((0, 2, 0)) == (0, 2, 0)

    def test_confluence_exhaustive(self):
        rng = random.Random(7)
        for n in range(7):
            for w in product(range(4), repeat=n):
                assert free_reduce(w) == free_reduce_random_order(w, rng)

    def test_cyclic_reduce_examples(self):
        assert cyclic_reduce((1, 2, 0)) == (2,)
        assert cyclic_reduce((0, 2)) == (0, 2)
        assert cyclic_reduce((0, 2, 2, 1)) == (2, 2)

    def test_cyclic_reduce_rejects_unreduced(self):
        with pytest.raises(ValueError):
            cyclic_reduce((0, 1, 2))

    @given(words(k=4, max_size=10))
    def test_cyclic_reduce_is_conjugate(self, w):
        w = free_reduce(w)
        c = cyclic_reduce(w)
        assert is_reduced(c)
        # peel the removed letters back off by conjugating
        x = w
        while len(x) > len(c):
            x = conjugate(x, x[0])
        assert x == c

    def test_status(self):
        assert reduction_status((0, 2)) == (True, True)
        assert reduction_status((0, 2, 1)) == (True, False)
        assert reduction_status((0, 1, 0))[0] is False
        assert reduction_status(()) == (True, True)

    def test_conjugate_examples(self):
        assert conjugate((0, 2), 0) == (2, 0)
        assert conjugate((), 3) == ()
        # a . abA . A has no cancelling pair
        assert conjugate((0, 2, 1), 1) == free_reduce((0, 0, 2, 1, 1)) == (0, 0, 2, 1, 1)


class TestCanonicalForms:
    def test_least_rotation_examples(self):
        assert least_rotation((2, 0)) == (0, 2)
        assert least_rotation((0, 0)) == (0, 0)
        assert least_rotation((2, 0, 3, 0)) == min(all_rotations((2, 0, 3, 0))) == (0, 2, 0, 3)

    def test_least_rotation_rejects_empty(self):
        with pytest.raises(ValueError):
            least_rotation(())

    def test_least_rotation_exhaustive(self):
        for n in range(1, 8):
            for w in product(range(3), repeat=n):
                assert least_rotation(w) == min(all_rotations(w))

    @given(words(k=6, max_size=20, min_size=1))
    def test_least_rotation_property(self, w):
        r = least_rotation(w)
        assert r in all_rotations(w)
        assert least_rotation(r) == r
        assert r == min(all_rotations(w))

    def test_canonical_bracelet_examples(self):
        assert canonical_bracelet((2, 0)) == (0, 2)
        assert canonical_bracelet((0, 3)) == (0, 3)
        assert canonical_bracelet((0, 0)) == (0, 0)

    def test_canonical_bracelet_brute(self):
        for w in product(range(4), repeat=5):
            if is_reduced(w):
                candidates = all_rotations(w) + all_rotations(invert_word(w))
                assert canonical_bracelet(w) == min(candidates)

    def test_canonical_bracelet_rejects(self):
        with pytest.raises(ValueError):
            canonical_bracelet(())
        with pytest.raises(ValueError):
            canonical_bracelet((0, 2, 1))

    @settings(max_examples=200)
    @given(st.integers(1, 4), st.integers(1, 15), st.integers(0, 2**32), st.integers(0, 30))
    def test_canonical_bracelet_invariance(self, g, n, seed, shift):
        w = random_reduced_word(random.Random(seed), g, n)
        c = canonical_bracelet(w)
        s = shift % n
        assert canonical_bracelet(w[s:] + w[:s]) == c
        inv = invert_word(w)
        assert canonical_bracelet(inv[s:] + inv[:s]) == c


class TestInverseNeverRotation:
    def test_exhaustive(self):
        for n in range(1, 7):
            for w in product(range(4), repeat=n):
                if is_reduced(w):
                    assert least_rotation(w) != least_rotation(invert_word(w))

    def test_random(self):
        rng = random.Random(2024)
        for _ in range(10_000):
            w = random_reduced_word(rng, rng.randint(1, 4), rng.randint(1, 20))
            assert least_rotation(w) != least_rotation(invert_word(w))


class TestFormat:
    def test_examples(self):
        assert format_word((0, 3), "letters") == "aB"
        assert format_word((0, 3), "ints") == "0,3"
        assert parse_word("Ab", 2) == (1, 2)
        assert format_word(()) == ""
        assert parse_word("", 2) == ()

    @given(st.integers(1, 40).flatmap(lambda g: st.tuples(st.just(g), words(k=2 * g, max_size=12))))
    def test_round_trip(self, case):
        g, w = case
        assert parse_word(format_word(w, "ints"), g, "ints") == w
        if g <= 26:
            assert parse_word(format_word(w, "letters", g), g, "letters") == w

    def test_rejections(self):
        with pytest.raises(ValueError):
            parse_word("ac", 2)
        with pytest.raises(ValueError):
            parse_word("0,4", 2)
        with pytest.raises(ValueError):
            parse_word("a1", 2, "letters")
        with pytest.raises(ValueError):
            format_word((0,), "letters", g=27)
        with pytest.raises(ValueError):
            GroupContext(0)

    def test_context(self):
        assert GroupContext(3).k == 6
        assert not GroupContext(1).is_cat
