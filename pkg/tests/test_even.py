import itertools

import pytest

from coxfree.automorphisms import aut_generators
from coxfree.even import ParityError, cox_to_free, free_to_cox, is_even
from coxfree.words import CoxWord, FreeWord

from oracles import all_cox_words, all_free_words, naive_free_reduce


def pair_substitution(letters):
    """Rewrite w_a w_b as (w_a w_1)(w_1 w_b) and substitute x_j for w_1 w_{j+1} on tuples."""
    out = []
    for a, b in zip(letters[::2], letters[1::2]):
        out += [-(a - 1)] if a != 1 else []
        out += [b - 1] if b != 1 else []
    return naive_free_reduce(out)


@pytest.mark.parametrize("letters, expected", [((), True), ((1, 2), True), ((3,), False)])
def test_is_even(letters, expected):
    assert is_even(CoxWord(4, letters)) is expected


@pytest.mark.parametrize(
    "cox, free",
    [((1, 2), (1,)), ((2, 1), (-1,)), ((2, 3), (-1, 2)), ((), ())],
)
def test_cox_to_free_examples(cox, free):
    assert cox_to_free(CoxWord(4, cox)) == FreeWord(3, free)


def test_cox_to_free_odd():
    with pytest.raises(ParityError):
        cox_to_free(CoxWord(4, (3,)))


@pytest.mark.parametrize(
    "free, cox",
    [((1,), (1, 2)), ((1, 2), (1, 2, 1, 3)), ((1, -1), ())],
)
def test_free_to_cox_examples(free, cox):
    assert free_to_cox(FreeWord(3, free)) == CoxWord(4, cox)


def test_matches_pair_substitution_oracle():
    for w in all_cox_words(4, 6):
        if len(w) % 2 == 0:
            assert cox_to_free(CoxWord(4, w)).letters == pair_substitution(w)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_round_trip_free(m):
    for w in all_free_words(m, 5 if m <= 3 else 4):
        u = FreeWord(m, w)
        v = free_to_cox(u)
        assert is_even(v)
        assert cox_to_free(v) == u


@pytest.mark.parametrize("n", [3, 4, 5])
def test_round_trip_cox(n):
    for w in all_cox_words(n, 6):
        if len(w) % 2 == 0:
            u = CoxWord(n, w)
            assert free_to_cox(cox_to_free(u)) == u


def test_homomorphism_n4():
    even = [CoxWord(4, w) for w in all_cox_words(4, 4) if len(w) % 2 == 0]
    images = {u: cox_to_free(u) for u in even}
    for u, v in itertools.product(even, repeat=2):
        assert cox_to_free(u * v) == images[u] * images[v]


def test_parity_preserved_by_generators():
    words = [CoxWord(4, w) for w in all_cox_words(4, 5)]
    for phi in aut_generators(4).values():
        for u in words:
            assert is_even(phi(u)) == is_even(u)
