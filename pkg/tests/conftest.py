"""Shared generators for randomized tests.

Randomized tests use seeded random.Random instances so failures replay
exactly; hypothesis-based tests carry their own shrinking machinery.
"""

import random

import pytest

from braidcalc.braids import BraidWord
from braidcalc.combing import PureAWord


def random_braid(rng: random.Random, n: int, max_len: int) -> BraidWord:
    length = rng.randint(0, max_len)
    letters = tuple(
        (rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)
    )
    return BraidWord(n, letters)


def random_pure_aword(rng: random.Random, n: int, max_sylls: int,
                      max_exp: int = 1) -> PureAWord:
    pairs = []
    for _ in range(rng.randint(0, max_sylls)):
        i = rng.randint(1, n - 1)
        j = rng.randint(i + 1, n)
        e = rng.choice((1, -1)) * rng.randint(1, max_exp)
        pairs.append((i, j, e))
    return PureAWord.from_pairs(n, pairs)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0x5EED)
