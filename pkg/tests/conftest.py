import random

import pytest


def make_cycle(rng: random.Random, max_len: int, max_entry: int) -> tuple[int, ...]:
    """Random valid cusp cycle: entries >= 2, at least one >= 3."""
    n = rng.randint(1, max_len)
    w = [rng.randint(2, max_entry) for _ in range(n)]
    if all(x == 2 for x in w):
        w[rng.randrange(n)] = rng.randint(3, max_entry)
    return tuple(w)


def cycle_corpus(seed: int, count: int, max_len: int, max_entry: int):
    rng = random.Random(seed)
    return [make_cycle(rng, max_len, max_entry) for _ in range(count)]


@pytest.fixture
def rng():
    return random.Random(20260810)
