import random
from pathlib import Path

import pytest

from afrank import fixtures
from afrank.framework import ArgumentationFramework
from afrank.properties import random_framework
from string import ascii_lowercase

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fig9():
    return fixtures.fig9()


@pytest.fixture
def f8a():
    return fixtures.f8a()


@pytest.fixture
def f8b():
    return fixtures.f8b()


@pytest.fixture
def selfloop():
    return fixtures.selfloop()


def labelled_digraphs(n):
    """Every labelled digraph on the first n letters (2^(n*n) of them)."""
    names = list(ascii_lowercase[:n])
    for mask in range(1 << (n * n)):
        attacks = [
            (names[i], names[j])
            for i in range(n)
            for j in range(n)
            if mask >> (i * n + j) & 1
        ]
        yield ArgumentationFramework(names, attacks)


def random_corpus(count=500, sizes=(5, 6), seed=20260810):
    """The seeded random frameworks shared by the oracle/invariant suites."""
    rng = random.Random(seed)
    return [random_framework(rng, rng.choice(sizes)) for _ in range(count)]
