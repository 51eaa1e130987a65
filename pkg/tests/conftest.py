import random

import pytest

from terrace.seqgen import SequenceFamily

BUILTIN = [
    SequenceFamily("cesaro", 1),
    SequenceFamily("ln1p", 1),
    SequenceFamily("tan", 1),
    SequenceFamily("tan", 2),
    SequenceFamily("sinh", 1),
    SequenceFamily("sinh", 2),
    SequenceFamily("sin", 1),
    SequenceFamily("atan", 1),
    SequenceFamily("asin", 2),
]


@pytest.fixture
def rng():
    return random.Random(20261015)
