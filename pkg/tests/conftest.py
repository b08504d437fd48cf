import random

import pytest
from hypothesis import strategies as st

from vknot.codec import GaussCode, Pass
from vknot.corpus import random_code


def random_codes(count, max_crossings=8, seed=0):
    rng = random.Random(seed)
    return [random_code(rng, rng.randint(0, max_crossings)) for _ in range(count)]


@st.composite
def gauss_codes(draw, max_crossings=6):
    n = draw(st.integers(0, max_crossings))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    passes = []
    for label, s in enumerate(signs, start=1):
        passes += [Pass(label, "O", s), Pass(label, "U", s)]
    order = draw(st.permutations(range(len(passes))))
    return GaussCode(tuple(passes[i] for i in order))


@pytest.fixture(scope="session")
def sample_codes():
    return random_codes(120, max_crossings=7, seed=11)
