import random

import pytest

from config import settings


@pytest.fixture
def rng() -> random.Random:
    return random.Random(settings.DEFAULT_SEED)


def random_word(rng: random.Random, letters, max_length: int) -> tuple:
    return tuple(rng.choice(letters) for _ in range(rng.randint(0, max_length)))
