import pytest

from critexp import Word, maximal_repetitions


@pytest.fixture(scope="session", autouse=True)
def warm_kernel():
    # Trigger jit compilation once so timed tests measure the algorithm.
    maximal_repetitions(Word.from_bits((1 << 99) - 1, 200))
