import random

import pytest

from tilepats.reduction import SubsetSumInstance, T26, half_subtractor_counter


@pytest.fixture
def sample():
    return SubsetSumInstance((11, 25, 37, 39), 75)


@pytest.fixture
def t26():
    return T26


@pytest.fixture
def counter():
    return half_subtractor_counter()


def random_linear_extension(width, height, rng):
    """Uniformly-ish random order in which every cell follows its west and south neighbours."""
    ready = [(1, 1)]
    done = set()
    order = []
    while ready:
        cell = ready.pop(rng.randrange(len(ready)))
        order.append(cell)
        done.add(cell)
        x, y = cell
        for nx, ny in ((x + 1, y), (x, y + 1)):
            if nx > width or ny > height:
                continue
            if (nx == 1 or (nx - 1, ny) in done) and (ny == 1 or (nx, ny - 1) in done):
                ready.append((nx, ny))
    return order


def ss_corpus(count, seed, max_size=6, max_value=63):
    """Random instances, about half built to be solvable."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        k = rng.randint(1, max_size)
        elements = [rng.randint(1, max_value) for _ in range(k)]
        if i % 2 == 0:
            subset = [v for v in elements if rng.random() < 0.5] or [elements[0]]
            target = sum(subset)
        else:
            target = rng.randint(1, sum(elements) + 8)
        out.append(SubsetSumInstance(tuple(elements), target))
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
