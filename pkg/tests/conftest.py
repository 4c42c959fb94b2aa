import random

import pytest

from paritycontracts import (GameGraph, PriorityFn, buchi_to_parity,
                             cobuchi_to_parity)


def random_game(rng: random.Random, n: int, max_priority: int,
                branch: int = 3) -> tuple[GameGraph, PriorityFn]:
    """Seeded random total game with at most `branch` successors."""
    owners = [rng.randrange(2) for _ in range(n)]
    succs = [rng.sample(range(n), rng.randint(1, min(branch, n)))
             for _ in range(n)]
    prios = PriorityFn.of([rng.randrange(max_priority + 1) for _ in range(n)])
    return GameGraph.build(owners, succs), prios


@pytest.fixture
def example_game() -> GameGraph:
    """Four-vertex game used throughout: a and d belong to player 0,
    b and c to player 1; c carries player 0's recurrence target."""
    return GameGraph.build(
        owners=[0, 1, 1, 0],
        successors=[[0, 1, 2], [1, 3], [0, 2], [2]],
        names=["a", "b", "c", "d"])


A, B, C, D = 0, 1, 2, 3


@pytest.fixture
def visit_c(example_game) -> PriorityFn:
    return buchi_to_parity(example_game, {C})


@pytest.fixture
def avoid_b(example_game) -> PriorityFn:
    return cobuchi_to_parity(example_game, {A, C, D})


@pytest.fixture
def avoid_d(example_game) -> PriorityFn:
    return cobuchi_to_parity(example_game, {A, B, C})
