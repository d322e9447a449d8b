"""Deterministic random instance generators shared across the test suite."""

from __future__ import annotations

import random
import string
from fractions import Fraction

from hedonic import Aggregation, Game, Model, Partition, build_game

ALL_MODELS = tuple(Model)


def labels_for(n: int) -> list[str]:
    return list(string.ascii_lowercase[:n])


def random_edges(rng: random.Random, n: int, p: float = 0.5) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]


def random_valuations(rng: random.Random, n: int) -> list[list[Fraction]]:
    choices = [Fraction(k) for k in range(-3, 4)] + [Fraction(1, 2), Fraction(-2, 3), Fraction(5, 4)]
    return [
        [Fraction(0) if i == j else rng.choice(choices) for j in range(n)]
        for i in range(n)
    ]


def random_game(rng: random.Random, n: int, model: Model | str | None = None) -> Game:
    """A random game; model None means heterogeneous (one per player)."""
    if model is None:
        models = [rng.choice(ALL_MODELS) for _ in range(n)]
    else:
        models = [Model(model)] * n
    needs_valuations = Model.FRACTIONAL in models
    return build_game(
        labels_for(n),
        random_edges(rng, n),
        valuations=random_valuations(rng, n) if needs_valuations else None,
        models=models,
        aggregation=rng.choice((Aggregation.MEAN, Aggregation.SUM)),
    )


def random_partition(rng: random.Random, n: int) -> Partition:
    assignment = [0] * n
    top = 0
    for i in range(1, n):
        assignment[i] = rng.randint(0, top + 1)
        top = max(top, assignment[i])
    blocks: dict[int, list[int]] = {}
    for i, k in enumerate(assignment):
        blocks.setdefault(k, []).append(i)
    return Partition(n, blocks.values())


#: A 5-player sum-mode fractional game with a provably empty core (verified
#: by exhaustive scan); exercises the counterexample certificate machinery.
EMPTY_CORE_VALUATIONS = [
    [0, 4, 1, -5, 3],
    [3, 0, 3, 4, 4],
    [-9, -5, 0, 3, 4],
    [-1, 1, 2, 0, -5],
    [3, -9, 1, 4, 0],
]


def empty_core_game() -> Game:
    return build_game(
        labels_for(5),
        [],
        valuations=EMPTY_CORE_VALUATIONS,
        models=Model.FRACTIONAL,
        aggregation=Aggregation.SUM,
    )
