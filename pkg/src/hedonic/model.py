"""Core domain model: friendship graphs, games, coalitions, partitions.

Players are dense integer indices 0..n-1 internally; display labels appear
only at I/O boundaries. Coalitions are plain int bitmasks, so membership
tests and intersections are single machine operations and every coalition
has exactly one representation.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union


class GameValidationError(ValueError):
    """Game inputs violate a structural invariant."""


class PartitionError(ValueError):
    """Blocks do not form a valid partition of the player set."""


class Model(str, Enum):
    """Preference model assigned to a player.

    The first two rank coalitions by friend/enemy counts, ``FRACTIONAL``
    aggregates a rational valuation matrix, and the last three mix a
    player's own friend-oriented score with the average friend-oriented
    score of their friends in the coalition.
    """

    FRIEND_ORIENTED = "friend-oriented"
    ENEMY_ORIENTED = "enemy-oriented"
    FRACTIONAL = "fractional"
    SELFISH_FIRST = "selfish-first"
    EQUAL_TREATMENT = "equal-treatment"
    TRULY_ALTRUISTIC = "truly-altruistic"


#: Models that read only the friendship graph (no valuation matrix needed).
GRAPH_MODELS = frozenset(Model) - {Model.FRACTIONAL}


class Aggregation(str, Enum):
    """How fractional utilities combine member valuations."""

    MEAN = "mean"
    SUM = "sum"


def bit(i: int) -> int:
    """Singleton coalition containing player i."""
    return 1 << i


def mask_of(members: Iterable[int]) -> int:
    """Bitmask coalition from an iterable of player indices."""
    m = 0
    for i in members:
        m |= 1 << i
    return m


def members_of(mask: int) -> tuple[int, ...]:
    """Player indices in a bitmask coalition, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Symmetric, irreflexive friendship relation over players 0..n-1.

    ``friends[i]`` is the bitmask of i's neighbors. Everyone who is neither
    i nor a friend of i is an enemy of i, so friends, enemies and {i}
    three-way partition the player set.
    """

    n: int
    friends: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GameValidationError("a graph needs at least one player")
        if len(self.friends) != self.n:
            raise GameValidationError("friends table must have one mask per player")
        full = (1 << self.n) - 1
        for i, m in enumerate(self.friends):
            if m & ~full:
                raise GameValidationError(f"player {i} has a friend outside 0..{self.n - 1}")
            if m >> i & 1:
                raise GameValidationError(f"player {i} cannot be their own friend")
            for j in members_of(m):
                if not self.friends[j] >> i & 1:
                    raise GameValidationError(f"friendship must be mutual: {i} likes {j} back")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise GameValidationError(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
            if i == j:
                raise GameValidationError(f"self-loop on player {i}")
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return cls(n, tuple(masks))

    @property
    def all_players(self) -> int:
        return (1 << self.n) - 1

    def enemies(self, i: int) -> int:
        """Everyone who is neither i nor a friend of i."""
        return self.all_players & ~self.friends[i] & ~(1 << i)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edge list as (i, j) pairs with i < j, lexicographic."""
        return tuple(
            (i, j) for i in range(self.n) for j in members_of(self.friends[i]) if i < j
        )

    def is_clique(self, coalition: int) -> bool:
        """True when every two members of the coalition are friends."""
        for i in members_of(coalition):
            if coalition & ~self.friends[i] & ~(1 << i):
                return False
        return True

    def is_connected(self) -> bool:
        reached = 1
        while True:
            grown = reached
            for i in members_of(reached):
                grown |= self.friends[i]
            if grown == reached:
                return reached == self.all_players
            reached = grown


@dataclass(frozen=True)
class Game:
    """An immutable hedonic game.

    Labeled players, a friendship graph, one preference model per player,
    and (needed only by fractional players) an exact rational valuation
    matrix with zero diagonal. Immutable after construction, so games are
    safe to share across threads and processes.
    """

    labels: tuple[str, ...]
    graph: Graph
    models: tuple[Model, ...]
    valuations: tuple[tuple[Fraction, ...], ...] | None = None
    aggregation: Aggregation = Aggregation.MEAN

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def all_players(self) -> int:
        return self.graph.all_players

    def friends(self, i: int) -> int:
        return self.graph.friends[i]

    def enemies(self, i: int) -> int:
        return self.graph.enemies(i)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown player label {label!r}") from None

    def member_labels(self, coalition: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in members_of(coalition))


ModelSpec = Union[Model, str, Sequence[Union[Model, str]], Mapping[str, Union[Model, str]]]


def _resolve_models(labels: tuple[str, ...], models: ModelSpec) -> tuple[Model, ...]:
    if isinstance(models, (Model, str)):
        single = Model(models)
        return (single,) * len(labels)
    if isinstance(models, Mapping):
        missing = [lab for lab in labels if lab not in models]
        if missing:
            raise GameValidationError(f"no model given for players: {', '.join(missing)}")
        extra = [lab for lab in models if lab not in labels]
        if extra:
            raise GameValidationError(f"model given for unknown players: {', '.join(extra)}")
        return tuple(Model(models[lab]) for lab in labels)
    resolved = tuple(Model(m) for m in models)
    if len(resolved) != len(labels):
        raise GameValidationError(
            f"got {len(resolved)} models for {len(labels)} players"
        )
    return resolved


def _resolve_valuations(
    labels: tuple[str, ...], valuations
) -> tuple[tuple[Fraction, ...], ...]:
    n = len(labels)
    if len(valuations) != n:
        raise GameValidationError(f"valuation matrix must have {n} rows")
    rows = []
    for i, raw_row in enumerate(valuations):
        row = [Fraction(v) for v in raw_row]
        if len(row) != n:
            raise GameValidationError(f"valuation row for {labels[i]!r} must have {n} entries")
        if row[i] != 0:
            warnings.warn(
                f"self-valuation of player {labels[i]!r} is {row[i]}; forcing it to 0",
                stacklevel=3,
            )
            row[i] = Fraction(0)
        rows.append(tuple(row))
    return tuple(rows)


def build_game(
    players: Sequence[str],
    edges: Iterable[tuple[Union[str, int], Union[str, int]]],
    valuations=None,
    models: ModelSpec = Model.FRIEND_ORIENTED,
    aggregation: Union[Aggregation, str] = Aggregation.MEAN,
) -> Game:
    """Validate raw inputs and assemble a Game.

    ``players`` fixes the index order; edges may name endpoints by label or
    index. ``models`` is a single tag for a homogeneous game, a sequence in
    player order, or a mapping from label to tag. Valuation entries accept
    ints, strings like "2/3", or Fractions; a nonzero self-valuation is
    forced to 0 with a warning.
    """
    labels = tuple(str(p) for p in players)
    if not labels:
        raise GameValidationError("a game needs at least one player")
    seen: set[str] = set()
    for lab in labels:
        if not lab:
            raise GameValidationError("player labels must be nonempty")
        if lab in seen:
            raise GameValidationError(f"duplicate player label {lab!r}")
        seen.add(lab)
    index = {lab: i for i, lab in enumerate(labels)}

    def endpoint(e) -> int:
        if isinstance(e, str):
            if e not in index:
                raise GameValidationError(f"unknown player label {e!r} in edge list")
            return index[e]
        return int(e)

    pairs = [(endpoint(u), endpoint(v)) for u, v in edges]
    graph = Graph.from_edges(len(labels), pairs)

    resolved_models = _resolve_models(labels, models)
    resolved_valuations = None
    if valuations is not None:
        resolved_valuations = _resolve_valuations(labels, valuations)
    for lab, model in zip(labels, resolved_models):
        if model is Model.FRACTIONAL and resolved_valuations is None:
            raise GameValidationError(
                f"player {lab!r} uses the fractional model but no valuations were given"
            )

    # aggregation only means something when valuations exist; normalize so
    # equality and round-trips cannot hinge on an inert field
    mode = Aggregation(aggregation) if resolved_valuations is not None else Aggregation.MEAN
    return Game(
        labels=labels,
        graph=graph,
        models=resolved_models,
        valuations=resolved_valuations,
        aggregation=mode,
    )


class Partition:
    """A coalition structure: disjoint nonempty blocks covering all players.

    Canonical form is imposed on construction (blocks ordered by their least
    member), so two partitions are equal exactly when they contain the same
    blocks. Blocks may be given as bitmasks or as iterables of indices.
    """

    __slots__ = ("n", "blocks", "_block_by_player")

    def __init__(self, n: int, blocks: Iterable[Union[int, Iterable[int]]]):
        masks = []
        for b in blocks:
            m = b if isinstance(b, int) else mask_of(b)
            if m == 0:
                raise PartitionError("empty block in partition")
            masks.append(m)
        full = (1 << n) - 1
        union = 0
        for m in masks:
            if m & ~full:
                raise PartitionError(f"block members outside 0..{n - 1}: {members_of(m & ~full)}")
            overlap = m & union
            if overlap:
                raise PartitionError(f"players in more than one block: {members_of(overlap)}")
            union |= m
        if union != full:
            raise PartitionError(f"players missing from partition: {members_of(full & ~union)}")
        self.n = n
        # sort key is the least member's bit; blocks are disjoint so keys are distinct
        self.blocks: tuple[int, ...] = tuple(sorted(masks, key=lambda m: m & -m))
        lookup = [0] * n
        for m in self.blocks:
            for i in members_of(m):
                lookup[i] = m
        self._block_by_player = tuple(lookup)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n, [1 << i for i in range(n)])

    @classmethod
    def grand(cls, n: int) -> "Partition":
        return cls(n, [(1 << n) - 1])

    def block_of(self, i: int) -> int:
        """The block containing player i."""
        return self._block_by_player[i]

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Partition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __repr__(self) -> str:
        shown = [list(members_of(m)) for m in self.blocks]
        return f"Partition({self.n}, {shown})"


def coalition_of(partition: Partition, i: int) -> int:
    """The block of the partition containing player i."""
    return partition.block_of(i)


def canonicalize(partition: Partition) -> Partition:
    """Canonical form of a partition; a no-op since construction canonicalizes."""
    return Partition(partition.n, partition.blocks)
