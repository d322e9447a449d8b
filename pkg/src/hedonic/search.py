"""Exhaustive enumeration, core computation, and the empty-core hunt.

Partitions stream in restricted-growth-string order: position i of the
string names the block of player i, and a block index may exceed the
previous maximum by at most one. That order is canonical, duplicate-free,
and needs only constant memory per successor.

Core scans run on a per-game table of scaled integer utilities: every
model's utility times lcm(1..n) (times the common valuation denominator
when fractional players are present) is an integer, so the inner loop does
pure int comparisons and stays exact. The public stability analyzer is
deliberately not reused here; the two routes cross-check each other in the
test suite.
"""

from __future__ import annotations

import math
import string
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .model import Aggregation, Game, Graph, Model, Partition, members_of
from .utilities import utility

#: Largest player count for full partition enumeration (Bell(12) is ~4.2M).
PARTITION_PLAYER_CAP = 12
#: Largest player count for full labeled-graph sweeps (2^21 graphs at n=7).
SWEEP_PLAYER_CAP = 7
#: Edge-mask range per hunt work unit; fixed so reports and checkpoints never
#: depend on the worker count.
HUNT_CHUNK = 512


class CapExceeded(ValueError):
    """The request would enumerate past a configured cap; refuse rather than thrash."""


class TimeBudgetExceeded(RuntimeError):
    """A bounded computation ran out of its time budget."""


# ---------------------------------------------------------------------------
# set partitions


def _rgs_strings(n: int) -> Iterator[list[int]]:
    """All restricted growth strings of length n, lexicographically ascending.

    Yields its internal buffer; callers must consume each string before
    advancing.
    """
    if n == 0:
        yield []
        return
    a = [0] * n  # a[i] = block index of player i
    b = [1] * n  # b[i] = 1 + max(a[:i]) for i >= 1
    while True:
        yield a
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, n):
            b[j] = b[j - 1] if b[j - 1] > a[j - 1] else a[j - 1] + 1
            a[j] = 0


def _blocks_from_rgs(a: list[int]) -> list[int]:
    """Block bitmasks of a restricted growth string, ordered by least member."""
    blocks: list[int] = []
    for i, k in enumerate(a):
        if k == len(blocks):
            blocks.append(1 << i)
        else:
            blocks[k] |= 1 << i
    return blocks


def enumerate_partitions(n: int, *, cap: int = PARTITION_PLAYER_CAP) -> Iterator[Partition]:
    """Every coalition structure of n players, canonical and duplicate-free."""
    if n < 0:
        raise ValueError("player count must be nonnegative")
    if n > cap:
        raise CapExceeded(
            f"partition enumeration for n={n} exceeds the cap of {cap} players"
        )

    def generate() -> Iterator[Partition]:
        for a in _rgs_strings(n):
            yield Partition(n, _blocks_from_rgs(a))

    return generate()


# ---------------------------------------------------------------------------
# labeled graphs


def edge_positions(n: int) -> tuple[tuple[int, int], ...]:
    """Lexicographic (i, j) pairs with i < j; bit k of an edge mask is pair k."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def graph_from_edge_mask(n: int, edge_mask: int, pairs=None) -> Graph:
    friends = [0] * n
    for k, (i, j) in enumerate(pairs if pairs is not None else edge_positions(n)):
        if edge_mask >> k & 1:
            friends[i] |= 1 << j
            friends[j] |= 1 << i
    return Graph(n, tuple(friends))


def edge_mask_of_graph(graph: Graph) -> int:
    mask = 0
    for k, (i, j) in enumerate(edge_positions(graph.n)):
        if graph.friends[i] >> j & 1:
            mask |= 1 << k
    return mask


def enumerate_graphs(
    n: int, connected_only: bool = False, *, cap: int = SWEEP_PLAYER_CAP
) -> Iterator[Graph]:
    """All labeled friendship graphs on n players, ascending by edge bitmask."""
    if n < 1:
        raise ValueError("player count must be at least 1")
    if n > cap:
        raise CapExceeded(f"graph sweep for n={n} exceeds the cap of {cap} players")
    pairs = edge_positions(n)

    def generate() -> Iterator[Graph]:
        for edge_mask in range(1 << len(pairs)):
            graph = graph_from_edge_mask(n, edge_mask, pairs)
            if connected_only and not graph.is_connected():
                continue
            yield graph

    return generate()


# ---------------------------------------------------------------------------
# scaled integer utilities


class _ScaledTable:
    """Per-game table of every member's utility of every coalition, times a
    fixed positive integer scale, so preference checks are int comparisons.

    The scale is lcm(1..n) times the lcm of all valuation denominators; the
    friend-count models are integral already, the altruistic averages divide
    by at most n members, and fractional means divide by the coalition size.
    """

    __slots__ = ("n", "full", "by_player", "by_mask")

    def __init__(self, game: Game):
        n = game.n
        full = (1 << n) - 1
        self.n = n
        self.full = full
        scale = math.lcm(*range(1, n + 1))
        scaled_valuations = None
        if game.valuations is not None:
            denom = math.lcm(*(v.denominator for row in game.valuations for v in row))
            scale *= denom
            scaled_valuations = [
                [int(v * denom) * (scale // denom) for v in row] for row in game.valuations
            ]

        bits = [members_of(m) for m in range(full + 1)]
        friends = game.graph.friends
        enemies = [game.graph.enemies(i) for i in range(n)]
        n5 = n**5

        fo = [[0] * (full + 1) for _ in range(n)]
        for m in range(1, full + 1):
            for i in bits[m]:
                fo[i][m] = n * (m & friends[i]).bit_count() - (m & enemies[i]).bit_count()

        by_player = [[0] * (full + 1) for _ in range(n)]
        mean_mode = game.aggregation is Aggregation.MEAN
        for m in range(1, full + 1):
            mem = bits[m]
            fo_m = [fo[i][m] for i in mem]
            for i in mem:
                model = game.models[i]
                if model is Model.FRIEND_ORIENTED:
                    value = scale * fo[i][m]
                elif model is Model.ENEMY_ORIENTED:
                    value = scale * (
                        (m & friends[i]).bit_count() - n * (m & enemies[i]).bit_count()
                    )
                elif model is Model.FRACTIONAL:
                    row = scaled_valuations[i]  # type: ignore[index]
                    total = sum(row[j] for j in mem)
                    value = total // len(mem) if mean_mode else total
                    # scaled valuations are premultiplied by scale/denom, and
                    # len(mem) divides scale, so the division above is exact
                else:
                    friends_present = m & friends[i]
                    k = friends_present.bit_count()
                    friend_total = sum(
                        s for j, s in zip(mem, fo_m) if friends_present >> j & 1
                    )
                    if model is Model.SELFISH_FIRST:
                        value = scale * n5 * fo[i][m] + (
                            (scale // k) * friend_total if k else 0
                        )
                    elif model is Model.EQUAL_TREATMENT:
                        value = (scale // (k + 1)) * (friend_total + fo[i][m])
                    else:  # truly altruistic
                        value = scale * fo[i][m] + (
                            n5 * (scale // k) * friend_total if k else 0
                        )
                by_player[i][m] = value

        self.by_player = by_player
        self.by_mask = [
            tuple((i, by_player[i][m]) for i in bits[m]) for m in range(full + 1)
        ]

    def current_utilities(self, blocks: Iterable[int]) -> list[int]:
        """Scaled utility each player gets from their own block."""
        cur = [0] * self.n
        for block in blocks:
            for i, value in self.by_mask[block]:
                cur[i] = value
        return cur

    def first_blocker(self, cur: list[int]) -> Optional[int]:
        """Lowest-bitmask coalition all of whose members beat their current
        scaled utility, or None."""
        by_mask = self.by_mask
        for m in range(1, self.full + 1):
            for i, value in by_mask[m]:
                if value <= cur[i]:
                    break
            else:
                return m
        return None


# ---------------------------------------------------------------------------
# core computation


@dataclass(frozen=True)
class CoreResult:
    """The exact core of a game, from an exhaustive partition scan."""

    game: Game
    partitions: tuple[Partition, ...]
    exhaustive: bool
    partitions_scanned: int
    blocked_partitions: int


def _require_partition_cap(game: Game) -> None:
    if game.n > PARTITION_PLAYER_CAP:
        raise CapExceeded(
            f"core computation needs all partitions of {game.n} players; "
            f"the cap is {PARTITION_PLAYER_CAP}"
        )


def compute_core(game: Game, *, time_budget_s: Optional[float] = None) -> CoreResult:
    """Filter every coalition structure through the blocking search.

    Raises TimeBudgetExceeded when a budget is given and runs out; no
    partial result is returned in that case.
    """
    _require_partition_cap(game)
    deadline = time.monotonic() + time_budget_s if time_budget_s is not None else None
    table = _ScaledTable(game)
    stable: list[Partition] = []
    scanned = 0
    blocked = 0
    for a in _rgs_strings(game.n):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeBudgetExceeded(
                f"core computation for n={game.n} exceeded its "
                f"{time_budget_s}s budget after {scanned} partitions"
            )
        scanned += 1
        blocks = _blocks_from_rgs(a)
        if table.first_blocker(table.current_utilities(blocks)) is None:
            stable.append(Partition(game.n, blocks))
        else:
            blocked += 1
    return CoreResult(
        game=game,
        partitions=tuple(stable),
        exhaustive=True,
        partitions_scanned=scanned,
        blocked_partitions=blocked,
    )


def find_core_partition(game: Game) -> Optional[Partition]:
    """First core-stable partition in canonical stream order, or None when
    the core is empty."""
    _require_partition_cap(game)
    table = _ScaledTable(game)
    for a in _rgs_strings(game.n):
        blocks = _blocks_from_rgs(a)
        if table.first_blocker(table.current_utilities(blocks)) is None:
            return Partition(game.n, blocks)
    return None


# ---------------------------------------------------------------------------
# empty-core hunt


@dataclass(frozen=True)
class Counterexample:
    """A graph whose homogeneous game has an empty core, certified by one
    verified blocking coalition per partition."""

    game: Game
    edge_mask: int
    certificate: tuple[tuple[Partition, int], ...]


@dataclass(frozen=True)
class HuntReport:
    model: Model
    aggregation: Aggregation
    n_values: tuple[int, ...]
    connected_only: bool
    games_scanned: int
    counterexamples: tuple[Counterexample, ...]


def homogeneous_game(
    graph: Graph, model: Model, aggregation: Aggregation = Aggregation.MEAN
) -> Game:
    """Give every player of the graph the same model. Fractional players get
    the simple symmetric valuations induced by the graph (1 per friend)."""
    labels = tuple(string.ascii_lowercase[i] for i in range(graph.n))
    valuations = None
    if model is Model.FRACTIONAL:
        valuations = tuple(
            tuple(Fraction(graph.friends[i] >> j & 1) for j in range(graph.n))
            for i in range(graph.n)
        )
    return Game(
        labels=labels,
        graph=graph,
        models=(model,) * graph.n,
        valuations=valuations,
        aggregation=aggregation,
    )


def certify_empty_core(game: Game) -> Optional[tuple[tuple[Partition, int], ...]]:
    """One lowest-bitmask blocker per partition when the core is empty,
    re-verified through the exact public utilities; None when some partition
    is stable."""
    _require_partition_cap(game)
    table = _ScaledTable(game)
    entries: list[tuple[Partition, int]] = []
    for a in _rgs_strings(game.n):
        blocks = _blocks_from_rgs(a)
        blocker = table.first_blocker(table.current_utilities(blocks))
        if blocker is None:
            return None
        partition = Partition(game.n, blocks)
        for i in members_of(blocker):
            if not utility(game, i, blocker) > utility(game, i, partition.block_of(i)):
                raise RuntimeError(
                    "internal error: fast-engine blocker failed exact re-verification"
                )
        entries.append((partition, blocker))
    return tuple(entries)


def _hunt_chunk(
    model: Model,
    aggregation: Aggregation,
    n: int,
    start: int,
    end: int,
    connected_only: bool,
) -> tuple[int, list[int]]:
    """Scan one edge-mask range; return (games checked, empty-core edge masks)."""
    pairs = edge_positions(n)
    scanned = 0
    hits: list[int] = []
    for edge_mask in range(start, end):
        graph = graph_from_edge_mask(n, edge_mask, pairs)
        if connected_only and not graph.is_connected():
            continue
        scanned += 1
        game = homogeneous_game(graph, model, aggregation)
        table = _ScaledTable(game)
        empty = True
        for a in _rgs_strings(n):
            blocks = _blocks_from_rgs(a)
            if table.first_blocker(table.current_utilities(blocks)) is None:
                empty = False
                break
        if empty:
            hits.append(edge_mask)
    return scanned, hits


def _hunt_chunk_star(args) -> tuple[int, list[int]]:
    return _hunt_chunk(*args)


_CHECKPOINT_HEADER = "hedonic-hunt-checkpoint v1"


def _checkpoint_params(model, aggregation, n_max, connected_only) -> str:
    return (
        f"{_CHECKPOINT_HEADER} model={model.value} aggregation={aggregation.value} "
        f"n_max={n_max} connected={int(connected_only)}"
    )


def _load_checkpoint(path, expected_header: str) -> dict[tuple[int, int, int], tuple[int, list[int]]]:
    done: dict[tuple[int, int, int], tuple[int, list[int]]] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except FileNotFoundError:
        return done
    if not lines:
        return done
    if lines[0].strip() != expected_header:
        raise ValueError(
            f"checkpoint {path} belongs to a different hunt: {lines[0].strip()!r}"
        )
    for line in lines[1:]:
        fields = line.split()
        if len(fields) != 5:
            continue  # torn write from an interrupted run
        try:
            n, start, end, scanned = (int(f) for f in fields[:4])
            hits = [] if fields[4] == "-" else [int(h) for h in fields[4].split(",")]
        except ValueError:
            continue
        done[(n, start, end)] = (scanned, hits)
    return done


def _format_checkpoint_line(n, start, end, scanned, hits) -> str:
    hit_field = ",".join(str(h) for h in hits) if hits else "-"
    return f"{n} {start} {end} {scanned} {hit_field}"


def hunt_empty_core(
    model: Model,
    n_max: int,
    connected_only: bool = False,
    checkpoint_path=None,
    *,
    workers: int = 1,
    aggregation: Aggregation = Aggregation.MEAN,
) -> HuntReport:
    """Sweep every labeled graph with 1..n_max players under a homogeneous
    model and decide core emptiness exhaustively for each.

    A counterexample would settle whether the model admits empty cores, so
    each one ships a certificate (a verified blocker for every partition)
    that can be re-checked without trusting this code. The report is
    byte-identical for any worker count; a checkpoint file records completed
    edge-mask ranges so interrupted sweeps resume exactly.
    """
    model = Model(model)
    aggregation = Aggregation(aggregation)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if n_max > SWEEP_PLAYER_CAP:
        raise CapExceeded(f"hunt for n={n_max} exceeds the cap of {SWEEP_PLAYER_CAP} players")
    if workers < 1:
        raise ValueError("workers must be at least 1")

    chunks: list[tuple[int, int, int]] = []
    for n in range(1, n_max + 1):
        total = 1 << len(edge_positions(n))
        for start in range(0, total, HUNT_CHUNK):
            chunks.append((n, start, min(start + HUNT_CHUNK, total)))

    header = _checkpoint_params(model, aggregation, n_max, connected_only)
    done = _load_checkpoint(checkpoint_path, header) if checkpoint_path else {}
    pending = [c for c in chunks if c not in done]

    checkpoint_fh = None
    if checkpoint_path is not None:
        fresh = not done
        checkpoint_fh = open(checkpoint_path, "a", encoding="utf-8")
        if fresh and checkpoint_fh.tell() == 0:
            checkpoint_fh.write(header + "\n")
            checkpoint_fh.flush()

    def consume(outcomes) -> None:
        for (n, start, end), (scanned, hits) in zip(pending, outcomes):
            done[(n, start, end)] = (scanned, hits)
            if checkpoint_fh is not None:
                checkpoint_fh.write(_format_checkpoint_line(n, start, end, scanned, hits) + "\n")
                checkpoint_fh.flush()

    try:
        specs = [(model, aggregation, n, s, e, connected_only) for n, s, e in pending]
        if workers == 1 or not specs:
            consume(map(_hunt_chunk_star, specs))
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                consume(pool.map(_hunt_chunk_star, specs))
    finally:
        if checkpoint_fh is not None:
            checkpoint_fh.close()

    games_scanned = 0
    hit_masks: list[tuple[int, int]] = []
    for n, start, end in chunks:
        scanned, hits = done[(n, start, end)]
        games_scanned += scanned
        hit_masks.extend((n, h) for h in hits)

    counterexamples = []
    for n, edge_mask in hit_masks:
        game = homogeneous_game(graph_from_edge_mask(n, edge_mask), model, aggregation)
        certificate = certify_empty_core(game)
        if certificate is None:
            raise RuntimeError(
                "internal error: hunted hit has a core-stable partition on re-check"
            )
        counterexamples.append(Counterexample(game, edge_mask, certificate))

    return HuntReport(
        model=model,
        aggregation=aggregation,
        n_values=tuple(range(1, n_max + 1)),
        connected_only=connected_only,
        games_scanned=games_scanned,
        counterexamples=tuple(counterexamples),
    )
