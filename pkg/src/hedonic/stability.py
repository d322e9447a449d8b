"""Stability certification for a (game, partition) pair.

Core stability is decided by exhaustive blocking-coalition search over all
2^n - 1 nonempty subsets, ascending by bitmask so the reported witness is
always the lowest one. Three further notions (individual rationality, Nash
stability, individual stability) are standard-literature conveniences; they
are tagged auxiliary in every report so they read as plumbing rather than
theory.

This module always evaluates through the exact public utilities. The fast
scaled-integer engine in :mod:`hedonic.search` deliberately does not share
this code path; the two routes cross-check each other in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Union

from .model import Game, Partition, members_of
from .utilities import utility


class Notion(str, Enum):
    CORE = "core"
    INDIVIDUAL_RATIONALITY = "individual-rationality"
    NASH = "nash"
    INDIVIDUAL_STABILITY = "individual-stability"


ALL_NOTIONS: tuple[Notion, ...] = (
    Notion.CORE,
    Notion.INDIVIDUAL_RATIONALITY,
    Notion.NASH,
    Notion.INDIVIDUAL_STABILITY,
)

#: Notions tagged as standard-literature plumbing in reports.
AUXILIARY_NOTIONS = frozenset(ALL_NOTIONS) - {Notion.CORE}


@dataclass(frozen=True)
class CoalitionWitness:
    """A coalition whose members all strictly gain by deserting their blocks."""

    coalition: int


@dataclass(frozen=True)
class PlayerWitness:
    """A player who would strictly rather be alone."""

    player: int


@dataclass(frozen=True)
class DeviationWitness:
    """A player plus the block they would strictly rather join (0 means going alone)."""

    player: int
    target: int


Witness = Union[CoalitionWitness, PlayerWitness, DeviationWitness]


@dataclass(frozen=True)
class Verdict:
    notion: Notion
    stable: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class StabilityReport:
    """One verdict per requested notion, in request order."""

    verdicts: tuple[Verdict, ...]

    def verdict(self, notion: Notion) -> Verdict:
        for v in self.verdicts:
            if v.notion is notion:
                return v
        raise KeyError(f"no verdict for notion {notion.value}")

    @property
    def all_stable(self) -> bool:
        return all(v.stable for v in self.verdicts)


def _require_partition(game: Game, partition: Partition) -> None:
    if partition.n != game.n:
        raise ValueError(
            f"partition over {partition.n} players does not match game with {game.n}"
        )


def find_blocking_coalition(game: Game, partition: Partition) -> Optional[int]:
    """Lowest-bitmask coalition whose members all strictly prefer it to their
    current blocks, or None when the partition is core stable.

    Ascending mask order plus early exit on the first non-improving member
    makes the result deterministic and independent of any parallel split.
    """
    _require_partition(game, partition)
    current = [utility(game, i, partition.block_of(i)) for i in range(game.n)]
    for mask in range(1, game.all_players + 1):
        for i in members_of(mask):
            if utility(game, i, mask) <= current[i]:
                break
        else:
            return mask
    return None


def is_core_stable(game: Game, partition: Partition) -> bool:
    """True when no coalition blocks the partition."""
    return find_blocking_coalition(game, partition) is None


def check_individual_rationality(game: Game, partition: Partition) -> Verdict:
    """Stable when no player strictly prefers their singleton to their block.

    The witness is the least-index violating player.
    """
    _require_partition(game, partition)
    for i in range(game.n):
        if utility(game, i, 1 << i) > utility(game, i, partition.block_of(i)):
            return Verdict(Notion.INDIVIDUAL_RATIONALITY, False, PlayerWitness(i))
    return Verdict(Notion.INDIVIDUAL_RATIONALITY, True)


def _deviation_targets(partition: Partition, own: int) -> list[int]:
    # going alone (target 0) first, then foreign blocks ascending by mask value
    return [0] + sorted(b for b in partition.blocks if b != own)


def check_nash_stability(game: Game, partition: Partition) -> Verdict:
    """Stable when no player gains by unilaterally joining another block or
    going alone. The witness is the least (player, then target mask) pair.
    """
    _require_partition(game, partition)
    for i in range(game.n):
        own = partition.block_of(i)
        here = utility(game, i, own)
        for target in _deviation_targets(partition, own):
            if utility(game, i, target | 1 << i) > here:
                return Verdict(Notion.NASH, False, DeviationWitness(i, target))
    return Verdict(Notion.NASH, True)


def check_individual_stability(game: Game, partition: Partition) -> Verdict:
    """Like Nash stability, but a move must also not hurt anyone in the
    receiving block."""
    _require_partition(game, partition)
    for i in range(game.n):
        own = partition.block_of(i)
        here = utility(game, i, own)
        for target in _deviation_targets(partition, own):
            joined = target | 1 << i
            if utility(game, i, joined) <= here:
                continue
            if all(
                utility(game, j, joined) >= utility(game, j, target)
                for j in members_of(target)
            ):
                return Verdict(Notion.INDIVIDUAL_STABILITY, False, DeviationWitness(i, target))
    return Verdict(Notion.INDIVIDUAL_STABILITY, True)


def _check_core(game: Game, partition: Partition) -> Verdict:
    blocker = find_blocking_coalition(game, partition)
    if blocker is None:
        return Verdict(Notion.CORE, True)
    return Verdict(Notion.CORE, False, CoalitionWitness(blocker))


_CHECKS = {
    Notion.CORE: _check_core,
    Notion.INDIVIDUAL_RATIONALITY: check_individual_rationality,
    Notion.NASH: check_nash_stability,
    Notion.INDIVIDUAL_STABILITY: check_individual_stability,
}


def _verify_witness(game: Game, partition: Partition, verdict: Verdict) -> None:
    """Re-check a witness before it leaves the module; a failure is a bug."""
    w = verdict.witness
    ok = True
    if isinstance(w, CoalitionWitness):
        ok = all(
            utility(game, i, w.coalition) > utility(game, i, partition.block_of(i))
            for i in members_of(w.coalition)
        )
    elif isinstance(w, PlayerWitness):
        i = w.player
        ok = utility(game, i, 1 << i) > utility(game, i, partition.block_of(i))
    elif isinstance(w, DeviationWitness):
        i, joined = w.player, w.target | 1 << w.player
        ok = utility(game, i, joined) > utility(game, i, partition.block_of(i))
        if ok and verdict.notion is Notion.INDIVIDUAL_STABILITY:
            ok = all(
                utility(game, j, joined) >= utility(game, j, w.target)
                for j in members_of(w.target)
            )
    if not ok:
        raise RuntimeError(
            f"internal error: witness for {verdict.notion.value} failed re-verification"
        )


def certify(
    game: Game,
    partition: Partition,
    notions: Iterable[Notion] = ALL_NOTIONS,
) -> StabilityReport:
    """One verdict per requested notion; every witness is re-verified before
    the report is emitted."""
    requested = tuple(Notion(n) for n in notions)
    if not requested:
        raise ValueError("at least one stability notion must be requested")
    verdicts = []
    for notion in requested:
        verdict = _CHECKS[notion](game, partition)
        if not verdict.stable:
            _verify_witness(game, partition, verdict)
        verdicts.append(verdict)
    return StabilityReport(tuple(verdicts))
