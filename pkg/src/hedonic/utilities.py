"""The six utility functions and the preference relation they induce.

Every result is exact: plain ints for the friend/enemy-count models,
fractions wherever an average or a rational valuation enters. No floats
anywhere, so comparisons can never be perturbed by rounding. Throughout,
n is the total number of players in the game, never the coalition size.
"""

from __future__ import annotations

import functools
from enum import Enum
from fractions import Fraction
from typing import Union

from .model import Aggregation, Game, Model, members_of


class Preference(Enum):
    """Player i's strict/indifferent stance between two coalitions."""

    STRICTLY_PREFERS = "strictly-prefers"
    INDIFFERENT = "indifferent"
    STRICTLY_DISPREFERRED = "strictly-dispreferred"


Utility = Union[int, Fraction]


def _require_member(game: Game, i: int, coalition: int) -> None:
    if not 0 <= i < game.n:
        raise ValueError(f"player index {i} outside 0..{game.n - 1}")
    if coalition & ~game.all_players:
        raise ValueError("coalition contains players outside the game")
    if not coalition >> i & 1:
        raise ValueError(f"player {i} is not a member of the coalition")


def friend_oriented_utility(game: Game, i: int, coalition: int) -> int:
    """n * |friends in C| - |enemies in C|: more friends first, fewer enemies as tie-break."""
    _require_member(game, i, coalition)
    return (
        game.n * (coalition & game.friends(i)).bit_count()
        - (coalition & game.enemies(i)).bit_count()
    )


def enemy_oriented_utility(game: Game, i: int, coalition: int) -> int:
    """|friends in C| - n * |enemies in C|: fewer enemies first, more friends as tie-break."""
    _require_member(game, i, coalition)
    return (
        (coalition & game.friends(i)).bit_count()
        - game.n * (coalition & game.enemies(i)).bit_count()
    )


def fractional_utility(game: Game, i: int, coalition: int) -> Fraction:
    """Sum of i's valuations over the coalition, divided by its size in mean mode."""
    _require_member(game, i, coalition)
    if game.valuations is None:
        raise ValueError("fractional utility needs a valuation matrix")
    row = game.valuations[i]
    total = Fraction(sum(row[j] for j in members_of(coalition)))
    if game.aggregation is Aggregation.MEAN:
        return total / coalition.bit_count()
    return total


@functools.lru_cache(maxsize=1 << 16)
def fo_profile(game: Game, coalition: int) -> tuple[int, ...]:
    """Friend-oriented utility of every member of the coalition, members ascending.

    Memoized per (game, coalition); the cache only changes speed, never results.
    """
    return tuple(friend_oriented_utility(game, j, coalition) for j in members_of(coalition))


def _friend_average(game: Game, i: int, coalition: int) -> Fraction:
    """Average friend-oriented utility of i's friends inside the coalition.

    Defined as 0 when i has no friends there, so the altruistic utilities
    stay total.
    """
    friends_present = coalition & game.friends(i)
    if friends_present == 0:
        return Fraction(0)
    profile = fo_profile(game, coalition)
    total = sum(
        score
        for j, score in zip(members_of(coalition), profile)
        if friends_present >> j & 1
    )
    return Fraction(total, friends_present.bit_count())


def selfish_first_utility(game: Game, i: int, coalition: int) -> Fraction:
    """Own friend-oriented score scaled by n^5; friends' average as the tie-break."""
    _require_member(game, i, coalition)
    own = friend_oriented_utility(game, i, coalition)
    return game.n**5 * own + _friend_average(game, i, coalition)


def equal_treatment_utility(game: Game, i: int, coalition: int) -> Fraction:
    """Average friend-oriented score over i together with i's friends in the coalition."""
    _require_member(game, i, coalition)
    own = friend_oriented_utility(game, i, coalition)
    friends_present = coalition & game.friends(i)
    profile = fo_profile(game, coalition)
    total = own + sum(
        score
        for j, score in zip(members_of(coalition), profile)
        if friends_present >> j & 1
    )
    return Fraction(total, friends_present.bit_count() + 1)


def truly_altruistic_utility(game: Game, i: int, coalition: int) -> Fraction:
    """Friends' average score scaled by n^5; own friend-oriented score as the tie-break."""
    _require_member(game, i, coalition)
    own = friend_oriented_utility(game, i, coalition)
    return own + game.n**5 * _friend_average(game, i, coalition)


_BY_MODEL = {
    Model.FRIEND_ORIENTED: friend_oriented_utility,
    Model.ENEMY_ORIENTED: enemy_oriented_utility,
    Model.FRACTIONAL: fractional_utility,
    Model.SELFISH_FIRST: selfish_first_utility,
    Model.EQUAL_TREATMENT: equal_treatment_utility,
    Model.TRULY_ALTRUISTIC: truly_altruistic_utility,
}


def utility(game: Game, i: int, coalition: int) -> Utility:
    """Utility of the coalition for player i under i's own preference model."""
    return _BY_MODEL[game.models[i]](game, i, coalition)


def compare(game: Game, i: int, first: int, second: int) -> Preference:
    """Exact comparison of two coalitions containing i, from i's point of view."""
    a = utility(game, i, first)
    b = utility(game, i, second)
    if a > b:
        return Preference.STRICTLY_PREFERS
    if a < b:
        return Preference.STRICTLY_DISPREFERRED
    return Preference.INDIFFERENT
