"""A five-player game where altruism reverses a preference.

Players a, b, c, d form a clique and e hangs off a. Counting friends alone,
a does better in the full group: one extra friend. But a's three clique
friends each pick up an enemy when e joins, and an altruistic a weighs that.
"""

from hedonic import (
    Model,
    build_game,
    compare,
    equal_treatment_utility,
    friend_oriented_utility,
    mask_of,
    selfish_first_utility,
    truly_altruistic_utility,
)

EDGES = [("a", "b"), ("a", "c"), ("a", "d"), ("a", "e"), ("b", "c"), ("b", "d"), ("c", "d")]

game = build_game(list("abcde"), EDGES, models=Model.TRULY_ALTRUISTIC)
a = game.index("a")
clique = mask_of([0, 1, 2, 3])        # {a, b, c, d}
everyone = game.all_players           # {a, b, c, d, e}

print("friend-oriented scores for a (more friends is simply better):")
print("  {a,b,c,d}   ->", friend_oriented_utility(game, a, clique))
print("  {a,b,c,d,e} ->", friend_oriented_utility(game, a, everyone))

print()
print("truly-altruistic scores for a (friends' average comes first):")
print("  {a,b,c,d}   ->", truly_altruistic_utility(game, a, clique))
print("  {a,b,c,d,e} ->", truly_altruistic_utility(game, a, everyone))
print("  so a", compare(game, a, clique, everyone).value, "the smaller group")

print()
print("the other altruism levels, for the full group:")
print("  selfish-first  ->", selfish_first_utility(game, a, everyone))
print("  equal-treatment->", equal_treatment_utility(game, a, everyone))
