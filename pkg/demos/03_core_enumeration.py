"""Compute the exact core of small games by scanning every partition.

The same graph can have very different cores depending on the preference
model, and heterogeneous games (one model per player) are fine too.
"""

from hedonic import Model, build_game, compute_core, members_of

EDGES = [("a", "b"), ("a", "c"), ("a", "d"), ("a", "e"), ("b", "c"), ("b", "d"), ("c", "d")]


def show_core(title, game):
    result = compute_core(game)
    print(f"{title}: scanned {result.partitions_scanned} partitions, "
          f"{result.blocked_partitions} blocked, core size {len(result.partitions)}")
    for partition in result.partitions:
        blocks = " | ".join(
            "{" + ", ".join(game.labels[i] for i in members_of(m)) + "}"
            for m in partition.blocks
        )
        print("   ", blocks)
    print()


for model in (Model.FRIEND_ORIENTED, Model.ENEMY_ORIENTED,
              Model.SELFISH_FIRST, Model.TRULY_ALTRUISTIC):
    show_core(model.value, build_game(list("abcde"), EDGES, models=model))

mixed = build_game(
    list("abcde"),
    EDGES,
    models={
        "a": Model.TRULY_ALTRUISTIC,
        "b": Model.FRIEND_ORIENTED,
        "c": Model.FRIEND_ORIENTED,
        "d": Model.ENEMY_ORIENTED,
        "e": Model.SELFISH_FIRST,
    },
)
show_core("mixed models", mixed)
