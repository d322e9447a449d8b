"""Certify partitions of the same game under several stability notions.

Every unstable verdict carries a witness you can re-check by hand: a
blocking coalition, a player who walks out, or a player plus the block
they would defect to.
"""

from hedonic import Model, Partition, build_game, certify, members_of
from hedonic.stability import CoalitionWitness, DeviationWitness, PlayerWitness

EDGES = [("a", "b"), ("a", "c"), ("a", "d"), ("a", "e"), ("b", "c"), ("b", "d"), ("c", "d")]
game = build_game(list("abcde"), EDGES, models=Model.FRIEND_ORIENTED)


def labels(mask):
    return "{" + ", ".join(game.labels[i] for i in members_of(mask)) + "}"


def describe(witness):
    if isinstance(witness, CoalitionWitness):
        return f"{labels(witness.coalition)} would break away together"
    if isinstance(witness, PlayerWitness):
        return f"{game.labels[witness.player]} would rather be alone"
    if isinstance(witness, DeviationWitness):
        target = labels(witness.target) if witness.target else "a new singleton"
        return f"{game.labels[witness.player]} would defect to {target}"


def show(title, partition):
    print(title)
    report = certify(game, partition)
    for verdict in report.verdicts:
        line = f"  {verdict.notion.value:<24} {'stable' if verdict.stable else 'UNSTABLE'}"
        if verdict.witness is not None:
            line += f"   ({describe(verdict.witness)})"
        print(line)
    print()


show("everyone alone:", Partition.singletons(5))
show("a with e, clique on its own:", Partition(5, [[0, 4], [1, 2, 3]]))
show("one big group:", Partition.grand(5))
show("clique plus a lonely e:", Partition(5, [[0, 1, 2, 3], [4]]))
