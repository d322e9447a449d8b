"""Hunt for graphs whose homogeneous game has an empty core.

Friend-oriented and selfish-first games provably never do; for the
equal-treatment and truly-altruistic models emptiness is an open question,
so a single verified hit here would be a publishable counterexample. The
sweep checkpoints its progress and can resume after an interruption.
"""

import os
import tempfile

from hedonic import Model, hunt_empty_core

checkpoint = os.path.join(tempfile.gettempdir(), "hedonic-demo-hunt.ckpt")
if os.path.exists(checkpoint):
    os.remove(checkpoint)

for model in (Model.FRIEND_ORIENTED, Model.EQUAL_TREATMENT, Model.TRULY_ALTRUISTIC):
    report = hunt_empty_core(model, 4, checkpoint_path=checkpoint + "." + model.value)
    outcome = (
        f"{len(report.counterexamples)} counterexample(s)!"
        if report.counterexamples
        else "no empty cores"
    )
    print(f"{model.value:<18} n<=4: {report.games_scanned} games scanned, {outcome}")

# a sum-mode fractional game CAN have an empty core; show the certificate
# machinery on a handcrafted five-player example
from hedonic import Aggregation, build_game
from hedonic.search import certify_empty_core

valuations = [
    [0, 4, 1, -5, 3],
    [3, 0, 3, 4, 4],
    [-9, -5, 0, 3, 4],
    [-1, 1, 2, 0, -5],
    [3, -9, 1, 4, 0],
]
game = build_game(
    list("abcde"), [], valuations=valuations,
    models=Model.FRACTIONAL, aggregation=Aggregation.SUM,
)
certificate = certify_empty_core(game)
print()
print(f"handcrafted fractional game: every one of its {len(certificate)} partitions "
      "is blocked; first three certificate entries:")
for partition, blocker in certificate[:3]:
    members = ", ".join(game.labels[i] for i in range(5) if blocker >> i & 1)
    print(f"  {partition} is blocked by {{{members}}}")
