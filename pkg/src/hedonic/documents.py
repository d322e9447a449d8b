"""Game and partition document formats, plus the result serializers that the
CLI and the HTTP service share so their answers agree bit for bit.

Documents are JSON. Rationals travel as strings like "2/3" (integers as
"15"); floats are rejected outright so exactness survives every client.
Parsing reports a JSON-path-style location with every semantic error and a
line/column with every syntax error, and serialization is canonical, so
serialize(parse(text)) is the normal form of a document.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Optional

from . import __version__
from .model import (
    Aggregation,
    Game,
    GameValidationError,
    Model,
    Partition,
    PartitionError,
    build_game,
)
from .search import PARTITION_PLAYER_CAP, SWEEP_PLAYER_CAP, CoreResult, HuntReport
from .stability import (
    AUXILIARY_NOTIONS,
    CoalitionWitness,
    DeviationWitness,
    PlayerWitness,
    StabilityReport,
    Verdict,
)
from .utilities import Utility, utility

GAME_FORMAT = "hedonic-game/1"
PARTITION_FORMAT = "hedonic-partition/1"


class DocumentError(ValueError):
    """A document failed to parse or validate."""


class DocumentSyntaxError(DocumentError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DocumentSemanticError(DocumentError):
    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{message} (at {path})")
        self.path = path


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from exc


def _expect(condition: bool, message: str, path: str) -> None:
    if not condition:
        raise DocumentSemanticError(message, path)


def _expect_object(value, path: str) -> dict:
    _expect(isinstance(value, dict), "expected an object", path)
    return value


def _expect_list(value, path: str) -> list:
    _expect(isinstance(value, list), "expected a list", path)
    return value


def _expect_string(value, path: str) -> str:
    _expect(isinstance(value, str), "expected a string", path)
    return value


def _reject_unknown(obj: dict, known: set[str], path: str) -> None:
    for key in obj:
        if key not in known:
            raise DocumentSemanticError(f"unknown field {key!r}", f"{path}.{key}")


# ---------------------------------------------------------------------------
# rationals

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(value, path: str) -> Fraction:
    if isinstance(value, bool):
        raise DocumentSemanticError("expected a rational, got a boolean", path)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise DocumentSemanticError(
            'floats are not accepted; write rationals as strings like "2/3"', path
        )
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise DocumentSemanticError("rational has denominator 0", path) from None
    raise DocumentSemanticError(f'expected a rational like "2/3", got {value!r}', path)


def format_rational(value: Utility) -> str:
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


# ---------------------------------------------------------------------------
# game documents

_GAME_FIELDS = {"format", "players", "edges", "model", "valuations", "aggregation"}


def game_from_document(doc) -> Game:
    obj = _expect_object(doc, "$")
    _reject_unknown(obj, _GAME_FIELDS, "$")
    _expect("format" in obj, f'missing "format" field (expected "{GAME_FORMAT}")', "$")
    _expect(
        obj["format"] == GAME_FORMAT,
        f'unsupported format {obj["format"]!r} (expected "{GAME_FORMAT}")',
        "$.format",
    )

    raw_players = _expect_list(obj.get("players"), "$.players")
    _expect(len(raw_players) >= 1, "a game needs at least one player", "$.players")
    labels: list[str] = []
    for k, p in enumerate(raw_players):
        label = _expect_string(p, f"$.players[{k}]")
        _expect(bool(label), "player labels must be nonempty", f"$.players[{k}]")
        _expect(label not in labels, f"duplicate player label {label!r}", f"$.players[{k}]")
        labels.append(label)
    index = {lab: i for i, lab in enumerate(labels)}

    def player_at(value, path: str) -> int:
        label = _expect_string(value, path)
        _expect(label in index, f"unknown player label {label!r}", path)
        return index[label]

    raw_edges = _expect_list(obj.get("edges"), "$.edges")
    edges: list[tuple[int, int]] = []
    for k, e in enumerate(raw_edges):
        pair = _expect_list(e, f"$.edges[{k}]")
        _expect(len(pair) == 2, "an edge is a pair of player labels", f"$.edges[{k}]")
        i = player_at(pair[0], f"$.edges[{k}][0]")
        j = player_at(pair[1], f"$.edges[{k}][1]")
        _expect(i != j, f"self-loop on player {labels[i]!r}", f"$.edges[{k}]")
        edges.append((i, j))

    def model_at(value, path: str) -> Model:
        tag = _expect_string(value, path)
        try:
            return Model(tag)
        except ValueError:
            known = ", ".join(m.value for m in Model)
            raise DocumentSemanticError(
                f"unknown model tag {tag!r} (known: {known})", path
            ) from None

    _expect("model" in obj, 'missing "model" field', "$")
    raw_model = obj["model"]
    if isinstance(raw_model, dict):
        for lab in raw_model:
            _expect(lab in index, f"model given for unknown player {lab!r}", f"$.model.{lab}")
        for lab in labels:
            _expect(lab in raw_model, f"no model given for player {lab!r}", "$.model")
        models = [model_at(raw_model[lab], f"$.model.{lab}") for lab in labels]
    else:
        models = [model_at(raw_model, "$.model")] * len(labels)

    valuations = None
    if "valuations" in obj:
        table = _expect_object(obj["valuations"], "$.valuations")
        for lab in table:
            _expect(lab in index, f"valuations for unknown player {lab!r}", f"$.valuations.{lab}")
        rows = []
        for lab in labels:
            row = [Fraction(0)] * len(labels)
            raw_row = _expect_object(table.get(lab, {}), f"$.valuations.{lab}")
            for other, value in raw_row.items():
                path = f"$.valuations.{lab}.{other}"
                _expect(other in index, f"valuation of unknown player {other!r}", path)
                row[index[other]] = parse_rational(value, path)
            rows.append(row)
        valuations = rows

    aggregation = Aggregation.MEAN
    if "aggregation" in obj:
        tag = _expect_string(obj["aggregation"], "$.aggregation")
        try:
            aggregation = Aggregation(tag)
        except ValueError:
            raise DocumentSemanticError(
                f'unknown aggregation {tag!r} (known: "mean", "sum")', "$.aggregation"
            ) from None

    try:
        return build_game(labels, edges, valuations, models, aggregation)
    except GameValidationError as exc:
        raise DocumentSemanticError(str(exc)) from exc


def parse_game(text: str) -> Game:
    return game_from_document(_loads(text))


def game_to_document(game: Game) -> dict:
    doc: dict = {
        "format": GAME_FORMAT,
        "players": list(game.labels),
        "edges": [[game.labels[i], game.labels[j]] for i, j in game.graph.edges()],
    }
    if len(set(game.models)) == 1:
        doc["model"] = game.models[0].value
    else:
        doc["model"] = {lab: m.value for lab, m in zip(game.labels, game.models)}
    if game.valuations is not None:
        doc["valuations"] = {
            lab: {
                other: format_rational(v)
                for other, v in zip(game.labels, row)
            }
            for lab, row in zip(game.labels, game.valuations)
        }
        doc["aggregation"] = game.aggregation.value
    return doc


def serialize_game(game: Game) -> str:
    return json.dumps(game_to_document(game), indent=2) + "\n"


def normalize_game(text: str) -> str:
    """Canonical form of a game document: parse it and serialize it back."""
    return serialize_game(parse_game(text))


# ---------------------------------------------------------------------------
# partition documents

_PARTITION_FIELDS = {"format", "blocks"}


def partition_from_document(doc, game: Game) -> Partition:
    obj = _expect_object(doc, "$")
    _reject_unknown(obj, _PARTITION_FIELDS, "$")
    _expect("format" in obj, f'missing "format" field (expected "{PARTITION_FORMAT}")', "$")
    _expect(
        obj["format"] == PARTITION_FORMAT,
        f'unsupported format {obj["format"]!r} (expected "{PARTITION_FORMAT}")',
        "$.format",
    )
    raw_blocks = _expect_list(obj.get("blocks"), "$.blocks")
    seen: set[str] = set()
    blocks: list[int] = []
    for b, raw_block in enumerate(raw_blocks):
        block_list = _expect_list(raw_block, f"$.blocks[{b}]")
        _expect(len(block_list) > 0, "empty block in partition", f"$.blocks[{b}]")
        mask = 0
        for k, raw_label in enumerate(block_list):
            path = f"$.blocks[{b}][{k}]"
            label = _expect_string(raw_label, path)
            _expect(label in game.labels, f"unknown player label {label!r}", path)
            _expect(label not in seen, f"player {label!r} appears twice", path)
            seen.add(label)
            mask |= 1 << game.index(label)
        blocks.append(mask)
    missing = [lab for lab in game.labels if lab not in seen]
    _expect(not missing, f"players missing from partition: {', '.join(missing)}", "$.blocks")
    try:
        return Partition(game.n, blocks)
    except PartitionError as exc:  # unreachable after the checks above
        raise DocumentSemanticError(str(exc), "$.blocks") from exc


def parse_partition(text: str, game: Game) -> Partition:
    return partition_from_document(_loads(text), game)


def partition_to_document(partition: Partition, game: Game) -> dict:
    return {
        "format": PARTITION_FORMAT,
        "blocks": [list(game.member_labels(m)) for m in partition.blocks],
    }


def serialize_partition(partition: Partition, game: Game) -> str:
    return json.dumps(partition_to_document(partition, game), indent=2) + "\n"


def normalize_partition(text: str, game: Game) -> str:
    return serialize_partition(parse_partition(text, game), game)


# ---------------------------------------------------------------------------
# result documents

#: Conventions recorded in every result so downstream readers never have to
#: guess how empty friend averages or fractional aggregation were resolved.
def conventions(game: Game) -> dict:
    return {
        "empty_friend_average": "0",
        "fractional_aggregation": game.aggregation.value,
    }


def coalition_labels(game: Game, mask: int) -> list[str]:
    return list(game.member_labels(mask))


def witness_to_document(game: Game, witness) -> dict:
    if isinstance(witness, CoalitionWitness):
        return {"kind": "coalition", "coalition": coalition_labels(game, witness.coalition)}
    if isinstance(witness, PlayerWitness):
        return {"kind": "player", "player": game.labels[witness.player]}
    if isinstance(witness, DeviationWitness):
        return {
            "kind": "deviation",
            "player": game.labels[witness.player],
            "target": coalition_labels(game, witness.target),
        }
    raise TypeError(f"unknown witness type {type(witness).__name__}")


def verdict_to_document(game: Game, verdict: Verdict) -> dict:
    return {
        "stable": verdict.stable,
        "auxiliary": verdict.notion in AUXILIARY_NOTIONS,
        "witness": None if verdict.witness is None else witness_to_document(game, verdict.witness),
    }


def report_to_document(game: Game, report: StabilityReport) -> dict:
    return {
        "verdicts": {v.notion.value: verdict_to_document(game, v) for v in report.verdicts},
        "all_stable": report.all_stable,
        "conventions": conventions(game),
    }


def evaluation_to_document(game: Game, partition: Partition) -> dict:
    rows = []
    for i in range(game.n):
        block = partition.block_of(i)
        rows.append(
            {
                "player": game.labels[i],
                "coalition": coalition_labels(game, block),
                "utility": format_rational(utility(game, i, block)),
                "model": game.models[i].value,
            }
        )
    return {"rows": rows, "conventions": conventions(game)}


def core_result_to_document(result: CoreResult) -> dict:
    game = result.game
    return {
        "core": [
            [coalition_labels(game, m) for m in partition.blocks]
            for partition in result.partitions
        ],
        "exhaustive": result.exhaustive,
        "partitions_scanned": result.partitions_scanned,
        "blocked_partitions": result.blocked_partitions,
        "conventions": conventions(game),
    }


def hunt_report_to_document(report: HuntReport) -> dict:
    counterexamples = []
    for ce in report.counterexamples:
        game = ce.game
        counterexamples.append(
            {
                "players": list(game.labels),
                "edges": [[game.labels[i], game.labels[j]] for i, j in game.graph.edges()],
                "edge_mask": ce.edge_mask,
                "certificate": [
                    {
                        "partition": [coalition_labels(game, m) for m in partition.blocks],
                        "blocking_coalition": coalition_labels(game, blocker),
                    }
                    for partition, blocker in ce.certificate
                ],
            }
        )
    return {
        "model": report.model.value,
        "aggregation": report.aggregation.value,
        "n_values": list(report.n_values),
        "connected_only": report.connected_only,
        "games_scanned": report.games_scanned,
        "counterexamples": counterexamples,
        "conventions": {"empty_friend_average": "0", "fractional_aggregation": report.aggregation.value},
    }


def engine_info(core_time_budget_s: Optional[float] = None) -> dict:
    info = {
        "version": __version__,
        "caps": {
            "max_partition_players": PARTITION_PLAYER_CAP,
            "max_sweep_players": SWEEP_PLAYER_CAP,
        },
    }
    if core_time_budget_s is not None:
        info["core_time_budget_seconds"] = core_time_budget_s
    return info
