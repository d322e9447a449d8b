"""Command line interface: eval, check, core, hunt, serve.

Exit codes are a stable scripting contract: 0 for success (and for "all
requested notions stable"), 1 for an unstable verdict, 2 for any input
problem. JSON output (--format json) uses exactly the serializers the HTTP
service uses.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Optional, Sequence

from .bundled import fixture_names
from .documents import (
    DocumentError,
    core_result_to_document,
    evaluation_to_document,
    hunt_report_to_document,
    parse_game,
    parse_partition,
    report_to_document,
)
from .model import Game, GameValidationError, Model, Partition, PartitionError
from .search import CapExceeded, compute_core, hunt_empty_core
from .stability import ALL_NOTIONS, Notion, certify

EXIT_OK = 0
EXIT_UNSTABLE = 1
EXIT_INPUT = 2


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_game(args) -> Game:
    game = parse_game(_read(args.game))
    if getattr(args, "model", None):
        model = Model(args.model)
        if model is Model.FRACTIONAL and game.valuations is None:
            raise GameValidationError(
                "cannot switch to the fractional model: the game has no valuations"
            )
        game = dataclasses.replace(game, models=(model,) * game.n)
    return game


def _load_partition(args, game: Game) -> Partition:
    return parse_partition(_read(args.partition), game)


def _coalition_text(game: Game, mask: int) -> str:
    return "{" + ", ".join(game.member_labels(mask)) + "}"


def _partition_text(game: Game, blocks) -> str:
    return " | ".join(_coalition_text(game, m) for m in blocks)


def _conventions_text(doc: dict) -> str:
    pairs = " ".join(f"{k}={v}" for k, v in sorted(doc["conventions"].items()))
    return f"conventions: {pairs}"


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _cmd_eval(args) -> int:
    game = _load_game(args)
    partition = _load_partition(args, game)
    doc = evaluation_to_document(game, partition)
    if args.format == "json":
        _emit_json(doc)
        return EXIT_OK
    rows = doc["rows"]
    widths = [
        max(len("player"), *(len(r["player"]) for r in rows)),
        max(len("coalition"), *(len("{" + ", ".join(r["coalition"]) + "}") for r in rows)),
        max(len("utility"), *(len(r["utility"]) for r in rows)),
    ]
    print(f"{'player':<{widths[0]}}  {'coalition':<{widths[1]}}  {'utility':>{widths[2]}}  model")
    for r in rows:
        coalition = "{" + ", ".join(r["coalition"]) + "}"
        print(
            f"{r['player']:<{widths[0]}}  {coalition:<{widths[1]}}  "
            f"{r['utility']:>{widths[2]}}  {r['model']}"
        )
    print(_conventions_text(doc))
    return EXIT_OK


def _witness_text(witness: Optional[dict]) -> str:
    if witness is None:
        return ""
    if witness["kind"] == "coalition":
        return "blocking coalition {" + ", ".join(witness["coalition"]) + "}"
    if witness["kind"] == "player":
        return f"player {witness['player']} would rather be alone"
    target = "{" + ", ".join(witness["target"]) + "}" if witness["target"] else "a new singleton"
    return f"player {witness['player']} would rather join {target}"


def _cmd_check(args) -> int:
    game = _load_game(args)
    partition = _load_partition(args, game)
    notions = _parse_notions(args.notions)
    report = certify(game, partition, notions)
    doc = report_to_document(game, report)
    if args.format == "json":
        _emit_json(doc)
    else:
        width = max(len(tag) for tag in doc["verdicts"])
        for tag, verdict in doc["verdicts"].items():
            status = "STABLE" if verdict["stable"] else "UNSTABLE"
            detail = _witness_text(verdict["witness"])
            aux = " (auxiliary notion)" if verdict["auxiliary"] else ""
            line = f"{tag:<{width}}  {status:<8}"
            if detail:
                line += f"  {detail}"
            print(line + aux)
        print(_conventions_text(doc))
    return EXIT_OK if report.all_stable else EXIT_UNSTABLE


def _parse_notions(raw: Optional[str]) -> tuple[Notion, ...]:
    if not raw:
        return ALL_NOTIONS
    notions = []
    for tag in raw.split(","):
        tag = tag.strip()
        try:
            notions.append(Notion(tag))
        except ValueError:
            known = ", ".join(n.value for n in ALL_NOTIONS)
            raise DocumentError(f"unknown notion {tag!r} (known: {known})") from None
    return tuple(notions)


def _cmd_core(args) -> int:
    game = _load_game(args)
    result = compute_core(game)
    doc = core_result_to_document(result)
    if args.format == "json":
        _emit_json(doc)
        return EXIT_OK
    for partition in result.partitions:
        print(_partition_text(game, partition.blocks))
    print(
        f"core size {len(result.partitions)} of {result.partitions_scanned} partitions "
        f"scanned ({result.blocked_partitions} blocked)"
    )
    print(_conventions_text(doc))
    return EXIT_OK


def _cmd_hunt(args) -> int:
    report = hunt_empty_core(
        Model(args.model),
        args.max_n,
        connected_only=args.connected_only,
        checkpoint_path=args.checkpoint,
        workers=args.workers,
    )
    doc = hunt_report_to_document(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    if args.format == "json":
        _emit_json(doc)
        return EXIT_OK
    scope = "connected" if report.connected_only else "all"
    print(
        f"hunted {report.model.value} games over {scope} graphs with "
        f"n up to {max(report.n_values)}: {report.games_scanned} games scanned"
    )
    if report.counterexamples:
        print(f"EMPTY CORES FOUND: {len(report.counterexamples)} counterexample(s)")
        for ce in report.counterexamples:
            edges = ", ".join(f"{ce.game.labels[i]}{ce.game.labels[j]}" for i, j in ce.game.graph.edges())
            print(f"  n={ce.game.n} edge_mask={ce.edge_mask} edges=[{edges}]")
    else:
        print("no empty cores found")
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .service import serve

    serve(args.port, args.host)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hedonic",
        description="Hedonic games on friendship graphs: exact utilities, "
        "stability certificates, cores, and empty-core hunts.",
        epilog=f"Bundled example games: {', '.join(fixture_names())}",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    model_tags = [m.value for m in Model]

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_eval = sub.add_parser("eval", help="utility of every player in a partition")
    p_eval.add_argument("--game", required=True, help="path to a game document")
    p_eval.add_argument("--partition", required=True, help="path to a partition document")
    p_eval.add_argument("--model", choices=model_tags, help="override every player's model")
    add_format(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_check = sub.add_parser("check", help="certify stability of a partition")
    p_check.add_argument("--game", required=True)
    p_check.add_argument("--partition", required=True)
    p_check.add_argument(
        "--notions",
        help="comma-separated subset of: " + ", ".join(n.value for n in ALL_NOTIONS),
    )
    p_check.add_argument("--model", choices=model_tags)
    add_format(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_core = sub.add_parser("core", help="list every core-stable partition")
    p_core.add_argument("--game", required=True)
    p_core.add_argument("--model", choices=model_tags)
    add_format(p_core)
    p_core.set_defaults(func=_cmd_core)

    p_hunt = sub.add_parser("hunt", help="sweep graphs for empty-core counterexamples")
    p_hunt.add_argument("--model", required=True, choices=model_tags)
    p_hunt.add_argument("--max-n", type=int, required=True, help="sweep graphs with 1..max-n players")
    p_hunt.add_argument("--connected-only", action="store_true")
    p_hunt.add_argument("--checkpoint", help="resumable progress file")
    p_hunt.add_argument("--workers", type=int, default=1)
    p_hunt.add_argument("--out", help="write the JSON report to this file")
    add_format(p_hunt)
    p_hunt.set_defaults(func=_cmd_hunt)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, GameValidationError, PartitionError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
