"""Bundled example games, shipped as package data."""

from __future__ import annotations

from importlib import resources

from .model import Game


def fixture_names() -> list[str]:
    root = resources.files(__package__) / "fixtures"
    return sorted(p.name[: -len(".game")] for p in root.iterdir() if p.name.endswith(".game"))


def fixture_text(name: str) -> str:
    path = resources.files(__package__) / "fixtures" / f"{name}.game"
    if not path.is_file():
        raise KeyError(f"no bundled fixture named {name!r} (have: {', '.join(fixture_names())})")
    return path.read_text(encoding="utf-8")


def load_fixture(name: str) -> Game:
    from .documents import parse_game

    return parse_game(fixture_text(name))
