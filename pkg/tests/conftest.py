import pytest

from hedonic import Model, build_game

STORY_EDGES = [
    ("a", "b"), ("a", "c"), ("a", "d"), ("a", "e"),
    ("b", "c"), ("b", "d"), ("c", "d"),
]


@pytest.fixture
def story_graph_game():
    """The clique {a,b,c,d} plus the pendant edge a-e, friend-oriented."""
    return build_game(list("abcde"), STORY_EDGES, models=Model.FRIEND_ORIENTED)


def story_game(model: Model):
    return build_game(list("abcde"), STORY_EDGES, models=model)
