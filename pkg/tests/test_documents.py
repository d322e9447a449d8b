import json
import random
from fractions import Fraction

import pytest

from hedonic import (
    Model,
    Notion,
    Partition,
    build_game,
    certify,
    compute_core,
    mask_of,
)
from hedonic.bundled import fixture_names, fixture_text, load_fixture
from hedonic.documents import (
    DocumentSemanticError,
    DocumentSyntaxError,
    core_result_to_document,
    evaluation_to_document,
    format_rational,
    game_from_document,
    game_to_document,
    normalize_game,
    parse_game,
    parse_partition,
    parse_rational,
    report_to_document,
    serialize_game,
    serialize_partition,
)
from conftest import STORY_EDGES
from helpers import random_game


def story_doc():
    return json.loads(fixture_text("story"))


class TestRationals:
    def test_parse_forms(self):
        assert parse_rational("2/3", "$") == Fraction(2, 3)
        assert parse_rational("-5", "$") == -5
        assert parse_rational(7, "$") == 7

    def test_format_forms(self):
        assert format_rational(Fraction(2, 3)) == "2/3"
        assert format_rational(Fraction(15)) == "15"
        assert format_rational(-4) == "-4"

    def test_floats_rejected(self):
        with pytest.raises(DocumentSemanticError, match="floats are not accepted"):
            parse_rational(0.5, "$.v")

    def test_garbage_rejected(self):
        for bad in ("2/3/4", "1.5", "", "a", True, None):
            with pytest.raises(DocumentSemanticError):
                parse_rational(bad, "$.v")

    def test_zero_denominator_rejected(self):
        with pytest.raises(DocumentSemanticError, match="denominator 0"):
            parse_rational("1/0", "$.v")


class TestParseGame:
    def test_story_fixture_matches_hand_built_game(self):
        game = load_fixture("story")
        expected = build_game(list("abcde"), STORY_EDGES, models=Model.TRULY_ALTRUISTIC)
        assert game == expected

    def test_syntax_error_carries_position(self):
        with pytest.raises(DocumentSyntaxError) as err:
            parse_game('{"format": }')
        assert err.value.line == 1
        assert err.value.column == 12

    def test_unknown_field_rejected_with_path(self):
        doc = story_doc()
        doc["flavor"] = "vanilla"
        with pytest.raises(DocumentSemanticError, match=r"unknown field 'flavor' \(at \$\.flavor\)"):
            game_from_document(doc)

    def test_wrong_format_tag_rejected(self):
        doc = story_doc()
        doc["format"] = "hedonic-game/9"
        with pytest.raises(DocumentSemanticError, match="unsupported format"):
            game_from_document(doc)

    def test_duplicate_label_names_position(self):
        doc = story_doc()
        doc["players"] = ["a", "b", "a", "d", "e"]
        with pytest.raises(DocumentSemanticError, match=r"\$\.players\[2\]"):
            game_from_document(doc)

    def test_unknown_edge_label(self):
        doc = story_doc()
        doc["edges"][0] = ["a", "zz"]
        with pytest.raises(DocumentSemanticError, match=r"'zz' \(at \$\.edges\[0\]\[1\]\)"):
            game_from_document(doc)

    def test_self_loop_rejected_with_path(self):
        doc = story_doc()
        doc["edges"].append(["b", "b"])
        with pytest.raises(DocumentSemanticError, match=r"self-loop.*\$\.edges\[7\]"):
            game_from_document(doc)

    def test_unknown_model_tag(self):
        doc = story_doc()
        doc["model"] = "cheerful"
        with pytest.raises(DocumentSemanticError, match="unknown model tag 'cheerful'"):
            game_from_document(doc)

    def test_per_player_models_must_cover_everyone(self):
        doc = story_doc()
        doc["model"] = {"a": "friend-oriented"}
        with pytest.raises(DocumentSemanticError, match="no model given for player 'b'"):
            game_from_document(doc)

    def test_fractional_needs_valuations(self):
        doc = story_doc()
        doc["model"] = "fractional"
        with pytest.raises(DocumentSemanticError, match="no valuations"):
            game_from_document(doc)

    def test_float_valuation_rejected_with_path(self):
        doc = story_doc()
        doc["model"] = "fractional"
        doc["valuations"] = {"a": {"b": 0.5}}
        with pytest.raises(DocumentSemanticError, match=r"\$\.valuations\.a\.b"):
            game_from_document(doc)

    def test_missing_valuation_entries_default_to_zero(self):
        doc = story_doc()
        doc["model"] = "fractional"
        doc["valuations"] = {"a": {"b": "1/2"}}
        game = game_from_document(doc)
        assert game.valuations[0][1] == Fraction(1, 2)
        assert game.valuations[1][0] == 0

    def test_bad_aggregation_tag(self):
        doc = story_doc()
        doc["aggregation"] = "median"
        with pytest.raises(DocumentSemanticError, match="unknown aggregation"):
            game_from_document(doc)


class TestGameRoundTrip:
    def test_serialize_parse_is_identity_on_games(self):
        rng = random.Random(321)
        for _ in range(40):
            game = random_game(rng, rng.randint(1, 6), rng.choice([None, *Model]))
            assert parse_game(serialize_game(game)) == game

    def test_normalize_is_idempotent(self):
        text = fixture_text("story")
        once = normalize_game(text)
        assert normalize_game(once) == once

    def test_normalization_canonicalizes_noise(self):
        doc = story_doc()
        doc["edges"] = [list(reversed(e)) for e in reversed(doc["edges"])]
        noisy = json.dumps(doc)
        assert normalize_game(noisy) == normalize_game(fixture_text("story"))

    def test_heterogeneous_models_serialize_per_player(self):
        game = build_game(
            ["a", "b"], [("a", "b")], models={"a": "friend-oriented", "b": "enemy-oriented"}
        )
        doc = game_to_document(game)
        assert doc["model"] == {"a": "friend-oriented", "b": "enemy-oriented"}


class TestPartitionDocuments:
    def test_round_trip(self, story_graph_game):
        partition = Partition(5, [mask_of([0, 1, 2, 3]), mask_of([4])])
        text = serialize_partition(partition, story_graph_game)
        assert parse_partition(text, story_graph_game) == partition

    def test_blocks_resolve_labels(self, story_graph_game):
        text = json.dumps(
            {"format": "hedonic-partition/1", "blocks": [["e"], ["d", "c", "b", "a"]]}
        )
        partition = parse_partition(text, story_graph_game)
        assert partition.blocks == (mask_of([0, 1, 2, 3]), mask_of([4]))

    def test_unknown_label_with_path(self, story_graph_game):
        text = json.dumps({"format": "hedonic-partition/1", "blocks": [["a", "zz"]]})
        with pytest.raises(DocumentSemanticError, match=r"\$\.blocks\[0\]\[1\]"):
            parse_partition(text, story_graph_game)

    def test_duplicate_member_with_path(self, story_graph_game):
        text = json.dumps({"format": "hedonic-partition/1", "blocks": [["a", "b"], ["b"]]})
        with pytest.raises(DocumentSemanticError, match="appears twice"):
            parse_partition(text, story_graph_game)

    def test_missing_players_listed(self, story_graph_game):
        text = json.dumps({"format": "hedonic-partition/1", "blocks": [["a", "b"]]})
        with pytest.raises(DocumentSemanticError, match="missing from partition: c, d, e"):
            parse_partition(text, story_graph_game)

    def test_unknown_field_rejected(self, story_graph_game):
        text = json.dumps({"format": "hedonic-partition/1", "blocks": [["a"]], "x": 1})
        with pytest.raises(DocumentSemanticError, match="unknown field 'x'"):
            parse_partition(text, story_graph_game)


class TestResultDocuments:
    def test_report_document_shape(self, story_graph_game):
        report = certify(story_graph_game, Partition.singletons(5))
        doc = report_to_document(story_graph_game, report)
        assert set(doc) == {"verdicts", "all_stable", "conventions"}
        core = doc["verdicts"]["core"]
        assert core["stable"] is False
        assert core["auxiliary"] is False
        assert core["witness"] == {"kind": "coalition", "coalition": ["a", "b"]}
        assert doc["verdicts"]["nash"]["auxiliary"] is True
        assert doc["conventions"] == {
            "empty_friend_average": "0",
            "fractional_aggregation": "mean",
        }

    def test_deviation_witness_document(self, story_graph_game):
        partition = Partition(5, [mask_of([0, 4]), mask_of([1, 2, 3])])
        report = certify(story_graph_game, partition, [Notion.NASH])
        doc = report_to_document(story_graph_game, report)
        assert doc["verdicts"]["nash"]["witness"] == {
            "kind": "deviation",
            "player": "a",
            "target": ["b", "c", "d"],
        }

    def test_evaluation_document_rows_in_player_order(self, story_graph_game):
        partition = Partition(5, [mask_of([0, 1, 2, 3]), mask_of([4])])
        doc = evaluation_to_document(story_graph_game, partition)
        assert [r["player"] for r in doc["rows"]] == list("abcde")
        assert doc["rows"][0] == {
            "player": "a",
            "coalition": ["a", "b", "c", "d"],
            "utility": "15",
            "model": "friend-oriented",
        }

    def test_core_document(self):
        game = load_fixture("complete4")
        doc = core_result_to_document(compute_core(game))
        assert [["a", "b", "c", "d"]] in doc["core"]
        assert doc["exhaustive"] is True
        assert doc["partitions_scanned"] == 15


class TestBundledFixtures:
    def test_names(self):
        assert fixture_names() == ["complete4", "empty5", "story"]

    def test_all_fixtures_parse(self):
        for name in fixture_names():
            game = load_fixture(name)
            assert game.n >= 1

    def test_unknown_fixture(self):
        with pytest.raises(KeyError, match="no bundled fixture"):
            fixture_text("nope")
