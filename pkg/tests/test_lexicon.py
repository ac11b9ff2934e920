from importlib import resources

import pytest

from eventcalc.cli import main
from eventcalc.lexicon import Lexicon, LexiconError

LEX = Lexicon.default()


def test_verb_classes():
    assert LEX.preds("transfer-verb") == {"pour", "dribble", "drip", "leak", "ooze", "seep", "siphon"}
    assert LEX.entry("pour").incremental_role == "patient"
    assert LEX.entry("run").incremental_role == "path"
    assert LEX.entry("fill").incremental_role is None
    assert LEX.entry("to").path_sort_restriction == "delimited-path"
    assert LEX.entry("towards").path_sort_restriction == "path"


def test_nouns_and_numerals():
    assert LEX.noun_kind("water") == "mass"
    assert LEX.noun_kind("bucket") == "count"
    assert LEX.numerals[5] == "five" and LEX.numerals[0] == "zero"
    assert LEX.lookup("Poured")[0].pred == "pour"


@pytest.mark.parametrize("text", [
    "poured verb-past pour\n",
    "poured verb-past pour transfer-verb\npoured2 verb-past pour fill-verb\n",
    "foo widget foo\n",
    "to prep to path-pred\n",
    "to prep to path-pred liquid\n",
    "furlongs unit furlongs\n",
    "poured verb\n",
])
def test_malformed_lexicons(text):
    with pytest.raises(LexiconError):
        Lexicon.from_text(text)


def test_extending_the_lexicon_from_the_cli(tmp_path, capsys):
    base = resources.files("eventcalc").joinpath("data/default.lex").read_text()
    path = tmp_path / "extra.lex"
    path.write_text(base + "trickled verb-past trickle transfer-verb\n")
    assert main(["--lexicon", str(path), "parse", "Jack trickled water for ten seconds"]) == 0
    assert "pred: trickle" in capsys.readouterr().out
    assert main(["parse", "Jack trickled water for ten seconds"]) == 2
    assert main(["--lexicon", str(tmp_path / "missing.lex"), "parse", "Jack ran"]) == 5
