import json

import pytest
from click.testing import CliRunner
from hypothesis import given

from conftest import dfas
from idealdecomp.automata import equivalent
from idealdecomp.cli import main
from idealdecomp.errors import FormatError
from idealdecomp.fixtures import (
    chain_example,
    chain_example_reduced,
    exact_word,
    running_example_drawn,
)
from idealdecomp.ideals import check_ideal, principal_automaton
from idealdecomp.inter import decompose_linear
from idealdecomp.io import (
    decomposition_to_json,
    dumps_automaton,
    dumps_decomposition,
    load_automaton,
    parse_automaton,
    parse_wordset,
    save_automaton,
    to_dot,
)

CHAIN = chain_example().dfa


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, d in {
        "chain": CHAIN,
        "A0": chain_example_reduced(0),
        "A1": chain_example_reduced(1),
        "not_ideal": exact_word("ab", "ab"),
        "prime": principal_automaton("ab", "ab"),
        "drawn": running_example_drawn(),
    }.items():
        p = tmp_path / f"{name}.json"
        save_automaton(d, p)
        paths[name] = str(p)
    return paths


def run(*args):
    return CliRunner().invoke(main, [str(a) for a in args])


class TestJson:
    def test_round_trip_is_bit_identical(self):
        text = dumps_automaton(CHAIN)
        assert dumps_automaton(parse_automaton(text)) == text

    def test_one_transition_per_line(self):
        lines = dumps_automaton(CHAIN).splitlines()
        assert '    [0, "a", 1],' in lines

    def test_invalid_json(self):
        with pytest.raises(FormatError):
            parse_automaton("{")

    def test_missing_field(self):
        with pytest.raises(FormatError):
            parse_automaton('{"alphabet": ["a"]}')

    def test_decomposition(self):
        dec = decompose_linear(chain_example())
        raw = json.loads(dumps_decomposition(dec))
        assert raw["mode"] == "inter" and raw["verified"] is True
        assert [c["tag"] for c in raw["components"]] == ["reduced:k=0", "reduced:k=1"]
        assert raw == decomposition_to_json(dec)


class TestDot:
    def test_deterministic_and_grouped(self):
        text = to_dot(chain_example_reduced(1))
        assert text == to_dot(chain_example_reduced(1))
        assert '  0 -> 1 [label="a,b,c"];' in text
        assert "2 [shape=doublecircle" in text

    def test_edges_sorted(self):
        edges = [ln for ln in to_dot(CHAIN).splitlines() if "->" in ln and "__start" not in ln]
        keys = [tuple(int(x) for x in ln.split("[")[0].split("->")) for ln in edges]
        assert keys == sorted(keys)


class TestWordSet:
    def test_parse(self):
        ws = parse_wordset("@alphabet abc\n# generators\ncabb\n\ncbca  # trailing\nε\n")
        assert ws.alphabet == ("a", "b", "c") and list(ws) == ["", "cabb", "cbca"]

    def test_inferred_alphabet(self):
        assert parse_wordset("ba\n").alphabet == ("a", "b")

    @pytest.mark.parametrize("text", ["@alphabet\n", "@frobnicate x\n", "a b\n"])
    def test_errors(self, text):
        with pytest.raises(FormatError):
            parse_wordset(text)


class TestCli:
    def test_check_ideal(self, files):
        r = run("check", files["chain"], "--json")
        assert r.exit_code == 0
        report = json.loads(r.output)
        assert report["ideal"] and report["linear"] and report["ranks"] == [0, 1, 2, 3]

    def test_check_not_ideal(self, files):
        r = run("check", files["not_ideal"], "--json")
        assert r.exit_code == 2
        assert json.loads(r.output)["certificate"] == {"word": "ab", "upper": "aab"}

    def test_check_missing(self, tmp_path):
        assert run("check", tmp_path / "missing.json").exit_code == 1

    def test_check_malformed(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"alphabet": ["a"], "states": 1, "initial": 0, "finals": [], "transitions": []}')
        r = run("check", p)
        assert r.exit_code == 1 and "missing transition" in r.output

    def test_check_reports_ranks(self, files):
        r = run("check", files["drawn"])
        assert r.exit_code == 2 and "ranks: 0,1,2,2,3,5,4,6" in r.output

    def test_decompose_inter(self, files, tmp_path):
        out = tmp_path / "out"
        r = run("decompose", "--mode", "inter", files["chain"], "--out", out, "--dot", "--json")
        assert r.exit_code == 0
        payload = json.loads(r.output)
        assert payload["count"] == 2 and payload["verified"]
        a0 = load_automaton(out / "component_0.json")
        assert equivalent(a0, chain_example_reduced(0))
        assert (out / "component_1.dot").exists() and (out / "decomposition.json").exists()

    def test_decompose_union(self, files):
        r = run("decompose", "--mode", "union", files["chain"])
        assert r.exit_code == 0 and "5 components" in r.output

    def test_decompose_prime(self, files):
        assert run("decompose", "--mode", "inter", files["prime"]).exit_code == 3
        assert run("decompose", "--recursive", files["prime"]).exit_code == 3

    def test_decompose_recursive(self, tmp_path):
        r = run("gen", "--family", "power", "--base", self._chain(tmp_path), "-n", "2")
        p = tmp_path / "sq.json"
        p.write_text(r.output)
        r = run("decompose", "--recursive", p, "--json")
        assert r.exit_code == 0 and json.loads(r.output)["count"] == 4

    def test_decompose_not_ideal(self, files):
        assert run("decompose", files["not_ideal"]).exit_code == 2

    def _chain(self, tmp_path):
        p = tmp_path / "chain_base.json"
        save_automaton(CHAIN, p)
        return p

    def test_prime_verdicts(self, files):
        r = run("prime", files["chain"])
        assert r.exit_code == 0 and "damping between q0,q1" in r.output
        r = run("prime", "--mode", "union", files["chain"])
        assert r.exit_code == 0 and "accelerating at q2" in r.output
        r = run("prime", files["prime"], "--json")
        assert r.exit_code == 3 and json.loads(r.output)["prime"] is True

    def test_witness(self, files):
        r = run("witness", files["prime"], "--json")
        assert r.exit_code == 0 and json.loads(r.output)["word"] == "ba"
        assert run("witness", files["chain"]).exit_code == 6

    def test_lmin(self, files):
        r = run("lmin", files["chain"])
        assert r.output.split() == ["ab", "ba", "bb", "ca", "cb"]

    def test_minimize(self, files):
        r = run("minimize", files["chain"])
        assert r.exit_code == 0 and parse_automaton(r.output) == CHAIN

    def test_gen(self, tmp_path):
        r = run("gen", "--family", "fig6", "-n", "3")
        assert parse_automaton(r.output).n_states == 8
        r = run("gen", "--family", "shuffle", "--words", "cabb,cacca,cbca")
        assert parse_automaton(r.output).n_states == 10
        r = run("gen", "--family", "principal", "--word", "ab", "--alphabet", "abc")
        assert parse_automaton(r.output) == principal_automaton("ab", "abc")
        wf = tmp_path / "k.txt"
        wf.write_text("@alphabet abc\nab\nba\nbb\nca\ncb\n")
        r = run("gen", "--family", "shuffle", "--words-file", wf)
        assert parse_automaton(r.output) == CHAIN

    def test_gen_power_size(self, tmp_path):
        r = run("gen", "--family", "power", "--base", self._chain(tmp_path), "-n", "2")
        assert check_ideal(parse_automaton(r.output)).state_count == 7

    @pytest.mark.parametrize(
        "args", [["--family", "fig6"], ["--family", "power", "-n", "2"], ["--family", "principal"], ["--family", "shuffle"]]
    )
    def test_gen_bad_params(self, args):
        assert run("gen", *args).exit_code == 1

    def test_verify(self, files):
        assert run("verify", files["chain"], files["A0"], files["A1"]).exit_code == 0
        r = run("verify", files["chain"], files["A0"], "--json")
        assert r.exit_code == 5 and json.loads(r.output)["counterexample"] == "b"
        assert run("verify", files["chain"], files["chain"]).exit_code == 4

    def test_export_dot(self, files, tmp_path):
        out = tmp_path / "a.dot"
        assert run("export-dot", files["A1"], "-o", out).exit_code == 0
        assert out.read_text() == to_dot(chain_example_reduced(1))


@given(dfas())
def test_json_round_trip(a):
    assert parse_automaton(dumps_automaton(a)) == a
