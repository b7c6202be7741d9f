import json

from splicekit import (
    automaton_from_json,
    determinize,
    equivalent,
    minimize,
    parse_regex,
    Alphabet,
)
from splicekit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decide_even_words_prints_witness(capsys):
    code, out, _ = run(
        capsys, "decide", "--lang", "(aa)*", "--alphabet", "a",
        "--variant", "classic", "--bounds", "theorem",
    )
    assert code == 1
    assert out.splitlines() == ["no", "witness: " + "a" * 16]


def test_decide_yes_exit_zero(capsys):
    code, out, _ = run(
        capsys, "decide", "--lang", "a*", "--alphabet", "a",
        "--variant", "pixton", "--bounds", "theorem",
    )
    assert code == 0
    assert out.splitlines() == ["yes"]


def test_decide_custom_inconclusive(capsys):
    code, out, _ = run(
        capsys, "decide", "--lang", "(aa)*", "--alphabet", "a",
        "--variant", "classic", "--axiom-lt", "3", "--inner-lt", "2", "--outer-lt", "2",
    )
    assert code == 2
    assert out.splitlines()[0] == "inconclusive"
    assert "bounds below theorem guarantee" in out


def test_decide_stats_and_emit(tmp_path, capsys):
    system_path = tmp_path / "system.json"
    closure_path = tmp_path / "closure.json"
    code, out, _ = run(
        capsys, "decide", "--lang", "a*", "--alphabet", "a",
        "--variant", "pixton", "--bounds", "theorem", "--stats",
        "--emit-system", str(system_path), "--emit-closure", str(closure_path),
    )
    assert code == 0
    stats = json.loads(out.splitlines()[1])
    assert stats["monoid_size"] == 1
    emitted = automaton_from_json(closure_path.read_text())
    d = minimize(determinize(emitted))
    astar = minimize(determinize(parse_regex("a*", Alphabet.from_string("a"))))
    assert equivalent(d, astar)[0]
    doc = json.loads(system_path.read_text())
    assert doc["variant"] == "pixton"
    assert isinstance(doc["axioms"], dict)  # symbolic axiom automaton


def test_monoid_json(capsys):
    code, out, _ = run(capsys, "monoid", "--lang", "a+b+", "--alphabet", "ab")
    assert code == 0
    doc = json.loads(out)
    assert doc["size"] == 5
    assert doc["representatives"][doc["identity"]] == ""
    assert set(doc["generators"]) == {"a", "b"}
    assert len(doc["table"]) == 5


def test_respect_true_and_false(capsys):
    code, out, _ = run(
        capsys, "respect", "--lang", "a+b+", "--alphabet", "ab",
        "--variant", "classic", "--rule", "a,b;,ab",
    )
    assert code == 0 and out == "true\n"
    code, out, _ = run(
        capsys, "respect", "--lang", "(aa)*", "--alphabet", "a",
        "--variant", "classic", "--rule", "aa,;aa,", "--witness",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "false"
    assert lines[1].startswith("counterexample:")


def test_splice_outputs_word(capsys):
    code, out, _ = run(
        capsys, "splice", "--variant", "classic", "--rule", "a,b;,ab",
        "--w1", "ab", "--w2", "ab",
    )
    assert code == 0
    assert out == "aab\n"


def test_splice_json_carries_positions(capsys):
    code, out, _ = run(
        capsys, "splice", "--variant", "classic", "--rule", "a,b;,ab",
        "--w1", "ab", "--w2", "ab", "--json",
    )
    doc = json.loads(out)
    assert doc["results"] == [{"word": "aab", "position": 1}]


def test_closure_and_oracle_on_system_file(tmp_path, capsys):
    system_path = tmp_path / "example1.json"
    system_path.write_text(
        '{"variant":"classic","alphabet":["a","b"],"axioms":["ab"],'
        '"rules":[["a","b","","ab"],["ab","","a","b"]]}'
    )
    emit = tmp_path / "closure.json"
    dot = tmp_path / "closure.dot"
    code, out, _ = run(
        capsys, "closure", "--system", str(system_path),
        "--emit-closure", str(emit), "--dot", str(dot), "--trace",
    )
    assert code == 0
    assert "states:" in out and "rounds:" in out and "round 1:" in out
    nfa = automaton_from_json(emit.read_text())
    apbp = minimize(determinize(parse_regex("a+b+", Alphabet.from_string("ab"))))
    assert equivalent(minimize(determinize(nfa)), apbp)[0]
    assert dot.read_text().startswith("digraph")

    code, out, _ = run(
        capsys, "oracle", "--system", str(system_path), "--report-len", "4",
        "--cap-len", "8",
    )
    assert code == 0
    assert out.splitlines() == ["ab", "aab", "abb", "aaab", "aabb", "abbb"]


def test_pump_command(capsys):
    code, out, _ = run(
        capsys, "pump", "--lang", "(aa)*", "--alphabet", "a",
        "--word", "aaaa", "--j", "10",
    )
    assert code == 0
    assert out.splitlines() == [
        "alpha: ",
        "beta: aa",
        "gamma: aa",
        "normalized: " + "a" * 22,
    ]


def test_usage_errors_exit_64(capsys):
    code, _, err = run(capsys, "decide", "--lang", "a*", "--variant", "classic")
    assert code == 64 and err
    code, _, err = run(capsys, "nonsense")
    assert code == 64


def test_tool_errors_exit_65(capsys):
    code, _, err = run(
        capsys, "monoid", "--lang", "a*(", "--alphabet", "a"
    )
    assert code == 65 and "position" in err
    code, _, err = run(
        capsys, "respect", "--lang", "a*", "--alphabet", "a",
        "--variant", "classic", "--rule", "x,;,",
    )
    assert code == 65


def test_candidate_guard_maps_to_tool_error(capsys):
    code, _, err = run(
        capsys, "decide", "--lang", "a+b+", "--alphabet", "ab",
        "--variant", "classic", "--bounds", "theorem",
    )
    assert code == 65
    assert "exceeding the limit" in err


def test_output_is_byte_identical_across_runs(capsys):
    args = ("monoid", "--lang", "a+b+", "--alphabet", "ab")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    args = (
        "decide", "--lang", "(aa)*", "--alphabet", "a",
        "--variant", "pixton", "--bounds", "theorem",
    )
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_lang_from_automaton_file(tmp_path, capsys):
    path = tmp_path / "lang.json"
    ab = Alphabet.from_string("ab")
    from splicekit import automaton_to_json

    path.write_text(automaton_to_json(parse_regex("a+b+", ab)))
    code, out, _ = run(capsys, "monoid", "--lang", f"@{path}")
    assert code == 0
    assert json.loads(out)["size"] == 5
