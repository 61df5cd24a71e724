import json

import pytest

from fixtures import data_path
from main import main


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_help_exits_cleanly(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--help"])
    assert info.value.code == 0
    assert "gog" in capsys.readouterr().out


def test_gog_word_problem(capsys):
    status, out, _ = run_cli(capsys, "gog", "wp", "builtin:psl2z", "a b a b")
    assert status == 0
    assert out.strip() == "false"
    status, out, _ = run_cli(capsys, "gog", "wp", "builtin:psl2z", "b b2")
    assert out.strip() == "true"


def test_gog_word_problem_from_file(capsys):
    status, out, _ = run_cli(capsys, "gog", "wp", str(data_path("psl2z.gog")), "a a")
    assert (status, out.strip()) == (0, "true")


def test_pregroup_check(capsys):
    status, out, _ = run_cli(capsys, "pregroup", "check", str(data_path("zxz2.pg")))
    assert status == 0
    assert out.strip() == "pregroup: OK (P1–P4)"


def test_pregroup_axiom_failure_is_a_domain_error(capsys, tmp_path):
    broken = tmp_path / "broken.pg"
    broken.write_text("carrier: 1 a\ninverse: 1 a\ntable:\n1 a\n1 1\n")
    status, _, err = run_cli(capsys, "pregroup", "check", str(broken))
    assert status == 1
    assert any(line.startswith("error:") for line in err.splitlines())


def test_missing_file_is_a_usage_error(capsys, tmp_path):
    status, _, err = run_cli(capsys, "gog", "present", str(tmp_path / "missing.gog"))
    assert status == 2
    assert "cannot read" in err


def test_invalid_option_is_a_usage_error(capsys):
    status, _, err = run_cli(capsys, "cayley", "ball", "free:a,b", "--radius", "0")
    assert status == 2
    assert "--radius" in err


def test_json_envelope(capsys):
    status, out, _ = run_cli(capsys, "gog", "free-subgroup", "builtin:psl2z", "--format", "json")
    assert status == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["command"] == "gog free-subgroup"
    assert report["result"]["degree"] == 6


def test_json_errors_go_to_stdout(capsys):
    status, out, _ = run_cli(capsys, "gog", "wp", "builtin:nope", "a", "--format", "json")
    assert status == 2
    report = json.loads(out)
    assert "result" not in report
    assert "unknown" in report["error"]["message"]


def test_dot_output(capsys):
    status, out, _ = run_cli(capsys, "gog", "bst", "builtin:psl2z", "--format", "dot")
    assert status == 0
    assert out.startswith("graph BST {")


def test_reports_are_deterministic(capsys):
    first = run_cli(capsys, "cuts", "optimal", "builtin:comb", "--max-k", "2")
    second = run_cli(capsys, "cuts", "optimal", "builtin:comb", "--max-k", "2")
    assert first[0] == 0
    assert first[1] == second[1]
    assert first[1].startswith("k: 2")


def test_structure_tree_command(capsys):
    status, out, _ = run_cli(capsys, "structure-tree", "builtin:comb", "--max-k", "2", "--format", "json")
    assert status == 0
    assert json.loads(out)["command"] == "structure-tree"


PATH_GRAPH = "a: b\nb: a c\nc: b\n"


def write_graph_and_td(tmp_path, td_text):
    graph = tmp_path / "path.graph"
    graph.write_text(PATH_GRAPH)
    td = tmp_path / "path.td"
    td.write_text(td_text)
    return str(graph), str(td)


def test_td_validate(capsys, tmp_path):
    graph, td = write_graph_and_td(tmp_path, "bag 0: a, b | 1\nbag 1: b, c | 0\n")
    status, out, _ = run_cli(capsys, "td", "validate", graph, td)
    assert (status, out.strip()) == (0, "tree decomposition: OK (T1-T3), bag-size 2")


def test_td_validate_names_the_broken_axiom(capsys, tmp_path):
    graph, td = write_graph_and_td(tmp_path, "bag 0: a, b | 1\nbag 1: c | 0, 2\nbag 2: b, c | 1\n")
    status, out, _ = run_cli(capsys, "td", "validate", graph, td, "--format", "json")
    assert status == 1
    error = json.loads(out)["error"]
    assert error["message"].startswith("T3:")
    assert error["witnesses"]["vertex"] == "b"


def test_td_validate_rejects_unknown_vertices(capsys, tmp_path):
    graph, td = write_graph_and_td(tmp_path, "bag 0: a, b, c, z\n")
    status, _, err = run_cli(capsys, "td", "validate", graph, td)
    assert status == 2
    assert "not in the graph" in err


def test_td_normalize_contracts_nested_bags(capsys, tmp_path):
    graph, td = write_graph_and_td(tmp_path, "bag 0: a, b | 1\nbag 1: b | 0, 2\nbag 2: b, c | 1\n")
    status, out, _ = run_cli(capsys, "td", "normalize", graph, td)
    assert status == 0
    assert out.splitlines() == ["bag 0: a, b | 1", "bag 1: b, c | 0"]


def test_td_clique_tree_of_a_ball(capsys):
    status, out, _ = run_cli(capsys, "td", "clique-tree", "builtin:psl2z", "--radius", "3", "--format", "json")
    assert status == 0
    assert json.loads(out)["result"]["bag_size"] == 3


def test_td_clique_tree_needs_a_chordal_graph(capsys, tmp_path):
    square = tmp_path / "square.graph"
    square.write_text("a: b d\nb: a c\nc: b d\nd: a c\n")
    status, _, err = run_cli(capsys, "td", "clique-tree", str(square))
    assert status == 1
    assert "chordal" in err


def test_td_muller_schupp(capsys):
    status, out, _ = run_cli(capsys, "td", "muller-schupp", "free:a,b", "--radius", "3", "--format", "json")
    assert status == 0
    result = json.loads(out)["result"]
    assert result["interior_ok"] is True
    assert result["bags"].startswith("bag 0:")


def test_confluence_of_a_builtin_graph_of_groups(capsys):
    status, out, _ = run_cli(capsys, "rewrite", "confluence", "builtin:psl2z", "--format", "json")
    assert status == 0
    assert json.loads(out)["result"]["status"] == "LocallyConfluent"
