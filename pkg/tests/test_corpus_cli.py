import json

import pytest
from click.testing import CliRunner

from firmhom.cli import main
from firmhom.corpus import (
    REGISTRY,
    Check,
    InputError,
    Options,
    Report,
    check_file,
    combined_exit_code,
    corpus_ring,
    load_input,
    run_all,
    run_example,
)


@pytest.fixture
def write_json(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)
    return write


@pytest.mark.parametrize("entry_id", sorted(REGISTRY))
def test_every_entry_passes_with_defaults(entry_id):
    rep = run_example(entry_id, Options(random_count=10))
    assert rep.status == "PASS", rep.render()
    assert rep.exit_code() == 0


def test_unknown_entry():
    with pytest.raises(KeyError):
        run_example("no-such-entry")


@pytest.mark.parametrize("kwargs", [
    {"stability_window": 0},
    {"tor_max": -1},
    {"degree_cutoff": 0},
    {"levels": [1, 3, 4]},
    {"levels": [2, 1]},
])
def test_options_out_of_range(kwargs):
    with pytest.raises(ValueError):
        Options(**kwargs)


def test_json_report_roundtrip():
    rep = run_example("d-ring")
    obj = json.loads(rep.render("json"))
    assert obj["id"] == "d-ring" and obj["status"] == "PASS"
    assert obj["certification"] == "CERTIFIED"
    assert {c["name"] for c in obj["checks"]} >= {"left s-unital", "right s-unital", "t-unital"}
    for c in obj["checks"]:
        assert set(c) == {"name", "status", "expected", "computed", "origin", "anchor"}
    assert "wall_time" not in obj
    assert "wall_time" in json.loads(rep.render("json", timing=True))


def test_reports_are_deterministic():
    a = run_all(Options(random_count=5), ["d-ring", "pruefer-square", "kuenneth"])
    b = run_all(Options(random_count=5), ["d-ring", "pruefer-square", "kuenneth"])
    for fmt in ("text", "json"):
        assert [r.render(fmt) for r in a] == [r.render(fmt) for r in b]


def test_text_report_lists_anchors():
    text = run_example("d-ring").render()
    assert text.startswith("d-ring: PASS (CERTIFIED)")
    assert "about: u is a left unit" in text


def test_status_and_exit_codes():
    ok = Check("a", 1, 1, True, "by-construction")
    bad = Check("b", 1, 2, False, "by-construction")
    open_ = Check("c", "ZERO", "INCONCLUSIVE", None, "computed-oracle")
    assert Report("x", [ok], "CERTIFIED").exit_code() == 0
    assert Report("x", [ok, bad, open_], "CERTIFIED").exit_code() == 1
    assert Report("x", [ok, open_], "HEURISTIC").exit_code() == 3
    reports = [Report("x", [ok], "CERTIFIED"), Report("y", [open_], "HEURISTIC")]
    assert combined_exit_code(reports) == 3
    with pytest.raises(ValueError):
        Check("d", 1, 1, True, "guess")


def test_check_file_d_ring(write_json):
    path = write_json("d.json", corpus_ring("D").to_json())
    rep = check_file(path, "t-unital")
    assert rep.exit_code() == 0
    assert rep.checks[0].computed["verdict"] == "YES"


def test_check_file_monomial_missing_degree(write_json):
    path = write_json("mono.json", {"backend": "monomial", "variables": 1, "level": 2})
    rep = check_file(path, "t-unital")
    assert rep.exit_code() == 1
    assert rep.checks[0].computed == {"verdict": "NO", "missing_degree": "1/2"}


def test_check_file_module_and_hom(write_json):
    mod = write_json("m.json", {"ring": "D", "side": "left", "group": {"free_rank": 1, "torsion": []},
                                "actions": [[[1]], [[0]]]})
    assert check_file(mod, "s-unital").exit_code() == 0
    hom = write_json("h.json", {"domain": "Ze", "codomain": "D", "images": [[1, 0]]})
    rep = check_file(hom, "classify-hom")
    assert {c.name: c.computed["verdict"] for c in rep.checks}["right_s"] == "NO"
    assert rep.exit_code() == 1
    # a predicate that does not fit the input is inconclusive, not false
    assert check_file(hom, "t-unital").exit_code() == 3


@pytest.mark.parametrize("text,fragment", [
    ('{"backend": "finite_rank", "basis": ["a"], "structure": [[[1, 2]]]}', "structure"),
    ('{"backend": "finite_rank",\n "basis": ["a"],\n}', "line 3, column 1"),
    ('[1, 2]', "JSON object"),
    ('{"domain": "Ze", "codomain": "nope", "images": [[1]]}', "ring"),
    ('{"ring": "D", "side": "left"}', ""),
])
def test_malformed_inputs(write_json, text, fragment):
    path = write_json("bad.json", text)
    with pytest.raises(InputError) as exc:
        load_input(path)
    assert fragment in str(exc.value)


def test_ind_ring_file_respects_levels(write_json, monkeypatch):
    path = write_json("ind.json", {"backend": "ind", "variables": 1, "levels": [1, 2, 4]})
    assert check_file(path, "t-unital").exit_code() == 0
    monkeypatch.setenv("FIRMHOM_MAX_LEVEL", "2")
    assert check_file(path, "t-unital").exit_code() == 3
    monkeypatch.delenv("FIRMHOM_MAX_LEVEL")
    assert check_file(path, "t-unital", Options(levels=[1, 2])).exit_code() == 3


# -- command line ------------------------------------------------------------------------


def run_cli(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env)


def test_cli_verify_only():
    res = run_cli("verify-paper", "--only", "d-ring", "--format", "json")
    assert res.exit_code == 0
    assert json.loads(res.output)[0]["id"] == "d-ring"


def test_cli_unknown_only_id():
    res = run_cli("verify-paper", "--only", "nope")
    assert res.exit_code == 2
    assert "d-ring" in res.output


def test_cli_max_level_makes_colimit_inconclusive():
    res = run_cli("verify-paper", "--only", "rational-exponent-levels", env={"FIRMHOM_MAX_LEVEL": "2"})
    assert res.exit_code == 3
    assert "INCONCLUSIVE" in res.output


def test_cli_bad_options():
    assert run_cli("verify-paper", "--only", "d-ring", "--stability-window", "0").exit_code == 2
    assert run_cli("verify-paper", "--only", "d-ring", "--levels", "2,3").exit_code == 2
    assert run_cli("verify-paper", "--only", "d-ring", "--degree-cutoff", "x").exit_code == 2


def test_cli_truncation_option():
    res = run_cli("verify-paper", "--only", "pruefer-square", "--truncations", "1,2,3,4", "--tor-max", "3")
    assert res.exit_code == 0
    assert "Tor_0..3 at n=4" in res.output


def test_cli_check(write_json):
    good = write_json("d.json", corpus_ring("D").to_json())
    assert run_cli("check", "t-unital", good).exit_code == 0
    mono = write_json("mono.json", {"backend": "monomial", "variables": 1, "level": 2})
    res = run_cli("check", "t-unital", mono, "--format", "json")
    assert res.exit_code == 1
    assert json.loads(res.output)["checks"][0]["computed"]["missing_degree"] == "1/2"
    # --level swaps the monomial level; N = 1 still misses degree 1
    res = run_cli("check", "t-unital", mono, "--level", "1", "--format", "json")
    assert json.loads(res.output)["checks"][0]["computed"]["missing_degree"] == "1"


def test_cli_check_input_errors(write_json):
    bad = write_json("bad.json", '{"backend": "finite_rank",\n "basis": ["a"],\n}')
    res = run_cli("check", "t-unital", bad)
    assert res.exit_code == 2
    assert "line 3, column 1" in res.output
    res = run_cli("check", "t-unital", "/nonexistent/file.json")
    assert res.exit_code == 2
    assert run_cli("check", "no-such-predicate", bad).exit_code == 2
