import json
import os

import pytest

from commons.constants import CASE_SETS, DEFAULT_COCHARACTER_BOUND, DEFAULT_GOLDEN_SIZES
from whittaker_cli.cli import main
from whittaker_cli.config_manager import ConfigManager
from whittaker_cli.golden import load_expectations


@pytest.fixture
def config_file(tmp_path):
    return str(tmp_path / "cli_config.json")


@pytest.fixture
def run(capsys, config_file):
    def _run(*argv):
        status = main(["--config", config_file, *argv])
        return status, json.loads(capsys.readouterr().out)
    return _run


def test_orbit_of_the_gl4_family(run):
    status, report = run("orbit", "gl_upper:4", "psi_ab(1,1)")
    assert status == 0
    assert report["case_name"] == "orbit"
    assert report["results"]["orbit_dimension"] == 4
    assert report["results"]["n_stabilizer_dim"] == 2
    assert report["results"]["depth"] == 3
    assert report["results"]["classification"] == "HighDepth"
    assert report["match"] is True


def test_orbit_of_a_json_functional(run):
    status, report = run("orbit", "gl_upper:4", '{"e_1,3": "1/2"}')
    assert status == 0
    assert report["results"]["depth"] == 2
    assert report["results"]["representative"]["coeffs"] == {"e_1,3": "1/2"}


def test_orbit_of_an_inline_algebra(run):
    algebra = json.dumps({"dim": 3, "labels": ["x", "y", "z"],
                          "brackets": [{"i": 0, "j": 1, "out": [{"k": 2, "c": "1"}]}]})
    status, report = run("orbit", algebra, '{"z": "1"}')
    assert status == 0
    assert report["results"]["orbit_dimension"] == 2
    assert report["results"]["classification"] == "WeilPullback"


def test_unknown_catalog_is_an_error(run):
    status, payload = run("orbit", "so:3", "f(1)")
    assert status == 2
    assert payload["error"] == "CatalogError"
    assert "so:3" in payload["detail"]


def test_unknown_label_is_a_parse_error(run):
    status, payload = run("orbit", "gl_upper:4", '{"e_4,1": "1"}')
    assert status == 2
    assert payload["error"] == "ParseError"


def test_missing_functional_is_a_parse_error(run):
    status, payload = run("orbit", "gl_upper:4")
    assert status == 2
    assert payload["error"] == "ParseError"


def test_classify_depth_two(run):
    status, report = run("classify", "gl_upper:4", '{"e_1,3": "1"}')
    assert status == 0
    results = report["results"]
    assert results["classification"] == "WeilPullback"
    assert results["symplectic_space_dim"] == 2
    assert results["heisenberg_quotient"]["chain_dims"][-1] == 3
    assert results["is_character"] is False


def test_classify_with_a_stable_polarization(run):
    h = '["e_1,4", "e_2,3", "e_2,4", "e_3,4"]'
    status, report = run("classify", "gl_upper:4", "psi_ab(1,1)", f"h={h}")
    assert status == 0
    bound = report["results"]["metaplectic_bound"]
    assert bound["bound"] == "ExactlyOne"
    assert bound["reason"] == "FlagStable"
    assert report["inputs"]["h"] == h


def test_classify_heisenberg_center(run):
    status, report = run("classify", "heis:1", "f(1)")
    assert status == 0
    assert report["results"]["metaplectic_bound"] == {"bound": "AtMostTwo", "reason": "Depth2"}


def test_polarize_heisenberg(run):
    status, report = run("polarize", "heis:2", "f(1)")
    assert status == 0
    assert report["results"]["dim"] == 3
    assert report["results"]["is_polarization"] is True
    assert report["results"]["contains_center"] is True


def test_polarize_a_given_subalgebra(run):
    status, report = run("polarize", "gl_upper:4", "psi_ab(1,1)", 'h=["e_1,4","e_2,3","e_2,4","e_3,4"]')
    assert status == 0
    assert report["results"]["is_polarization"] is True
    assert report["results"]["polarization"]["subspace"]["coordinates"] == ["e_1,4", "e_2,3", "e_2,4", "e_3,4"]


def test_polarize_rejects_a_flag_that_is_not_ideals(run):
    flag = json.dumps([["e_1,2"], ["e_1,2", "e_1,3"], ["e_1,2", "e_1,3", "e_1,4"],
                       ["e_1,2", "e_1,3", "e_1,4", "e_2,3"], ["e_1,2", "e_1,3", "e_1,4", "e_2,3", "e_2,4"],
                       ["e_1,2", "e_1,3", "e_1,4", "e_2,3", "e_2,4", "e_3,4"]])
    status, payload = run("polarize", "gl_upper:4", "psi_ab(1,1)", f"flag={flag}")
    assert status == 2
    assert payload["error"] == "NotIdeals"


def test_stabilizer_of_the_gl4_family(run):
    status, report = run("stabilizer", "gl_upper:4", "psi_ab(2,3)")
    assert status == 0
    assert report["results"]["levi_stabilizer_dim"] == 2
    assert report["results"]["torus_pattern"] == "diag(a1,a2,a2,a1)"
    assert report["results"]["p_orbit_dimension"] == 6
    assert report["caveats"] == []


def test_stabilizer_on_sp_carries_the_component_caveat(run):
    status, report = run("stabilizer", "sp:3", "f(1)")
    assert status == 0
    assert report["results"]["torus_pattern"] == "diag(0,a1,a2,-a2,-a1,0)"
    assert len(report["caveats"]) == 1


def test_stabilizer_needs_a_levi(run):
    algebra = json.dumps({"dim": 1, "labels": ["e_1"]})
    status, payload = run("stabilizer", algebra, '{"e_1": "1"}')
    assert status == 2
    assert payload["error"] == "ParseError"


def test_degenerate_with_a_cocharacter(run):
    status, report = run("degenerate", "gl_upper:4", "psi_ab(1,1)", "psi0=psi_ab(1,0)", "lambda=0,0,1,0")
    assert status == 0
    assert report["results"]["horizontal"] is True
    assert report["results"]["simple"] is True
    assert report["results"]["stabilizer_monotonicity"] is True
    assert report["results"]["certificate"]["lambda"] == [0, 0, 1, 0]


def test_degenerate_defaults_psi0_to_the_limit(run):
    status, report = run("degenerate", "gl_upper:4", "psi_ab(1,1)", "lambda=0,0,1,0")
    assert status == 0
    assert report["results"]["certificate"]["psi0"]["coeffs"] == {"e_1,4": "1"}


def test_degenerate_with_a_diverging_limit(run):
    status, payload = run("degenerate", "gl_upper:4", "psi_ab(1,1)", "lambda=0,1,0,0")
    assert status == 2
    assert payload["error"] == "ParseError"


def test_degenerate_searches_without_a_cocharacter(run):
    status, report = run("degenerate", "gl_upper:4", "psi_ab(1,1)", "psi0=psi_ab(1,0)", "--bound", "1")
    assert status == 0
    assert report["inputs"]["bound"] == 1
    assert [0, 0, 1, 0] in report["results"]["lambdas"]
    assert report["caveats"] == []


def test_degenerate_trivial_functional(run):
    status, payload = run("degenerate", "gl_upper:4", "{}", "--bound", "1")
    assert status == 2
    assert payload["error"] == "TrivialFunctional"


def test_cosets(run):
    status, report = run("cosets", "5")
    assert status == 0
    assert report["results"]["double_coset_count"] == 3
    assert report["results"]["inner_coset_count"] == 2
    assert report["results"]["double_coset_reps"][1][1] == ["0", "0", "1", "0", "0"]


def test_cosets_small_n(run):
    status, payload = run("cosets", "3")
    assert status == 2
    assert payload["error"] == "CatalogError"


@pytest.mark.parametrize("case_set", CASE_SETS)
def test_golden_case_sets_match(run, case_set):
    status, reports = run("golden", case_set)
    assert status == 0
    assert reports
    for report in reports:
        assert report["match"] is True, report["case_name"]
        assert report["paper_expectations"]
    assert {report["case_name"] for report in reports} == set(load_expectations()[case_set]["cases"])


def test_golden_sp_reports_its_discrepancy(run):
    _, reports = run("golden", "sp")
    by_name = {report["case_name"]: report for report in reports}
    assert by_name["sp:n=3"]["known_discrepancies"]
    assert by_name["sp:n=3"]["results"]["depth"] == 5


def test_golden_search_finds_each_limit_unaided(run):
    _, reports = run("golden", "degeneration")
    for report in reports:
        assert report["results"]["search_finds_psi0"] is True, report["case_name"]


def test_shipped_config_matches_the_defaults():
    shipped = ConfigManager()
    for case_set, sizes in DEFAULT_GOLDEN_SIZES.items():
        assert shipped.get_golden_sizes(case_set) == sizes
    assert shipped.get_cocharacter_bound() == DEFAULT_COCHARACTER_BOUND


def test_unknown_golden_case_set(run):
    status, payload = run("golden", "so")
    assert status == 2
    assert payload["error"] == "UnknownCaseSet"


def test_output_is_deterministic(capsys, config_file):
    main(["--config", config_file, "golden", "degeneration"])
    first = capsys.readouterr().out
    main(["--config", config_file, "golden", "degeneration"])
    assert capsys.readouterr().out == first


def test_pretty_output(capsys, config_file):
    main(["--config", config_file, "--pretty", "cosets", "4"])
    out = capsys.readouterr().out
    assert out.startswith("{\n  ")
    assert json.loads(out)["results"]["double_coset_count"] == 2


def test_arguments_from_a_file(run, tmp_path):
    path = tmp_path / "args.json"
    path.write_text(json.dumps({"algebra": "gl_upper:4", "psi": {"e_1,4": "1", "e_2,3": "1"},
                                "lambda": "0,0,1,0"}))
    status, report = run("degenerate", "--file", str(path))
    assert status == 0
    assert report["results"]["horizontal"] is True


def test_command_line_overrides_the_file(run, tmp_path):
    path = tmp_path / "args.json"
    path.write_text(json.dumps({"algebra": "gl_upper:4", "psi": "psi_ab(1,1)"}))
    status, report = run("orbit", "gl_upper:5", '{"e_1,5": "1"}', "--file", str(path))
    assert status == 0
    assert report["results"]["depth"] == 4


def test_config_manager_uses_defaults_without_writing(config_file):
    config = ConfigManager(config_file)
    assert config.get_cocharacter_bound() == 2
    assert config.get_log_level() == "WARNING"
    assert config.get_golden_sizes("sp") == [3, 4]
    assert config.get_pretty_indent() == 2
    assert not os.path.exists(config_file)


def test_config_manager_merges_a_partial_file(tmp_path):
    path = tmp_path / "partial.json"
    path.write_text(json.dumps({"log_level": "debug"}))
    config = ConfigManager(str(path))
    assert config.get_log_level() == "DEBUG"
    assert config.get_cocharacter_bound() == 2


def test_config_manager_falls_back_on_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    config = ConfigManager(str(path))
    assert config.get_cocharacter_bound() == 2
    assert config.get_golden_sizes("unknown") == []


def test_configured_bound_drives_the_search(capsys, tmp_path):
    path = tmp_path / "bound.json"
    path.write_text(json.dumps({"cocharacter_bound": 1}))
    status = main(["--config", str(path), "degenerate", "gl_upper:4", "psi_ab(1,1)", "psi0=psi_ab(1,0)"])
    report = json.loads(capsys.readouterr().out)
    assert status == 0
    assert report["inputs"]["bound"] == 1
    assert [0, 0, 1, 0] in report["results"]["lambdas"]
