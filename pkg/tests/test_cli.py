import json

import pytest

from frcodes import (
    DEFAULT_CAP,
    corpus,
    incidence_matrix,
    k_fr_exact,
    k_star_exact,
    parse_frc,
    rate_profile,
    write_frc,
)
from frcodes.cli import main


@pytest.fixture
def paths(tmp_path):
    out = {}
    for name, code in corpus().items():
        p = tmp_path / f"{name}.frc"
        p.write_text(write_frc(code), encoding="utf-8")
        out[name] = str(p)
    return out


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_analyze_plain(paths, capsys):
    rc, out, err = run(capsys, ["analyze", paths["table1"]])
    assert rc == 0 and err == ""
    assert out.splitlines() == [
        "code: n=7 theta=8 rho=3",
        "valid: yes",
        "alpha = 4",
        "alpha_i = 4 4 4 4 3 3 2",
        "delta_i = 0 0 0 0 1 1 2",
        "delta = 4",
        "strong: no",
        "eq1_residual = 0",
    ]


def test_analyze_json(paths, capsys):
    rc, out, err = run(capsys, ["analyze", "--json", paths["table1"]])
    assert rc == 0
    payload = json.loads(out)
    assert payload["format"] == 1
    assert payload["meta"]["tool"] == "frcodes"
    assert payload["meta"]["cap"] == DEFAULT_CAP
    assert payload["code"]["n"] == 7
    assert payload["code"]["nodes"][0] == [1, 6, 7, 8]
    assert payload["validation"]["ok"] is True
    assert payload["params"]["alpha"] == 4
    assert payload["params"]["delta"] == 4
    assert payload["params"]["strong"] is False
    # rendering is canonical: sorted keys, two-space indent, one newline
    assert out == json.dumps(payload, indent=2, sort_keys=True) + "\n"


def test_analyze_reports_violations_without_strict(paths, capsys):
    rc, out, err = run(capsys, ["analyze", paths["table3"]])
    assert rc == 0
    assert "valid: no" in out
    assert "packet 5" in out


def test_strict_mode_fails_invalid_input(paths, capsys):
    rc, out, err = run(capsys, ["analyze", "--strict", paths["table3"]])
    assert rc == 1
    assert out == ""
    assert "validation failed" in err
    assert "packet 5" in err


def test_strict_mode_passes_valid_input(paths, capsys):
    rc, _, _ = run(capsys, ["analyze", "--strict", paths["table1"]])
    assert rc == 0


def test_missing_file_is_exit_2(capsys):
    rc, out, err = run(capsys, ["analyze", "/no/such/file.frc"])
    assert rc == 2
    assert err.startswith("error:")


def test_unparseable_file_is_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.frc"
    bad.write_text("FRC1\n1 3 1\n3 2\n", encoding="utf-8")
    rc, out, err = run(capsys, ["analyze", str(bad)])
    assert rc == 2
    assert "ascending" in err and "line 3" in err


def test_reconstruct_plain_both(paths, capsys):
    rc, out, err = run(capsys, ["reconstruct", paths["table2"]])
    assert rc == 0
    assert out.splitlines() == [
        "k_star_greedy = 3",
        "k_fr_greedy = 3",
        "k_star_exact = 3",
        "k_fr_exact = 3",
    ]


def test_reconstruct_plain_single_modes(paths, capsys):
    rc, out, _ = run(capsys, ["reconstruct", paths["table1"], "--mode", "exact"])
    assert rc == 0
    assert out.splitlines() == ["k_star_exact = 2", "k_fr_exact = 5"]
    rc, out, _ = run(capsys, ["reconstruct", paths["table1"], "--mode", "greedy"])
    assert rc == 0
    assert out.splitlines() == ["k_star_greedy = 3", "k_fr_greedy = 3"]


def test_reconstruct_reports_no_valid_run(tmp_path, capsys):
    split = tmp_path / "split.frc"
    split.write_text("FRC1\n2 4 1\n1\n2\n", encoding="utf-8")
    rc, out, _ = run(capsys, ["reconstruct", str(split), "--mode", "greedy"])
    assert rc == 0
    assert "k_fr_greedy = no valid run" in out


def test_reconstruct_trace_plain(paths, capsys):
    rc, out, _ = run(capsys, ["reconstruct", paths["table1"], "--mode", "greedy", "--trace"])
    assert rc == 0
    assert "trace k_star seed=4 completed" in out
    assert "trace k_fr seed=7 completed" in out
    assert "trace k_fr seed=3 failed" in out
    assert "  1: +node 4 covered=2,3,4,7" in out


def test_reconstruct_json_matches_library(paths, capsys):
    rc, out, _ = run(capsys, ["reconstruct", "--json", paths["table2"]])
    assert rc == 0
    payload = json.loads(out)
    code = corpus()["table2"]
    assert payload["degrees"]["k_star_exact"] == k_star_exact(code)
    assert payload["degrees"]["k_fr_exact"] == k_fr_exact(code)
    assert payload["degrees"]["target"] == code.theta - 1
    assert "traces" not in payload


def test_reconstruct_json_traces(paths, capsys):
    rc, out, _ = run(capsys, ["reconstruct", "--json", "--trace", paths["table3"]])
    assert rc == 0
    payload = json.loads(out)
    names = {t["algorithm"] for t in payload["traces"]}
    assert names == {"k_star", "k_fr"}
    for t in payload["traces"]:
        assert [s["counter"] for s in t["steps"]] == list(range(1, len(t["steps"]) + 1))


def test_repair_plain_table(paths, capsys):
    rc, out, _ = run(capsys, ["repair", paths["table1"]])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "node 1: alpha=4 greedy=2 exact=2"
    assert lines[6] == "node 7: alpha=2 greedy=1 exact=1"
    assert len(lines) == 7


def test_repair_node_scalar(paths, capsys):
    rc, out, _ = run(capsys, ["repair", paths["table1"], "--node", "7", "--mode", "exact"])
    assert rc == 0
    assert out == "1\n"
    rc, out, _ = run(capsys, ["repair", paths["table1"], "--node", "2", "--mode", "greedy"])
    assert out == "2\n"


def test_repair_node_both_line(paths, capsys):
    rc, out, _ = run(capsys, ["repair", paths["table1"], "--node", "2"])
    assert rc == 0
    assert out == "node 2: alpha=4 greedy=2 exact=2\n"


def test_repair_unrepairable_node_is_exit_4(paths, capsys):
    rc, out, err = run(capsys, ["repair", paths["table3"], "--node", "2"])
    assert rc == 4
    assert "packet 5" in err


def test_repair_whole_table_flags_without_failing(paths, capsys):
    rc, out, _ = run(capsys, ["repair", paths["table3"]])
    assert rc == 0
    assert "node 2: alpha=4 unrepairable (missing packets: 5)" in out


def test_repair_node_out_of_range_is_exit_2(paths, capsys):
    rc, _, err = run(capsys, ["repair", paths["table1"], "--node", "9"])
    assert rc == 2
    assert err.startswith("error:")


def test_repair_json_mode_keys(paths, capsys):
    rc, out, _ = run(capsys, ["repair", "--json", paths["table1"], "--mode", "exact"])
    payload = json.loads(out)
    rows = payload["repair"]["per_node"]
    assert [r["exact"] for r in rows] == [2, 2, 2, 2, 2, 2, 1]
    assert all("greedy" not in r for r in rows)
    rc, out, _ = run(capsys, ["repair", "--json", paths["m11x8"], "--node", "5"])
    row = json.loads(out)["repair"]["per_node"][0]
    assert row["greedy"] == row["exact"] == 2
    assert row["groups"] == [
        {"helper": 1, "packets": [1, 4]},
        {"helper": 9, "packets": [2, 3]},
    ]


def test_rate_single_k(paths, capsys):
    rc, out, _ = run(capsys, ["rate", paths["table1"], "-k", "3"])
    assert rc == 0 and out == "4\n"
    rc, out, _ = run(capsys, ["rate", paths["table1"], "-k", "4"])
    assert rc == 0 and out == "6\n"


def test_rate_profile_plain(paths, capsys):
    rc, out, _ = run(capsys, ["rate", paths["table1"], "--profile"])
    assert rc == 0
    assert out.splitlines() == [
        "R(1) = 2",
        "R(2) = 3",
        "R(3) = 4",
        "R(4) = 6",
        "R(5) = 8",
        "R(6) = 8",
        "R(7) = 8",
    ]


def test_rate_profile_json(paths, capsys):
    rc, out, _ = run(capsys, ["rate", "--json", paths["table2"], "--profile"])
    payload = json.loads(out)
    assert payload["rate_profile"] == list(rate_profile(corpus()["table2"]))


def test_rate_out_of_range_k_is_exit_2(paths, capsys):
    rc, _, err = run(capsys, ["rate", paths["table1"], "-k", "0"])
    assert rc == 2
    rc, _, err = run(capsys, ["rate", paths["table1"], "-k", "8"])
    assert rc == 2


def test_rate_requires_k_or_profile(paths, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rate", paths["table1"]])
    assert exc.value.code == 2


def test_cap_exhaustion_is_exit_3(paths, capsys):
    rc, _, err = run(capsys, ["rate", paths["table1"], "-k", "3", "--cap", "5"])
    assert rc == 3
    assert "C(7,3)" in err
    rc, _, err = run(capsys, ["reconstruct", paths["m11x8"], "--mode", "exact", "--cap", "3"])
    assert rc == 3


def test_matrix_plain(paths, capsys):
    rc, out, _ = run(capsys, ["matrix", paths["table1"]])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "1 0 0 0 0 1 1 1"
    assert lines[6] == "0 0 0 0 1 1 0 0"
    assert len(lines) == 7


def test_matrix_json(paths, capsys):
    rc, out, _ = run(capsys, ["matrix", "--json", paths["m11x8"]])
    payload = json.loads(out)
    m = incidence_matrix(corpus()["m11x8"])
    assert payload["matrix"]["rows"] == 11
    assert payload["matrix"]["cols"] == 8
    assert payload["matrix"]["bits"] == [list(r) for r in m.bits]


def test_generate_plain_round_trips(capsys):
    rc, out, _ = run(capsys, ["generate", "--n", "5", "--theta", "8", "--rho", "2", "--seed", "3"])
    assert rc == 0
    code = parse_frc(out)
    assert (code.n, code.theta, code.rho) == (5, 8, 2)


def test_generate_is_seed_deterministic(capsys):
    argv = ["generate", "--n", "6", "--theta", "9", "--rho", "3", "--seed", "11"]
    rc, first, _ = run(capsys, argv)
    rc, second, _ = run(capsys, argv)
    assert first == second
    rc, third, _ = run(capsys, argv[:-1] + ["12"])
    assert third != first


def test_generate_strong_flag(capsys):
    rc, out, _ = run(capsys, ["generate", "--n", "6", "--theta", "9", "--rho", "2", "--strong"])
    assert rc == 0
    code = parse_frc(out)
    assert {len(node) for node in code.nodes} == {3}


def test_generate_bad_parameters_are_exit_2(capsys):
    rc, _, err = run(capsys, ["generate", "--n", "3", "--theta", "5", "--rho", "4"])
    assert rc == 2
    rc, _, err = run(capsys, ["generate", "--n", "4", "--theta", "5", "--rho", "2", "--strong"])
    assert rc == 2


def test_generate_json_embeds_seed(capsys):
    rc, out, _ = run(capsys, ["generate", "--json", "--n", "5", "--theta", "8", "--rho", "2", "--seed", "9"])
    payload = json.loads(out)
    assert payload["meta"]["seed"] == 9
    assert payload["code"]["rho"] == 2


def test_corpus_emits_canonical_text(paths, capsys):
    rc, out, _ = run(capsys, ["corpus", "table1"])
    assert rc == 0
    assert out == write_frc(corpus()["table1"])


def test_corpus_json_names_the_code(capsys):
    rc, out, _ = run(capsys, ["corpus", "--json", "m11x8"])
    payload = json.loads(out)
    assert payload["meta"]["name"] == "m11x8"
    assert payload["code"]["nodes"][2] == [3]


def test_corpus_rejects_unknown_name(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["corpus", "table9"])
    assert exc.value.code == 2


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
