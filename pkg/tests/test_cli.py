import json
import pathlib

import pytest

from hopfore.cli import main, run_job, validate_config, ConfigError

DATA = pathlib.Path(__file__).parent / "data"


def write_config(tmp_path, doc, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def taft3_doc(command="hopf_check", params=None):
    return {
        "field": {"kind": "cyclotomic", "n": 3},
        "group": {"free_rank": 0, "torsion": [3]},
        "theta": ["zeta"],
        "a": [1],
        "command": command,
        "params": params or {},
    }


def sweedler_doc(command, params=None):
    return {
        "field": {"kind": "rationals"},
        "group": {"free_rank": 0, "torsion": [2]},
        "theta": ["-1"],
        "a": [1],
        "command": command,
        "params": params or {},
    }


def test_qbinom_reports():
    doc = {"field": {"kind": "cyclotomic", "n": 4},
           "command": "qbinom", "params": {"n": 4, "m": 2, "q": "zeta"}}
    report, code = run_job(doc)
    assert code == 0
    assert report["result"]["value"] == "0"
    assert report["result"]["vanishing_profile"] is True
    doc2 = {"field": {"kind": "cyclotomic", "n": 3},
            "command": "qbinom", "params": {"n": 6, "m": 3, "q": "zeta"}}
    report2, _ = run_job(doc2)
    assert report2["result"]["value"] == "2"
    assert report2["result"]["vanishing_profile"] is False
    doc3 = {"field": {"kind": "rationals"},
            "command": "qbinom", "params": {"n": 3, "m": 0, "q": "7"}}
    report3, _ = run_job(doc3)
    assert report3["result"]["value"] == "1"
    assert report3["result"]["vanishing_profile"] is False
    doc4 = {"field": {"kind": "rationals"},
            "command": "qbinom", "params": {"n": 1, "m": 1, "q": "7"}}
    report4, _ = run_job(doc4)
    assert report4["result"]["vanishing_profile"] is None


def test_hopf_check_passes():
    report, code = run_job(taft3_doc(params={"degree": 3}))
    assert code == 0 and report["status"] == "pass"
    assert report["derived"]["case"] == "case1"
    assert report["derived"]["q"] == "zeta"


def test_report_echo_roundtrip():
    doc = taft3_doc(params={"degree": 2})
    report, _ = run_job(doc)
    echoed = report["config"]
    assert validate_config(echoed) == validate_config(doc)
    report2, _ = run_job(json.loads(json.dumps(echoed)))
    assert report2["result"] == report["result"]


def test_classify_command():
    report, code = run_job(taft3_doc("classify", {"degree": 4}))
    assert code == 0
    assert report["result"]["rank"] == "two"
    assert report["result"]["crosscheck_agrees"] is True


def test_skew_primitives_command():
    doc = {
        "field": {"kind": "cyclotomic", "n": 3},
        "group": {"free_rank": 0, "torsion": [9]},
        "theta": ["zeta"],
        "a": [1],
        "command": "skew_primitives",
        "params": {"target": [3], "degree": 4},
    }
    report, code = run_job(doc)
    assert code == 0
    assert report["result"]["dimension"] == 2


def test_quotient_command_and_negative_control():
    doc = sweedler_doc("quotient", {"n": 2, "beta": "0"})
    report, code = run_job(doc)
    assert code == 0
    assert report["result"]["dimension"] == 4
    bad = sweedler_doc("quotient", {"n": 2, "beta": "0",
                                    "negative_control": "nonhopf_ideal"})
    report, code = run_job(bad)
    assert code == 1
    assert report["result"]["hopf_ideal_check"]["ok"] is False


def test_simples_command():
    report, code = run_job(sweedler_doc("simples"))
    assert code == 0
    assert report["result"]["dimensions"] == [1, 1]
    z4 = {
        "field": {"kind": "cyclotomic", "n": 4},
        "group": {"free_rank": 0, "torsion": [4]},
        "theta": ["-1"],
        "a": [1],
        "command": "simples",
        "params": {},
    }
    report, code = run_job(z4)
    assert code == 0
    assert sorted(report["result"]["dimensions"]) == [1, 1, 2]
    assert report["result"]["sum_of_squares"] == 6
    assert report["result"]["pairwise_noniso"] is True


def test_tensor_command():
    doc = {
        "field": {"kind": "cyclotomic", "n": 12},
        "group": {"free_rank": 0, "torsion": [4]},
        "theta": ["-1"],
        "a": [1],
        "command": "tensor",
        "params": {"sigma": ["1"], "alpha": "1",
                   "lambda": ["zeta^3"], "beta": "1"},
    }
    report, code = run_job(doc)
    assert code == 0
    assert report["result"]["splitting_verified"] is True
    assert report["result"]["common_scalar"] == "0"


def test_verma_command():
    doc = {
        "field": {"kind": "cyclotomic", "n": 4},
        "group": {"free_rank": 0, "torsion": [4]},
        "theta": ["-1"],
        "a": [1],
        "command": "verma",
        "params": {"lambda": ["zeta"], "quotient": {"n": 2, "beta": "1"}},
    }
    report, code = run_job(doc)
    assert code == 0
    assert report["result"]["J"]["maximal"] is True
    assert report["result"]["J_beta"]["maximal"] is True
    assert report["result"]["mod_ideal"]["kind"] == "module"
    assert report["result"]["mod_ideal"]["indecomposable"] == "yes"


def test_schema_rejection_points_at_key():
    doc = taft3_doc(params={"degreee": 3})
    with pytest.raises(ConfigError) as err:
        run_job(doc)
    assert "config.params.degreee" in str(err.value)
    doc2 = taft3_doc()
    doc2["field"] = {"kind": "prime"}
    with pytest.raises(ConfigError) as err2:
        run_job(doc2)
    assert "config.field.p" in str(err2.value)


def test_main_exit_codes(tmp_path, capsys):
    path = write_config(tmp_path, taft3_doc(params={"degree": 2}))
    assert main(["--config", path]) == 0
    capsys.readouterr()
    bad = write_config(tmp_path, taft3_doc(params={"oops": 1}), "bad.json")
    assert main(["--config", bad]) == 2
    err = capsys.readouterr().err
    assert "config.params.oops" in err
    neg = write_config(
        tmp_path,
        taft3_doc(params={"degree": 2, "negative_control": "antipode_sign"}),
        "neg.json")
    assert main(["--config", neg]) == 1
    capsys.readouterr()


def test_main_deterministic_output(tmp_path, capsys):
    path = write_config(tmp_path, taft3_doc("classify", {"degree": 3}))
    assert main(["--config", path]) == 0
    first = capsys.readouterr().out
    assert main(["--config", path]) == 0
    second = capsys.readouterr().out
    assert first == second
    # threads must not change the result
    assert main(["--config", path, "--threads", "3"]) == 0
    third = capsys.readouterr().out
    assert first == third


def test_main_output_file_and_degree_override(tmp_path, capsys):
    path = write_config(tmp_path, taft3_doc(params={}))
    out = tmp_path / "report.json"
    assert main(["--config", path, "--degree", "2",
                 "--output", str(out)]) == 0
    capsys.readouterr()
    report = json.loads(out.read_text())
    assert report["config"]["params"]["degree"] == 2


def test_golden_report():
    report, code = run_job(sweedler_doc("simples"))
    assert code == 0
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    assert text == (DATA / "sweedler_simples.golden.json").read_text()


def test_corrupt_cocycle_control():
    doc = {
        "field": {"kind": "rationals"},
        "group": {"free_rank": 0, "torsion": [2, 2]},
        "theta": ["1", "-1"],
        "a": [1, 0],
        "command": "hopf_check",
        "params": {"degree": 2, "negative_control": "corrupt_cocycle"},
    }
    report, code = run_job(doc)
    assert code == 1
    assert report["result"]["checks"]["ore_compat"]["ok"] is False
    failures = report["result"]["checks"]["ore_compat"]["failures"]
    assert failures and failures[0]["what"].startswith("cocycle")


def test_grading_negative_control():
    doc = {
        "field": {"kind": "prime", "p": 3},
        "group": {"free_rank": 0, "torsion": [3]},
        "theta": ["1"],
        "a": [1],
        "alpha": ["1"],
        "command": "hopf_check",
        "params": {"degree": 3, "grading": "require"},
    }
    report, code = run_job(doc)
    assert code == 1
    assert report["result"]["checks"]["grading"]["ok"] is False
    assert report["result"]["checks"]["hopf_axioms"]["ok"] is True


def test_infinite_group_config():
    doc = {
        "field": {"kind": "rationals"},
        "group": {"free_rank": 1, "torsion": []},
        "theta": ["2"],
        "a": [1],
        "command": "classify",
        "params": {"degree": 3,
                   "group_sample": [[-2], [-1], [0], [1], [2]]},
    }
    report, code = run_job(doc)
    assert code == 0
    assert report["result"]["rank"] == "one"
