import json

from abellab.cli import main


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


PAIR_CC = {
    "P": {"coeffs": ["1", "-2", "1"]},  # (x-1)^2 composed with x^2 below
    "Q": {"coeffs": ["0", "0", "-1", "0", "1"]},
    "interval": {"a": "-1", "b": "1"},
}
PAIR_CC["P"] = {"coeffs": ["1", "0", "-2", "0", "1"]}  # (x^2-1)^2


def test_cc_witness(tmp_path, capsys):
    path = write(tmp_path, "pair.json", PAIR_CC)
    assert main(["cc", "--input", path, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["witness"]["W"] == {"coeffs": ["0", "0", "1"]}
    assert out["witness"]["P_reduced"] == {"coeffs": ["1", "-2", "1"]}
    assert out["witness"]["Q_reduced"] == {"coeffs": ["0", "-1", "1"]}


def test_center_table_entry(tmp_path, capsys):
    obj = {
        "P": {"coeffs": ["-1", "0", "1"]},
        "Q": {"coeffs": ["0", "-1", "0", "1"]},
        "interval": {"a": "-1", "b": "1"},
    }
    path = write(tmp_path, "pair.json", obj)
    assert main(["center-table", "--input", path, "--kmax", "8", "--param", "eps", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["entries"]["4,1"] == "-8/15"
    assert out["infinitesimal_order"] == 1


def test_melnikov_output(tmp_path, capsys):
    obj = {
        "P": {"coeffs": ["0", "-1", "1"]},
        "Q": {"coeffs": ["0", "2", "-3", "1"]},
        "interval": {"a": "0", "b": "1"},
    }
    path = write(tmp_path, "pair.json", obj)
    assert main(["melnikov", "--input", path, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["D6"] == "-1/280"


def test_factors_chebyshev(tmp_path, capsys):
    obj = {
        "D": 3,
        "P": {"coeffs": ["0", "0", "18", "0", "-48", "0", "32"]},
        "interval": {"a": "-1/2*r3", "b": "1/2*r3"},
    }
    path = write(tmp_path, "p.json", obj)
    assert main(["factors", "--input", path, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["s"] == 2
    assert out["factor_degrees"] == [2, 3]
    assert out["tag"] == "chebyshev-like"
    assert out["definite"] is False


def test_definite(tmp_path, capsys):
    obj = {"P": {"coeffs": ["-1", "0", "1"]}, "interval": {"a": "-1", "b": "1"}}
    path = write(tmp_path, "p.json", obj)
    assert main(["definite", "--input", path, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["definite"] is True


def test_zspace_dimension(tmp_path, capsys):
    obj = {"P": {"coeffs": ["-1", "0", "1"]}, "interval": {"a": "-1", "b": "1"}}
    path = write(tmp_path, "p.json", obj)
    assert main(["zspace", "--input", path, "--degree", "4", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dimension"] == 2


def test_zspace_not_stabilized_is_exit_1(tmp_path, capsys):
    obj = {"P": {"coeffs": ["-1", "0", "1"]}, "interval": {"a": "-1", "b": "1"}}
    path = write(tmp_path, "p.json", obj)
    code = main(["zspace", "--input", path, "--degree", "4", "--imax", "0"])
    assert code == 1
    assert "kernel not stabilized" in capsys.readouterr().err


def test_moments_roundtrip(tmp_path, capsys):
    obj = {
        "P": {"coeffs": ["-1", "0", "1"]},
        "Q": {"coeffs": ["0", "-1", "0", "1"]},
        "interval": {"a": "-1", "b": "1"},
    }
    path = write(tmp_path, "pair.json", obj)
    assert main(["moments", "--input", path, "--nmax", "3", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["m_PQ"]["1"] == "8/15"
    assert out["m_PQ"]["0"] == "0"


def test_iterated(tmp_path, capsys):
    obj = {
        "alpha": [1, 2],
        "h1": {"coeffs": ["1"]},
        "h2": {"coeffs": ["0", "2"]},
        "interval": {"a": "0", "b": "1"},
    }
    path = write(tmp_path, "it.json", obj)
    assert main(["iterated", "--input", path, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == "1/3"


def test_trig_moment(tmp_path, capsys):
    obj = {
        "P": {"a0": "0", "cos": {"3": "1"}, "sin": {}},
        "Q": {"a0": "0", "cos": {}, "sin": {"2": "1"}},
        "i": 3,
        "j": 2,
    }
    path = write(tmp_path, "tm.json", obj)
    assert main(["trig-moment", "--input", path, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["moment"] == "3/4*pi"


def test_trig_family(tmp_path, capsys):
    obj = {
        "d1": 3,
        "d2": 2,
        "p": {"1": ["1", "0"]},
        "q": {"1": ["0", "1"]},
    }
    path = write(tmp_path, "fam.json", obj)
    assert main(["trig-family", "--input", path, "--imax", "6", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["first_moments_vanish"] is True
    assert out["certificate"] == {"i": 3, "j": 2, "value": "3/4*pi"}


def test_report(tmp_path, capsys):
    obj = {
        "P": {"coeffs": ["-1", "0", "1"]},
        "Q": {"coeffs": ["0", "-1", "0", "1"]},
        "interval": {"a": "-1", "b": "1"},
    }
    path = write(tmp_path, "pair.json", obj)
    assert main(["report", "--input", path, "--kmax", "6", "--nmax", "6", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["cc"] is None
    assert out["truncated_parametric_center"] is False
    assert out["consistent"] is True


def test_malformed_input_exit_2(tmp_path, capsys):
    path = write(tmp_path, "bad.json", {"P": {"coeffs": ["1.5"]}, "interval": {"a": "0", "b": "1"}})
    assert main(["definite", "--input", path]) == 2
    err = capsys.readouterr().err
    assert "input error" in err
    path2 = write(tmp_path, "bad2.json", {"interval": {"a": "0", "b": "1"}})
    assert main(["definite", "--input", path2]) == 2
    assert "P" in capsys.readouterr().err


def test_trig_family_rejection_names_index(tmp_path, capsys):
    obj = {
        "d1": 3,
        "d2": 2,
        "p": {"1": ["1", "0"]},
        "q": {"1": ["0", "1"], "3": ["1", "0"]},
    }
    path = write(tmp_path, "fam.json", obj)
    assert main(["trig-family", "--input", path]) == 2
    assert "index 3" in capsys.readouterr().err


def test_determinism(tmp_path, capsys):
    obj = {
        "P": {"coeffs": ["-1", "0", "1"]},
        "Q": {"coeffs": ["0", "-1", "0", "1"]},
        "interval": {"a": "-1", "b": "1"},
    }
    path = write(tmp_path, "pair.json", obj)
    assert main(["center-table", "--input", path, "--kmax", "6", "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["center-table", "--input", path, "--kmax", "6", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second


def test_threads_env_validation(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("ABEL_LAB_THREADS", "banana")
    obj = {"P": {"coeffs": ["-1", "0", "1"]}, "interval": {"a": "-1", "b": "1"}}
    path = write(tmp_path, "p.json", obj)
    assert main(["definite", "--input", path]) == 2
    monkeypatch.setenv("ABEL_LAB_THREADS", "2")
    assert main(["definite", "--input", path]) == 0


def test_verify_suite_trig(capsys):
    assert main(["verify", "--suite", "trig", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "A8" in out and "A9" in out and "PASS" in out


def test_verify_json_mode(capsys):
    assert main(["verify", "--suite", "series", "--seed", "7", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["criteria"][0]["id"] == "A3"
    assert out["criteria"][0]["passed"] is True


def test_text_mode_output(tmp_path, capsys):
    obj = {
        "P": {"coeffs": ["-1", "0", "1"]},
        "Q": {"coeffs": ["0", "-1", "0", "1"]},
        "interval": {"a": "-1", "b": "1"},
    }
    path = write(tmp_path, "pair.json", obj)
    assert main(["center-table", "--input", path, "--kmax", "6"]) == 0
    out = capsys.readouterr().out
    assert "v[4,1] = -8/15" in out
    assert main(["cc", "--input", path]) == 0
    assert "no common composition factor" in capsys.readouterr().out


def test_missing_input_file(capsys):
    assert main(["factors", "--input", "/nonexistent/x.json"]) == 2
    assert "cannot read" in capsys.readouterr().err
