import json

import pytest

from incideals.cli import main

MIXED = "index 3\ngen x1^2\ngen x2^2*x3\ngen x3^2\n"
SQUARES = "index 1\ngen x1^2\n"
POWER = "index 2\ngen x1*x2^2\ngen x2^3\n"


@pytest.fixture
def mixed_file(tmp_path):
    p = tmp_path / "mixed.chain"
    p.write_text(MIXED)
    return str(p)


@pytest.fixture
def squares_file(tmp_path):
    p = tmp_path / "squares.chain"
    p.write_text(SQUARES)
    return str(p)


def test_invariants_json(mixed_file, capsys):
    rc = main(["invariants", mixed_file])
    out = capsys.readouterr().out
    assert rc == 0
    data = json.loads(out)
    assert data["lambda"] == 2
    assert data["w"] == 2
    assert data["q"] == 11
    assert data["quasi_saturated"] is False
    assert data["lambda_maximal"] is True
    assert data["char"] == 32003
    assert data["lambda_certificate"] == "reached_w"


def test_invariants_saturation_variant(mixed_file, capsys):
    rc = main(["invariants", mixed_file, "--saturation"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data["quasi_saturated"] is True and data["q"] == 7


def test_betti_csv(mixed_file, capsys):
    rc = main(["betti", mixed_file, "--n", "4"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert out[0] == "i,multidegree,value"
    assert "0,x1^2,1" in out
    assert "3,x1^2*x2^2*x3^2*x4^2,1" in out
    assert out[-1].startswith("# pd 3 reg 5")


def test_series_csv_with_fit(squares_file, capsys):
    rc = main(["series", squares_file, "--metric", "pd", "--from", "1", "--to", "6"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert out[0] == "n,value"
    assert out[1] == "1,0" and out[6] == "6,5"
    assert "# status linear" in out
    assert "# fit slope 1 intercept -1 onset 1" in out


def test_series_cap_exit_code(mixed_file, capsys):
    rc = main(
        ["series", mixed_file, "--metric", "pd", "--from", "3", "--to", "9",
         "--gen-cap", "5"]
    )
    out = capsys.readouterr().out.splitlines()
    assert rc == 3
    assert any(line.startswith("# truncated") for line in out)
    assert "3,2" in out  # partial values still printed


def test_series_deterministic(squares_file, capsys):
    main(["series", squares_file, "--metric", "reg", "--from", "1", "--to", "5"])
    a = capsys.readouterr().out
    main(["series", squares_file, "--metric", "reg", "--from", "1", "--to", "5"])
    b = capsys.readouterr().out
    assert a == b


def test_verify_all_pass(squares_file, capsys):
    rc = main(["verify", squares_file, "--e", "1", "--m", "2"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert len(out) == 5
    assert all(line.startswith("PASS") for line in out)


def test_verify_reports_na(mixed_file, capsys):
    rc = main(["verify", mixed_file, "--check", "pd", "--check", "reg"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0  # NA lines are not failures
    assert out[0].startswith("NA   pd_linearity")
    assert out[1].startswith("NA   reg_slope")


def test_verify_saturation_variant(mixed_file, capsys):
    rc = main(["verify", mixed_file, "--saturation"])
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert all(line.startswith("PASS") for line in out)


def test_explore_deterministic(capsys):
    argv = ["explore", "--count", "3", "--index", "2", "--gens", "2",
            "--max-exponent", "2", "--max-degree", "3", "--seed", "11",
            "--horizon", "5"]
    rc = main(argv)
    a = capsys.readouterr().out
    assert rc == 0
    main(argv)
    b = capsys.readouterr().out
    assert a == b
    lines = a.splitlines()
    assert lines[0] == "seed,r,gens,w,lambda,q,pd_slope,pd_onset,reg_slope,reg_onset,status"
    assert len(lines) == 4
    assert all(line.split(",")[-1] in ("ok", "undetermined", "partial") for line in lines[1:])


def test_bad_chain_file_exit(tmp_path, capsys):
    p = tmp_path / "bad.chain"
    p.write_text("index 2\ngen x1^^2\n")
    rc = main(["invariants", str(p)])
    err = capsys.readouterr().err
    assert rc == 1
    assert "line 2" in err and "col 8" in err


def test_missing_file_exit(tmp_path, capsys):
    rc = main(["invariants", str(tmp_path / "nope.chain")])
    assert rc == 1


def test_cap_exit_code(mixed_file, capsys):
    rc = main(["betti", mixed_file, "--n", "6", "--gen-cap", "3"])
    assert rc == 3


def test_usage_error_exit():
    with pytest.raises(SystemExit) as e:
        main(["bogus"])
    assert e.value.code == 2


def test_composite_char_rejected(squares_file, capsys):
    rc = main(["betti", squares_file, "--n", "2", "--char", "32004"])
    assert rc == 1
