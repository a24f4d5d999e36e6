import json

import pytest

from laguerrecert.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_reducible_row(capsys):
    code, out, _ = run(capsys, "construct", "-m", "2", "-u", "1", "-v", "1",
                       "--am", "3", "--a", "1", "--a0=-4", "--phi", "x^2-x+17")
    assert code == 4
    assert "b: 6, 6, 3" in out
    assert "3/2x^4 - 3x^3 + 111/2x^2 - 54x + 945/2" in out
    assert "divisible by 2" in out


def test_construct_valid_instance(capsys):
    code, out, _ = run(capsys, "construct", "-m", "3", "-u", "0",
                       "--am", "1", "--phi", "x^2-x+17")
    assert code == 0
    assert "hypotheses: all satisfied" in out


def test_construct_json_is_deterministic(capsys):
    args = ("construct", "-m", "3", "-u", "0", "--am", "1",
            "--phi", "x^2-x+17", "--json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2
    data = json.loads(out1)
    assert data["hypotheses_ok"] is True


def test_construct_rejects_negative_integer_parameter(capsys):
    code, _, err = run(capsys, "construct", "-m", "2", "-u", "-1", "-v", "1",
                       "--am", "1", "--phi", "x^2-x+17")
    assert code == 4
    assert "negative integer" in err


def test_missing_phi_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "-m", "2", "-u", "1", "--am", "3"])
    assert exc.value.code == 4


def test_polygon_command(capsys):
    code, out, _ = run(capsys, "polygon", "--f", "x^2+8x+12", "--phi", "x",
                       "-p", "2")
    assert code == 0
    assert "slopes: 1/1" in out


def test_polygon_json(capsys):
    code, out, _ = run(capsys, "polygon", "--f", "x^2+8x+12", "--phi", "x",
                       "-p", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data == {"vertices": [[0, 0], [2, 2]], "slopes": ["1/1"]}


def test_construct_single_level_square(capsys):
    code, out, _ = run(capsys, "construct", "-m", "1", "-u", "0", "--am", "1",
                       "--a0", "x - 17", "--phi", "x^2-x+17")
    assert code == 0
    assert "f: x^2" in out and "hypotheses: all satisfied" in out


def test_polygon_rejects_composite_p(capsys):
    code, _, err = run(capsys, "polygon", "--f", "x^2+1", "--phi", "x", "-p", "4")
    assert code == 4 and "not prime" in err


def test_polygon_rejects_divisible_input(capsys):
    code, _, err = run(capsys, "polygon", "--f", "x^3", "--phi", "x", "-p", "2")
    assert code == 4 and "divisible" in err


def test_certify_roundtrip(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    code, out, _ = run(capsys, "certify", "-m", "5", "-u", "2", "--am", "1",
                       "--phi", "x^2-x+17", "--out", str(cert))
    assert code == 0
    assert "irreducible-over-Q" in out
    data = json.loads(cert.read_text())
    assert data["small_degree_prime"] == 7

    code, out, _ = run(capsys, "certify", "-m", "5", "-u", "2", "--am", "1",
                       "--phi", "x^2-x+17", "--verify", str(cert))
    assert code == 0 and "verifies" in out


def test_certify_respects_env_home(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("LAGUERRE_CERT_HOME", str(tmp_path))
    code, out, _ = run(capsys, "certify", "-m", "3", "-u", "1", "--am", "1",
                       "--phi", "x^2-x+17")
    assert code == 0
    assert (tmp_path / "certificate-m3-u1-v1.json").exists()
    # an explicit flag beats the environment
    target = tmp_path / "explicit.json"
    code, _, _ = run(capsys, "certify", "-m", "3", "-u", "1", "--am", "1",
                     "--phi", "x^2-x+17", "--out", str(target))
    assert code == 0 and target.exists()


def test_certify_tamper_detected(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    run(capsys, "certify", "-m", "5", "-u", "2", "--am", "1",
        "--phi", "x^2-x+17", "--out", str(cert))
    data = json.loads(cert.read_text())
    data["witnesses"][0]["p"] = 13
    cert.write_text(json.dumps(data))
    code, out, _ = run(capsys, "certify", "-m", "5", "-u", "2", "--am", "1",
                       "--phi", "x^2-x+17", "--verify", str(cert))
    assert code == 2 and "REJECTED" in out


def test_certify_uncovered_pair(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("LAGUERRE_CERT_HOME", str(tmp_path))
    code, out, _ = run(capsys, "certify", "-m", "2", "-u", "2", "--am", "1",
                       "--phi", "x^2-x+17")
    assert code == 2
    assert "k=1: no witness prime found" in out


def test_tables_subset(capsys):
    code, out, _ = run(capsys, "tables", "--only", "s1", "--st-bound", "1000")
    assert code == 0 and "ALL PASS" in out
    code, out, _ = run(capsys, "tables", "--only", "s3", "--st-bound", "1000")
    assert code == 0 and "9 pairs" in out
    code, out, _ = run(capsys, "tables", "--only", "root3")
    assert code == 0 and "ALL PASS" in out
    code, out, _ = run(capsys, "tables", "--only", "equations",
                       "--exp-bound", "40")
    assert code == 0


def test_tables_full_default_run(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0
    assert "ALL PASS" in out
    assert "erratum" in out  # the corrected witness row is reported


def test_oracle_exit_codes(capsys):
    code, out, _ = run(capsys, "oracle", "--f", "x^2-x+17")
    assert code == 0 and "irreducible" in out
    code, out, _ = run(capsys, "oracle", "--f", "x^2-1")
    assert code == 3 and "witness" in out
    code, out, _ = run(capsys, "oracle", "--f", "x^2-x+17", "--prime-budget", "0")
    assert code == 2 and "low confidence" in out


def test_oracle_instance_mode(capsys):
    code, out, _ = run(capsys, "oracle", "-m", "2", "-u", "2", "--am", "1",
                       "--a", "1", "--a0", "1", "--phi", "x^2-x+17")
    assert code == 3
    assert "x^2 - x + 19" in out and "x^2 - x + 23" in out
    code, _, err = run(capsys, "oracle", "-m", "2", "-u", "2", "--am", "1")
    assert code == 4 and "instance parameters" in err


def test_oracle_json_record(capsys):
    code, out, _ = run(capsys, "oracle", "--f", "x^4-2x^3+43x^2-42x+437",
                       "--json")
    assert code == 3
    data = json.loads(out)
    assert data["verdict"] == "reducible"
    assert data["witness"]["g"] == "x^2 - x + 19"
    assert data["possible_degrees"] == [0, 2, 4]


def test_witness_search_exit_codes(capsys):
    code, out, _ = run(capsys, "witness-search", "-m", "2", "-u", "2",
                       "--phi", "x^2-x+17", "--bound", "1")
    assert code == 3 and "=" in out
    code, out, _ = run(capsys, "witness-search", "-m", "3", "-u", "0",
                       "--phi", "x^2-x+17", "--bound", "1")
    assert code == 0 and "none-found" in out


def test_witness_search_json(capsys):
    code, out, _ = run(capsys, "witness-search", "-m", "2", "-u", "2",
                       "--phi", "x^2-x+17", "--bound", "1", "--json")
    assert code == 3
    data = json.loads(out)
    assert data["found"] is True and "g" in data
