import json

import pytest

from symtaut.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_normal_form(capsys):
    code, out, _ = run(capsys, "eval", "theta^2", "--genus", "2", "--degree", "3")
    assert code == 0
    assert "normal form: 2*x*theta - 2*x^2" in out
    assert "(coords: (-2, 2))" in out


def test_eval_top_number(capsys):
    code, out, _ = run(capsys, "eval", "x^4", "-g", "3", "-d", "4")
    assert code == 0
    assert "top intersection number: 1" in out
    code, out, _ = run(capsys, "eval", "theta^3*x", "-g", "3", "-d", "4")
    assert code == 0
    assert "top intersection number: 6" in out


def test_eval_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "eval", "theta^2/2 - x*theta + x^2", "-g", "3", "-d", "4",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["class"]["codim"] == 2
    assert data["normal_form"] == ["1", "-1", "1/2"]
    from symtaut.ring import from_json_dict, to_json_dict

    assert to_json_dict(from_json_dict(data["class"])) == data["class"]


def test_eval_parse_error(capsys):
    code, _, err = run(capsys, "eval", "zeta^2", "-g", "2", "-d", "3")
    assert code == 2
    assert "error" in err


def test_class_families(capsys):
    code, out, _ = run(capsys, "class", "cdr", "-g", "3", "-d", "3", "--rank", "1")
    assert code == 0
    assert "theta - x" in out and "contractibility index: 1" in out

    code, out, _ = run(capsys, "class", "upsilon", "-g", "3", "-d", "4", "--index", "1")
    assert code == 0
    assert "x*theta - x^2" in out

    code, out, _ = run(capsys, "class", "eta", "-g", "1", "-d", "2")
    assert code == 0
    assert "2*x" in out and "theta" in out


def test_class_hyperelliptic_kind_required(capsys):
    code, _, err = run(
        capsys, "class", "cdr-hyper", "-g", "3", "-d", "4", "--rank", "2"
    )
    assert code == 2
    code, out, _ = run(
        capsys, "class", "cdr-hyper", "-g", "3", "-d", "4", "--rank", "2",
        "--curve", "hyperelliptic",
    )
    assert code == 0
    assert "1/2*theta^2 - x*theta + x^2" in out


def test_class_missing_option(capsys):
    code, _, err = run(capsys, "class", "cdr", "-g", "3", "-d", "3")
    assert code == 2
    assert "--rank" in err


def test_chain_pass(capsys):
    code, out, _ = run(capsys, "chain", "-g", "3", "-d", "4", "--dim", "2")
    assert code == 0
    assert out.count("PASS") == 2 and "FAIL" not in out


def test_chain_json(capsys):
    code, out, _ = run(
        capsys, "chain", "-g", "4", "-d", "5", "--dim", "3",
        "--curve", "hyperelliptic", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["primary_regime"] == "hyperelliptic-bn"
    assert [face["dim"] for face in data["faces"]] == [1, 2]
    assert data["all_certificates_pass"] is True
    assert data["faces"][0]["certificate"]["perfect"] is True


def test_chain_bounds_only(capsys):
    code, out, _ = run(capsys, "chain", "-g", "5", "-d", "5", "--dim", "2")
    assert code == 0
    assert "bounds" in out and " 1      0      2" in out


def test_chain_genus_one(capsys):
    code, out, _ = run(capsys, "chain", "-g", "1", "-d", "5", "--dim", "2")
    assert code == 0
    assert out.count("PASS") == 1


def test_region_text_deterministic(capsys):
    code, first, _ = run(capsys, "region", "-g", "10", "-d", "12")
    assert code == 0
    code, second, _ = run(capsys, "region", "-g", "10", "-d", "12")
    assert first == second
    assert "R" in first and "legend" in first


def test_region_json(capsys):
    code, out, _ = run(capsys, "region", "-g", "3", "-d", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["g"] == 3 and len(data["cells"]) == 36
    lookup = {(c["n"], c["m"]): c for c in data["cells"]}
    assert lookup[(2, 1)]["bn_dim_g_minus_1"] is True


def test_region_svg_deterministic(tmp_path, capsys):
    out_a = tmp_path / "a.svg"
    out_b = tmp_path / "b.svg"
    assert main(["region", "-g", "6", "-d", "8", "--format", "svg", "--out", str(out_a)]) == 0
    assert main(["region", "-g", "6", "-d", "8", "--format", "svg", "--out", str(out_b)]) == 0
    capsys.readouterr()
    assert out_a.read_bytes() == out_b.read_bytes()
    assert out_a.read_bytes().lstrip().startswith(b"<?xml")
    # the delimited cell table is written next to the figure
    csv = (tmp_path / "a.csv").read_text()
    assert csv.splitlines()[0].startswith("n,m,d,")
    assert len(csv.splitlines()) == 1 + 81


def test_gonality_file(tmp_path, capsys):
    path = tmp_path / "gon.json"
    path.write_text(json.dumps({"1": 3}))
    code, out, _ = run(
        capsys, "chain", "-g", "5", "-d", "4", "--dim", "1",
        "--curve", "custom", "--gonality-file", str(path),
    )
    assert code == 0
    assert "subordinate" in out

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"1": 1}))
    code, _, err = run(
        capsys, "chain", "-g", "5", "-d", "4", "--dim", "1",
        "--curve", "custom", "--gonality-file", str(bad),
    )
    assert code == 2


def test_verify_scope(capsys):
    code, out, _ = run(capsys, "verify", "ring", "--max-genus", "3", "--max-degree", "6")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "classes", "--max-genus", "3", "--max-degree", "6")
    assert code == 0
    assert out.count("PASS") == 4


def test_argparse_exit_code():
    with pytest.raises(SystemExit) as excinfo:
        main(["chain", "--genus", "3"])
    assert excinfo.value.code == 2
