import json

import pytest

from hopfforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(scope="module")
def taft_files(tmp_path_factory):
    d = tmp_path_factory.mktemp("taft")
    h, dd, q = str(d / "t.json"), str(d / "d.json"), str(d / "q.json")
    assert main(["build", "taft", "--l", "3", "--n", "1", "-o", h]) == 0
    assert main(["double", h, "-o", dd]) == 0
    assert main(["quotient", h, "--order", "3", "-o", q]) == 0
    return h, dd, q


def test_build_files_round_trip(taft_files):
    from hopfforge.persist import load_file
    h, dd, q = taft_files
    assert load_file(h)["H"].dim == 9
    f = load_file(dd)
    assert f["D"].dim == 81 and f["R"] == f["D"].R()
    assert load_file(q)["Q"].dim == 27


@pytest.mark.parametrize("prop,which,code", [
    ("hopf", 0, 0), ("star", 0, 1), ("quasi", 1, 0), ("factorizable", 1, 0),
    ("ribbon", 1, 0), ("hopf", 2, 0), ("quasi", 2, 0), ("factorizable", 2, 0), ("ribbon", 2, 0),
])
def test_check_commands(capsys, taft_files, prop, which, code):
    got, out, _ = run(capsys, "check", prop, taft_files[which])
    assert got == code, out


def test_check_quasi_needs_R(capsys, taft_files):
    assert run(capsys, "check", "quasi", taft_files[0])[0] == 2


def test_json_report(capsys, taft_files, tmp_path):
    out = tmp_path / "r.json"
    assert run(capsys, "check", "factorizable", taft_files[2], "--json", str(out))[0] == 0
    rep = json.loads(out.read_text())
    assert rep["ok"] and rep["report"]["checked"]["rank f"] == 27


def test_tampered_file_fails(capsys, taft_files, tmp_path):
    obj = json.loads(open(taft_files[0]).read())
    obj["hopf"]["mult"][5][3]["coeffs"][0][0] += 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    assert run(capsys, "check", "hopf", str(bad))[0] == 1


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "build", "taft", "--l", "3", "--n", "0", "-o", str(tmp_path / "x"))[0] == 2
    assert run(capsys, "check", "hopf", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "pipeline", "apq", "--p", "13", "--q", "3", "--t", "3")[0] == 2
    assert run(capsys, "pipeline", "taft", "--l", "3", "--n", "3")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["fusion", "closed", "--p", "7"])
    assert e.value.code == 2


def test_build_ext_and_al(capsys, tmp_path):
    from hopfforge.constructors import script_A_l_data
    from hopfforge.groups import matched_pair_to_json
    spec = tmp_path / "mp.json"
    spec.write_text(json.dumps(matched_pair_to_json(script_A_l_data(7, 3, 2, 1))))
    ext, al = str(tmp_path / "ext.json"), str(tmp_path / "al.json")
    assert run(capsys, "build", "ext", "--spec", str(spec), "-o", ext)[0] == 0
    assert run(capsys, "build", "al", "--p", "7", "--q", "3", "--t", "2", "--l", "1", "-o", al)[0] == 0
    assert run(capsys, "check", "star", al)[0] == 0
    from hopfforge.persist import load_file
    a, b = load_file(ext)["H"], load_file(al)["H"]
    assert a.structurally_equal(b)
    bad = tmp_path / "bad_mp.json"
    obj = json.loads(spec.read_text())
    obj["left"][3][1] = 0
    bad.write_text(json.dumps(obj))
    assert run(capsys, "build", "ext", "--spec", str(bad), "-o", str(tmp_path / "y"))[0] == 2


def test_pipeline_taft(capsys, tmp_path):
    cert_path = tmp_path / "c.json"
    code, out, _ = run(capsys, "pipeline", "taft", "--l", "3", "--n", "1", "--json", str(cert_path))
    assert code == 0
    assert "dims H/D/quotient: 9/81/27" in out
    assert "factorizable: true" in out and "ribbon: found" in out
    cert = json.loads(cert_path.read_text())
    assert cert["seed"] == 1 and cert["ok"]


def test_fusion_closed(capsys, tmp_path):
    out = tmp_path / "f.json"
    figs = tmp_path / "figs"
    code, text, _ = run(capsys, "fusion", "closed", "--p", "7", "--q", "3", "--t", "2",
                        "--beta", "3", "-o", str(out), "--figures", str(figs))
    assert code == 0 and "rank 75" in text
    assert sorted(p.name for p in figs.iterdir()) == ["fusion_matrix.png", "fusion_summands.png"]
    assert len(json.loads(out.read_text())["labels"]) == 75


@pytest.mark.slow
def test_apq_commands(capsys, tmp_path):
    cert = tmp_path / "apq.json"
    code, out, _ = run(capsys, "pipeline", "apq", "--p", "7", "--q", "3", "--t", "2",
                       "--json", str(cert))
    assert code == 0
    assert "dims H/D/quotient: 63/3969/1323" in out
    assert "star: ok" in out and "factorizable: true" in out
    figs = tmp_path / "figs"
    code, out, _ = run(capsys, "fusion", "verify", "--alg", str(cert), "--samples", "3",
                       "--seed", "1", "--method", "intertwiner")
    assert code == 0 and "mismatches: 0" in out
    code, out, _ = run(capsys, "modular", "--alg", str(cert), "--samples", "2", "--seed", "1",
                       "--figures", str(figs))
    assert code == 0, out
    assert {"s_matrix.png", "twists.png"} <= {p.name for p in figs.iterdir()}
