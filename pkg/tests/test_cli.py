import json

from cpl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_horton_then_check(tmp_path, capsys):
    out = tmp_path / "h5.pts"
    code, stdout, _ = run(capsys, "generate", "horton", "5", str(out))
    assert code == 0
    assert "32 points" in stdout
    code, stdout, _ = run(capsys, "check", str(out))
    assert code == 0
    assert "ok" in stdout


def test_generate_random_deterministic_bytes(tmp_path, capsys):
    a = tmp_path / "a.pts"
    b = tmp_path / "b.pts"
    assert run(capsys, "generate", "random", "10", str(a), "--seed", "1")[0] == 0
    assert run(capsys, "generate", "random", "10", str(b), "--seed", "1")[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_search_exit_codes_and_report(tmp_path, capsys):
    pts = tmp_path / "h5.pts"
    run(capsys, "generate", "horton", "5", str(pts))
    code, stdout, stderr = run(capsys, "search", str(pts), "ngon", "7", "--max-interior", "0")
    assert code == 1
    report = json.loads(stdout)
    assert report["outcome"] == "not-found"
    assert report["witness"] is None
    assert report["input_digest"].startswith("sha256:")
    assert "not-found" in stderr

    code, stdout, _ = run(capsys, "search", str(pts), "ngon", "3", "--max-interior", "0")
    assert code == 0
    report = json.loads(stdout)
    assert report["outcome"] == "found"
    assert len(report["witness"]["vertices"]) == 3
    assert report["witness"]["interior_count"] == 0


def test_search_reports_are_reproducible(tmp_path, capsys):
    pts = tmp_path / "r.pts"
    run(capsys, "generate", "random", "9", str(pts), "--seed", "3")
    code1, out1, _ = run(capsys, "search", str(pts), "ngon", "5", "--max-interior", "1")
    code2, out2, _ = run(capsys, "search", str(pts), "ngon", "5", "--max-interior", "1")
    assert code1 == code2
    r1, r2 = json.loads(out1), json.loads(out2)
    for volatile in ("elapsed_s",):
        r1["statistics"].pop(volatile)
        r2["statistics"].pop(volatile)
    assert r1 == r2


def test_search_mono_quad_colored(tmp_path, capsys):
    f = tmp_path / "c.pts"
    f.write_text("0 0 1\n10 0 1\n10 10 1\n0 9 1\n42 19 0\n41 14 0\n41 17 0\n47 17 0\n")
    code, stdout, _ = run(capsys, "search", str(f), "mono-quad")
    assert code == 0
    report = json.loads(stdout)
    assert report["color"] in (0, 1)
    assert report["witness"]["kind"] == "polygon"


def test_search_mono_quad_rejects_uncolored(tmp_path, capsys):
    f = tmp_path / "p.pts"
    f.write_text("0 0\n1 0\n0 1\n2 2\n")
    code, _, stderr = run(capsys, "search", str(f), "mono-quad")
    assert code == 3
    assert "colored" in stderr


def test_search_cup_with_shear(tmp_path, capsys):
    f = tmp_path / "v.pts"
    f.write_text("0 0\n0 5\n3 2\n7 9\n")
    code, _, stderr = run(capsys, "search", str(f), "cup", "3")
    assert code == 3  # duplicate x without --shear
    code, stdout, _ = run(capsys, "search", str(f), "cup", "3", "--shear")
    assert code in (0, 1)
    assert json.loads(stdout)["query"].startswith("cup")


def test_validation_error_exit_code(tmp_path, capsys):
    f = tmp_path / "bad.pts"
    f.write_text("0 0\n1 1\nx 2\n")
    code, _, stderr = run(capsys, "check", str(f))
    assert code == 3
    assert "line 3" in stderr


def test_missing_file_is_validation_error(capsys):
    code, _, stderr = run(capsys, "search", "nope.pts", "max-convex")
    assert code == 3


def test_bounds_g(capsys):
    code, stdout, _ = run(capsys, "bounds", "g", "7")
    assert code == 0
    assert "lower 33, upper 127" in stdout


def test_bounds_modq(capsys):
    code, stdout, _ = run(capsys, "bounds", "modq", "5", "2")
    assert code == 0
    assert "36" in stdout
    assert "R_3" in stdout  # symbolic display, never evaluated

    code, stdout, _ = run(capsys, "bounds", "modq", "3", "4")
    assert code == 0
    assert "inapplicable" in stdout


def test_bounds_table_tsv(capsys):
    code, stdout, _ = run(capsys, "bounds", "table", "2", "--tsv")
    assert code == 0
    assert stdout.splitlines()[1].split("\t")[-1] == "705419"


def test_hunt_writes_verified_witness(tmp_path, capsys):
    out = tmp_path / "w.pts"
    code, stdout, _ = run(capsys, "hunt", "8", "--forbid", "ngon5",
                          "--seed", "0", "--out", str(out))
    assert code == 0
    report = json.loads(stdout)
    assert report["outcome"] == "found"
    assert report["exhaustively_verified"] is True
    assert out.exists()
    code, _, _ = run(capsys, "check", str(out))
    assert code == 0


def test_hunt_immediate_small(tmp_path, capsys):
    out = tmp_path / "t.pts"
    code, stdout, _ = run(capsys, "hunt", "3", "--forbid", "ngon4",
                          "--seed", "1", "--out", str(out))
    assert code == 0
    assert json.loads(stdout)["statistics"]["iterations"] == 0


def test_hunt_bad_forbid_is_usage_error(capsys):
    code, _, stderr = run(capsys, "hunt", "8", "--forbid", "pentagon")
    assert code == 2


def test_hunt_budget_exhaustion_exit_code(tmp_path, capsys):
    code, stdout, _ = run(capsys, "hunt", "12", "--forbid", "empty-ngon4",
                          "--budget", "1", "--seed", "0")
    assert code == 1
    assert json.loads(stdout)["outcome"] == "budget-exhausted"


def test_search_ngon_mod_flags(tmp_path, capsys):
    f = tmp_path / "m.pts"
    f.write_text("0 0\n12 1\n11 12\n1 11\n4 10\n")
    code, stdout, _ = run(capsys, "search", str(f), "ngon", "4", "--mod", "2")
    assert code == 0
    assert json.loads(stdout)["witness"]["interior_count"] == 0
    code, _, _ = run(capsys, "search", str(f), "ngon", "4", "--mod", "2", "--nonempty")
    assert code == 1


def test_bounds_nonexist_and_survival(capsys):
    code, stdout, _ = run(capsys, "bounds", "nonexist", "12")
    assert code == 0
    assert "best known: 11" in stdout
    code, stdout, _ = run(capsys, "bounds", "survival", "10")
    assert code == 0
    assert stdout.strip() == "30"
    code, stdout, _ = run(capsys, "bounds", "f", "4", "4")
    assert stdout.strip() == "7"


def test_render_deterministic_bytes(tmp_path, capsys):
    pts = tmp_path / "r.pts"
    run(capsys, "generate", "random", "8", str(pts), "--seed", "5")
    _, rep, _ = run(capsys, "search", str(pts), "max-convex")
    wfile = tmp_path / "w.json"
    wfile.write_text(rep)
    f1, f2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(capsys, "render", str(pts), str(f1), "--witness", str(wfile))[0] == 0
    assert run(capsys, "render", str(pts), str(f2), "--witness", str(wfile))[0] == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_render_colored(tmp_path, capsys):
    f = tmp_path / "c.pts"
    f.write_text("0 0 0\n5 1 1\n3 7 0\n9 9 1\n")
    out = tmp_path / "c.svg"
    assert run(capsys, "render", str(f), str(out))[0] == 0
    assert out.stat().st_size > 0


def test_render_five_points_with_quadrilateral_witness(tmp_path, capsys):
    # five points always contain a convex quadrilateral; render it highlighted
    f = tmp_path / "five.pts"
    f.write_text("0 0\n10 1\n9 12\n1 9\n5 4\n")
    code, rep, _ = run(capsys, "search", str(f), "ngon", "4")
    assert code == 0
    wfile = tmp_path / "w.json"
    wfile.write_text(rep)
    out = tmp_path / "five.svg"
    assert run(capsys, "render", str(f), str(out), "--witness", str(wfile))[0] == 0
    assert b"<svg" in out.read_bytes()[:200]


def test_cpl_threads_env_validated(tmp_path, capsys, monkeypatch):
    pts = tmp_path / "p.pts"
    run(capsys, "generate", "random", "6", str(pts), "--seed", "2")
    monkeypatch.setenv("CPL_THREADS", "4")
    code, stdout, _ = run(capsys, "search", str(pts), "max-convex")
    assert code == 0
    assert json.loads(stdout)["statistics"]["threads"] == 1  # sequential build
    monkeypatch.setenv("CPL_THREADS", "zero")
    code, _, _ = run(capsys, "search", str(pts), "max-convex")
    assert code == 2
