"""Command-line behaviour: outputs, exit codes, file round trips."""

import math

import pytest

from polyacert import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", "150", "1/5")
    assert code == 0
    assert "III" in out and "COMP" in out


def test_classify_axis_point(capsys):
    code, out, _ = run(capsys, "classify", "400", "1/10")
    assert code == 0
    assert "NONE" not in out  # region III reaches it


def test_classify_bad_point_is_usage_error(capsys):
    code, _, err = run(capsys, "classify", "2", "3")
    assert code == cli.EXIT_USAGE
    assert "error" in err


def test_count_command(capsys):
    code, out, _ = run(capsys, "count", "--r", "1/2", "--lambda", "20")
    assert code == 0
    n = int(next(l for l in out.splitlines() if l.startswith("N_r")).split("=")[1])
    assert n < 75  # (1 - 1/4) * 400 / 4
    assert "OK" in out


def test_count_rejects_bad_lambda(capsys):
    code, _, _ = run(capsys, "count", "--r", "1/2", "--lambda", "0")
    assert code == cli.EXIT_USAGE


def test_bounds_command(capsys):
    code, out, _ = run(capsys, "bounds", "--lambda", "40", "--mu", "25", "--z", "10")
    assert code == 0
    for line in out.splitlines()[1:]:
        parts = dict(tok.split("=") for tok in line.split() if "=" in tok)
        assert float(parts["lower"]) <= float(parts["float"]) <= float(parts["upper"])


def test_certify_verify_cycle(tmp_path, capsys):
    cert_path = tmp_path / "cert.txt"
    code, out, _ = run(capsys, "certify", "--lambda-start", "12",
                       "--out", str(cert_path))
    assert code == 0
    assert "columns=" in out and "status=complete" in out
    code, out, _ = run(capsys, "verify", str(cert_path))
    assert code == 0
    assert "verdict: pass" in out


def test_certify_resume(tmp_path, capsys):
    # a resumed complete certificate is a no-op that still verifies
    cert_path = tmp_path / "cert.txt"
    run(capsys, "certify", "--lambda-start", "10", "--out", str(cert_path))
    code, out, _ = run(capsys, "certify", "--resume", str(cert_path),
                       "--out", str(cert_path))
    assert code == 0 and "status=complete" in out


def test_verify_rejects_tampered_file(tmp_path, capsys):
    cert_path = tmp_path / "cert.txt"
    run(capsys, "certify", "--lambda-start", "10", "--out", str(cert_path))
    text = cert_path.read_text()
    lines = text.splitlines()
    idx, line = next((i, l) for i, l in enumerate(lines)
                     if l.startswith("rect") and " p=" in l and "p=0 " not in l)
    tokens = line.split()
    p_i = next(i for i, t in enumerate(tokens) if t.startswith("p="))
    tokens[p_i] = f"p={int(tokens[p_i][2:]) - 1}"
    lines[idx] = " ".join(tokens)
    cert_path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", str(cert_path))
    assert code == cli.EXIT_FAIL
    assert "verdict: fail" in out


def test_theorems_command(capsys):
    code, out, _ = run(capsys, "theorems", "--instances", "150", "--seed", "5")
    assert code == 0
    assert out.count("PASS") == 5 and "FAIL" not in out


def test_coverage_command(capsys):
    code, out, _ = run(capsys, "coverage", "--lambda-max", "40")
    assert code == 0
    assert "verdict: pass" in out


def test_plotdata_bounds_gfh(capsys):
    code, out, _ = run(capsys, "plotdata", "--figure", "bounds-GFH",
                       "--lambda", "40", "--mu", "25", "--steps", "40")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "z,phi_plus_h,g_plus_quarter,gamma,g_minus_f"
    for row in rows[1:]:
        z, phih, gq, gam, gmf = (float(v) for v in row.split(","))
        # pointwise min relation below mu; plain G + 1/4 above
        if not math.isnan(phih):
            assert abs(gmf - min(phih, gq)) < 1e-9
        else:
            assert abs(gmf - gq) < 1e-9
        assert gam <= gmf + 1e-9


def test_plotdata_region_grid(capsys):
    code, out, _ = run(capsys, "plotdata", "--figure", "region-grid",
                       "--steps", "50")
    assert code == 0
    assert out.splitlines()[0].startswith("r,eta_I")
    assert len(out.strip().splitlines()) == 50


def test_plotdata_strip_trace(tmp_path, capsys):
    cert_path = tmp_path / "cert.txt"
    run(capsys, "certify", "--lambda-start", "10", "--out", str(cert_path))
    code, out, _ = run(capsys, "plotdata", "--figure", "strip-trace",
                       "--certificate", str(cert_path))
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "lambda_hi,width,rectangles"
    widths = [float(r.split(",")[1]) for r in rows[1:]]
    assert all(w > 0 for w in widths)


def test_plotdata_strip_trace_needs_certificate(capsys):
    code, _, err = run(capsys, "plotdata", "--figure", "strip-trace")
    assert code == cli.EXIT_USAGE


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "--r", "not-a-number", "--lambda", "5"])
    assert exc.value.code == cli.EXIT_USAGE
