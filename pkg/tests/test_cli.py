import json
from pathlib import Path

import pytest

from linemod.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_certify_line_pass(capsys):
    code, out = run_cli(
        capsys, "certify-line", "--algebra", "sl11_Hhat",
        "--gen", "h - t", "--gen", "e + f", "--max-degree", "6",
    )
    assert code == 0
    report = json.loads(out)
    assert report["results"]["dims"] == [1, 2, 3, 4, 5, 6, 7]
    assert report["pass"] is True


def test_certify_line_failure_exit_code(capsys):
    code, out = run_cli(
        capsys, "certify-line", "--algebra", "sl11_Hhat",
        "--gen", "e", "--gen", "f", "--max-degree", "4",
    )
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_classify_line(capsys):
    code, out = run_cli(
        capsys, "classify-line", "--preset", "slc",
        "--line", "a1 + a2, a3 - 5*a4",
    )
    assert code == 0
    assert json.loads(out)["results"]["families"] == ["1(a)"]


def test_classify_line_none(capsys):
    code, out = run_cli(
        capsys, "classify-line", "--preset", "slc", "--line", "a1, a2",
    )
    assert code == 0
    assert json.loads(out)["results"]["families"] == ["none"]


def test_nf_zero_divisor(capsys):
    code, out = run_cli(
        capsys, "nf", "--algebra", "sl21_Hhat",
        "--expr", "y1*y1*t", "--max-degree", "5",
    )
    assert code == 0
    report = json.loads(out)
    assert report["results"]["is_zero"] is True


def test_trace_reports_steps(capsys):
    code, out = run_cli(
        capsys, "trace", "--algebra", "sl11_Hhat", "--expr", "e*f",
    )
    assert code == 0
    steps = json.loads(out)["results"]["steps"]
    assert len(steps) == 1
    assert steps[0]["rule"] == "e*f"


def test_hilbert_routes(capsys):
    code, out = run_cli(
        capsys, "hilbert", "--algebra", "sl11_Hhat",
        "--max-degree", "6", "--oracle-degree", "3",
    )
    assert code == 0
    report = json.loads(out)
    assert report["results"]["routes_agree"] is True
    assert report["results"]["oracle_route"] == [1, 4, 10, 20]


def test_admissible(capsys):
    code, out = run_cli(
        capsys, "admissible", "--preset", "sl11",
        "--sub", "h, e + f", "--phi", "4, 2",
    )
    assert code == 0
    report = json.loads(out)
    assert report["results"]["admissible"] is True
    code, out = run_cli(
        capsys, "admissible", "--preset", "sl11",
        "--sub", "h, e + f", "--phi", "1, 0",
    )
    assert code == 0
    assert json.loads(out)["results"]["admissible"] is False


def test_induce(capsys):
    code, out = run_cli(
        capsys, "induce", "--preset", "slc",
        "--sub", "a3, a1 + a2", "--phi", "1/2, 7", "--max-degree", "4",
    )
    assert code == 0
    assert json.loads(out)["results"]["filtration_dims"] == [1, 2, 3, 4, 5]


def test_induce_inadmissible_is_usage_error(capsys):
    code, _ = run_cli(
        capsys, "induce", "--preset", "sl11",
        "--sub", "h, e + f", "--phi", "1, 0",
    )
    assert code == 2


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("algebra a { generators x; relations { x* ; } }")
    code, _ = run_cli(capsys, "nf", "--algebra", str(bad), "--expr", "x")
    assert code == 2


def test_unknown_preset_exit_code(capsys):
    code, _ = run_cli(capsys, "nf", "--algebra", "nope", "--expr", "x")
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["classify-sub", "--preset", "bogus"])
    assert exc.value.code == 2


def test_byte_identical_reports(capsys):
    argv = ["classify-sub", "--preset", "slc", "--samples", "200", "--seed", "7"]
    _, first = run_cli(capsys, *argv)
    _, second = run_cli(capsys, *argv)
    assert first == second
    changed_seed = ["classify-sub", "--preset", "slc", "--samples", "200", "--seed", "8"]
    _, third = run_cli(capsys, *changed_seed)
    assert json.loads(third)["seed"] == 8


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out = run_cli(
        capsys, "nf", "--algebra", "sl11_Hhat", "--expr", "t",
        "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["results"]["normal_form"] == "t"


def test_emit_presets_round_trip(tmp_path, capsys):
    code, out = run_cli(capsys, "emit-presets", "--dir", str(tmp_path))
    assert code == 0
    written = json.loads(out)["results"]["written"]
    assert len(written) == 9
    from linemod.dsl import parse_algebra
    from linemod.presets import preset

    for path in written:
        text = Path(path).read_text()
        parsed = parse_algebra(text)
        assert parsed == preset(parsed.name)


def test_verify_paper_sl21(capsys):
    code, out = run_cli(capsys, "verify-paper", "--suite", "sl21", "--samples", "50")
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    checks = {c["name"]: c for c in report["results"]["checks"]}
    trace = checks["zero_divisor_certificate"]["derivation_trace"]
    assert len(trace) >= 1
    assert checks["zero_divisor_certificate"]["normal_form_of_y1_y1_t_is_zero"] is True


def test_golden_classify_line(capsys):
    _, out = run_cli(
        capsys, "classify-line", "--preset", "slc",
        "--line", "a1 + a2, a3 - 5*a4",
    )
    golden = Path(__file__).parent / "data" / "golden_classify_line.json"
    assert out == golden.read_text()


def test_order_override(capsys):
    code, out = run_cli(
        capsys, "nf", "--algebra", "sl11_Hhat", "--expr", "e*f",
        "--order", "t,h,f,e",
    )
    assert code == 0
    report = json.loads(out)
    assert report["results"]["normal_form"] == "e*f"
    code, _ = run_cli(
        capsys, "nf", "--algebra", "sl11_Hhat", "--expr", "e*f",
        "--order", "t,h,e",
    )
    assert code == 2
