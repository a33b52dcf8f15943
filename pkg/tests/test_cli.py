import io

import pytest

from etaq import (
    FrameShape,
    derive_constants,
    exact_coefficients,
    read_coefficient_cache,
)
from etaq.cli import build_convergence_report, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_satisfied(capsys):
    code, out, _ = run_cli(capsys, "check", "1^-2 11^-2")
    assert code == 0
    assert "hypotheses satisfied: yes" in out


def test_check_failing_shape(capsys):
    code, out, _ = run_cli(capsys, "check", "1^2")
    assert code == 2
    assert "positive: no" in out
    assert "hypotheses satisfied: no" in out


def test_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "check", "1^0")
    assert code == 4
    assert "nonzero" in err


def test_flag_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rademacher", "1^-1"])  # missing -n
    capsys.readouterr()
    assert exc.value.code == 4


def test_exact_listing(capsys, p_oracle):
    code, out, _ = run_cli(capsys, "exact", "1^-1", "--nmax", "10")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "# etaq 1^-1 n0=1/24"
    for n in range(11):
        assert lines[1 + n] == f"{n} {p_oracle[n]}"


def test_exact_cache_bit_for_bit(capsys, tmp_path):
    path = tmp_path / "coeffs.txt"
    code, _, _ = run_cli(capsys, "exact", "1^-3 4^1", "--nmax", "15", "--cache", str(path))
    assert code == 0
    shape, n0, coeffs = read_coefficient_cache(path)
    assert shape == FrameShape({1: -3, 4: 1})
    assert n0 == derive_constants(shape).n0
    assert coeffs == exact_coefficients(shape, 15)


def test_rademacher_adaptive(capsys):
    code, out, _ = run_cli(capsys, "rademacher", "1^-1", "-n", "20")
    assert code == 0
    assert out.strip() == "627"


def test_rademacher_fixed_N(capsys):
    code, out, _ = run_cli(capsys, "rademacher", "1^-1", "-n", "5", "--N", "80")
    assert code == 0
    assert out.startswith("d(5,80) = ")
    assert abs(float(out.split("=")[1]) - 7) < 1e-2


def test_rademacher_not_converged(capsys):
    code, _, err = run_cli(capsys, "rademacher", "1^-1", "-n", "5", "--Nmax", "1")
    assert code == 3
    assert "settle" in err


def test_rademacher_hypothesis_gate(capsys):
    code, _, err = run_cli(capsys, "rademacher", "1^2", "-n", "5")
    assert code == 2
    assert "--force" in err
    # boundary shape: forced evaluation still matches the oracle
    code, out, err = run_cli(
        capsys, "rademacher", "1^-1 2^1", "-n", "5", "--force"
    )
    assert code == 0
    assert "unguaranteed" in err
    assert int(out.strip()) == exact_coefficients(FrameShape({1: -1, 2: 1}), 5)[5]


def test_convergence_csv(capsys, tmp_path):
    path = tmp_path / "rows.csv"
    code, _, _ = run_cli(
        capsys,
        "convergence",
        "2^-1",
        "--nmax",
        "4",
        "--Nmax",
        "6",
        "--out",
        str(path),
    )
    assert code == 0
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "shape,n,N,partial_sum,exact,abs_error"
    assert len(lines) == 1 + 4 * 6
    exact = exact_coefficients(FrameShape({2: -1}), 4)
    for line in lines[1:]:
        shape_s, n, N, partial, exact_s, abs_err = line.split(",")
        assert shape_s == "2^-1"
        assert int(exact_s) == exact[int(n)]
        assert abs(abs(float(partial) - float(exact_s)) - float(abs_err)) < 1e-12


def test_convergence_grid_respects_offset():
    # offset 1 shape: rows start at n = 2
    report = build_convergence_report(FrameShape({1: -2, 11: -2}), 4, 3)
    ns = sorted({row[0] for row in report.rows})
    assert ns == [2, 3, 4]


def test_convergence_deterministic():
    shape = FrameShape({2: -1})
    a = io.StringIO()
    b = io.StringIO()
    build_convergence_report(shape, 3, 5).write_csv(a)
    build_convergence_report(shape, 3, 5).write_csv(b)
    assert a.getvalue() == b.getvalue()


def test_corrupted_cache_exit_code(capsys, tmp_path):
    path = tmp_path / "cache.txt"
    path.write_text("not a cache header\n")
    code, _, err = run_cli(capsys, "exact", "1^-1", "--nmax", "3", "--cache", str(path))
    assert code == 5
    assert "cache" in err


def test_io_error_exit_code(capsys, tmp_path):
    code, _, err = run_cli(
        capsys,
        "convergence",
        "2^-1",
        "--nmax",
        "2",
        "--Nmax",
        "2",
        "--out",
        str(tmp_path / "missing_dir" / "x.csv"),
    )
    assert code == 5
    assert "error" in err


def test_asympt_output(capsys):
    code, out, _ = run_cli(capsys, "asympt", "2^-1", "-n", "100")
    assert code == 0
    assert "leading k set: {1, 2}" in out
    assert "max c3(k)/k^2 = 1/2" in out
    code, out, _ = run_cli(capsys, "asympt", "2^-1", "-n", "99")
    assert code == 0
    assert "degenerate" in out
