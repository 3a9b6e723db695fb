import subprocess
import sys

import pytest

from biloc import formats
from biloc.cli import main, render_sublocale
from biloc.fixtures import b4_sym, c3_sym, pt


@pytest.fixture
def pt_file(tmp_path):
    path = tmp_path / "PT.biloc"
    path.write_text(formats.bilocale_to_text(pt()))
    return str(path)


@pytest.fixture
def b4_file(tmp_path):
    path = tmp_path / "B4.biloc"
    path.write_text(formats.bilocale_to_text(b4_sym()))
    return str(path)


@pytest.fixture
def pt_bispace_file(tmp_path):
    path = tmp_path / "PT.bisp"
    path.write_text("""bispace PT
points a b c
open1 {a}
open1 {b,c}
open2 {b}
generate on
end
""")
    return str(path)


def run_cli(args):
    proc = subprocess.run([sys.executable, "-m", "biloc.cli", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_rmt_prints_principal_form(pt_file, capsys):
    assert main(["rmt", pt_file, "--i", "1", "--j", "2",
                 "--variant", "weak"]) == 0
    assert capsys.readouterr().out == "{a, ab, 1} = c(a)\n"


def test_rmt_strong_variant(pt_file, capsys):
    assert main(["rmt", pt_file, "--i", "1", "--j", "2",
                 "--variant", "strong"]) == 0
    assert capsys.readouterr().out == "{a, ab, 1} = c(a)\n"


def test_suite_b4_all_pass(b4_file, capsys):
    assert main(["suite", b4_file]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_suite_c3_expected_fails_keep_exit_zero(tmp_path, capsys):
    path = tmp_path / "C3.biloc"
    path.write_text(formats.bilocale_to_text(c3_sym()))
    assert main(["suite", str(path)]) == 0
    out = capsys.readouterr().out
    assert "FAIL (expected)" in out


def test_suite_machine_format(b4_file, capsys):
    assert main(["--format", "machine", "suite", b4_file,
                 "--checks", "law_frame,prop_bullet"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["CHECK law_frame B4 PASS", "CHECK prop_bullet B4 PASS"]


def test_suite_unknown_check(b4_file):
    assert main(["suite", b4_file, "--checks", "bogus"]) == 2


def test_validate_cycle_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.lat"
    path.write_text("lattice X\nelements x y\norder x<=y y<=x\nend\n")
    assert main(["validate", str(path)]) == 2


def test_validate_reports(pt_file, capsys):
    assert main(["validate", pt_file]) == 0
    out = capsys.readouterr().out
    assert "bilocale PT" in out and "balanced=False" in out


def test_sublocales_oracle(pt_file, capsys):
    assert main(["sublocales", pt_file, "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "generated=8 brute=8 agree" in out


def test_classify_lists_groups(pt_file, capsys):
    assert main(["classify", pt_file, "--i", "1", "--j", "2"]) == 0
    out = capsys.readouterr().out
    assert "(i,j)-nowhere dense (i=1, j=2): 2" in out
    assert "{bc, 1} = c(bc)" in out


def test_convert_round_trips(pt_bispace_file, capsys):
    assert main(["convert", pt_bispace_file]) == 0
    out = capsys.readouterr().out
    doc = formats.parse_text(out)
    assert doc["PT"].total.n == 6


def test_construct_congruence(tmp_path, capsys):
    path = tmp_path / "C3.lat"
    path.write_text("lattice C3\nelements 0 m 1\norder 0<=m m<=1\nend\n")
    assert main(["construct", "congruence", str(path)]) == 0
    out = capsys.readouterr().out
    assert "theta_S#0" in out
    assert formats.parse_text(out)["C(C3)"].total.n == 4


def test_construct_ideal(pt_file, capsys):
    assert main(["construct", "ideal", pt_file]) == 0
    out = capsys.readouterr().out
    assert "down_0" in out
    doc = formats.parse_text(out)
    assert doc["J(PT)"].total.n == 6


def test_search_counterexample_output(capsys):
    assert main(["search", "--prop", "prop_ijremote_weak",
                 "--max-points", "2"]) == 0
    out = capsys.readouterr().out
    assert "counterexample to prop_ijremote_weak" in out
    assert "elements" in out


def test_search_no_counterexample(capsys):
    assert main(["search", "--prop", "prop_pseudo_1", "--max-points", "1"]) == 0
    out = capsys.readouterr().out
    assert "no counterexample" in out


def test_sweep_exit_semantics(capsys):
    # the one-point universe leaves every expected-fail check unfired
    assert main(["suite", "--sweep", "--max-points", "1"]) == 1
    out = capsys.readouterr().out
    assert "MISSING-EXPECTED-FAILURE" in out


def test_no_verb_prints_help(capsys):
    assert main([]) == 2


def test_byte_identical_runs_across_processes(pt_file):
    cmd = ["--format", "machine", "suite", pt_file]
    code1, out1, _ = run_cli(cmd)
    code2, out2, _ = run_cli(cmd)
    assert code1 == code2 == 0
    assert out1 == out2


def test_render_sublocale_names():
    b = pt()
    lat = b.total
    assert render_sublocale(lat, 1 << lat.top) == "{1} = O"
    assert render_sublocale(lat, lat.full_mask) == \
        "{0, a, b, ab, bc, 1} = L"
    assert render_sublocale(lat, lat.bool_mask) == "{0, a, bc, 1} = B(L)"
    assert render_sublocale(lat, lat.up[lat.index("ab")]) == "{ab, 1} = c(ab)"
