"""End-to-end runs of the command line through main()."""

import pytest

from weylzeta.cli import CACHE_ENV, main
from weylzeta.repdegrees import DegreeTable


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dims_f4_fundamental(capsys):
    code, out, _ = run(capsys, "dims", "--type", "F4", "--weight", "1,0,0,0")
    assert code == 0
    assert out.strip() == "52"


def test_dims_rejects_wrong_length(capsys):
    code, _, err = run(capsys, "dims", "--type", "F4", "--weight", "1,0")
    assert code == 2
    assert "4 coordinates" in err


def test_dims_rejects_negative(capsys):
    code, _, _ = run(capsys, "dims", "--type", "A2", "--weight", "1,-1")
    assert code == 2


def test_info_lists_invariants(capsys):
    code, out, _ = run(capsys, "info", "--type", "G2")
    assert code == 0
    assert "roots: 12" in out
    assert "positive roots: 6" in out
    assert "eff: 1/5" in out
    assert "lev: 1" in out
    assert "-3" in out  # the long-to-short Cartan entry


def test_zeta_su2_small(capsys):
    code, out, _ = run(capsys, "zeta", "--group", "A1:sc", "--max-dim", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# weylzeta v1 group=A1:sc variant=zeta maxdim=5"
    assert lines[1:] == ["1\t1", "2\t1", "3\t1", "4\t1", "5\t1"]


def test_zeta_star_drops_disallowed(capsys):
    code, out, _ = run(capsys, "zeta-star", "--group", "A1:sc", "--max-dim", "10")
    assert code == 0
    dims = [int(ln.split("\t")[0]) for ln in out.splitlines()[1:]]
    assert dims == [1, 2, 4, 8]


def test_zeta_out_file(tmp_path, capsys):
    target = tmp_path / "table.tsv"
    code, out, _ = run(capsys, "zeta", "--group", "A2:sc", "--max-dim", "10",
                       "--out", str(target))
    assert code == 0
    assert out == ""
    table = DegreeTable.from_text(target.read_text())
    assert table.counts[3] == 2


def test_zeta_deterministic_output(capsys):
    _, first, _ = run(capsys, "zeta", "--group", "A1xA2:sc", "--max-dim", "40")
    _, second, _ = run(capsys, "zeta", "--group", "A1xA2:sc", "--max-dim", "40")
    assert first == second


def test_zeta_rejects_bad_group(capsys):
    code, _, err = run(capsys, "zeta", "--group", "Q9:sc", "--max-dim", "5")
    assert code == 2
    assert "error" in err


def test_zeta_rejects_nonpositive_bound(capsys):
    code, _, _ = run(capsys, "zeta", "--group", "A1:sc", "--max-dim", "0")
    assert code == 2


def test_cache_written_then_reused(tmp_path, capsys):
    cache = tmp_path / "cache"
    code, fresh, _ = run(capsys, "zeta", "--group", "A2:sc", "--max-dim", "20",
                         "--cache", str(cache))
    assert code == 0
    files = list(cache.glob("*.tsv"))
    assert len(files) == 1

    # Doctor the cached table; a smaller request must come from the file,
    # truncated to the new bound.
    files[0].write_text(files[0].read_text().replace("3\t2", "3\t99"))
    code, out, _ = run(capsys, "zeta", "--group", "A2:sc", "--max-dim", "10",
                       "--cache", str(cache))
    assert code == 0
    assert "3\t99" in out
    assert out.splitlines()[0].endswith("maxdim=10")
    assert all(int(ln.split("\t")[0]) <= 10 for ln in out.splitlines()[1:])

    # A larger request cannot reuse the file and recomputes honestly.
    code, out, _ = run(capsys, "zeta", "--group", "A2:sc", "--max-dim", "30",
                       "--cache", str(cache))
    assert code == 0
    assert "3\t2" in out


def test_cache_respects_variant_and_group(tmp_path, capsys):
    cache = tmp_path / "cache"
    run(capsys, "zeta", "--group", "A1:sc", "--max-dim", "20",
        "--cache", str(cache))
    # same group, other variant: must not reuse the zeta file
    code, out, _ = run(capsys, "zeta-star", "--group", "A1:sc", "--max-dim", "10",
                       "--cache", str(cache))
    assert code == 0
    dims = [int(ln.split("\t")[0]) for ln in out.splitlines()[1:]]
    assert dims == [1, 2, 4, 8]
    assert len(list(cache.glob("*.tsv"))) == 2


def test_cache_env_default(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    code, _, _ = run(capsys, "zeta", "--group", "A1:sc", "--max-dim", "12")
    assert code == 0
    assert len(list(tmp_path.glob("*.tsv"))) == 1


def test_weylpoly_explicit_default(capsys):
    code, out, _ = run(capsys, "weylpoly", "--type", "A2", "--eval", "1,2")
    assert code == 0
    assert "coefficients: [0, 1/2, 1/2]" in out
    assert "ord: 1" in out
    assert "deg: 2" in out
    assert "P(1) = 1" in out
    assert "P(2) = 3" in out


def test_weylpoly_custom_pair(capsys):
    code, out, _ = run(capsys, "weylpoly", "--type", "A1",
                       "--mu", "1", "--nu", "0", "--eval", "7")
    assert code == 0
    assert "P(7) = 8" in out  # dim of the weight-7 irreducible of su(2)


def test_weylpoly_flag_conflicts(capsys):
    code, _, _ = run(capsys, "weylpoly", "--type", "A2", "--explicit",
                     "--mu", "1,0", "--nu", "0,0")
    assert code == 2
    code, _, _ = run(capsys, "weylpoly", "--type", "A2", "--mu", "1,0")
    assert code == 2


def test_efficiency_with_witness(capsys):
    code, out, _ = run(capsys, "efficiency", "--type", "G2", "--brute-force")
    assert code == 0
    assert "eff: 1/5" in out
    assert "brute-force eff: 1/5" in out
    assert "witness: A1 | A1" in out


def test_compare_orders_types(capsys):
    code, out, _ = run(capsys, "compare", "--first", "A3", "--second", "D4")
    assert (code, out.strip()) == (0, "greater")
    code, out, _ = run(capsys, "compare", "--first", "B4", "--second", "C4")
    assert (code, out.strip()) == (0, "equivalent")
    code, out, _ = run(capsys, "compare", "--first", "B2", "--second", "A2")
    assert (code, out.strip()) == (0, "less")


def test_gassmann_report(capsys):
    code, out, _ = run(capsys, "gassmann", "--n128", "--max-degree", "200")
    assert code == 0
    assert "n: 128" in out
    assert "zeta tables equal up to 200: true" in out
    assert "permutation equivalent: false" in out
    assert "PASS" in out


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "dims", "--type", "F4")[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_verify_fast_ledger(capsys):
    code, out, _ = run(capsys, "verify-paper", "--fast")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9
    assert all(ln.startswith("PASS ") for ln in lines)
