"""End-to-end CLI behavior, including the documented exit-code contract."""

import json

import pytest

from ksumlab.cli import main
from ksumlab.multisets import parse_multiset
from ksumlab.search import collision_class_key
from ksumlab.symfunc import identity_fixture_lines

FIRST = "0 0 1 -1 2 -2 4 -4 7 -7 7 -7"
SECOND = "1 -1 2 -2 3 -3 4 -4 5 -5 8 -8"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ksums_demo(capsys):
    code, out, _ = run(capsys, "ksums", "-1 0^10 1", "-k", "4")
    assert code == 0
    assert out.strip() == "-1^120 0^255 1^120"


def test_ksums_small(capsys):
    code, out, _ = run(capsys, "ksums", "1 2 3", "-k", "2")
    assert code == 0
    assert out.strip() == "3 4 5"


def test_ksums_bad_k(capsys):
    code, _, err = run(capsys, "ksums", "1 2 3", "-k", "5")
    assert code == 2
    assert "error" in err


def test_ksums_parse_failure(capsys):
    code, _, err = run(capsys, "ksums", "1 banana 3", "-k", "2")
    assert code == 2
    assert "error" in err


def test_ksums_json_round_trips(capsys):
    code, out, _ = run(capsys, "ksums", "1/2 1/2 1", "-k", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"n": 3, "k": 2, "sums": [1, "3/2", "3/2"]}


def test_ksums_from_file(tmp_path, capsys):
    path = tmp_path / "set.txt"
    path.write_text("# demo\n-1 0^10 1\n")
    code, out, _ = run(capsys, "ksums", f"@{path}", "-k", "4")
    assert code == 0
    assert out.strip() == "-1^120 0^255 1^120"


def test_collide_known_pair(capsys):
    code, out, _ = run(capsys, "collide", FIRST, SECOND, "-k", "4")
    assert code == 0
    assert out.strip() == "EQUAL (495 sums)"


def test_collide_detects_difference(capsys):
    tweaked = FIRST.replace("4 -4", "4 -5")
    code, out, _ = run(capsys, "collide", FIRST, tweaked, "-k", "4")
    assert code == 1
    assert out.startswith("DIFFER: first differing sum")


def test_collide_size_mismatch(capsys):
    code, _, err = run(capsys, "collide", "1 2", "1 2 3", "-k", "2")
    assert code == 2
    assert "different sizes" in err


def test_collide_pair_file(tmp_path, capsys):
    path = tmp_path / "pair.txt"
    path.write_text(f"{FIRST}\n{SECOND}\n")
    code, out, _ = run(capsys, "collide", f"@{path}", "-k", "4")
    assert code == 0
    assert "EQUAL" in out


def test_expand_s1_zero(capsys):
    code, out, _ = run(capsys, "expand", "2", "--s1-zero")
    assert code == 0
    assert out.strip() == "E2 = 120*S2"


def test_expand_general(capsys):
    code, out, _ = run(capsys, "expand", "2")
    assert code == 0
    assert out.strip() == "E2 = 45*S1^2 + 120*S2"


def test_expand_check_fixtures_reports_vanishing_pivot(capsys):
    code, out, _ = run(capsys, "expand", "6", "--check-fixtures")
    assert code == 0
    assert "coef(S6) = 0 [expected 0] OK" in out.splitlines()
    assert "MISMATCH" not in out


def test_expand_rejects_bad_p(capsys):
    code, _, err = run(capsys, "expand", "0")
    assert code == 2
    assert "error" in err


def test_expand_fixture_override(tmp_path, capsys, monkeypatch):
    path = tmp_path / "fixtures.txt"
    lines = identity_fixture_lines(pmax=3)
    lines[1] = "E2 = 121*S2"  # poison one coefficient
    path.write_text("\n".join(lines) + "\n")
    monkeypatch.setenv("KSUMLAB_FIXTURES", str(path))
    code, out, _ = run(capsys, "expand", "2", "--check-fixtures")
    assert code == 1
    assert "coef(S2) = 120 [expected 121] MISMATCH" in out


def test_eliminate_verify_coefficients(capsys):
    code, out, _ = run(capsys, "eliminate", "--verify-coefficients")
    assert code == 0
    assert "all OK" in out
    assert out.count("OK") >= 7


def test_eliminate_example_roots(capsys):
    code, out, _ = run(capsys, "eliminate", "--example1")
    assert code == 0
    assert out.strip() == "roots: 2, 377762/44361"


def test_eliminate_second_root(capsys):
    code, out, _ = run(capsys, "eliminate", "--second-root", "-1 0^10 1")
    assert code == 0
    assert out.strip() == "S6'' = 377762/44361"


def test_eliminate_second_root_zero_s2(capsys):
    code, _, err = run(capsys, "eliminate", "--second-root", "0^12")
    assert code == 2
    assert "S_2 = 0" in err


def test_eliminate_auto_shift_notice(capsys):
    code, out, err = run(capsys, "eliminate", "--second-root", "0 2 0^9 -1")
    assert code == 0
    assert "shifted by" in err


def test_eliminate_residuals_known_set(capsys):
    code, out, _ = run(capsys, "eliminate", "--residuals", FIRST)
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "ALL ZERO"
    assert len([l for l in lines if l.startswith("residual[")]) == 13
    assert "residual[13] = 0" in lines and "residual[26] = 0" in lines


def test_eliminate_residuals_generic_set(capsys):
    code, out, _ = run(capsys, "eliminate", "--residuals", "1 2 3 4 5 6 7 8 9 10 11 13")
    assert code == 1
    assert out.splitlines()[-1] == "NONZERO RESIDUALS"


def test_search_general_records(capsys):
    code, out, err = run(capsys, "search", "-n", "4", "-k", "2", "-B", "7")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records and all(r["k"] == 2 for r in records)
    target = collision_class_key(parse_multiset("0 3 5 6"), parse_multiset("1 2 4 7"))
    keys = [
        collision_class_key(
            parse_multiset(" ".join(str(v) for v in r["first"])),
            parse_multiset(" ".join(str(v) for v in r["second"])),
        )
        for r in records
    ]
    assert target in keys
    assert "collision record(s)" in err


def test_search_no_collision_exit_one(capsys):
    code, out, _ = run(capsys, "search", "-n", "3", "-k", "2", "-B", "4")
    assert code == 1
    assert out.strip() == ""


def test_search_invalid_parameters(capsys):
    code, _, err = run(capsys, "search", "-n", "3", "-k", "5", "-B", "2")
    assert code == 2
    assert "error" in err


def test_search_out_file_and_workers_determinism(tmp_path, capsys):
    out1 = tmp_path / "a.jsonl"
    out2 = tmp_path / "b.jsonl"
    code1, _, _ = run(capsys, "search", "-n", "4", "-k", "2", "-B", "7", "--out", str(out1))
    code2, _, _ = run(
        capsys,
        "search", "-n", "4", "-k", "2", "-B", "7", "--workers", "3", "--out", str(out2),
    )
    assert code1 == code2 == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_search_resume_checkpoint(tmp_path, capsys):
    ck = tmp_path / "ck.jsonl"
    code, out_a, _ = run(
        capsys, "search", "-n", "4", "-k", "2", "-B", "6", "--resume", str(ck)
    )
    assert code == 0
    assert ck.exists()
    code, out_b, _ = run(
        capsys, "search", "-n", "4", "-k", "2", "-B", "6", "--resume", str(ck)
    )
    assert out_a == out_b


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
