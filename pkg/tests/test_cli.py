import json

import pytest

from chowfans.cli import main

U23 = '{"uniform": [2, 3]}'
U24 = '{"uniform": [2, 4]}'
LOOPY = '{"graph": {"vertices": 2, "edges": [[1, 2], [1, 1]]}}'


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    lines = [json.loads(s) for s in captured.out.splitlines() if s.strip()]
    return code, lines, captured.err


def test_verify_identity_passes(capsys):
    code, lines, err = run(capsys, ["verify", "--matroid", U23,
                                    "--which", "identity"])
    assert code == 0
    assert lines and all(line["status"] == "pass" for line in lines)
    assert "4/4 checks passed" in err


def test_verify_all_passes(capsys):
    code, lines, _ = run(capsys, ["verify", "--matroid", U23])
    assert code == 0
    kinds = {line["check"] for line in lines}
    assert "truncation-recursion" in kinds


def test_kahler_passes(capsys):
    code, lines, _ = run(capsys, ["kahler", "--matroid", U23, "--N", "3",
                                  "--samples", "2"])
    assert code == 0
    assert len(lines) == 2
    for line in lines:
        assert line["pd"] and line["hl"] and line["hr"]


def test_kahler_zero_samples_pd_only(capsys):
    code, lines, _ = run(capsys, ["kahler", "--matroid", U23, "--N", "3",
                                  "--samples", "0"])
    assert code == 0
    assert len(lines) == 1
    assert lines[0]["check"] == "pd"


def test_bloch_gieseker_passes(capsys):
    code, lines, _ = run(capsys, ["bloch-gieseker", "--matroid", U23,
                                  "--N", "3", "--lams", "0,1,10"])
    assert code == 0
    assert len(lines) == 3
    assert all(line["status"] == "pass" for line in lines)


def test_quotient_ahk_passes(capsys):
    code, lines, _ = run(capsys, ["quotient-ahk", "--matroid", U24,
                                  "--N", "4"])
    assert code == 0
    assert lines[0]["status"] == "pass"
    assert lines[0]["t"] == 2


def test_fan_dump(capsys):
    code, lines, _ = run(capsys, ["fan", "--kind", "permutohedral",
                                  "--N", "3"])
    assert code == 0
    assert lines[0]["unimodular"] is True
    assert lines[0]["balanced"] is True
    assert len(lines[0]["rays"]) == 6


def test_fan_loopy_rejected_without_simplify(capsys):
    code, _, err = run(capsys, ["fan", "--kind", "bergman",
                                "--matroid", LOOPY])
    assert code == 2
    assert err


def test_fan_loopy_simplify(capsys):
    code, lines, _ = run(capsys, ["fan", "--kind", "bergman",
                                  "--matroid", LOOPY, "--simplify"])
    assert code == 0
    assert lines[0]["balanced"] is True


def test_malformed_matroid_json_is_usage_error(capsys):
    code, _, err = run(capsys, ["verify", "--matroid", "{not json"])
    assert code == 2
    assert "error" in err


def test_unknown_command_is_usage_error(capsys):
    code, _, _ = run(capsys, ["frobnicate"])
    assert code == 2


def test_missing_required_argument(capsys):
    code, _, _ = run(capsys, ["verify"])
    assert code == 2


def test_output_is_deterministic(capsys):
    argv = ["kahler", "--matroid", U23, "--N", "3", "--samples", "3",
            "--seed", "5"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second


def test_jobs_flag_accepted(capsys):
    code, _, _ = run(capsys, ["--jobs", "4", "fan", "--kind",
                              "permutohedral", "--N", "3"])
    assert code == 0
