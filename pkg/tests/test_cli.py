import json

import pytest

from iboxes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tsystem_example(capsys):
    code, out, _ = run(capsys, "tsystem", "--type", "A3", "--seq", "default", "--box", "-2,0")
    assert code == 0
    assert out.strip() == "[M[0]][M[-2]] = [M[-2,0]] + [M[-1]]"


def test_tsystem_labels(capsys):
    code, out, _ = run(capsys, "tsystem", "--type", "A3", "--box", "-2,0", "--labels")
    assert code == 0
    assert "W^(" in out


def test_tsystem_degenerate_box_fails(capsys):
    code, _, err = run(capsys, "tsystem", "--type", "A3", "--box", "0,0")
    assert code == 1
    assert "degenerate" in err


def test_boxmove_example(capsys):
    code, out, _ = run(capsys, "boxmove", "--chain", "0:LL", "--at", "1")
    assert code == 0
    assert out.strip() == "-1:RL"


def test_boxmove_not_movable(capsys):
    code, _, err = run(capsys, "boxmove", "--chain", "0:LL", "--at", "2")
    assert code == 1
    assert "not movable" in err


def test_verify_suite_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hl-eq-gls", "--type", "B2", "--window", "-20,20")
    assert code == 0
    assert out.startswith("[PASS] hl-eq-gls")


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2
    assert "unknown suite" in err


def test_validate_heights(capsys):
    code, out, _ = run(capsys, "validate", "--type", "B2", "--xi", "1,0,-1")
    assert code == 0 and "valid" in out
    code, out, _ = run(capsys, "validate", "--type", "A3", "--xi", "0,0,0")
    assert code == 1 and "INVALID" in out


def test_seed_json(capsys):
    code, out, _ = run(capsys, "seed", "--type", "A3", "--chain", "0:LL")
    assert code == 0
    payload = json.loads(out)
    assert payload["chain"] == {"a": 0, "code": "LL"}
    assert len(payload["boxes"]) == 3
    assert payload["exchangeable"] == ["x[0]"]


def test_seed_range_gives_canonical_chain(capsys):
    code, out, _ = run(capsys, "seed", "--type", "A3", "--range", "-2,0")
    assert code == 0
    assert json.loads(out)["chain"] == {"a": 0, "code": "LL"}


def test_mutate_positions(capsys):
    code, out, _ = run(capsys, "mutate", "--type", "A3", "--chain", "0:LL", "--at", "1")
    assert code == 0
    lhs, rhs = out.strip().split(" = ")
    assert lhs == "x'[0]"
    assert sorted(rhs.split(" + ")) == ["x[-1]*x[0]^-1", "x[-2,0]*x[0]^-1"]
    code, _, err = run(capsys, "mutate", "--type", "A3", "--chain", "0:LL", "--at", "2")
    assert code == 1 and "frozen" in err


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", "--type", "A3", "--window", "-2,0")
    assert code == 0
    assert out.startswith("digraph {")
    assert out.count("->") == 2
    code, out, _ = run(capsys, "export-dot", "--type", "B2", "--quiver", "psi", "--window", "-8,0")
    assert code == 0 and "->" in out
    code, out, _ = run(capsys, "export-dot", "--type", "B2", "--quiver", "hl", "--window", "-4,4")
    assert code == 0 and "->" in out


def test_unsupported_type_exits_2(capsys):
    code, _, err = run(capsys, "validate", "--type", "Z9")
    assert code == 2
    assert "unsupported" in err


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["tsystem"])  # missing required --box
    assert exc.value.code == 2
