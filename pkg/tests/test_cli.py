import json

import pytest

from heckesym.cli import main
from heckesym.symmetry import standard_R, symmetry_to_dict


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_verify(capsys):
    code, out = run(capsys, "verify", "builtin:standard:2")
    assert code == 0
    assert "trace_C: q^-2 + q^-1" in out


def test_birank_json(capsys):
    code, data = run_json(capsys, "birank", "builtin:super:1:1")
    assert code == 0
    assert (data["birank"], data["numerator"], data["denominator"]) == ([1, 1], "1+t", "1-t")
    assert data["conventions"]["index_convention"] == "KJIL"


def test_dims_and_simple(capsys):
    _, data = run_json(capsys, "dims", "builtin:standard:2", "--n-max", "3")
    assert data["ext"] == [1, 2, 1, 0] and data["sym"] == [1, 2, 3, 4]
    _, data = run_json(capsys, "simple", "builtin:super:1:1", "2,1", "--check")
    assert data["dim"] == data["idempotent_image_dim"] == 2


def test_decompose(capsys):
    _, data = run_json(capsys, "decompose", "builtin:standard:2", "3")
    assert data["total"] == 8
    assert [p["in_gamma"] for p in data["parts"]] == [True, True, False]


def test_koszul(capsys):
    code, data = run_json(capsys, "koszul", "builtin:super:1:1", "0", "--window", "3")
    assert code == 0
    assert data["concentrated_at"] == [1, 1] and data["homological_determinant_dim"] == 1


def test_integral(capsys):
    code, data = run_json(capsys, "integral", "builtin:standard:2", "1", "--show-table")
    assert code == 0 and all(c["passed"] for c in data["checks"])
    assert len(data["table"]) == 4


def test_failed_check_exits_4(capsys):
    code, data = run_json(capsys, "integral", "builtin:standard:2", "2", "--omega-variant", "literal")
    assert code == 4
    assert not data["checks"][1]["passed"]


def test_equiv(capsys):
    code, data = run_json(capsys, "equiv", "builtin:standard:2", "builtin:super:1:1")
    assert code == 0 and data["verdict"] == "not_equivalent"


def test_deterministic(capsys, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"out{k}.json"
        main(["integral", "builtin:super:1:1", "2", "--format", "json", "--output", str(path)])
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_numeric_v(capsys):
    _, data = run_json(capsys, "verify", "builtin:standard:1", "--v", "2")
    assert data["trace_C"] == "1/4"


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, data = run_json(capsys, "verify", str(bad))
    assert code == 2 and data["error"] == "ParseError"


def test_axiom_failure_exit(capsys, tmp_path):
    data = symmetry_to_dict(standard_R(2))
    data["entries"][1][2] = "v + 1"
    path = tmp_path / "r.json"
    path.write_text(json.dumps(data))
    code, out = run_json(capsys, "verify", str(path))
    assert code == 1 and out["error"] == "NotYangBaxter"
    assert len(out["witness"]) == 2


def test_inconclusive_exit(capsys):
    code, data = run_json(capsys, "dims", "builtin:standard:3", "--n-max", "5", "--budget", "30")
    assert code == 3 and data["error"] == "DegreeOverflow"


def test_recurrence_unstable_exit(capsys):
    code, data = run_json(capsys, "birank", "builtin:super:2:1", "--n-max", "2")
    assert code == 3 and data["error"] == "RecurrenceUnstable"


def test_bad_partition_is_usage_error():
    with pytest.raises(SystemExit):
        main(["koszul", "builtin:standard:2"])
