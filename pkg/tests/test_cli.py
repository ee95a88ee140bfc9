import json
import math

import pytest

from percwit import cli
from percwit.quantum import paper_quantum_strategy, strategy_to_json

ROW_KEYS = ["function", "class", "truth_table", "witness_n", "beta_c_paper",
            "beta_c_enumerated", "beta_q_paper", "beta_q_search",
            "relabeling", "flags", "notes"]

FAST = ["--restarts", "2", "--max-iters", "200", "--seed", "5"]


def test_functions_lists_all_14(capsys):
    assert cli.main(["functions"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 15
    assert lines[0].startswith("id")
    assert any(line.startswith("and ") for line in lines)


def test_witness_prints_the_witness(capsys):
    assert cli.main(["witness", "nor"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("function=1000 scored_parties=1,2 N=80")
    assert cli.main(["witness", "0111"]) == 0  # bitstring alias


def test_exit_codes(capsys, tmp_path):
    assert cli.main(["witness", "nonesuch"]) == 2
    assert cli.main(["witness", "const0"]) == 3
    assert cli.main(["witness", "1111"]) == 3
    assert cli.main(["witness", "0110"]) == 4
    assert cli.main(["witness", "1001"]) == 4
    assert cli.main(["bound", "0110", "classical-paper"]) == 4
    bad = tmp_path / "missing" / "r.json"
    assert cli.main(["report", "--json", str(bad)] + FAST) == 5
    err = capsys.readouterr().err
    assert "trivial function" in err
    assert "not implementable" in err


def test_bound_classical_modes(capsys):
    assert cli.main(["bound", "and", "classical-paper"]) == 0
    out = capsys.readouterr().out
    assert "13/40" in out and "provenance" in out

    assert cli.main(["bound", "and", "classical-optimal"]) == 0
    out = capsys.readouterr().out
    assert "7/20" in out and "enumerated" in out and "encoder1" in out


def test_bound_quantum_modes(capsys):
    assert cli.main(["bound", "x1", "quantum-paper"]) == 0
    out = capsys.readouterr().out
    assert "0.853553390593" in out

    assert cli.main(["bound", "x1", "quantum-search",
                     "--restarts", "2", "--max-iters", "300"]) == 0
    out = capsys.readouterr().out
    assert "quantum search value" in out and "seed 0" in out
    doc = json.loads(out[out.index("strategy:") + len("strategy:"):])
    assert set(doc) == {"states1", "states2", "measurements"}


def test_bound_warm_start(capsys, tmp_path):
    path = tmp_path / "warm.json"
    path.write_text(json.dumps(strategy_to_json(paper_quantum_strategy("and"))))
    assert cli.main(["bound", "and", "quantum-search", "--restarts", "1",
                     "--max-iters", "2", "--warm-start", str(path)]) == 0
    out = capsys.readouterr().out
    value = float(out.split("=")[1].split()[0])
    assert value >= (11 + 2 * math.sqrt(2)) / 40 - 1e-9

    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert cli.main(["bound", "and", "quantum-search",
                     "--warm-start", str(bad)]) == 2


def test_report_json_schema(capsys, tmp_path):
    path = tmp_path / "report.json"
    assert cli.main(["report", "--json", str(path)] + FAST) == 0
    capsys.readouterr()
    doc = json.loads(path.read_text())
    assert set(doc) == {"schema_version", "seed", "rows"}
    assert doc["schema_version"] == 1
    assert doc["seed"] == 5
    assert [r["function"] for r in doc["rows"]] == cli.REPORT_IDS
    for row in doc["rows"]:
        assert list(row) == ROW_KEYS
        num, den = row["beta_c_paper"].split("/")
        assert int(num) > 0 and int(den) > 0
        for key in ("beta_q_paper", "beta_q_search"):
            v = row[key]
            assert isinstance(v, float)
            assert float(f"{v:.12g}") == v  # already rounded to 12 digits
    ors = {r["function"]: r for r in doc["rows"]}
    assert any("parity" in n for n in ors["or"]["notes"])
    assert ors["nand"]["relabeling"] == "negate_output"
    assert ors["and"]["relabeling"] == "identity"
    assert ors["x2"]["relabeling"] == "swap_parties"


def test_report_is_byte_deterministic(capsys, tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["report", "--json", str(p1)] + FAST) == 0
    out1 = capsys.readouterr().out
    assert cli.main(["report", "--json", str(p2)] + FAST) == 0
    out2 = capsys.readouterr().out
    assert p1.read_bytes() == p2.read_bytes()
    assert out1.replace(str(p1), "") == out2.replace(str(p2), "")


def test_unknown_mode_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main(["bound", "and", "quantum-exact"])
    assert exc.value.code == 2
