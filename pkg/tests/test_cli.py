import hashlib
import json
import subprocess
import sys
from pathlib import Path

import pytest

from equideriv import __version__, cli
from equideriv.errors import InternalConsistencyError

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def _run(tmp_path, doc, *flags):
    src = tmp_path / "p.json"
    src.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    out = tmp_path / "r.json"
    code = cli.main(["run", str(src), "--json", str(out), *flags])
    return code, json.loads(out.read_text())


S3_DECOMPOSE = {"group": {"builtin": "S3"}, "tasks": [{"op": "decompose", "rep": "regular"}]}
SWAP = {"group": {"builtin": "S2"}, "action": {"rep": "perm"},
        "objects": {"E": {"blocks": [{"shift": 0, "rep": "sign"}]},
                    "O1": {"blocks": [{"shift": 1, "rep": "triv"}]}},
        "tasks": [{"name": "d", "op": "descend", "object": "E"},
                  {"name": "p", "op": "descend", "object": "O1"},
                  {"name": "o", "op": "oracle", "object": "E"}]}


def test_decompose_regular(tmp_path):
    code, rep = _run(tmp_path, S3_DECOMPOSE)
    assert code == 0
    assert rep["tasks"][0]["result"]["multiplicities"] == {"triv": 1, "sign": 1, "std": 2}


def test_descend_prints_witness(tmp_path, capsys):
    code, rep = _run(tmp_path, SWAP)
    assert code == 0
    d = rep["tasks"][0]["result"]
    assert d["verdict"] == "fails" and d["witness"]["component"] == "sign"
    assert "fails" in capsys.readouterr().out


def test_empty_task_list(tmp_path):
    code, rep = _run(tmp_path, {"group": {"builtin": "C5"}, "tasks": []})
    assert code == 0 and rep["tasks"] == [] and rep["status"] == "ok"


def test_report_embeds_digest_and_version(tmp_path):
    text = json.dumps(S3_DECOMPOSE)
    code, rep = _run(tmp_path, text)
    assert rep["input_sha256"] == hashlib.sha256(text.encode()).hexdigest()
    assert rep["equideriv_version"] == __version__


def test_task_selection_and_flags(tmp_path):
    code, rep = _run(tmp_path, SWAP, "--task", "p")
    assert [t["name"] for t in rep["tasks"]] == ["p"]
    assert rep["tasks"][0]["result"]["verdict"] == "descends"
    code, rep = _run(tmp_path, SWAP, "--task", "p", "--space", "projective")
    assert rep["tasks"][0]["result"]["verdict"] == "fails"
    code, rep = _run(tmp_path, SWAP, "--task", "o", "--degree-bound", "5")
    assert rep["tasks"][0]["result"]["degree_bound"] == 5
    code, rep = _run(tmp_path, SWAP, "--task", "nope")
    assert code == 2


@pytest.mark.parametrize("doc,fragment", [
    ('{"group": {"builtin": "S3"}, "tasks": [}', "invalid JSON"),
    ({"group": {"builtin": "S9"}}, "unknown built-in group"),
    ({"group": {"permutation_generators": [[2, 1, 3, 4, 5], [2, 3, 4, 5, 1]]}}, "exceeds"),
    ({"group": {"builtin": "S2"}, "action": {"sum": ["perm", "perm", "perm", "perm"]}}, "variables"),
    ({"group": {"builtin": "S2"}, "tasks": [{"op": "decompose", "rep": "ghost"}]}, "unresolved"),
    ({"group": {"builtin": "S2"}, "action": {"rep": "perm"},
      "objects": {"E": {"blocks": [{"shift": 0, "rep": "sign"}]}},
      "tasks": [{"op": "descend", "object": "F"}]}, "unresolved object"),
    ({"group": {"builtin": "S2"}, "action": {"rep": "perm"},
      "objects": {"R": {"raw": {"degrees": [0], "generators": [[["2 *"]]]}}}}, "column"),
    ({"group": {"builtin": "C2"}, "irreps": [{"name": "a", "generators": [[["1"]]]}]}, "incomplete"),
])
def test_invalid_inputs_exit_2(tmp_path, doc, fragment):
    code, rep = _run(tmp_path, doc)
    assert code == 2
    assert rep["status"] == "invalid" and fragment in rep["error"]


def test_internal_error_exit_3(tmp_path, monkeypatch):
    def boom(*a, **k):
        raise InternalConsistencyError("forced")
    monkeypatch.setitem(cli.TASKS, "decompose", boom)
    code, rep = _run(tmp_path, S3_DECOMPOSE)
    assert code == 3 and rep["status"] == "internal-error"


def test_missing_file_exit_2(tmp_path):
    assert cli.main(["run", str(tmp_path / "absent.json")]) == 2


def test_console_script_is_deterministic(tmp_path):
    outs = []
    for k in range(2):
        out = tmp_path / f"r{k}.json"
        subprocess.run([sys.executable, "-m", "equideriv.cli", "run", str(PROBLEMS / "swap_plane.json"),
                        "--json", str(out)], check=True, capture_output=True)
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_problem_suite_runs(tmp_path):
    for path in sorted(PROBLEMS.glob("*.json")):
        out = tmp_path / (path.stem + ".out.json")
        assert cli.main(["run", str(path), "--json", str(out)]) == 0, path.name


def test_triv_resolves_for_generated_groups(tmp_path):
    doc = {"group": {"permutation_generators": [[2, 1, 3], [2, 3, 1]]}, "action": {"rep": "perm"},
           "objects": {"E": {"blocks": [{"shift": 0, "rep": "triv"}]}},
           "tasks": [{"op": "descend", "object": "E"}]}
    code, rep = _run(tmp_path, doc)
    assert code == 0 and rep["tasks"][0]["result"]["verdict"] == "descends"
