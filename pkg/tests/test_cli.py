import json
import subprocess
import sys

import pytest

from picketlab.cli import HEADER, dumps_embedding, loads_embedding, main
from picketlab.corpus import worked_example_embedding
from picketlab.embeddings import dual, make_embedding, picket

WORKED_DIAGRAM = """\
[ ][ ][1]
[ ][1]
[ ][2]
[2]
[3]
"""


def write(tmp_path, name, M):
    path = tmp_path / f"{name}.json"
    path.write_text(dumps_embedding(M))
    return str(path)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_round_trip():
    M = make_embedding(3, (2, 1), [(-1, 2), (3, 0)])
    text = dumps_embedding(M)
    assert loads_embedding(text) == M
    assert dumps_embedding(loads_embedding(text)) == text


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("{", "<input>:1:2"),
        ("[]", "JSON object"),
        ('{"p": 2}', "missing field 'beta'"),
        ('{"p": 2, "beta": [2], "x": 1}', "unknown field"),
        ('{"p": 2, "beta": [1, 2]}', "field 'beta'"),
        ('{"p": 2, "beta": [2], "generators": [[4]]}', "field 'generators'"),
        ('{"p": 6, "beta": [2]}', "field 'p'"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ValueError) as exc:
        loads_embedding(text)
    assert fragment in str(exc.value)


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"p": 2, "beta": [2], "generators": [[1, 1]]}')
    code, _, err = run(capsys, "tableau", bad)
    assert code == 2 and "generators" in err
    code, _, _ = run(capsys, "tableau", tmp_path / "missing.json")
    assert code == 2


def test_tableau_worked_example(tmp_path, capsys):
    code, out, _ = run(capsys, "tableau", write(tmp_path, "ex", worked_example_embedding()))
    assert code == 0
    diagram, chain = out.rsplit("\n", 2)[0] + "\n", json.loads(out.splitlines()[-1])
    assert diagram.splitlines()[:5] == WORKED_DIAGRAM.splitlines()
    assert chain == [[3, 1], [3, 2, 1], [4, 3, 1], [5, 3, 1]]


def test_tableau_small_cases(tmp_path, capsys):
    _, out, _ = run(capsys, "tableau", write(tmp_path, "p", picket(2, 2, 3)))
    assert out.splitlines()[:3] == ["[ ]", "[1]", "[2]"]
    _, out, _ = run(capsys, "tableau", write(tmp_path, "e", make_embedding(2, (2,), [])))
    assert out.splitlines()[:2] == ["[ ]", "[ ]"]
    _, out, _ = run(capsys, "tableau", "--transpose", write(tmp_path, "p", picket(2, 2, 3)))
    assert out.splitlines()[0] == "[ ][1][2]"


def test_verify_worked_example(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", write(tmp_path, "ex", worked_example_embedding()), "--max-m", 5)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == HEADER
    ones = set()
    for line in lines[1:]:
        ident, ell, m, a, b, c, agree = line.split("\t")
        assert ident == "ex" and agree == "true" and a == b == c
        if a == "1":
            ones.add((int(ell), int(m)))
    assert ones == {(1, 1), (1, 2), (2, 3), (2, 4), (3, 5)}
    assert len(lines) == 1 + 15


def test_verify_picket(tmp_path, capsys):
    ell, m = 2, 4
    code, out, _ = run(capsys, "verify", write(tmp_path, "p", picket(2, ell, m)))
    assert code == 0
    ones = {(int(r[1]), int(r[2])) for r in (x.split("\t") for x in out.splitlines()[1:]) if r[3] == "1"}
    assert ones == {(j, m - ell + j) for j in range(1, ell + 1)}


def test_verify_dual_mode_matches_dual(tmp_path, capsys):
    M = worked_example_embedding()
    _, three, _ = run(capsys, "verify", "--theorem", 3, write(tmp_path, "x", M))
    _, one, _ = run(capsys, "verify", write(tmp_path, "x", dual(M)))
    assert three == one


def test_verify_uses_worker_processes(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("PICKETLAB_THREADS", "2")
    code, out, _ = run(capsys, "verify", write(tmp_path, "ex", worked_example_embedding()))
    monkeypatch.setenv("PICKETLAB_THREADS", "1")
    code1, out1, _ = run(capsys, "verify", write(tmp_path, "ex", worked_example_embedding()))
    assert code == code1 == 0 and out == out1


def test_random_seed_sweep(tmp_path, capsys):
    for seed in range(100):
        path = tmp_path / f"r{seed}.json"
        assert run(capsys, "random", "--p", 2, "--beta", "4,3,2", "--gens", 2, "--seed", seed, "-o", path)[0] == 0
        code, out, _ = run(capsys, "verify", path)
        assert code == 0, out


def test_random_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run(capsys, "random", "--p", 3, "--beta", "3,1", "--gens", 2, "--seed", 17, "-o", path)
    assert a.read_bytes() == b.read_bytes()
    _, out, _ = run(capsys, "random", "--p", 2, "--beta", "3", "--gens", 0, "--seed", 1)
    assert json.loads(out)["generators"] == []


def test_construct(capsys):
    _, out, _ = run(capsys, "construct", "c", 5, 2, 4)
    assert json.loads(out) == {"p": 2, "beta": [5, 1], "generators": [[4, 1]]}
    _, out, _ = run(capsys, "construct", "picket", 2, 4)
    assert json.loads(out) == {"p": 2, "beta": [4], "generators": [[4]]}
    _, out, _ = run(capsys, "construct", "a", 5, 0, 4)
    assert json.loads(out) == {"p": 2, "beta": [5], "generators": []}
    _, out, _ = run(capsys, "construct", "g", 2, 4)
    assert json.loads(out)["source"] == [[1, 4], [2, 3]]
    _, out, _ = run(capsys, "construct", "h", 2, 4)
    assert json.loads(out)["target"] == [[1, 3], [3, 4]]
    assert run(capsys, "construct", "c", 5, 2)[0] == 2
    assert run(capsys, "construct", "c", 3, 2, 4)[0] == 2


def test_lr_coeff(capsys):
    assert run(capsys, "lr-coeff", "1", "2", "1")[1] == "1\n"
    assert run(capsys, "lr-coeff", "2,1", "3,2,1", "2,1")[1] == "2\n"
    _, out, _ = run(capsys, "lr-coeff", "3", "5,1", "3", "--list")
    assert out.splitlines() == ["1", "[[3], [3, 1], [4, 1], [5, 1]]"]
    assert run(capsys, "lr-coeff", "1,2", "3", "1")[0] == 2


def test_pairing(tmp_path, capsys):
    ex = write(tmp_path, "ex", worked_example_embedding())
    code, out, _ = run(capsys, "pairing", 5, 2, 4, ex)
    assert code == 0 and "non-degenerate" in out
    code, out, _ = run(capsys, "pairing", 5, 3, 3, ex)
    assert code == 0 and "vacuous" in out
    r_star = write(tmp_path, "rs", make_embedding(2, (5, 3, 1), [(8, 1, 1), (16, 1, 1)]))
    code, out, _ = run(capsys, "pairing", "--side", "right", 5, 2, 4, r_star)
    assert code == 0 and "vacuous" not in out
    assert run(capsys, "pairing", 4, 2, 4, ex)[0] == 2


def test_module_entry_point(tmp_path):
    res = subprocess.run(
        [sys.executable, "-m", "picketlab", "lr-coeff", "2,1", "3,2,1", "2,1"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and res.stdout == "2\n"
