import io
import json
import subprocess
import sys

import pytest

from isk4.cli import NEGATIVE, OK, UNDECIDED, USAGE, main
from isk4.formats import emit_graph6
from isk4.graph import build_graph
from isk4.harness.generators import complete_bipartite, cycle_graph, gen_k33_glued, petersen_graph

from oracles import wheel_c8

C5 = "Dhc"
PETERSEN = "IheA@GUAo"


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_constants_match_fixtures():
    assert emit_graph6(cycle_graph(5)) == C5
    assert emit_graph6(petersen_graph()) == PETERSEN


def test_color_c5(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["color"], C5 + "\n")
    doc = json.loads(out)
    assert code == OK
    res = doc["results"][0]
    assert res["status"] == "success" and res["colors_used"] == 3 and res["verified"]
    assert doc["tool"] == "isk4" and doc["command"] == "color"
    assert doc["settings"] == {"format": "g6", "exact_bound": 14, "budget": 10**7, "seed": None}


def test_color_petersen_refused(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["color"], PETERSEN + "\n")
    assert code == NEGATIVE
    res = json.loads(out)["results"][0]
    assert res["status"] == "refused" and res["witness"]["kind"] == "isk4"


def test_color_text_output_and_mixed_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["color", "--output", "text"], C5 + "\n" + PETERSEN + "\n")
    assert code == NEGATIVE
    lines = out.splitlines()
    assert lines[0].startswith("0\tcolored with 3 colors")
    assert lines[1].startswith("1\trefused isk4")


def test_edgelist_input(capsys, monkeypatch, tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run(capsys, monkeypatch, ["color", "--format", "edgelist", str(path)])
    assert code == OK and json.loads(out)["results"][0]["graph6"] == C5


def test_budget_exhaustion_is_undecided(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["color", "--budget", "3", "--exact-bound", "0"], PETERSEN + "\n")
    assert code == UNDECIDED
    assert json.loads(out)["results"][0]["status"] == "inconclusive"
    code, _, _ = run(capsys, monkeypatch, ["detect", "--what", "isk4", "--budget", "1", "--exact-bound", "0"],
                     PETERSEN + "\n")
    assert code == UNDECIDED


@pytest.mark.parametrize(
    "what, g6, code",
    [
        ("class", C5, OK),
        ("class", PETERSEN, NEGATIVE),
        ("triangle", C5, OK),
        ("triangle", "Bw", NEGATIVE),
        ("isk4", PETERSEN, NEGATIVE),
        ("k33", emit_graph6(complete_bipartite(3, 3)), NEGATIVE),
        ("k33", C5, OK),
        ("sp", C5, OK),
        ("sp", "C~", NEGATIVE),
    ],
)
def test_detect(capsys, monkeypatch, what, g6, code):
    got, out, _ = run(capsys, monkeypatch, ["detect", "--what", what], g6 + "\n")
    assert got == code
    assert json.loads(out)["settings"]["what"] == what


def test_detect_linkage(capsys, monkeypatch):
    g6 = emit_graph6(wheel_c8())
    code, out, _ = run(capsys, monkeypatch, ["detect", "--what", "linkage", "--vertex", "8",
                                             "--hole", "0,1,2,3,4,5,6,7"], g6 + "\n")
    assert code == OK and json.loads(out)["results"][0]["found"] is False
    code, _, err = run(capsys, monkeypatch, ["detect", "--what", "linkage"], g6 + "\n")
    assert code == USAGE and "needs --vertex" in err


def test_decompose(capsys, monkeypatch):
    g6 = emit_graph6(gen_k33_glued(cycle_graph(5)))
    code, out, _ = run(capsys, monkeypatch, ["decompose"], g6 + "\n")
    assert code == OK and json.loads(out)["results"][0]["step"]["kind"] == "clique_cutset"
    code, out, _ = run(capsys, monkeypatch, ["decompose", "--tree"], g6 + "\n")
    assert code == OK and json.loads(out)["results"][0]["tree"]["kind"] == "clique_cutset"
    code, _, _ = run(capsys, monkeypatch, ["decompose"], PETERSEN + "\n")
    assert code == NEGATIVE


def test_wheels(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["wheels", "--verify"], emit_graph6(wheel_c8()) + "\n")
    res = json.loads(out)["results"][0]
    assert code == OK
    assert res["proper_centers"] == [8] and res["wheelmain"][0]["ok"]
    code, out, _ = run(capsys, monkeypatch, ["wheels", "--output", "text"], C5 + "\n")
    assert code == OK and out.strip().endswith("wheel-free")
    code, _, _ = run(capsys, monkeypatch, ["wheels", "--hole-cap", "0"], emit_graph6(wheel_c8()) + "\n")
    assert code == UNDECIDED


def test_sparse_cycle(capsys, monkeypatch):
    g6 = emit_graph6(wheel_c8())
    code, out, _ = run(capsys, monkeypatch, ["sparse-cycle", "-x", "8", "-y", "8"], g6 + "\n")
    assert code == OK and json.loads(out)["settings"]["mode"] == "general"
    code, out, _ = run(capsys, monkeypatch, ["sparse-cycle", "-x", "0", "-y", "0", "--mode", "forest"], C5 + "\n")
    assert code == OK and json.loads(out)["settings"]["mode"] == "forest"
    # C8 minus its center is a cycle, so the forest mode precondition fails
    code, _, _ = run(capsys, monkeypatch, ["sparse-cycle", "-x", "8", "-y", "8", "--mode", "forest"], g6 + "\n")
    assert code == USAGE
    # theta graph with a pendant vertex 5 hanging off vertex 0
    theta = emit_graph6(build_graph(6, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (0, 5)]))
    code, out, _ = run(capsys, monkeypatch, ["sparse-cycle", "-x", "5", "-y", "5", "--mode", "sp"], theta + "\n")
    assert code == OK and json.loads(out)["results"][0]["outcome"]["kind"] != "none"
    code, _, _ = run(capsys, monkeypatch, ["sparse-cycle", "-x", "0", "-y", "0", "--mode", "sp"], C5 + "\n")
    assert code == USAGE


def test_gen(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["gen", "internal:3", "--output", "text"])
    assert code == OK and len(out.splitlines()) == 8
    code, a, _ = run(capsys, monkeypatch, ["gen", "gen:sp:4:1"])
    _, b, _ = run(capsys, monkeypatch, ["gen", "gen:sp:4:1", "--seed", "2"])
    _, c, _ = run(capsys, monkeypatch, ["gen", "gen:sp:4:2"])
    assert json.loads(a)["settings"]["effective_seed"] == 1
    assert json.loads(b)["graphs"] == json.loads(c)["graphs"] != json.loads(a)["graphs"]


def test_verify(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["verify", "--suite", "v2-trichotomy", "--corpus", "internal:7",
                                                "--progress"])
    doc = json.loads(out)
    assert code == OK
    assert doc["report"]["passed"] == doc["report"]["applicable"] > 0
    assert "wall_time" not in doc["report"] and "jobs" not in doc["settings"]
    assert err.strip().endswith("1253 instances")


def test_verify_timing_and_text(capsys, monkeypatch):
    _, out, _ = run(capsys, monkeypatch, ["verify", "--suite", "duffin", "--corpus", "gen:sp:3:1", "--timing"])
    assert "wall_time" in json.loads(out)["report"]
    code, out, _ = run(capsys, monkeypatch, ["verify", "--suite", "duffin", "--corpus", "gen:sp:3:1",
                                             "--output", "text"])
    assert code == OK and out.startswith("duffin") and " OK " in out


def test_verify_inconclusive(capsys, monkeypatch):
    code, _, _ = run(capsys, monkeypatch, ["verify", "--suite", "nolink", "--corpus", "gen:wheel:1:1",
                                           "--budget", "5"])
    assert code == UNDECIDED


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["color"], "C!\n"),
        (["color", "/no/such/file"], None),
        (["verify", "--suite", "nolink", "--corpus", "internal:9"], None),
        (["verify", "--suite", "nolink", "--corpus", "internal:3", "--jobs", "0"], None),
        (["verify", "--suite", "bogus", "--corpus", "internal:3"], None),
        (["color", "--budget", "lots"], None),
        (["frobnicate"], None),
        (["color", "--format", "edgelist"], "3 1\n0 7\n"),
    ],
)
def test_usage_errors(capsys, monkeypatch, argv, stdin):
    code, _, _ = run(capsys, monkeypatch, argv, stdin)
    assert code == USAGE


def test_budget_none_accepted(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["color", "--budget", "none"], C5 + "\n")
    assert code == OK and json.loads(out)["settings"]["budget"] is None


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "isk4", "color", "--output", "text"], input=C5 + "\n",
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "colored with 3 colors" in proc.stdout
