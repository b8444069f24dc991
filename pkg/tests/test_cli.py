import subprocess
import sys
from pathlib import Path

import pytest

from boolcube import load_bn, render_bn
from boolcube.cli import main
from boolcube.dotfmt import validate_dot

DATA = Path(__file__).parent / "data"
EX1 = str(DATA / "example1.bn")

ANALYZE_EX1 = """\
attractors: {000}
circular: none
conjugate_bijective: true
counting_condition: true
criticality: none
eosd_class: none
eosd_subnetwork: none
fixed_points: {000}
non_expansive: false
parity_class: Neither
self_dual: false
shih_dong: false
strong_convergence: false
weak_convergence: true
"""

GRAPH_EX1 = """\
1 + 2
1 - 3
2 - 1
2 + 3
3 + 1
3 - 2
cycle (1 + 2 -) sign=negative chordless=true delocalizing={3}
cycle (1 - 3 +) sign=negative chordless=true delocalizing={2}
cycle (2 + 3 -) sign=negative chordless=true delocalizing={1}
cycle (1 + 2 + 3 +) sign=positive chordless=false delocalizing={1,2,3}
cycle (1 - 3 - 2 -) sign=negative chordless=false delocalizing={1,2,3}
"""

DYNAMICS_EX1 = """\
100 -> 000
100 -> 110
010 -> 000
010 -> 011
110 -> 010
001 -> 000
001 -> 101
101 -> 100
011 -> 001
111 -> 110
111 -> 101
111 -> 011
attractor {000} punctual
weak_convergence: true
strong_convergence: false
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_worked_example(capsys):
    code, out, _ = run(capsys, "analyze", EX1)
    assert code == 0
    assert out == ANALYZE_EX1


def test_analyze_classifies_the_fixtures(capsys):
    _, out, _ = run(capsys, "analyze", str(DATA / "crit2.bn"))
    assert "criticality: 2-critical" in out
    assert "eosd_class: none" in out
    assert "fixed_points: {000,111}" in out

    _, out, _ = run(capsys, "analyze", str(DATA / "crit0.bn"))
    assert "criticality: 0-critical" in out
    assert "eosd_class: none" in out
    assert "fixed_points: {}" in out

    _, out, _ = run(capsys, "analyze", str(DATA / "esd4.bn"))
    assert "criticality: 2-critical" in out
    assert "eosd_class: EvenSelfDual" in out
    assert "circular: none" in out


def test_subnets_worked_example(capsys):
    code, out, _ = run(capsys, "subnets", EX1)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "I={1} z[2]=0 z[3]=0 fixed_points=1 eosd=none"
    assert lines[-2] == "census: min=1 max=1"
    assert lines[-1] == "listed: 18"
    assert sum("fixed_points=1" in line for line in lines) == 18


def test_subnets_eosd_filter(capsys):
    code, out, _ = run(capsys, "subnets", str(DATA / "esd4.bn"), "--eosd-only")
    assert code == 0
    assert out == "census: min=1 max=2\nlisted: 0\n"
    code, out, _ = run(
        capsys, "subnets", str(DATA / "esd4.bn"), "--eosd-only", "--include-self"
    )
    assert out.splitlines()[0] == "I={1,2,3,4} fixed_points=2 eosd=EvenSelfDual"
    assert out.splitlines()[-1] == "listed: 1"


def test_graph_worked_example(capsys):
    code, out, _ = run(capsys, "graph", EX1)
    assert code == 0
    assert out == GRAPH_EX1


def test_graph_at_point(capsys):
    code, out, _ = run(capsys, "graph", EX1, "--at", "000")
    assert code == 0
    assert out == (
        "1 + 2\n2 + 3\n3 + 1\n"
        "cycle (1 + 2 + 3 +) sign=positive chordless=true delocalizing={}\n"
    )


def test_dynamics_worked_example(capsys):
    code, out, _ = run(capsys, "dynamics", EX1)
    assert code == 0
    assert out == DYNAMICS_EX1


def test_verify_exhaustive(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "MAIN_EOSD", "--mode", "exhaustive", "--n", "2"
    )
    assert code == 0
    assert "candidates=256" in out
    assert "counterexamples=0" in out
    assert "generator=exhaustive(n=2)" in out
    assert "wall_time_s=" in out


def test_verify_lemma1_uses_subsets(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--theorem",
        "LEMMA1_HYPERCUBE",
        "--mode",
        "exhaustive",
        "--n",
        "3",
    )
    assert code == 0
    assert "generator=subsets(n=3)" in out
    assert "confirmed=2" in out


def test_verify_family(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--theorem",
        "ANDNET_2CRITICAL",
        "--mode",
        "family",
        "--family",
        "andnets",
        "--n",
        "2",
    )
    assert code == 0
    assert "candidates=81" in out
    assert "counterexamples=0" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--theorem", "NO_SUCH", "--mode", "exhaustive", "--n", "2"),
        ("verify", "--theorem", "ROBERT", "--mode", "sample", "--n", "2"),
        ("verify", "--theorem", "ROBERT", "--mode", "family", "--n", "2"),
        ("verify", "--theorem", "LEMMA1_HYPERCUBE", "--mode", "sample", "--n", "2", "--seed", "1"),
        ("search", "--question", "Q9", "--mode", "exhaustive", "--n", "2"),
        ("analyze", str(DATA / "missing.bn")),
        ("gen",),
        ("gen", "--circular", "3", "++", "--random", "1", "2"),
        ("gen", "--circular", "x", "++"),
        ("gen", "--circular", "2", "+*"),
        ("export-dot", "--input", EX1, "--what", "gfx", "--out", "/tmp/x.dot"),
        ("export-dot", "--input", EX1, "--what", "gf", "000", "--out", "/tmp/x.dot"),
        ("export-dot", "--input", EX1, "--what", "nope", "--out", "/tmp/x.dot"),
        ("export-dot", "--input", str(DATA / "example1.sg"), "--what", "gamma", "--out", "/tmp/x.dot"),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_width_cap_exits_3(capsys):
    code, _, err = run(
        capsys, "verify", "--theorem", "ROBERT", "--mode", "exhaustive", "--n", "4"
    )
    assert code == 3
    assert "error:" in err


def test_search_reports_no_discoveries(capsys):
    code, out, _ = run(
        capsys,
        "search",
        "--question",
        "Q2_0CRITICAL_ANDNET",
        "--mode",
        "family",
        "--family",
        "andnets",
        "--n",
        "2",
    )
    assert code == 0
    assert "hypothesis_hits=2" in out
    assert "discoveries=0" in out


def test_search_budget(capsys):
    code, out, _ = run(
        capsys,
        "search",
        "--question",
        "Q1_NEG_LOCAL_CYCLES",
        "--mode",
        "exhaustive",
        "--n",
        "2",
        "--budget",
        "10",
    )
    assert code == 0
    assert "examined=10" in out


def test_export_dot_outputs(tmp_path, capsys):
    gf = tmp_path / "gf.dot"
    code, _, _ = run(capsys, "export-dot", "--input", EX1, "--what", "gf", "--out", str(gf))
    assert code == 0
    text = gf.read_text()
    validate_dot(text)
    assert text.startswith("digraph interaction {")
    assert '"1" -> "2" [arrowhead=normal];' in text
    assert '"1" -> "3" [arrowhead=tee, sign="-"];' in text

    gamma = tmp_path / "gamma.dot"
    run(capsys, "export-dot", "--input", EX1, "--what", "gamma", "--out", str(gamma))
    text = gamma.read_text()
    validate_dot(text)
    assert text.startswith("digraph dynamics {")
    assert '"000" [shape=doublecircle];' in text
    assert text.count("doublecircle") == 1

    local = tmp_path / "local.dot"
    run(capsys, "export-dot", "--input", EX1, "--what", "gfx", "000", "--out", str(local))
    text = local.read_text()
    validate_dot(text)
    assert "tee" not in text  # all three local arcs at 000 are positive

    from_graph = tmp_path / "from_graph.dot"
    code, _, _ = run(
        capsys,
        "export-dot",
        "--input",
        str(DATA / "example1.sg"),
        "--what",
        "gf",
        "--out",
        str(from_graph),
    )
    assert code == 0
    assert from_graph.read_text() == gf.read_text()


def test_gen_random_is_reproducible(capsys):
    code, out, _ = run(capsys, "gen", "--random", "2", "42")
    assert code == 0
    assert out == "components 1 2\n00 -> 11\n10 -> 00\n01 -> 01\n11 -> 01\n"
    _, again, _ = run(capsys, "gen", "--random", "2", "42")
    assert again == out


def test_gen_circular(capsys):
    code, out, _ = run(capsys, "gen", "--circular", "3", "+--")
    assert code == 0
    assert "010 -> 010" in out and "101 -> 101" in out  # positive form, two fixed points
    code, out, _ = run(capsys, "gen", "--circular", "3", "+-+")
    assert code == 0
    assert "->" in out and not any(
        line.split(" -> ")[0] == line.split(" -> ")[1].rstrip()
        for line in out.splitlines()[1:]
    )


def test_gen_andnet_matches_worked_example(capsys):
    code, out, _ = run(capsys, "gen", "--andnet", str(DATA / "example1.sg"))
    assert code == 0
    assert out == render_bn(load_bn(EX1))


def test_console_entry_points():
    result = subprocess.run(
        ["boolcube", "analyze", EX1], capture_output=True, text=True
    )
    assert result.returncode == 0
    assert result.stdout == ANALYZE_EX1
    module = subprocess.run(
        [sys.executable, "-m", "boolcube", "analyze", EX1],
        capture_output=True,
        text=True,
    )
    assert module.returncode == 0
    assert module.stdout == ANALYZE_EX1
