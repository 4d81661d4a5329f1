import json

from click.testing import CliRunner

from nbcolor.balance import is_3_balanced
from nbcolor.cli import main
from nbcolor.graphs import parse_graph6

K33 = "EFz_"
PRISM = "E{Sw"
PETERSEN = "IheA@GUAo"
C5 = "Dhc"


def run(*args, **kwargs):
    return CliRunner().invoke(main, list(args), **kwargs)


# -- solve -------------------------------------------------------------------

def test_solve_one():
    result = run("solve", K33)
    assert result.exit_code == 0
    record = json.loads(result.stdout)
    assert record["status"] == "yes"
    assert is_3_balanced(parse_graph6(K33), record["coloring"])


def test_solve_stdin():
    result = run("solve", "-", input=f"{K33}\n{C5}\n")
    assert result.exit_code == 0
    records = [json.loads(line) for line in result.stdout.splitlines()]
    assert [r["status"] for r in records] == ["yes", "no"]
    assert records[1]["graph6"] == C5


def test_solve_budget_exit_code():
    result = run("solve", K33, "--budget", "2")
    assert result.exit_code == 1
    assert json.loads(result.stdout)["status"] == "budget"


def test_solve_bad_graph6():
    result = run("solve", "@@@")
    assert result.exit_code == 1
    assert "bad graph6" in result.stderr


# -- verify ------------------------------------------------------------------

def test_verify_balanced(tmp_path):
    coloring = tmp_path / "coloring.json"
    coloring.write_text("[0, 1, 2, 0, 1, 2]")
    result = run("verify", PRISM, str(coloring))
    assert result.exit_code == 0
    assert json.loads(result.stdout)["balanced"]


def test_verify_unbalanced(tmp_path):
    coloring = tmp_path / "coloring.json"
    coloring.write_text("[0, 0, 0, 0, 0, 0]")
    result = run("verify", PRISM, str(coloring))
    assert result.exit_code == 1
    assert not json.loads(result.stdout)["balanced"]


# -- family ------------------------------------------------------------------

def test_family_applicable():
    result = run("family", "petersen", "6", "1")
    assert result.exit_code == 0
    graph6, coloring = result.stdout.splitlines()
    assert is_3_balanced(parse_graph6(graph6), json.loads(coloring))


def test_family_not_applicable():
    result = run("family", "petersen", "5", "2")
    assert result.exit_code == 0
    assert result.stdout.strip() == PETERSEN
    assert "no balanced coloring" in result.stderr


def test_family_unknown():
    result = run("family", "heawood", "6")
    assert result.exit_code == 1


# -- scan --------------------------------------------------------------------

def test_scan_mobius():
    result = run("scan", "mobius", "--n-max", "12")
    assert result.exit_code == 0
    rows = [json.loads(line) for line in result.stdout.splitlines()]
    assert len(rows) == 5
    assert all(row["agree"] for row in rows)
    assert "5 members scanned: agree" in result.stderr


def test_scan_missing_range():
    assert run("scan", "petersen").exit_code == 1


# -- classify ----------------------------------------------------------------

def test_classify_by_order():
    result = run("classify", "--n", "6")
    assert result.exit_code == 0
    records = [json.loads(line) for line in result.stdout.splitlines()]
    assert len(records) == 2
    assert all(r["balanced"] == "yes" for r in records)
    assert "2 graphs: 2 balanced" in result.stderr
    assert "cross-checks passed" in result.stderr


def test_classify_corpus_file(tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text(f"{PRISM}\n{PETERSEN}\n")
    result = run("classify", "--in", str(corpus))
    assert result.exit_code == 0
    records = [json.loads(line) for line in result.stdout.splitlines()]
    assert [r["balanced"] for r in records] == ["yes", "no"]


def test_classify_requires_one_source(tmp_path):
    assert run("classify").exit_code == 2
    corpus = tmp_path / "corpus.g6"
    corpus.write_text(f"{PRISM}\n")
    assert run("classify", "--n", "6", "--in", str(corpus)).exit_code == 2


# -- cubic analyze -----------------------------------------------------------

def test_cubic_analyze_yes():
    result = run("cubic", "analyze", PRISM)
    assert result.exit_code == 0
    record = json.loads(result.stdout)
    assert record["status"] == "yes"
    assert record["tait_colorable"]


def test_cubic_analyze_no():
    result = run("cubic", "analyze", PETERSEN)
    assert result.exit_code == 0
    record = json.loads(result.stdout)
    assert record["status"] == "no"
    assert record["tait_colorable"] is False


def test_cubic_analyze_non_cubic():
    assert run("cubic", "analyze", C5).exit_code == 1


# -- circulant verify --------------------------------------------------------

def test_circulant_verify_ok():
    result = run("circulant", "verify", "--family", "petersen", "--a", "1", "--j", "3")
    assert result.exit_code == 0
    record = json.loads(result.stdout)
    assert record["determinant"] == "27"
    assert record["checks_passed"]


def test_circulant_verify_singular():
    result = run("circulant", "verify", "--family", "petersen", "--a", "1", "--j", "1")
    assert result.exit_code == 1
    assert not json.loads(result.stdout)["checks_passed"]


def test_help():
    assert run("--help").exit_code == 0
