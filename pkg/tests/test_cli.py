import io
import json
from pathlib import Path

from atr.cli import main

DATA = Path(__file__).parent / "data"
CORPUS = sorted(str(p) for p in (DATA / "corpus").glob("*.txt"))
AFFIXES = str(DATA / "example_affixes.txt")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_search_single_word_corpus():
    code, out, _ = run("search", "chinensis", *CORPUS)
    assert code == 0
    files = {line.split(": ", 1)[0] for line in out.splitlines()}
    assert {Path(f).name for f in files} == {"herbal.txt", "indexing.txt"}
    assert "ma**chine** **is**" in out
    assert "Bupleurum **chinens**e" in out


def test_search_composite_corpus():
    code, out, _ = run("search", "Aproximate textual retrieval", *CORPUS, "--affixes", AFFIXES)
    assert code == 0
    files = {Path(line.split(": ", 1)[0]).name for line in out.splitlines()}
    assert files == {"herbal.txt", "indexing.txt", "signatures.txt", "fulltext.txt"}


def test_search_jsonl_roundtrip():
    code, out, _ = run("search", "chinensis", *CORPUS, "--output", "jsonl", "--context", "10")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records and all(set(r) == {"file", "component", "spans", "snippet"} for r in records)
    herbal = [r for r in records if r["file"].endswith("herbal.txt")]
    assert [r["spans"][0][0] for r in herbal] == sorted(r["spans"][0][0] for r in herbal)
    assert [Path(r["file"]).name for r in records] == sorted(Path(r["file"]).name for r in records)


def test_search_exit_codes(tmp_path):
    assert run("search", "chinensis")[0] == 2
    assert run("search", "chinensis", str(tmp_path / "missing.txt"))[0] == 2
    assert run("search", "zebra", CORPUS[0])[0] == 1
    assert run("search", "   ", CORPUS[0])[0] == 2


def test_search_skips_unreadable(tmp_path):
    code, out, err = run("search", "chinensis", str(tmp_path / "missing.txt"), *CORPUS)
    assert code == 0
    assert "missing.txt" in err
    assert out


def test_search_invalid_utf8(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_bytes(b"caf\xe9 chinensis")
    code, out, err = run("search", "chinensis", str(path))
    assert code == 0
    assert "invalid UTF-8" in err


def test_search_case_sensitive(tmp_path):
    path = tmp_path / "upper.txt"
    path.write_text("CHINENSIS", encoding="utf-8")
    assert run("search", "chinensis", str(path))[0] == 0
    assert run("search", "chinensis", str(path), "--case-sensitive")[0] == 1


def test_explain_composite():
    code, out, _ = run("explain", "Aproximate textual retrieval", "--affixes", AFFIXES, "--percent-scan", "50")
    lines = out.splitlines()
    assert code == 0
    for expected in ("Aproxim.{0,60}textual", "roximate.{0,60}retriev", "textu.{0,60}rieval",
                     "(?:Aproxim.{0,60}textual|roximate.{0,60}retriev|textu.{0,60}rieval)"):
        assert expected in lines
    assert "m=6 n=3 b=3" in lines


def test_explain_single_and_literal():
    code, out, _ = run("explain", "chinensis")
    assert code == 0 and "chinen.{0,2}s" in out.splitlines()
    code, out, _ = run("explain", "ab")
    assert out.splitlines()[-1] == "ab"


def test_affixes_env_fallback(monkeypatch):
    monkeypatch.setenv("ATR_AFFIXES", AFFIXES)
    _, out, _ = run("explain", "Aproximate textual retrieval")
    assert "textu.{0,60}rieval" in out.splitlines()


def test_bad_affix_file(tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("[bogus]\n", encoding="utf-8")
    code, _, err = run("explain", "some query here", "--affixes", str(path))
    assert code == 2 and "line 1" in err


def test_estimate():
    code, out, _ = run("estimate", "abba baab", "--length", "100000", "--alphabet", "ab", "--epsilon", "0.01")
    assert code == 0
    assert "composite:" in out and "component 1:" in out


def test_estimate_model_from(tmp_path):
    path = tmp_path / "model.txt"
    path.write_text("abc abc abc", encoding="utf-8")
    code, out, _ = run("estimate", "abc", "--model-from", str(path))
    assert code == 0 and "expected=" in out


def test_estimate_domain_error():
    code, _, err = run("estimate", "xyz", "--alphabet", "ab")
    assert code == 2 and "not in the model alphabet" in err


def test_bench_jsonl():
    code, out, _ = run("bench", "approximate textual retrieval", "--epsilon", "0,0.05", "--trials", "20",
                       "--blocks", "1,3", "--seed", "4")
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    assert [(r["b"], r["epsilon"]) for r in reports] == [(1, 0.0), (1, 0.05), (3, 0.0), (3, 0.05)]
    assert all(r["recall"] == 1.0 for r in reports if r["epsilon"] == 0.0)
    assert run("bench", "approximate textual retrieval", "--epsilon", "0.05", "--trials", "20", "--seed", "4")[1] == \
        run("bench", "approximate textual retrieval", "--epsilon", "0.05", "--trials", "20", "--seed", "4")[1]


def test_usage_error():
    assert run("frobnicate")[0] == 2
    assert run("--help")[0] == 0


def test_estimate_length_forms():
    a = run("estimate", "approximate textual retrieval", "--length", "1e6")
    b = run("estimate", "approximate textual retrieval", "--length", "1000000")
    assert a[0] == 0 and a[1] == b[1]
    assert run("estimate", "approximate textual retrieval", "--length", "2.5")[0] == 2
