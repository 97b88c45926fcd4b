import subprocess
import sys

import pytest

from sadicwords.cli import main, run

FIB = "alphabet a b\nmorphism fib { a -> a b ; b -> a }\nschedule repeat(fib)\nhorizon 16\n"


@pytest.fixture
def fib_file(tmp_path):
    path = tmp_path / "fib.sub"
    path.write_text(FIB)
    return str(path)


def records(text):
    out = []
    for line in text.splitlines():
        if line and not line.startswith("#"):
            out.append(dict(kv.split("=", 1) for kv in line.split(" ") if "=" in kv))
    return out


def test_header_and_lang(fib_file):
    text, code = run(["lang", fib_file, "--depth", "3", "--list"])
    assert code == 0
    head = text.splitlines()[:2]
    assert head[0].startswith("# tool=sadicwords-")
    assert "sha256=" in head[1] and "horizon=16" in head[1] and "seed=" in head[1]
    words = [r["word"] for r in records(text) if r["record"] == "word"]
    assert words == ["aab", "aba", "baa", "bab"]


def test_interp_and_di(fib_file):
    text, code = run(["interp", fib_file, "--word", "aa", "--words", "ab a"])
    assert code == 0 and records(text)[0]["count"] == "2"
    text, code = run(["di", fib_file, "--word", "aa", "--words", "ab a"])
    assert code == 0 and records(text)[0]["simple"] == "1"


def test_interp_uses_level_words_by_default(fib_file):
    text, code = run(["interp", fib_file, "--word", "abaab", "--level", "2"])
    assert code == 0 and "W=ab,aba" in text


def test_bounds_and_verify(fib_file):
    text, code = run(["bounds", fib_file, "--len-cap", "10", "--words", "ab a"])
    summary = records(text)[-1]
    assert code == 0 and summary["ok"] == "true" and summary["B"] == "a"
    assert int(summary["max_bucket"]) <= 122
    text, code = run(["verify", fib_file, "--levels", "2..4", "--depth", "32"])
    assert code == 0 and records(text)[-1]["ok"] == "true"


def test_reduce(fib_file):
    text, code = run(["reduce", fib_file, "--word", "aba", "--words", "ab a"])
    assert code == 0 and records(text)[1]["steps"] == "0"


def test_builtins_asym_and_aut():
    text, code = run(["asym", "@fibonacci", "--depth", "64"])
    assert code == 0 and records(text)[0]["estimate"] == "1"
    text, code = run(["aut", "@thue-morse", "--radius", "1", "--depth", "8"])
    assert code == 0 and records(text)[0]["census"] == "2"


def test_tsv_format(fib_file):
    text, code = run(["interp", fib_file, "--word", "aa", "--words", "ab a", "--format", "tsv"])
    lines = text.splitlines()
    assert code == 0 and lines[2].startswith("#\trecord\t") and "\t" in lines[3]


def test_usage_errors(tmp_path, fib_file, capsys):
    assert run(["lang", str(tmp_path / "missing.sub")])[1] == 2
    assert run(["interp", fib_file])[1] == 2  # no --word
    assert run(["verify", fib_file, "--levels", "x..y"])[1] == 2
    assert run(["lang", "@nonsense"])[1] == 2
    bad = tmp_path / "bad.sub"
    bad.write_text("alphabet a b\nmorphism f { a -> ; b -> a }\nschedule repeat(f)\n")
    text, code = run(["lang", str(bad)])
    assert code == 2 and ":2:" in text and "empty image" in text
    with pytest.raises(SystemExit) as info:
        main(["nonsense-command"])
    assert info.value.code == 2


def test_console_entry_point(fib_file):
    proc = subprocess.run([sys.executable, "-m", "sadicwords", "lang", fib_file, "--depth", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "record=complexity length=2 count=3" in proc.stdout


def test_library_bound_violation_exits_1(fib_file, monkeypatch):
    import sadicwords.cli as cli

    def failing(*args, **kwargs):
        raise AssertionError("#B = 9 exceeds 122 #W^7 = 8")

    monkeypatch.setattr(cli, "build_B", failing)
    text, code = run(["bounds", fib_file, "--level", "2"])
    assert code == 1
    assert records(text)[-1]["record"] == "violation"
