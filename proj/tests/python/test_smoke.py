import json
import os
import pathlib

import lbext


def test_scalar_roundtrip():
    assert lbext.canonical_scalar("2i") == "0+2*i"
    assert lbext.canonical_scalar("4/2") == "2"
    assert lbext.scalar_binop("i", "i", "*") == "-1"


def test_corpus_listing():
    names = [name for name, _, _ in lbext.corpus_entries()]
    assert "heisenberg" in names
    assert json.loads(lbext.corpus_text("heisenberg"))["basis"] == ["x", "y", "h"]


def test_cli_check():
    code, out, _ = lbext.run_cli(["check", "heisenberg", "bialgebra"])
    assert code == 0
    assert out == "valid\n"


def test_classify_heisenberg():
    report = lbext.classify("heisenberg", [["0", "0", "1"], ["0", "0", "2i"]])
    assert report["a_space"]["dimension"] == 1
    kinds = [[f["kind"] for f in c["families"]] for s in report["samples"] for c in s["cases"]]
    assert kinds == [["normalized", "D = 0"], ["D = 0"], ["normalized", "D = 0"]]


def test_bundled_files_match():
    corpus = pathlib.Path(os.environ.get("LBEXT_CORPUS", pathlib.Path(__file__).parents[2] / "corpus"))
    for name, _, _ in lbext.corpus_entries():
        assert (corpus / f"{name}.json").read_text() == lbext.corpus_text(name)


def test_errors_raise():
    try:
        lbext.canonical_scalar("1/0")
    except lbext.LbextError:
        pass
    else:
        raise AssertionError("expected an error")
