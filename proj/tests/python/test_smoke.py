import json

import pytest

import catkit


def fixture(*args):
    code, out, err = catkit.cli(["zoo", *args])
    assert code == 0, err
    return out


def test_zoo_check_pipeline():
    fix = fixture("graphs", "--vertex-bound", "2")
    assert catkit.kind(fix) == "lax_monoidal_indexed"
    rep = catkit.check(fix)
    assert rep["ok"] and rep["checked"] > 0 and not rep["violations"]


def test_monoidal_grothendieck_object_count():
    fix = fixture("graphs", "--vertex-bound", "2")
    total = catkit.monoidal_grothendieck(fix)
    assert catkit.kind(total) == "monoidal_fibration"
    assert catkit.check(total)["ok"]
    doc = json.loads(total)
    # one empty graph, two graphs on one vertex, sixteen on two
    assert len(doc["carrier"]["total"]["objects"]) == 19


def test_canonical_is_idempotent():
    fix = fixture("slices", "--base", "square")
    canon = catkit.canonical(fix)
    assert catkit.canonical(canon) == canon


def test_transfer_roundtrip():
    fix = fixture("graphs", "--vertex-bound", "2")
    fw = catkit.global_to_fibrewise(fix)
    assert catkit.kind(fw) == "fibrewise_monoidal"
    assert catkit.check(fw)["ok"]
    back = catkit.fibrewise_to_global(fw)
    assert catkit.kind(back) == "lax_monoidal_indexed"
    rep = catkit.roundtrip(fix)
    assert rep["ok"], rep["violations"]


def test_grothendieck_and_back():
    fix = fixture("random-indexed", "--seed", "7")
    fib = catkit.grothendieck(fix)
    assert catkit.kind(fib) == "fibration"
    assert catkit.check(fib)["ok"]
    assert catkit.kind(catkit.indexed_of(fib)) == "indexed"
    assert catkit.roundtrip(fix)["ok"]


def test_cocartesian_witness_of_base():
    fix = fixture("random-indexed", "--seed", "3")
    base = json.dumps(dict(json.loads(fix)["base"], kind="fincat"))
    w = catkit.cocartesian_witness(base)
    assert w is not None and catkit.kind(w) == "cocartesian"
    assert catkit.check(w)["ok"]


def test_errors():
    with pytest.raises(catkit.ParseError):
        catkit.check("not json at all")
    with pytest.raises(catkit.ParseError):
        catkit.check(json.dumps({"kind": "mystery"}))
    assert issubclass(catkit.ParseError, catkit.CatError)
    code, _, err = catkit.cli(["zoo", "graphs", "--vertex-bound", "3"])
    assert code == 2 and "input error" in err


def test_cli_detects_broken_laws(tmp_path):
    fix = json.loads(fixture("random-indexed", "--seed", "11"))
    base = fix["base"]
    victim = sorted(base["compose"])[0]
    base["compose"][victim] = sorted(base["morphisms"])[-1]
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(fix))
    code, out, _ = catkit.cli(["check", str(p), "--format", "records"])
    assert code == 1 and out.startswith("witness\t")
