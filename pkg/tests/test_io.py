import json
from pathlib import Path

import pytest

from hopfexp.catalog import preset, preset_names
from hopfexp.io import DocumentError, dumps, emit, expected_of, load, loads, parse, save
from hopfexp.hopf import same_structure

GOLDEN = Path(__file__).resolve().parents[1] / "docs" / "golden"


def _doc(name):
    e = preset(name)
    return emit(e.algebra, e.expected)


@pytest.mark.parametrize("name", preset_names())
def test_roundtrip_is_byte_identical(name):
    text = dumps(_doc(name))
    H = loads(text)
    assert same_structure(H, preset(name).algebra)
    assert dumps(emit(H, expected_of(json.loads(text)))) == text


def test_emit_parse_emit_is_idempotent():
    doc = _doc("taft3")
    assert emit(parse(doc)) == emit(preset("taft3").algebra)


@pytest.mark.parametrize("name", ["s3", "sweedler_q", "d4_twisted"])
def test_golden_files(name):
    text = (GOLDEN / f"{name}.json").read_text()
    assert dumps(_doc(name)) == text
    H, doc = load(GOLDEN / f"{name}.json")
    assert same_structure(H, preset(name).algebra)
    assert doc["metadata"]["expected"]["exponent"] == {"s3": 6, "sweedler_q": "infinite", "d4_twisted": 4}[name]


def test_save_and_load(tmp_path):
    path = tmp_path / "h.json"
    text = save(preset("sweedler_f3").algebra, path, extra={"note": "x"})
    assert path.read_text() == text
    H, doc = load(path)
    assert doc["metadata"]["note"] == "x"
    assert str(H.field) == "F_3"


def _corrupt(name, mutate):
    doc = json.loads(dumps(_doc(name)))
    mutate(doc)
    return doc


def test_corrupted_antipode_names_the_axiom():
    def bump(doc):
        doc["antipode"][0][2] = "2"

    with pytest.raises(DocumentError, match="antipode"):
        parse(_corrupt("s3", bump))


def test_corrupted_mult_fails_verification():
    def bump(doc):
        doc["mult"][5][3] = "1"  # x g = -g x becomes x g = g x

    with pytest.raises(DocumentError, match="axiom check failed"):
        parse(_corrupt("sweedler_q", bump))


@pytest.mark.parametrize("mutate,message", [
    (lambda d: d.update(format_version=2), "format_version"),
    (lambda d: d.pop("comult"), "missing field 'comult'"),
    (lambda d: d["mult"][0].__setitem__(3, "1/x"), r"mult\[0\]: malformed scalar"),
    (lambda d: d["mult"][0].__setitem__(3, 1), "scalar must be a string"),
    (lambda d: d["comult"][0].__setitem__(1, 99), "out of range"),
    (lambda d: d["mult"].append(list(d["mult"][0])), "duplicate"),
    (lambda d: d.update(labels=["a"] * d["dimension"]), "labels"),
    (lambda d: d.update(counit=d["counit"][:-1]), "counit"),
    (lambda d: d.update(field={"kind": "prime", "p": 4}), "bad field"),
    (lambda d: d.update(dimension=0), "dimension"),
    (lambda d: d["antipode"][0].pop(), "expected"),
])
def test_malformed_documents(mutate, message):
    with pytest.raises(DocumentError, match=message):
        parse(_corrupt("s3", mutate))


def test_non_grouplike_metadata_rejected():
    def forge(doc):
        doc["metadata"]["grouplikes"] = [[[1, "1"]]]

    with pytest.raises(DocumentError, match="grouplike"):
        parse(_corrupt("sweedler_q", forge))


def test_not_json():
    with pytest.raises(DocumentError, match="not valid JSON"):
        loads("{")
    with pytest.raises(DocumentError):
        parse([])


def test_scalar_encodings():
    doc = _doc("taft3")
    assert any(" " in e[3] or "z" in e[3] for e in doc["mult"])
    doc = _doc("sweedler_f5")
    assert all(e[3].endswith("mod 5") for e in doc["mult"])
