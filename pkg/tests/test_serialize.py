import json

import pytest

from coquasi import serialize as ser
from coquasi import zoo as cz
from coquasi.comodcat import regular_comodule
from coquasi.cqb import validate_coquasi
from coquasi.exactla import GF, QQ
from coquasi.qb import quasi_zoo
from coquasi.recon import entry_grading_diagram


def test_coquasi_roundtrip_bytes(catalogue):
    for e in catalogue:
        doc = ser.coquasi_to_json(e.h)
        text = ser.dumps(doc)
        back = ser.coquasi_from_json(json.loads(text), ser.detect_field(json.loads(text)))
        assert ser.dumps(ser.coquasi_to_json(back)) == text
        assert validate_coquasi(back).passed


def test_quasi_roundtrip_bytes():
    for e in quasi_zoo():
        text = ser.dumps(ser.quasi_to_json(e.a))
        back = ser.quasi_from_json(json.loads(text), e.a.field)
        assert ser.dumps(ser.quasi_to_json(back)) == text


def test_scalar_formats():
    e = cz.z2_omega()
    doc = ser.coquasi_to_json(e.h)
    assert doc["omega"][-1] == "-1"
    f = cz.z4_fp5()
    doc = ser.coquasi_to_json(f.h)
    assert doc["omega"][0] == {"p": 5, "v": 1}
    assert ser.detect_field(doc) == GF(5)


def test_keys_sorted():
    text = ser.dumps(ser.coquasi_to_json(cz.z2_omega().h))
    assert text.index('"coalgebra"') < text.index('"mult"') < text.index('"omega"') < text.index('"unit"')


def test_unit_constraints_rejected():
    doc = ser.coquasi_to_json(cz.z2_omega().h)
    doc["l"] = ["1", "1"]
    with pytest.raises(ser.SchemaError, match="normaliz"):
        ser.coquasi_from_json(doc, QQ)


def test_missing_and_bad_fields():
    doc = ser.coquasi_to_json(cz.z2_omega().h)
    del doc["omega"]
    with pytest.raises(ser.SchemaError):
        ser.coquasi_from_json(doc, QQ)
    doc = ser.coquasi_to_json(cz.z2_omega().h)
    doc["omega"][0] = 1.0
    with pytest.raises(ser.SchemaError):
        ser.coquasi_from_json(doc, QQ)
    doc = ser.coquasi_to_json(cz.z2_omega().h)
    doc["mult"] = doc["mult"][:1]
    with pytest.raises(ser.SchemaError):
        ser.coquasi_from_json(doc, QQ)


def test_rational_strings():
    m = ser.matrix_from_json([["1/2", "-3"], ["4/6", "0"]], QQ)
    assert ser.matrix_to_json(m) == [["1/2", "-3"], ["2/3", "0"]]


def test_comodule_roundtrip():
    v = regular_comodule(cz.z4_omega().h)
    doc = ser.comodule_to_json(v)
    w = ser.comodule_from_json(doc, QQ)
    assert w.rho == v.rho and w.h.mult == v.h.mult


def test_comodule_needs_inline_algebra():
    doc = ser.comodule_to_json(regular_comodule(cz.z2_omega().h), over="Z2_omega")
    with pytest.raises(ser.SchemaError):
        ser.comodule_from_json(doc, QQ)
    h = cz.z2_omega().h
    assert ser.comodule_from_json(doc, QQ, h).dim == 2


def test_diagram_roundtrip():
    d, _ = entry_grading_diagram(cz.klein_omega())
    text = ser.dumps(ser.diagram_to_json(d))
    d2 = ser.diagram_from_json(json.loads(text), QQ)
    assert ser.dumps(ser.diagram_to_json(d2)) == text


def test_diagram_unknown_object():
    doc = ser.diagram_to_json(entry_grading_diagram(cz.z2_omega())[0])
    doc["tensor"][0]["z"] = "nowhere"
    with pytest.raises(ser.SchemaError):
        ser.diagram_from_json(doc, QQ)
