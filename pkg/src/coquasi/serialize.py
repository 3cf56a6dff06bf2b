"""Canonical JSON for every structure the library handles.

Matrices are row-major lists of rows. Rational scalars are lowest-terms
strings (``"-1/2"``); prime-field scalars are ``{"p": p, "v": v}``. Output
always uses sorted keys so identical data gives identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .coalg import Algebra, Coalgebra
from .comodcat import Comodule, DualComoduleData
from .cqb import CoquasiBialgebra, Preantipode
from .exactla import QQ, Field, GF, LinearMap
from .qb import QuasiBialgebra, QuasiPreantipode
from .recon import CoendCoalgebra, MonoidalDiagram, Morphism


class SchemaError(ValueError):
    """Malformed input document."""


# scalars and matrices -----------------------------------------------------


def detect_field(doc) -> Field:
    """First prime-field scalar found anywhere in ``doc`` decides; otherwise QQ."""
    stack = [doc]
    while stack:
        x = stack.pop()
        if isinstance(x, dict):
            if set(x) == {"p", "v"}:
                return GF(int(x["p"]))
            stack.extend(x.values())
        elif isinstance(x, list):
            stack.extend(x)
    return QQ


def _scalar(fld: Field, x):
    if isinstance(x, bool) or isinstance(x, float):
        raise SchemaError(f"bad scalar {x!r}")
    try:
        return fld.parse(x)
    except (ValueError, TypeError, ZeroDivisionError, KeyError) as exc:
        raise SchemaError(f"bad scalar {x!r}: {exc}") from None


def matrix_to_json(m) -> list:
    a = m.entries if isinstance(m, LinearMap) else np.asarray(m, dtype=object)
    fld = m.field if isinstance(m, LinearMap) else _field_of_array(a)
    return [[fld.format(x) for x in row] for row in a]


def vector_to_json(v, fld: Field) -> list:
    return [fld.format(x) for x in np.asarray(v, dtype=object).ravel()]


def _field_of_array(a):
    from .exactla import _infer_field

    return _infer_field(a)


def matrix_from_json(obj, fld: Field, shape=None, what: str = "matrix") -> LinearMap:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise SchemaError(f"{what}: expected a non-empty list of rows")
    width = len(obj[0])
    if any(len(r) != width for r in obj):
        raise SchemaError(f"{what}: ragged rows")
    a = np.empty((len(obj), width), dtype=object)
    for i, row in enumerate(obj):
        for j, x in enumerate(row):
            a[i, j] = _scalar(fld, x)
    if shape is not None and a.shape != tuple(shape):
        raise SchemaError(f"{what}: shape {a.shape}, expected {tuple(shape)}")
    return LinearMap(a, fld)


def vector_from_json(obj, fld: Field, length: int, what: str = "vector") -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != length:
        raise SchemaError(f"{what}: expected a list of {length} scalars")
    out = np.empty(length, dtype=object)
    for i, x in enumerate(obj):
        out[i] = _scalar(fld, x)
    return out


def _need(doc, keys, what):
    if not isinstance(doc, dict):
        raise SchemaError(f"{what}: expected an object")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise SchemaError(f"{what}: missing {', '.join(missing)}")


def _dim(doc, what) -> int:
    n = doc.get("dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SchemaError(f"{what}: dim must be a positive integer")
    return n


# coalgebras, algebras, coquasi-bialgebras ---------------------------------


def coalgebra_to_json(c: Coalgebra) -> dict:
    return {"dim": c.dim, "delta": matrix_to_json(c.delta), "counit": vector_to_json(c.counit.entries, c.field)}


def coalgebra_from_json(doc, fld: Field) -> Coalgebra:
    _need(doc, ("dim", "delta", "counit"), "coalgebra")
    n = _dim(doc, "coalgebra")
    delta = matrix_from_json(doc["delta"], fld, (n * n, n), "delta")
    counit = vector_from_json(doc["counit"], fld, n, "counit")
    return Coalgebra(delta, LinearMap(counit.reshape(1, n), fld))


def algebra_to_json(a: Algebra) -> dict:
    return {"dim": a.dim, "mult": matrix_to_json(a.mult), "unit": vector_to_json(a.unit.entries, a.field)}


def algebra_from_json(doc, fld: Field) -> Algebra:
    _need(doc, ("dim", "mult", "unit"), "algebra")
    n = _dim(doc, "algebra")
    mult = matrix_from_json(doc["mult"], fld, (n, n * n), "mult")
    unit = vector_from_json(doc["unit"], fld, n, "unit")
    return Algebra(mult, LinearMap(unit.reshape(n, 1), fld))


def _reject_lr(doc, what):
    for k in ("l", "r"):
        if k in doc:
            raise SchemaError(
                f"{what}: unit constraint {k!r} given; only normalized data (l = r = counit) "
                "is accepted, so apply the normalizing gauge transformation first"
            )


def coquasi_to_json(h: CoquasiBialgebra) -> dict:
    return {
        "coalgebra": coalgebra_to_json(h.coalgebra),
        "mult": matrix_to_json(h.mult),
        "unit": vector_to_json(h.unit.entries, h.field),
        "omega": vector_to_json(h.omega.entries, h.field),
    }


def coquasi_from_json(doc, fld: Field, name: str = "") -> CoquasiBialgebra:
    if isinstance(doc, dict):
        _reject_lr(doc, "coquasi-bialgebra")
    _need(doc, ("coalgebra", "mult", "unit", "omega"), "coquasi-bialgebra")
    c = coalgebra_from_json(doc["coalgebra"], fld)
    n = c.dim
    mult = matrix_from_json(doc["mult"], fld, (n, n * n), "mult")
    unit = vector_from_json(doc["unit"], fld, n, "unit")
    omega = vector_from_json(doc["omega"], fld, n**3, "omega")
    return CoquasiBialgebra(c, mult, LinearMap(unit.reshape(n, 1), fld), LinearMap(omega.reshape(1, -1), fld), name)


def quasi_to_json(a: QuasiBialgebra) -> dict:
    return {
        "algebra": algebra_to_json(a.algebra),
        "delta": matrix_to_json(a.delta),
        "counit": vector_to_json(a.counit.entries, a.field),
        "phi": vector_to_json(a.phi, a.field),
    }


def quasi_from_json(doc, fld: Field, name: str = "") -> QuasiBialgebra:
    if isinstance(doc, dict):
        _reject_lr(doc, "quasi-bialgebra")
    _need(doc, ("algebra", "delta", "counit", "phi"), "quasi-bialgebra")
    alg = algebra_from_json(doc["algebra"], fld)
    n = alg.dim
    delta = matrix_from_json(doc["delta"], fld, (n * n, n), "delta")
    counit = vector_from_json(doc["counit"], fld, n, "counit")
    phi = vector_from_json(doc["phi"], fld, n**3, "phi")
    return QuasiBialgebra(alg, delta, LinearMap(counit.reshape(1, n), fld), phi.reshape(n, n, n), name)


def preantipode_to_json(s) -> dict:
    m = s.s_map
    return {"dim": m.cod_dim, "S": matrix_to_json(m)}


def preantipode_from_json(doc, fld: Field, n: int, quasi: bool = False):
    _need(doc, ("S",), "preantipode")
    m = matrix_from_json(doc["S"], fld, (n, n), "S")
    return QuasiPreantipode(m) if quasi else Preantipode(m)


# comodules ----------------------------------------------------------------


def comodule_to_json(v: Comodule, over=None) -> dict:
    return {
        "over": over if over is not None else coquasi_to_json(v.h),
        "dim": v.dim,
        "rho": matrix_to_json(v.rho),
    }


def comodule_from_json(doc, fld: Field, h: CoquasiBialgebra | None = None) -> Comodule:
    _need(doc, ("over", "dim", "rho"), "comodule")
    over = doc["over"]
    if isinstance(over, dict):
        h = coquasi_from_json(over, fld)
    elif h is None:
        raise SchemaError(f"comodule over {over!r}: the coquasi-bialgebra is not inline")
    d = _dim(doc, "comodule")
    rho = matrix_from_json(doc["rho"], fld, (h.dim * d, d), "rho")
    return Comodule(h, rho, doc.get("name", ""))


def dual_comodule_to_json(dd: DualComoduleData) -> dict:
    return {
        "dual": comodule_to_json(dd.dual),
        "ev": matrix_to_json(dd.ev),
        "db": matrix_to_json(dd.db),
    }


# diagrams -----------------------------------------------------------------


def diagram_to_json(d: MonoidalDiagram) -> dict:
    unit_obj, phi0 = d.unit
    return {
        "objects": [{"name": x, "dim": n} for x, n in d.objects.items()],
        "morphisms": [{"name": m.name, "from": m.src, "to": m.dst, "matrix": matrix_to_json(m.matrix)} for m in d.morphisms],
        "unit": {"object": unit_obj, "phi0": matrix_to_json(phi0)},
        "tensor": [{"x": x, "y": y, "z": z, "phi": matrix_to_json(phi)} for (x, y), (z, phi) in d.tensor.items()],
        "associators": [{"x": x, "y": y, "z": z, "matrix": matrix_to_json(a)} for (x, y, z), a in d.associators.items()],
        "duals": [{"x": x, "dual": xs, "ev": matrix_to_json(ev), "db": matrix_to_json(db)} for x, (xs, ev, db) in d.duals.items()],
    }


def diagram_from_json(doc, fld: Field) -> MonoidalDiagram:
    _need(doc, ("objects", "morphisms", "unit", "tensor", "associators", "duals"), "diagram")
    objects = {}
    for o in doc["objects"]:
        _need(o, ("name", "dim"), "object")
        if o["name"] in objects:
            raise SchemaError(f"duplicate object {o['name']!r}")
        objects[str(o["name"])] = _dim(o, f"object {o['name']}")

    def obj(name, what):
        if name not in objects:
            raise SchemaError(f"{what}: unknown object {name!r}")
        return name

    morphisms = []
    for m in doc["morphisms"]:
        _need(m, ("name", "from", "to", "matrix"), "morphism")
        src, dst = obj(m["from"], m["name"]), obj(m["to"], m["name"])
        mat = matrix_from_json(m["matrix"], fld, (objects[dst], objects[src]), f"morphism {m['name']}")
        morphisms.append(Morphism(str(m["name"]), src, dst, mat))
    u = doc["unit"]
    _need(u, ("object", "phi0"), "unit")
    uo = obj(u["object"], "unit")
    unit = (uo, matrix_from_json(u["phi0"], fld, (objects[uo], 1), "phi0"))
    tensor = {}
    for t in doc["tensor"]:
        _need(t, ("x", "y", "z", "phi"), "tensor")
        x, y, z = (obj(t[k], "tensor") for k in "xyz")
        tensor[(x, y)] = (z, matrix_from_json(t["phi"], fld, (objects[z], objects[x] * objects[y]), f"phi[{x},{y}]"))
    assoc = {}
    for a in doc["associators"]:
        _need(a, ("x", "y", "z", "matrix"), "associator")
        x, y, z = (obj(a[k], "associator") for k in "xyz")
        assoc[(x, y, z)] = matrix_from_json(a["matrix"], fld, None, f"associator[{x},{y},{z}]")
    duals = {}
    for e in doc["duals"]:
        _need(e, ("x", "dual", "ev", "db"), "dual")
        x, xs = obj(e["x"], "dual"), obj(e["dual"], "dual")
        duals[x] = (xs, matrix_from_json(e["ev"], fld, None, f"ev[{x}]"), matrix_from_json(e["db"], fld, None, f"db[{x}]"))
    return MonoidalDiagram(fld, objects, morphisms, unit, tensor, assoc, duals)


def coend_to_json(h: CoquasiBialgebra, c: CoendCoalgebra, s: Preantipode | None = None) -> dict:
    out = coquasi_to_json(h)
    out["proj"] = {x: matrix_to_json(c.proj(x)) for x in c.diagram.objects}
    if s is not None:
        out["S"] = matrix_to_json(s.s_map)
    return out


# files --------------------------------------------------------------------


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def write(doc, path: str | Path | None) -> str:
    text = dumps(doc)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def read(path: str | Path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from None
