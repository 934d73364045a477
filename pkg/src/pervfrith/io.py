"""JSON instance files and DOT output.

Subsets travel as sorted index arrays.  Lattices travel as element names
plus the Hasse covers; the full order is rebuilt on parse.
"""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .bitop import BiFrame, BiHom, BiMap, BiSpace
from .duality import PriestleySpace
from .frith import FrithHom, FrithPair
from .order import (
    FinLattice,
    FinPoset,
    LatticeHom,
    Preorder,
    SubsetFamily,
    bits,
    mask_of,
    set_name,
    validate_lattice,
)
from .pervin import PervinMap, PervinSpace


class SchemaError(ValueError):
    def __init__(self, message: str, field: str = "", line: int | None = None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field {field}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


_names = {"type": "array", "items": {"type": "string"}}
_index = {"type": "integer", "minimum": 0}
_indices = {"type": "array", "items": _index}
_sets = {"type": "array", "items": _indices}
_pair = {"type": "array", "items": _index, "minItems": 2, "maxItems": 2}


def _obj(kind: str, **props) -> dict:
    return {
        "type": "object",
        "properties": {"kind": {"const": kind}, **props},
        "required": ["kind", *props],
        "additionalProperties": False,
    }


_LATTICE = _obj("lattice", elements=_names, covers={"type": "array", "items": _pair})
_PERVIN = _obj("pervin", ground=_names, sets=_sets)
_FRITH = _obj("frith", lattice=_LATTICE, sub=_indices)
_BISPACE = _obj("bispace", ground=_names, opens_pos=_sets, opens_neg=_sets)
_BIFRAME = _obj("biframe", main=_LATTICE, pos=_indices, neg=_indices)
_PRIESTLEY = _obj("priestley", ground=_names, opens=_sets, covers={"type": "array", "items": _pair})

SCHEMAS: dict[str, dict] = {
    "lattice": _LATTICE,
    "pervin": _PERVIN,
    "frith": _FRITH,
    "bispace": _BISPACE,
    "biframe": _BIFRAME,
    "priestley": _PRIESTLEY,
}
_MAP_KINDS = {
    "lattice_hom": "lattice",
    "pervin_map": "pervin",
    "frith_hom": "frith",
    "bispace_map": "bispace",
    "biframe_hom": "biframe",
}
for _k, _obj_kind in _MAP_KINDS.items():
    SCHEMAS[_k] = _obj(_k, dom=SCHEMAS[_obj_kind], cod=SCHEMAS[_obj_kind], map=_indices)


# ---------------------------------------------------------------------------
# parse


def _line_of(text: str, key: str) -> int | None:
    needle = f'"{key}"'
    for n, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return n
    return None


def loads(text: str) -> Any:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(exc.msg, line=exc.lineno) from None
    try:
        return from_doc(doc)
    except SchemaError as exc:
        if exc.line is None and exc.field:
            last = exc.field.split(".")[-1].split("[")[0]
            raise SchemaError(str(exc).split(": ", 1)[-1], exc.field, _line_of(text, last)) from None
        raise


def load(path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _field_path(err: jsonschema.ValidationError) -> str:
    out = ""
    for p in err.absolute_path:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else p)
    return out


def from_doc(doc: Any) -> Any:
    if not isinstance(doc, dict) or doc.get("kind") not in SCHEMAS:
        raise SchemaError(f"unknown kind {doc.get('kind') if isinstance(doc, dict) else doc!r}", "kind")
    kind = doc["kind"]
    try:
        jsonschema.validate(doc, SCHEMAS[kind])
    except jsonschema.ValidationError as err:
        raise SchemaError(err.message, _field_path(err)) from None
    return _build(doc)


def _check_indices(ix: list[int], n: int, field: str):
    for k, i in enumerate(ix):
        if i >= n:
            raise SchemaError(f"index {i} out of range for {n} entries", f"{field}[{k}]")


def _sets_to_masks(sets: list[list[int]], n: int, field: str) -> list[int]:
    for k, s in enumerate(sets):
        _check_indices(s, n, f"{field}[{k}]")
    return [mask_of(s) for s in sets]


def _lattice(doc: dict) -> FinLattice:
    n = len(doc["elements"])
    for k, c in enumerate(doc["covers"]):
        _check_indices(c, n, f"covers[{k}]")
    p = FinPoset.from_covers(n, [tuple(c) for c in doc["covers"]], doc["elements"])
    return validate_lattice(p)


def _build(doc: dict) -> Any:
    kind = doc["kind"]
    if kind == "lattice":
        return _lattice(doc)
    if kind == "pervin":
        n = len(doc["ground"])
        masks = _sets_to_masks(doc["sets"], n, "sets")
        return PervinSpace(tuple(doc["ground"]), SubsetFamily(n, tuple(masks)))
    if kind == "frith":
        L = _lattice(doc["lattice"])
        _check_indices(doc["sub"], L.size, "sub")
        return FrithPair(L, mask_of(doc["sub"]))
    if kind == "bispace":
        n = len(doc["ground"])
        pos = _sets_to_masks(doc["opens_pos"], n, "opens_pos")
        neg = _sets_to_masks(doc["opens_neg"], n, "opens_neg")
        return BiSpace(tuple(doc["ground"]), SubsetFamily(n, tuple(pos)), SubsetFamily(n, tuple(neg)))
    if kind == "biframe":
        L = _lattice(doc["main"])
        _check_indices(doc["pos"], L.size, "pos")
        _check_indices(doc["neg"], L.size, "neg")
        return BiFrame(L, mask_of(doc["pos"]), mask_of(doc["neg"]))
    if kind == "priestley":
        n = len(doc["ground"])
        opens = _sets_to_masks(doc["opens"], n, "opens")
        order = FinPoset.from_covers(n, [tuple(c) for c in doc["covers"]], doc["ground"])
        return PriestleySpace(tuple(doc["ground"]), SubsetFamily(n, tuple(opens)), order)
    dom, cod = _build(doc["dom"]), _build(doc["cod"])
    f = tuple(doc["map"])
    if kind == "lattice_hom":
        return LatticeHom(dom, cod, f)
    if kind == "pervin_map":
        return PervinMap(dom, cod, f)
    if kind == "frith_hom":
        return FrithHom(dom, cod, LatticeHom(dom.lattice, cod.lattice, f))
    if kind == "bispace_map":
        return BiMap(dom, cod, f)
    return BiHom(dom, cod, LatticeHom(dom.main, cod.main, f))


# ---------------------------------------------------------------------------
# emit


def _masks(ms) -> list[list[int]]:
    return [list(bits(m)) for m in sorted(ms)]


def _lattice_doc(L: FinLattice) -> dict:
    return {"kind": "lattice", "elements": list(L.names), "covers": [list(c) for c in L.poset.covers]}


def to_doc(obj: Any) -> dict:
    if isinstance(obj, FinLattice):
        return _lattice_doc(obj)
    if isinstance(obj, PervinSpace):
        return {"kind": "pervin", "ground": list(obj.ground), "sets": _masks(obj.sets)}
    if isinstance(obj, FrithPair):
        return {"kind": "frith", "lattice": _lattice_doc(obj.lattice), "sub": list(bits(obj.sub))}
    if isinstance(obj, BiSpace):
        return {
            "kind": "bispace",
            "ground": list(obj.ground),
            "opens_pos": _masks(obj.opens_pos),
            "opens_neg": _masks(obj.opens_neg),
        }
    if isinstance(obj, BiFrame):
        return {"kind": "biframe", "main": _lattice_doc(obj.main), "pos": list(bits(obj.pos)), "neg": list(bits(obj.neg))}
    if isinstance(obj, PriestleySpace):
        return {
            "kind": "priestley",
            "ground": list(obj.ground),
            "opens": _masks(obj.topology),
            "covers": [list(c) for c in obj.order.covers],
        }
    for cls, kind in ((LatticeHom, "lattice_hom"), (PervinMap, "pervin_map"), (FrithHom, "frith_hom"), (BiMap, "bispace_map"), (BiHom, "biframe_hom")):
        if isinstance(obj, cls):
            return {"kind": kind, "dom": to_doc(obj.dom), "cod": to_doc(obj.cod), "map": list(obj.map if kind != "biframe_hom" else obj.hom.map)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    """Canonical text: sorted keys, compact separators, trailing newline."""
    return json.dumps(to_doc(obj), sort_keys=True, separators=(",", ":")) + "\n"


def canonical(text: str) -> str:
    return dumps(loads(text))


# ---------------------------------------------------------------------------
# DOT


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _hasse_dot(name: str, labels: list[str], covers) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for k, lab in enumerate(labels):
        lines.append(f"  n{k} [label={_quote(lab)}];")
    for i, j in covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(obj: Any) -> str:
    """Hasse diagram, edges running from each element up to its covers."""
    if isinstance(obj, FinLattice):
        return _hasse_dot("lattice", list(obj.names), obj.poset.covers)
    if isinstance(obj, FinPoset):
        return _hasse_dot("poset", list(obj.names), obj.covers)
    if isinstance(obj, Preorder):
        raise TypeError("DOT output needs a partial order")
    if isinstance(obj, FrithPair):
        return emit_dot(obj.lattice)
    if isinstance(obj, PervinSpace):
        L = obj.lattice
        return _hasse_dot("family", [set_name(S, obj.ground) for S in obj.sets], L.poset.covers)
    if isinstance(obj, PriestleySpace):
        return _hasse_dot("priestley", list(obj.ground), obj.order.covers)
    raise TypeError(f"no diagram for {type(obj).__name__}")
