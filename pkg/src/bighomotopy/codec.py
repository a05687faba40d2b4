"""JSON readers and writers for every interchange document.

Rationals travel as "p/q" strings and labels as JSON strings.  Each
``*_to_json`` has a matching ``*_from_json`` that reproduces an equal value.
"""

from __future__ import annotations

from ._common import ValidationError
from .bigmaps import Cell, CellComplex1D, CellMap
from .finspace import FinSpace, SpaceMap, from_opens, point_space
from .lexint import LexInterval, LexPoint
from .orders import Extension, FinOrder, MonotoneMap
from .quotient import BreakpointSet, MixedInterval, MixedPoint, QuotientMap, quotient_by_breakpoints


def _need(data, key, kind=None):
    if not isinstance(data, dict) or key not in data:
        raise ValidationError(f"missing field {key!r}")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise ValidationError(f"field {key!r} has the wrong type")
    return value


# orders


def order_to_json(order: FinOrder) -> dict:
    return {"labels": list(order.labels)}


def order_from_json(data) -> FinOrder:
    return FinOrder(tuple(_need(data, "labels", list)))


def monotone_to_json(m: MonotoneMap) -> dict:
    return {
        "domain": order_to_json(m.domain),
        "codomain": order_to_json(m.codomain),
        "graph": [list(p) for p in m.graph],
        "extension": m.extension.value,
    }


def monotone_from_json(data) -> MonotoneMap:
    graph = _need(data, "graph", list)
    if not all(isinstance(p, list) and len(p) == 2 for p in graph):
        raise ValidationError("graph entries must be [input, output] pairs")
    try:
        ext = Extension(data.get("extension", "none"))
    except ValueError:
        raise ValidationError(f"unknown extension {data.get('extension')!r}") from None
    return MonotoneMap(
        order_from_json(_need(data, "domain")),
        order_from_json(_need(data, "codomain")),
        tuple(tuple(p) for p in graph),
        ext,
    )


# points


def point_from_json(data) -> LexPoint:
    return LexPoint.from_json(data)


def mixed_to_json(y: MixedPoint) -> dict:
    return y.to_json()


def mixed_from_json(data) -> MixedPoint:
    return MixedPoint.from_json(data)


# finite spaces


def space_to_json(X: FinSpace) -> dict:
    return {
        "points": list(X.points),
        "min_nbhd": {x: sorted(X.nbhd[x], key=X.points.index) for x in X.points},
    }


def space_from_json(data) -> FinSpace:
    points = _need(data, "points", list)
    if "min_nbhd" in data:
        nbhd = data["min_nbhd"]
        if not isinstance(nbhd, dict):
            raise ValidationError("min_nbhd must map points to lists")
        return FinSpace(tuple(points), {x: set(v) for x, v in nbhd.items()})
    if "opens" in data:
        return from_opens(points, data["opens"])
    raise ValidationError("a space needs either 'min_nbhd' or 'opens'")


def spacemap_to_json(m: SpaceMap) -> dict:
    return {
        "source": space_to_json(m.source),
        "target": space_to_json(m.target),
        "assignment": dict(m.assignment),
    }


def spacemap_from_json(data) -> SpaceMap:
    return SpaceMap(
        space_from_json(_need(data, "source")),
        space_from_json(_need(data, "target")),
        _need(data, "assignment", dict),
    )


# breakpoints and quotient maps


def breakpoints_to_json(bp: BreakpointSet) -> dict:
    return {"ambient_dims": bp.ambient.dims, "atoms": [a.to_json() for a in bp.atoms]}


def breakpoints_from_json(data) -> BreakpointSet:
    dims = _need(data, "ambient_dims", int)
    return BreakpointSet(LexInterval(dims), tuple(LexPoint.from_json(a) for a in _need(data, "atoms", list)))


def quotient_from_json(data) -> QuotientMap:
    return quotient_by_breakpoints(breakpoints_from_json(data))[1]


# cell maps


def cellmap_to_json(f: CellMap) -> dict:
    doc: dict = {}
    carrier = f.complex.carrier
    if isinstance(carrier, LexInterval):
        doc["ambient_dims"] = carrier.dims
        doc["atoms"] = [a.to_json() for a in f.complex.atoms]
    else:
        doc["mixed_atoms"] = carrier.atoms
        doc["atoms"] = [a.to_json() for a in f.complex.atoms]
    doc["cspace"] = space_to_json(f.cspace)
    doc["target"] = space_to_json(f.target)
    doc["values"] = {f"{c}|{u}": x for (c, u), x in sorted(f.values.items(), key=lambda kv: (kv[0][0], str(kv[0][1])))}
    return doc


def cellmap_from_json(data) -> CellMap:
    atoms = _need(data, "atoms", list)
    if "mixed_atoms" in data:
        carrier = MixedInterval(_need(data, "mixed_atoms", int))
        pts = tuple(MixedPoint.from_json(a) for a in atoms)
    else:
        carrier = LexInterval(_need(data, "ambient_dims", int))
        pts = tuple(LexPoint.from_json(a) for a in atoms)
    complex_ = CellComplex1D(carrier, pts)
    C = space_from_json(data["cspace"]) if "cspace" in data else point_space()
    X = space_from_json(_need(data, "target"))
    values = {}
    for key, x in _need(data, "values", dict).items():
        cell_text, sep, u = key.partition("|")
        if not sep:
            if len(C) != 1:
                raise ValidationError(f"value key {key!r} lacks a parameter point")
            u = C.points[0]
        values[(Cell.parse(cell_text), u)] = x
    return CellMap(complex_, C, X, values)
