"""Command-line front end.

Every invocation is turned into a manifest (a JSON object), validated
against a schema, and routed by ``dispatch``.  ``--json`` reads the manifest
from stdin instead of the command line.  Input documents in a manifest are
either inline JSON or a path; ``fixture:NAME`` resolves inside the fixture
directory.

Exit codes: 0 success, 1 validation error, 2 mathematical refusal
(capacity exhausted, UNKNOWN verdict, no step homotopy), 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import jsonschema

from . import bigmaps, cardinal, codec, embedding, finspace, lexint, orders, quotient, selftest
from ._common import RefusalError, Tri, ValidationError, Verdict

EXIT_OK, EXIT_VALIDATION, EXIT_REFUSAL, EXIT_INTERNAL = 0, 1, 2, 3

_DOC = {"type": ["string", "object", "array"]}
_POINT = {"type": "array", "items": {"type": "string"}, "minItems": 1}

_SCHEMAS = {
    "cardinal": {
        "properties": {
            "action": {"enum": ["eval", "compare", "strong-limit", "perfect-bound"]},
            "exprs": {"type": "array", "items": {"type": "string"}, "minItems": 1, "maxItems": 2},
            "mode": {"enum": ["zfc", "gch"]},
        },
        "required": ["action", "exprs"],
    },
    "orders": {
        "properties": {
            "action": {"enum": ["check", "duality"]},
            "direction": {"enum": ["from-injection", "from-surjection"]},
            "map": _DOC,
            "source": _DOC,
        },
        "required": ["action", "map"],
    },
    "lexint": {
        "properties": {
            "action": {"enum": ["sup", "compare", "sample", "wedge", "reverse"]},
            "points": {"type": "array", "items": _POINT},
            "dims": {"type": "integer", "minimum": 1},
            "depth": {"type": "integer", "minimum": 1},
        },
        "required": ["action"],
    },
    "embed": {
        "properties": {
            "dims": {"type": "integer", "minimum": 1},
            "grid": {"type": "string"},
            "order": _DOC,
            "insertion": _DOC,
            "trace_out": {"type": "string"},
        },
        "required": ["dims", "order"],
    },
    "quotient": {
        "properties": {
            "ambient_dims": {"type": "integer", "minimum": 1},
            "atoms": _DOC,
            "eval": _DOC,
        },
        "required": ["ambient_dims", "atoms"],
    },
    "finspace": {
        "properties": {
            "action": {"enum": ["nbhd", "classes", "t1", "weight", "continuous", "homotopy"]},
            "space": _DOC,
            "point": {"type": "string"},
            "map": _DOC,
            "f": _DOC,
            "g": _DOC,
            "chain": _DOC,
        },
        "required": ["action"],
    },
    "bigmaps": {
        "properties": {
            "action": {"enum": ["check", "concat", "reverse", "reduce", "verify"]},
            "map": _DOC,
            "f": _DOC,
            "g": _DOC,
            "reduction": _DOC,
        },
        "required": ["action"],
    },
    "selftest": {
        "properties": {"module": {"enum": list(selftest.MODULES)}},
        "required": [],
    },
}

MANIFEST_SCHEMA = {
    "type": "object",
    "required": ["command"],
    "properties": {"command": {"enum": sorted(_SCHEMAS)}},
    "allOf": [
        {
            "if": {"properties": {"command": {"const": name}}},
            "then": {
                "properties": {"command": {}, "out": {"type": "string"}, **rules["properties"]},
                "required": rules["required"],
                "additionalProperties": False,
            },
        }
        for name, rules in _SCHEMAS.items()
    ],
}


class _Refusal(Exception):
    """Carry a finished result document out with exit code 2."""

    def __init__(self, document):
        self.document = document


def load_document(value):
    """Decoded JSON passes through, as does a string holding a JSON object or
    array; any other string is a path (``fixture:`` prefix allowed)."""
    if not isinstance(value, str):
        return value
    if value.lstrip().startswith(("{", "[")):
        try:
            return json.loads(value)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"malformed inline JSON ({exc})") from exc
    path = selftest.fixture_dir() / value[len("fixture:") :] if value.startswith("fixture:") else Path(value)
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: malformed JSON ({exc})") from exc
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from exc


def _need(m, key):
    if key not in m:
        raise ValidationError(f"option {key!r} is required for this action")
    return load_document(m[key])


###############################################################################
# Handlers
###############################################################################


def _cardinal(m):
    mode = m.get("mode", "zfc")
    exprs = [cardinal.parse_cardinal(e) for e in m["exprs"]]
    action = m["action"]
    arity = 2 if action == "compare" else 1
    if len(exprs) != arity:
        raise ValidationError(f"{action} takes {arity} expression(s)")
    if action == "eval":
        k = cardinal.normalize(exprs[0])
        doc = {"normal_form": str(k)}
        if mode == "gch":
            doc["gch_value"] = str(cardinal.gch_value(k))
        return doc
    if action == "compare":
        v = cardinal.compare(exprs[0], exprs[1], mode)
        doc = {"verdict": v.value}
        if v is Verdict.UNKNOWN:
            raise _Refusal(doc)
        return doc
    if action == "strong-limit":
        t = cardinal.is_strong_limit(exprs[0], mode)
        doc = {"strong_limit": t.value}
        if t is Tri.UNKNOWN:
            raise _Refusal(doc)
        return doc
    bound = cardinal.least_perfect_bound(exprs[0], mode)
    doc = {"bound": cardinal.format_result(bound)}
    if bound is Tri.UNKNOWN:
        raise _Refusal(doc)
    return doc


def _orders(m):
    mm = codec.monotone_from_json(_need(m, "map"))
    if m["action"] == "check":
        ok, violation = orders.validate(mm)
        return {"valid": ok, "violation": None if ok else {"kind": violation.kind, "pair": violation.pair}}
    direction = m.get("direction", "from-injection")
    if direction == "from-injection":
        source = codec.order_from_json(_need(m, "source")) if "source" in m else None
        g = orders.surjection_from_injection(mm, source)
        return {"surjection": codec.monotone_to_json(g), "round_trip": all(g(mm(a)) == a for a, _ in mm.graph)}
    f = orders.injection_from_surjection(mm)
    return {"injection": codec.monotone_to_json(f), "round_trip": all(mm(f(t)) == t for t in mm.codomain)}


def _points(m, count=None):
    pts = [lexint.LexPoint.from_json(p) for p in m.get("points", [])]
    if count is not None and len(pts) != count:
        raise ValidationError(f"expected {count} point(s), got {len(pts)}")
    return pts


def _lexint(m):
    action = m["action"]
    if action == "sup":
        pts = _points(m)
        return {"sup": lexint.sup_finite(pts).to_json(), "inf": lexint.inf_finite(pts).to_json()}
    if action == "compare":
        a, b = _points(m, 2)
        return {"verdict": lexint.lex_compare(a, b).value}
    if action == "sample":
        dims, depth = m.get("dims", 1), m.get("depth", 1)
        pts = lexint.dense_sample(lexint.LexInterval(dims), depth)
        return {"count": len(pts), "points": [p.to_json() for p in pts]}
    (p,) = _points(m, 1)
    if action == "wedge":
        w = lexint.wedge_map(p)
        return {"copy": w.copy, "point": w.point.to_json(), "glue": w.is_glue}
    return {"reverse": lexint.reverse_point(p).to_json()}


def _embed(m):
    order = codec.order_from_json(_need(m, "order"))
    grid = embedding.GridPolicy.parse(m.get("grid", "exact"))
    if "insertion" in m:
        seq = load_document(m["insertion"])
        seq = seq["sequence"] if isinstance(seq, dict) else seq
        insertion = embedding.InsertionOrder(order, tuple(seq))
    else:
        insertion = embedding.InsertionOrder.in_order(order)
    try:
        pts, trace = embedding.embed_order(insertion, m["dims"], grid)
    except embedding.CapacityExceeded as exc:
        raise _Refusal(
            {"capacity_exceeded": {"label": exc.label, "bounds": [[str(lo), str(hi)] for lo, hi in exc.bounds]}}
        ) from exc
    if "trace_out" in m:
        Path(m["trace_out"]).write_text(trace.dumps(), encoding="utf-8")
    return {
        "points": {str(k): pts[k].to_json() for k in order.labels},
        "saturations": trace.saturation_count(),
        "trace": trace.to_json(),
    }


def _atoms_doc(value):
    doc = load_document(value)
    return doc["atoms"] if isinstance(doc, dict) else doc


def _quotient(m):
    bp = quotient.BreakpointSet.of(m["ambient_dims"], [lexint.LexPoint.from_json(a) for a in _atoms_doc(m["atoms"])])
    J, p = quotient.quotient_by_breakpoints(bp)
    doc = {"mixed_atoms": J.atoms, "atoms": [a.to_json() for a in bp.atoms]}
    if "eval" in m:
        pts = load_document(m["eval"])
        pts = pts["points"] if isinstance(pts, dict) else pts
        doc["images"] = [p(lexint.LexPoint.from_json(t)).to_json() for t in pts]
    return doc


def _cert_json(cert):
    return {
        "tags": [t.value for t in cert.tags],
        "maps": [dict(h.assignment) for h in cert.maps],
        "fixed": sorted(cert.fixed),
        "verified": finspace.verify_certificate(cert)[0],
    }


def _finspace(m):
    action = m["action"]
    if action == "continuous":
        sm = codec.spacemap_from_json(_need(m, "map"))
        return {"continuous": finspace.is_continuous(sm)}
    if action == "homotopy":
        if "chain" in m:
            maps = [codec.spacemap_from_json(d) for d in _need(m, "chain")]
            cert = finspace.homotopy_chain(maps)
        else:
            f = codec.spacemap_from_json(_need(m, "f"))
            g = codec.spacemap_from_json(_need(m, "g"))
            try:
                cert = finspace.step_homotopy_check(f, g)
            except finspace.HomotopyRefusal as exc:
                raise _Refusal({"refusal": {"witness": exc.witness, "link": exc.link}}) from exc
        return {"certificate": _cert_json(cert)}
    X = codec.space_from_json(_need(m, "space"))
    if action == "nbhd":
        if "point" in m:
            return {"min_nbhd": sorted(finspace.min_nbhd(X, m["point"]))}
        return codec.space_to_json(X)
    if action == "classes":
        return {"classes": sorted(sorted(c) for c in finspace.equiv_classes(X))}
    if action == "t1":
        return {"t1": finspace.is_T1(X)}
    return {"weight": finspace.weight(X)}


def _bigmaps(m):
    action = m["action"]
    if action == "concat":
        f = codec.cellmap_from_json(_need(m, "f"))
        g = codec.cellmap_from_json(_need(m, "g"))
        return {"map": codec.cellmap_to_json(bigmaps.concat(f, g))}
    f = codec.cellmap_from_json(_need(m, "map"))
    if action == "check":
        ok, witness = bigmaps.check_continuity(f)
        return {"continuous": ok, "witness": None if ok else {"cell": str(witness[0]), "u": witness[1]}}
    if action == "reverse":
        return {"map": codec.cellmap_to_json(bigmaps.reverse(f))}
    if action == "reduce":
        red = bigmaps.density_reduce(f)
        return {
            "mixed_atoms": red.J.atoms,
            "p": codec.breakpoints_to_json(red.p.breakpoints),
            "g": codec.cellmap_to_json(red.g),
            "verified": bigmaps.verify_reduction(f, red.g, red.p),
        }
    red = _need(m, "reduction")
    g = codec.cellmap_from_json(red["g"])
    p = codec.quotient_from_json(red["p"])
    return {"verified": bigmaps.verify_reduction(f, g, p)}


def _selftest(m):
    reports = selftest.run([m["module"]] if "module" in m else None)
    doc = {"suites": [r.to_json() for r in reports], "ok": all(r.ok for r in reports)}
    if not doc["ok"]:
        raise _SelftestFailed(doc)
    return doc


class _SelftestFailed(Exception):
    def __init__(self, document):
        self.document = document


_HANDLERS = {
    "cardinal": _cardinal,
    "orders": _orders,
    "lexint": _lexint,
    "embed": _embed,
    "quotient": _quotient,
    "finspace": _finspace,
    "bigmaps": _bigmaps,
    "selftest": _selftest,
}


def dispatch(manifest) -> tuple[int, dict]:
    """Validate and run one manifest; never raises."""
    try:
        jsonschema.validate(manifest, MANIFEST_SCHEMA)
    except jsonschema.ValidationError as exc:
        return EXIT_VALIDATION, _error("validation", f"bad manifest: {exc.message}")
    command = manifest["command"]
    try:
        result = _HANDLERS[command](manifest)
    except _Refusal as exc:
        return EXIT_REFUSAL, {"ok": False, "command": command, **exc.document}
    except _SelftestFailed as exc:
        return EXIT_VALIDATION, {"command": command, **exc.document}
    except RefusalError as exc:
        return EXIT_REFUSAL, _error("refusal", str(exc), command)
    except (ValidationError, ValueError, KeyError, TypeError) as exc:
        # malformed documents surface as KeyError/TypeError from the readers
        return EXIT_VALIDATION, _error("validation", f"{type(exc).__name__}: {exc}", command)
    except Exception as exc:  # noqa: BLE001 - exit code 3 is the contract for anything else
        return EXIT_INTERNAL, _error("internal", f"{type(exc).__name__}: {exc}", command)
    return EXIT_OK, {"ok": True, "command": command, **result}


def _error(kind, message, command=None):
    doc = {"ok": False, "error": {"kind": kind, "message": message}}
    if command:
        doc["command"] = command
    return doc


###############################################################################
# Argument parsing
###############################################################################


def _point_arg(text: str) -> list:
    return [c.strip() for c in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bighomotopy", description=__doc__.split("\n\n")[0])
    parser.add_argument("--json", action="store_true", help="read the manifest from stdin, write JSON to stdout")
    parser.add_argument("--out", help="also write the result document to this file")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("cardinal", help="symbolic cardinal arithmetic")
    p.add_argument("action", choices=_SCHEMAS["cardinal"]["properties"]["action"]["enum"])
    p.add_argument("exprs", nargs="+", help="expressions such as pow(aleph(0)) or beth(w+1)")
    p.add_argument("--mode", choices=["zfc", "gch"], default="zfc")

    p = sub.add_parser("orders", help="monotone maps and the injection/surjection duality")
    p.add_argument("action", choices=["check", "duality"])
    p.add_argument("--map", help="monotone map document")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--from-injection", dest="injection", metavar="FILE")
    group.add_argument("--from-surjection", dest="surjection", metavar="FILE")
    p.add_argument("--source", help="order containing the injection's domain")

    p = sub.add_parser("lexint", help="points of the lexicographic interval")
    p.add_argument("action", choices=_SCHEMAS["lexint"]["properties"]["action"]["enum"])
    p.add_argument("points", nargs="*", type=_point_arg, help="comma-separated coordinates, e.g. 1/2,3/4")
    p.add_argument("--dims", type=int)
    p.add_argument("--depth", type=int)

    p = sub.add_parser("embed", help="embed a finite chain into [0,1]^N")
    p.add_argument("--dims", type=int, required=True)
    p.add_argument("--grid", default="exact", help="exact or dyadic:K")
    p.add_argument("--order", required=True)
    p.add_argument("--insertion")
    p.add_argument("--trace", dest="trace_out")

    p = sub.add_parser("quotient", help="quotient by a breakpoint set")
    p.add_argument("--ambient-dims", type=int, required=True)
    p.add_argument("--atoms", required=True)
    p.add_argument("--eval")

    p = sub.add_parser("finspace", help="finite topological spaces")
    p.add_argument("action", choices=_SCHEMAS["finspace"]["properties"]["action"]["enum"])
    for opt in ("--space", "--point", "--map", "--f", "--g", "--chain"):
        p.add_argument(opt)

    p = sub.add_parser("bigmaps", help="cellwise-constant maps")
    p.add_argument("action", choices=_SCHEMAS["bigmaps"]["properties"]["action"]["enum"])
    for opt in ("--map", "--f", "--g", "--reduction"):
        p.add_argument(opt)

    p = sub.add_parser("selftest", help="run the oracle suites")
    p.add_argument("--module", choices=selftest.MODULES)
    return parser


def manifest_from_args(args) -> dict:
    skip = {"json", "out", "injection", "surjection"}
    manifest = {k: v for k, v in vars(args).items() if v is not None and k not in skip}
    if args.command == "orders" and args.action == "duality":
        if args.injection:
            manifest.update(direction="from-injection", map=args.injection)
        elif args.surjection:
            manifest.update(direction="from-surjection", map=args.surjection)
    if args.out:
        manifest["out"] = args.out
    return manifest


def _print_selftest(doc):
    for suite in doc.get("suites", []):
        status = "PASS" if suite["failed"] == 0 else "FAIL"
        print(f"{status} {suite['module']}: {suite['passed']} passed, {suite['failed']} failed")
        for name in suite["failures"][:10]:
            print(f"    {name}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.json:
        try:
            manifest = json.load(sys.stdin)
        except json.JSONDecodeError as exc:
            code, doc = EXIT_VALIDATION, _error("validation", f"malformed JSON manifest: {exc}")
            print(json.dumps(doc, indent=2))
            return code
        if isinstance(manifest, dict) and args.command and "command" not in manifest:
            manifest["command"] = args.command
    elif args.command is None:
        parser.print_help()
        return EXIT_VALIDATION
    else:
        manifest = manifest_from_args(args)
    code, doc = dispatch(manifest)
    out = manifest.get("out") if isinstance(manifest, dict) else None
    if out:
        Path(out).write_text(json.dumps(doc, indent=2), encoding="utf-8")
    if doc.get("command") == "selftest" and not args.json and "suites" in doc:
        _print_selftest(doc)
    else:
        print(json.dumps(doc, indent=2, default=str))
    return code


if __name__ == "__main__":
    sys.exit(main())
