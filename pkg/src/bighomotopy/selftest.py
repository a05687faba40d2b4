"""Small exhaustive oracle suites, one per module, driven by the fixture files.

Fixtures are read from the package's ``fixtures`` directory unless the
``BIGHOMOTOPY_FIXTURES`` environment variable names another directory.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from pathlib import Path
from typing import Callable

from . import bigmaps, cardinal, embedding, finspace, lexint, oracles, orders, quotient
from ._common import RefusalError, Verdict
from .generate import random_cellmap, random_complex, random_point, random_space, topology_corpus
from .lexint import LexInterval, LexPoint

FIXTURE_ENV = "BIGHOMOTOPY_FIXTURES"
MODULES = ("cardinal", "orders", "lexint", "embedding", "quotient", "finspace", "bigmaps")


def fixture_dir() -> Path:
    env = os.environ.get(FIXTURE_ENV)
    return Path(env) if env else Path(__file__).with_name("fixtures")


def load_fixture(name: str):
    with open(fixture_dir() / f"{name}.json", encoding="utf-8") as fh:
        return json.load(fh)


@dataclass
class SuiteReport:
    module: str
    passed: int = 0
    failures: list = field(default_factory=list)

    def check(self, name: str, ok: bool):
        if ok:
            self.passed += 1
        else:
            self.failures.append(name)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"module": self.module, "passed": self.passed, "failed": len(self.failures), "failures": self.failures}


def _pt(data) -> LexPoint:
    return LexPoint.from_json(data)


###############################################################################
# Suites
###############################################################################


def suite_cardinal(r: SuiteReport):
    parse = cardinal.parse_cardinal
    for i, case in enumerate(load_fixture("cardinal")["cases"]):
        op, mode = case["op"], case.get("mode", "zfc")
        if op == "normalize":
            got = str(cardinal.normalize(parse(case["expr"])))
        elif op == "compare":
            got = cardinal.compare(parse(case["a"]), parse(case["b"]), mode).value
        elif op == "strong_limit":
            got = cardinal.is_strong_limit(parse(case["expr"]), mode).value
        elif op == "perfect_bound":
            got = cardinal.format_result(cardinal.least_perfect_bound(parse(case["expr"]), mode))
        else:
            raise ValueError(f"unknown cardinal fixture op {op!r}")
        r.check(f"fixture {i} {op}({case.get('expr') or case.get('a')})", got == case["expect"])
    exprs = cardinal.expressions_up_to_depth(2)
    for e in exprs:
        n = cardinal.normalize(e)
        r.check(f"normalize idempotent {e}", cardinal.normalize(n) == n)
        if not n.is_finite():
            r.check(f"cantor {e}", cardinal.compare(cardinal.PowSet(e), e) is Verdict.GT)
    for a in exprs:
        for b in exprs:
            z = cardinal.compare(a, b, "zfc")
            if z is not Verdict.UNKNOWN:
                r.check(f"gch refines zfc {a} {b}", cardinal.compare(a, b, "gch") is z)


def suite_orders(r: SuiteReport):
    fx = load_fixture("orders")
    for i, case in enumerate(fx["injections"]):
        src, tgt = orders.FinOrder(tuple(case["source"])), orders.FinOrder(tuple(case["target"]))
        h = orders.MonotoneMap(src, tgt, tuple(map(tuple, case["graph"])))
        g = orders.surjection_from_injection(h)
        r.check(f"injection fixture {i}", [list(p) for p in g.graph] == case["expect"])
    for i, case in enumerate(fx["surjections"]):
        src, tgt = orders.FinOrder(tuple(case["source"])), orders.FinOrder(tuple(case["target"]))
        g = orders.MonotoneMap(src, tgt, tuple(map(tuple, case["graph"])))
        f = orders.injection_from_surjection(g)
        r.check(f"surjection fixture {i}", [list(p) for p in f.graph] == case["expect"])
    for n in range(1, 4):
        for m in range(1, 4):
            I, J = orders.chain(n, "i"), orders.chain(m, "j")
            for h in orders.strictly_monotone_injections(I, J):
                g = orders.surjection_from_injection(h)
                r.check(f"g.h = id ({n},{m})", all(g(h(a)) == a for a in I))
            for g in orders.monotone_surjections(J, I):
                f = orders.injection_from_surjection(g)
                r.check(f"g.f = id ({m},{n})", all(g(f(t)) == t for t in I))


def suite_lexint(r: SuiteReport):
    rng = random.Random(7)
    for dims in (1, 2, 3):
        I = LexInterval(dims)
        sample = lexint.dense_sample(I, 1)
        r.check(f"sample count dims {dims}", len(sample) == lexint.dense_sample_count(dims, 1))
        for _ in range(50):
            pts = rng.sample(sample, rng.randint(1, min(6, len(sample))))
            r.check(f"sup dims {dims}", lexint.sup_finite(pts) == oracles.lex_max(pts))
        for a, b in zip(sample, sample[1:]):
            r.check(f"wedge monotone {a}", lexint.wedge_map(a) < lexint.wedge_map(b))
            r.check(f"reverse antitone {a}", lexint.reverse_point(b) < lexint.reverse_point(a))
            r.check(f"separating {a}", a < lexint.separating_point(a, b) < b)
        for a in sample:
            r.check(f"wedge section {a}", lexint.wedge_section(lexint.wedge_map(a)) == a)


def suite_embedding(r: SuiteReport):
    fx = load_fixture("embedding")
    for i, case in enumerate(fx["cases"]):
        order = orders.FinOrder(tuple(case["labels"]))
        pts, trace = embedding.embed_order(order, case["dims"], embedding.GridPolicy.parse(case["grid"]))
        got = {k: v.to_json() for k, v in pts.items()}
        r.check(f"fixture {i} points", got == case["expect"])
        r.check(f"fixture {i} saturations", trace.saturation_count() == case["saturations"])
        r.check(f"fixture {i} replay", embedding.replay(embedding.EmbeddingTrace.loads(trace.dumps())) == pts)
        if "saturated" in case:
            sat = case["saturated"]
            step = next(s for s in trace.steps if s.label == sat["label"])
            r.check(f"fixture {i} spillover", list(range(step.coordinate)) == sat["coordinates"] and step.coordinate == sat["emitted_at"])
    for case in fx["capacity"]:
        got = oracles.min_failing_chain(case["k"], case["d"])
        r.check(f"capacity k={case['k']} d={case['d']}", got == case["min_failing_length"])
    for n in range(1, 6):
        order = orders.chain(n)
        for seq in permutations(order.labels):
            pts, trace = embedding.embed_order(embedding.InsertionOrder(order, seq), 1)
            r.check(f"exact embedding {seq}", embedding.is_order_embedding(order, pts) and trace.saturation_count() == 0)


def suite_quotient(r: SuiteReport):
    fx = load_fixture("quotient")
    for i, case in enumerate(fx["related"]):
        bp = quotient.BreakpointSet.of(case["dims"], [_pt(a) for a in case["atoms"]])
        r.check(f"related fixture {i}", quotient.related(_pt(case["s"]), _pt(case["t"]), bp) == case["expect"])
    nt = fx["non_transitive"]
    bp = quotient.BreakpointSet.of(nt["dims"], [_pt(a) for a in nt["atoms"]])
    s, t, u = _pt(nt["s"]), _pt(nt["t"]), _pt(nt["u"])
    r.check("non-transitive triple", quotient.related(s, t, bp) and quotient.related(t, u, bp) and not quotient.related(s, u, bp))
    for i, case in enumerate(fx["evaluations"]):
        _, p = quotient.quotient_by_breakpoints(quotient.BreakpointSet.of(case["dims"], [_pt(a) for a in case["atoms"]]))
        r.check(f"evaluation fixture {i}", p(_pt(case["point"])).to_json() == case["expect"])
    col = fx["collapse"]
    _, p = quotient.quotient_by_breakpoints(quotient.BreakpointSet.of(col["dims"], [_pt(a) for a in col["atoms"]]))
    a, b = (_pt(x) for x in col["pair"])
    r.check("collapse fixture", p(a) == p(b) == quotient.MixedPoint.from_json(col["expect"]))
    rng = random.Random(11)
    for dims in (1, 2):
        for _ in range(20):
            bp = quotient.BreakpointSet.of(dims, [random_point(rng, dims, 4) for _ in range(rng.randint(0, 4))])
            _, p = quotient.quotient_by_breakpoints(bp)
            sample = lexint.dense_sample(LexInterval(dims), 2) + list(bp.atoms)
            r.check(f"fibers match classes dims {dims}", quotient.fibers_match_classes(bp, sample))
            sample.sort()
            r.check(f"p monotone dims {dims}", all(p(x) <= p(y) for x, y in zip(sample, sample[1:])))


def suite_finspace(r: SuiteReport):
    fx = load_fixture("finspace")
    spaces = {}
    for name, doc in fx["spaces"].items():
        X = finspace.from_opens(doc["points"], doc["opens"])
        spaces[name] = X
        exp = fx["expect"][name]
        r.check(f"{name} nbhd", {x: set(v) for x, v in exp["min_nbhd"].items()} == {x: set(X.nbhd[x]) for x in X})
        r.check(f"{name} classes", len(finspace.equiv_classes(X)) == exp["classes"])
        r.check(f"{name} t1", finspace.is_T1(X) == exp["t1"])
        r.check(f"{name} weight", finspace.weight(X) == exp["weight"])
    P = finspace.point_space()
    for i, case in enumerate(fx["homotopies"]):
        Y = spaces[case["target"]]
        f = finspace.SpaceMap(P, Y, {"*": case["f"]})
        g = finspace.SpaceMap(P, Y, {"*": case["g"]})
        try:
            cert = finspace.step_homotopy_check(f, g)
            stepped = finspace.verify_certificate(cert)[0]
        except finspace.HomotopyRefusal:
            stepped = False
        r.check(f"homotopy fixture {i} step", stepped == case["step"])
        chain_cert = finspace.homotopy_chain([f, g])
        r.check(f"homotopy fixture {i} chain", chain_cert.tags[0].value == case["chain_tag"])
    for points, opens in topology_corpus(3, rounds=200):
        X = finspace.from_opens(points, opens)
        r.check(f"nbhd {sorted(map(sorted, opens))}", all(X.nbhd[x] == oracles.min_nbhd(points, opens, x) for x in points))
        r.check(f"classes {sorted(map(sorted, opens))}", set(finspace.equiv_classes(X)) == oracles.classes(points, opens))
        r.check(f"t1 {sorted(map(sorted, opens))}", finspace.is_T1(X) == oracles.is_T1(points, opens))
        r.check(f"weight {sorted(map(sorted, opens))}", finspace.weight(X) == oracles.weight(points, opens))
    small = [finspace.from_opens(p, o) for p, o in topology_corpus(2, rounds=50)]
    for X in small:
        for Y in small:
            maps = finspace.continuous_maps(X, Y)
            for f in maps:
                for g in maps:
                    try:
                        finspace.step_homotopy_check(f, g)
                        ok = True
                    except finspace.HomotopyRefusal:
                        ok = False
                    r.check("step check vs switch oracle", ok == finspace.switch_oracle(f, g, finspace.Tag.UP))


def suite_bigmaps(r: SuiteReport):
    fx = load_fixture("bigmaps")
    from .codec import space_from_json

    X = space_from_json(fx["target"])
    for i, case in enumerate(fx["continuity"]):
        f = bigmaps.path(case["atoms"], case["sequence"], X)
        r.check(f"continuity fixture {i}", bigmaps.check_continuity(f)[0] == case["expect"])
    c = fx["concat"]
    h = bigmaps.concat(bigmaps.path(c["f"]["atoms"], c["f"]["sequence"], X), bigmaps.path(c["g"]["atoms"], c["g"]["sequence"], X))
    r.check("concat fixture", [a.to_json() for a in h.complex.atoms] == c["expect_atoms"] and list(h.sequence()) == c["expect_sequence"])
    c = fx["reverse"]
    h = bigmaps.reverse(bigmaps.path(c["atoms"], c["sequence"], X))
    r.check("reverse fixture", [a.to_json() for a in h.complex.atoms] == c["expect_atoms"] and list(h.sequence()) == c["expect_sequence"])
    c = fx["reduce"]
    f = bigmaps.path(c["atoms"], c["sequence"], X)
    red = bigmaps.density_reduce(f)
    r.check("reduce fixture", red.J.atoms == c["expect_j_atoms"] and bigmaps.verify_reduction(f, red.g, red.p))
    S = finspace.sierpinski()
    P = finspace.point_space()
    from .generate import all_cellmaps

    for n in (2, 3):
        cx = bigmaps.CellComplex1D(LexInterval(1), tuple(LexPoint.of(Fraction(i, n - 1)) for i in range(n)))
        for C in (P, S):
            for f in all_cellmaps(cx, C, S):
                r.check("continuity vs oracle", bigmaps.check_continuity(f)[0] == bigmaps.continuity_oracle(f))
    rng = random.Random(5)
    for _ in range(40):
        Y = random_space(rng, rng.randint(1, 4))
        C = random_space(rng, rng.randint(1, 2))
        f = random_cellmap(rng, random_complex(rng, rng.randint(1, 2), rng.randint(2, 8)), C, Y)
        red = bigmaps.density_reduce(f)
        r.check("random reduction", bigmaps.check_continuity(red.g)[0] and bigmaps.verify_reduction(f, red.g, red.p))


SUITES: dict[str, Callable[[SuiteReport], None]] = {
    "cardinal": suite_cardinal,
    "orders": suite_orders,
    "lexint": suite_lexint,
    "embedding": suite_embedding,
    "quotient": suite_quotient,
    "finspace": suite_finspace,
    "bigmaps": suite_bigmaps,
}


def run(modules=None) -> list[SuiteReport]:
    """Run the chosen suites; an exception inside a suite is a named failure."""
    reports = []
    for name in modules or MODULES:
        report = SuiteReport(name)
        try:
            SUITES[name](report)
        except (OSError, ValueError, KeyError, TypeError, RefusalError) as exc:
            report.failures.append(f"{name}: {type(exc).__name__}: {exc}")
        reports.append(report)
    return reports
