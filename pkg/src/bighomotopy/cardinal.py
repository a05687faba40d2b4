"""Symbolic cardinals over Cantor-normal-form ordinal indices.

Expressions are immutable trees built from ``Finite``, ``Aleph``, ``Beth``,
``PowSet`` (2^k), ``Succ`` (k^+) and ``Hat`` (sup{2^b | b < k}).  Comparison
is three-valued: a verdict is returned only when it follows from a fixed
table of ZFC facts (or, in GCH mode, from the GCH evaluation), otherwise
``Verdict.UNKNOWN``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Union

from ._common import RefusalError, Tri, ValidationError, Verdict

DEFAULT_DEPTH_LIMIT = 8
MAX_FINITE_EXPONENT = 62


class DepthLimitError(ValidationError):
    pass


class AxiomMode(Enum):
    ZFC = "zfc"
    GCH = "gch"


###############################################################################
# Ordinals in Cantor normal form
###############################################################################


@dataclass(frozen=True)
class Ordinal:
    """w^e1*c1 + w^e2*c2 + ... with e1 > e2 > ... and every ci >= 1."""

    terms: tuple = ()

    def __post_init__(self):
        prev = None
        for term in self.terms:
            if len(term) != 2:
                raise ValidationError(f"bad CNF term {term!r}")
            exp, coeff = term
            if not isinstance(exp, Ordinal):
                raise ValidationError("CNF exponents must be ordinals")
            if not isinstance(coeff, int) or isinstance(coeff, bool) or coeff < 1:
                raise ValidationError(f"CNF coefficient must be a positive int, got {coeff!r}")
            if prev is not None and not exp < prev:
                raise ValidationError("CNF exponents must be strictly decreasing")
            prev = exp
        if self.depth > DEFAULT_DEPTH_LIMIT:
            raise DepthLimitError(f"ordinal nesting depth {self.depth} exceeds {DEFAULT_DEPTH_LIMIT}")

    @classmethod
    def of(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValidationError("ordinals are non-negative")
        return cls(((ZERO, n),)) if n else ZERO

    @property
    def depth(self) -> int:
        if not self.terms:
            return 0
        return 1 + max(exp.depth for exp, _ in self.terms)

    # -- classification -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return all(exp.is_zero() for exp, _ in self.terms)

    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero()

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def finite_value(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Ordinal") -> "Ordinal":
        if isinstance(other, int):
            other = Ordinal.of(other)
        if other.is_zero():
            return self
        lead_exp, lead_coeff = other.terms[0]
        kept = []
        for exp, coeff in self.terms:
            if exp > lead_exp:
                kept.append((exp, coeff))
            elif exp == lead_exp:
                kept.append((exp, coeff + lead_coeff))
                return Ordinal(tuple(kept) + other.terms[1:])
            else:
                break
        return Ordinal(tuple(kept) + other.terms)

    def succ(self) -> "Ordinal":
        return self + ONE

    def pred(self) -> "Ordinal":
        if not self.is_successor():
            raise ValueError(f"{self} has no predecessor")
        *head, (exp, coeff) = self.terms
        if coeff == 1:
            return Ordinal(tuple(head))
        return Ordinal(tuple(head) + ((exp, coeff - 1),))

    def split_finite(self) -> tuple["Ordinal", int]:
        """Return (limit-or-zero part, finite tail) with self = part + tail."""
        if self.is_successor():
            *head, (_, n) = self.terms
            return Ordinal(tuple(head)), n
        return self, 0

    # -- order ----------------------------------------------------------------

    def _cmp(self, other: "Ordinal") -> int:
        for (e1, c1), (e2, c2) in zip(self.terms, other.terms):
            c = e1._cmp(e2)
            if c:
                return c
            if c1 != c2:
                return -1 if c1 < c2 else 1
        return (len(self.terms) > len(other.terms)) - (len(self.terms) < len(other.terms))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- text -----------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.terms:
            if exp.is_zero():
                parts.append(str(coeff))
                continue
            if exp == ONE:
                base = "w"
            elif exp.is_finite() or exp == OMEGA:
                base = f"w^{exp}"
            else:
                base = f"w^({exp})"
            parts.append(base if coeff == 1 else f"{base}*{coeff}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"Ordinal({str(self)!r})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


###############################################################################
# Cardinal expressions
###############################################################################


class Cardinal:
    """Base of the expression tree; subclasses are frozen dataclasses."""

    __slots__ = ()

    def children(self) -> tuple:
        return ()

    @property
    def depth(self) -> int:
        return 1 + max((c.depth for c in self.children()), default=0)

    def subterms(self) -> Iterator["Cardinal"]:
        yield self
        for c in self.children():
            yield from c.subterms()

    def is_finite(self) -> bool:
        return isinstance(self, Finite)


@dataclass(frozen=True)
class Finite(Cardinal):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise ValidationError(f"finite cardinal must be a natural, got {self.n!r}")

    def __str__(self):
        return str(self.n)


@dataclass(frozen=True)
class Aleph(Cardinal):
    index: Ordinal

    def __str__(self):
        return f"aleph({self.index})"


@dataclass(frozen=True)
class Beth(Cardinal):
    index: Ordinal

    def __str__(self):
        return f"beth({self.index})"


@dataclass(frozen=True)
class PowSet(Cardinal):
    arg: Cardinal

    def children(self):
        return (self.arg,)

    def __str__(self):
        return f"pow({self.arg})"


@dataclass(frozen=True)
class Succ(Cardinal):
    arg: Cardinal

    def children(self):
        return (self.arg,)

    def __str__(self):
        return f"succ({self.arg})"


@dataclass(frozen=True)
class Hat(Cardinal):
    arg: Cardinal

    def children(self):
        return (self.arg,)

    def __str__(self):
        return f"hat({self.arg})"


CardinalOrUnknown = Union[Cardinal, Tri]

ALEPH_0 = Aleph(ZERO)


###############################################################################
# Text syntax
###############################################################################

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(.))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("int", int(num)))
        elif name is not None:
            tokens.append(("name", name.lower()))
        else:
            tokens.append(("sym", sym))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            raise ValidationError(f"cannot parse {self.text!r}: unexpected {tok[1]!r}")
        self.i += 1
        return tok[1]

    def done(self):
        if self.i != len(self.tokens):
            raise ValidationError(f"cannot parse {self.text!r}: trailing input")

    # ordinal := term ('+' term)*
    def ordinal(self) -> Ordinal:
        total = self.ord_term()
        while self.peek() == ("sym", "+"):
            self.take()
            total = total + self.ord_term()
        return total

    def ord_term(self) -> Ordinal:
        kind, value = self.peek()
        if kind == "int":
            return Ordinal.of(self.take())
        if (kind, value) in (("name", "w"), ("name", "omega")):
            self.take()
            exp = ONE
            if self.peek() == ("sym", "^"):
                self.take()
                exp = self.ord_exponent()
            coeff = 1
            if self.peek() == ("sym", "*"):
                self.take()
                coeff = self.take("int")
            if exp.is_zero():
                return Ordinal.of(coeff)
            return Ordinal(((exp, coeff),)) if coeff else ZERO
        raise ValidationError(f"cannot parse ordinal in {self.text!r}")

    def ord_exponent(self) -> Ordinal:
        kind, value = self.peek()
        if kind == "int":
            return Ordinal.of(self.take())
        if (kind, value) in (("name", "w"), ("name", "omega")):
            self.take()
            if self.peek() == ("sym", "^"):
                self.take()
                return Ordinal(((self.ord_exponent(), 1),))
            return OMEGA
        if (kind, value) == ("sym", "("):
            self.take()
            o = self.ordinal()
            self.take("sym", ")")
            return o
        raise ValidationError(f"cannot parse exponent in {self.text!r}")

    def cardinal(self) -> Cardinal:
        kind, value = self.peek()
        if kind == "int":
            return Finite(self.take())
        name = self.take("name")
        self.take("sym", "(")
        if name in ("aleph", "beth"):
            arg = self.ordinal()
            node = Aleph(arg) if name == "aleph" else Beth(arg)
        elif name in ("pow", "succ", "hat"):
            arg = self.cardinal()
            node = {"pow": PowSet, "succ": Succ, "hat": Hat}[name](arg)
        else:
            raise ValidationError(f"unknown constructor {name!r} in {self.text!r}")
        self.take("sym", ")")
        return node


def parse_ordinal(text: str) -> Ordinal:
    p = _Parser(text)
    o = p.ordinal()
    p.done()
    return o


def parse_cardinal(text: str) -> Cardinal:
    """Parse ``aleph(0)``, ``beth(w+1)``, ``pow(...)``, ``succ(...)``, ``hat(...)`` or a natural."""
    p = _Parser(text)
    c = p.cardinal()
    p.done()
    return c


###############################################################################
# Normalization
###############################################################################


def _finite_pow(n: int) -> Finite:
    if n > MAX_FINITE_EXPONENT:
        raise ValidationError(f"2^{n} exceeds the finite exponent bound {MAX_FINITE_EXPONENT}")
    return Finite(2**n)


def _beth(index: Ordinal) -> Cardinal:
    return ALEPH_0 if index.is_zero() else Beth(index)


def normalize(e: Cardinal, depth_limit: int = DEFAULT_DEPTH_LIMIT) -> Cardinal:
    """Rewrite bottom-up to the canonical form; one pass reaches the fixed point.

    Rules: beth(0) -> aleph(0); pow(n) -> 2^n; pow(beth(g)) -> beth(g+1)
    (with aleph(0) read as beth(0)); succ(n) -> n+1; succ(aleph(g)) ->
    aleph(g+1); hat(aleph(0)) -> aleph(0); hat(beth(l)) -> beth(l) for limit
    l; hat(n) -> 2^(n-1) for finite n >= 1 and hat(0) -> 0.
    """
    if not isinstance(e, Cardinal):
        raise ValidationError(f"not a cardinal expression: {e!r}")
    if e.depth > 4 * depth_limit:
        raise DepthLimitError(f"expression depth {e.depth} exceeds limit")
    return _normalize(e, depth_limit)


@lru_cache(maxsize=65536)
def _normalize(e: Cardinal, depth_limit: int) -> Cardinal:
    if isinstance(e, Finite):
        return e
    if isinstance(e, (Aleph, Beth)):
        if e.index.depth > depth_limit:
            raise DepthLimitError(f"index {e.index} exceeds depth limit {depth_limit}")
        return _beth(e.index) if isinstance(e, Beth) else e
    arg = _normalize(e.arg, depth_limit)
    if isinstance(e, PowSet):
        if isinstance(arg, Finite):
            return _finite_pow(arg.n)
        if arg == ALEPH_0:
            return Beth(ONE)
        if isinstance(arg, Beth):
            return _checked(Beth(arg.index.succ()), depth_limit)
        return PowSet(arg)
    if isinstance(e, Succ):
        if isinstance(arg, Finite):
            return Finite(arg.n + 1)
        if isinstance(arg, Aleph):
            return _checked(Aleph(arg.index.succ()), depth_limit)
        return Succ(arg)
    if isinstance(e, Hat):
        if isinstance(arg, Finite):
            return Finite(0) if arg.n == 0 else _finite_pow(arg.n - 1)
        if arg == ALEPH_0:
            return ALEPH_0
        if isinstance(arg, Beth) and arg.index.is_limit():
            return arg
        return Hat(arg)
    raise ValidationError(f"unknown expression node {e!r}")


def _checked(e, depth_limit):
    if e.index.depth > depth_limit:
        raise DepthLimitError(f"index {e.index} exceeds depth limit {depth_limit}")
    return e


def hat(k: Cardinal) -> Cardinal:
    """sup{2^b | b < k}, reduced when a rule applies and symbolic otherwise."""
    k = normalize(k)
    if k.is_finite():
        raise ValidationError("hat is defined here for infinite cardinals only")
    return normalize(Hat(k))


###############################################################################
# GCH evaluation: every infinite expression collapses to an aleph
###############################################################################


@lru_cache(maxsize=65536)
def gch_value(e: Cardinal) -> Cardinal:
    """Evaluate a normalized expression to Finite/Aleph under GCH."""
    if isinstance(e, (Finite, Aleph)):
        return e
    if isinstance(e, Beth):
        return Aleph(e.index)
    arg = gch_value(e.arg)
    if isinstance(e, PowSet):
        return _finite_pow(arg.n) if isinstance(arg, Finite) else Aleph(arg.index.succ())
    if isinstance(e, Succ):
        return Finite(arg.n + 1) if isinstance(arg, Finite) else Aleph(arg.index.succ())
    if isinstance(e, Hat):
        if isinstance(arg, Finite):
            return normalize(Hat(arg))
        return arg
    raise ValidationError(f"unknown expression node {e!r}")


def _gch_compare(a: Cardinal, b: Cardinal) -> Verdict:
    va, vb = gch_value(a), gch_value(b)
    key_a = (0, va.n) if isinstance(va, Finite) else (1, va.index)
    key_b = (0, vb.n) if isinstance(vb, Finite) else (1, vb.index)
    if key_a[0] != key_b[0]:
        return Verdict.LT if key_a[0] < key_b[0] else Verdict.GT
    if key_a[1] < key_b[1]:
        return Verdict.LT
    if key_b[1] < key_a[1]:
        return Verdict.GT
    return Verdict.EQ


###############################################################################
# ZFC rule closure
###############################################################################


def _pow_arg(e: Cardinal):
    """Argument k when e is provably 2^k (pow(k) or beth(g+1))."""
    if isinstance(e, PowSet):
        return e.arg
    if isinstance(e, Beth) and e.index.is_successor():
        return _beth(e.index.pred())
    return None


def _succ_arg(e: Cardinal):
    """Argument k when e is provably k^+ (succ(k) or aleph(g+1))."""
    if isinstance(e, Succ):
        return e.arg
    if isinstance(e, Aleph) and e.index.is_successor():
        return Aleph(e.index.pred())
    return None


def _is_strong_limit_node(e: Cardinal) -> bool:
    return e == ALEPH_0 or (isinstance(e, Beth) and e.index.is_limit())


def _is_limit_node(e: Cardinal) -> bool:
    if _is_strong_limit_node(e):
        return True
    return isinstance(e, Aleph) and e.index.is_limit()


class _Closure:
    """Derived <= / < facts over a finite set of normalized terms.

    Relations are kept as bitset rows; rules are re-applied until nothing new
    follows.  Every rule is a ZFC theorem about cardinals, so a verdict read
    off the closure is sound.
    """

    def __init__(self, terms):
        nodes: dict = {}
        stack = list(terms)
        while stack:
            t = stack.pop()
            if t in nodes:
                continue
            nodes[t] = len(nodes)
            stack.extend(t.children())
            for extra in (_pow_arg(t), _succ_arg(t)):
                if extra is not None:
                    stack.append(extra)
            if isinstance(t, (Succ, Hat)) and not t.arg.is_finite():
                stack.append(normalize(PowSet(t.arg)))
        self.nodes = list(nodes)
        self.index = nodes
        n = len(self.nodes)
        self.le = [1 << i for i in range(n)]
        self.lt = [0] * n
        self._base_facts()
        self._saturate()

    def _add_le(self, i, j):
        self.le[i] |= 1 << j

    def _add_lt(self, i, j):
        self.lt[i] |= 1 << j
        self.le[i] |= 1 << j

    def _base_facts(self):
        idx = self.index
        for a, i in idx.items():
            for b, j in idx.items():
                if i == j:
                    continue
                if isinstance(a, Finite):
                    if isinstance(b, Finite):
                        if a.n < b.n:
                            self._add_lt(i, j)
                    else:
                        self._add_lt(i, j)
                elif b == ALEPH_0 and not isinstance(a, Finite):
                    self._add_le(j, i)
                if isinstance(a, Aleph) and isinstance(b, Aleph) and a.index < b.index:
                    self._add_lt(i, j)
                if isinstance(a, Beth) and isinstance(b, Beth) and a.index < b.index:
                    self._add_lt(i, j)
                if isinstance(a, Aleph) and isinstance(b, Beth):
                    if a.index < b.index:
                        self._add_lt(i, j)
                    elif a.index == b.index:
                        self._add_le(i, j)
        for t, i in idx.items():
            for arg in (_pow_arg(t), _succ_arg(t)):
                if arg is not None and arg in idx:
                    self._add_lt(idx[arg], i)
            if isinstance(t, Hat):
                self._add_le(idx[t.arg], i)
            if isinstance(t, (Succ, Hat)) and not t.arg.is_finite():
                self._add_le(i, idx[normalize(PowSet(t.arg))])

    def _close(self):
        n = len(self.nodes)
        le = list(self.le)
        for k in range(n):
            bit = 1 << k
            row_k = le[k]
            for i in range(n):
                if le[i] & bit:
                    le[i] |= row_k
        step = [0] * n
        for j in range(n):
            acc = 0
            row = self.lt[j]
            while row:
                low = row & -row
                acc |= le[low.bit_length() - 1]
                row ^= low
            step[j] = acc
        lt = [0] * n
        for i in range(n):
            acc = 0
            row = le[i]
            while row:
                low = row & -row
                acc |= step[low.bit_length() - 1]
                row ^= low
            lt[i] = acc
        self.le_star, self.lt_star = le, lt

    def leq(self, i, j) -> bool:
        return bool(self.le_star[i] >> j & 1)

    def less(self, i, j) -> bool:
        return bool(self.lt_star[i] >> j & 1)

    def _saturate(self):
        idx = self.index
        pows = [(i, idx[a]) for t, i in idx.items() if (a := _pow_arg(t)) is not None]
        succs = [(i, idx[a]) for t, i in idx.items() if (a := _succ_arg(t)) is not None]
        hats = [(i, idx[t.arg]) for t, i in idx.items() if isinstance(t, Hat)]
        strong = [i for t, i in idx.items() if _is_strong_limit_node(t)]
        limits = [i for t, i in idx.items() if _is_limit_node(t)]
        n = len(self.nodes)
        while True:
            self._close()
            before = (list(self.le), list(self.lt))
            # 2^ and sup{2^b} are monotone
            for group in (pows, hats):
                for p1, a1 in group:
                    for p2, a2 in group:
                        if p1 != p2 and self.leq(a1, a2):
                            self._add_le(p1, p2)
            # k < m implies k^+ <= m
            for s, a in succs:
                for m in range(n):
                    if self.less(a, m):
                        self._add_le(s, m)
            # k < m implies 2^k <= sup{2^b | b < m}
            for h, m in hats:
                for p, a in pows:
                    if self.less(a, m):
                        self._add_le(p, h)
            # strong limits absorb powers, limits absorb successors
            for lim in strong:
                for p, a in pows:
                    if self.less(a, lim):
                        self._add_lt(p, lim)
            for lim in limits:
                for s, a in succs:
                    if self.less(a, lim):
                        self._add_lt(s, lim)
            if (self.le, self.lt) == before:
                return

    def verdict(self, a: Cardinal, b: Cardinal) -> Verdict:
        i, j = self.index[a], self.index[b]
        lt_ab, lt_ba = self.less(i, j), self.less(j, i)
        le_ab, le_ba = self.leq(i, j), self.leq(j, i)
        if (lt_ab and le_ba) or (lt_ba and le_ab):
            raise AssertionError(f"inconsistent rule closure for {a} vs {b}")
        if lt_ab:
            return Verdict.LT
        if lt_ba:
            return Verdict.GT
        if le_ab and le_ba:
            return Verdict.EQ
        return Verdict.UNKNOWN


###############################################################################
# Public operations
###############################################################################


def _mode(mode) -> AxiomMode:
    if isinstance(mode, AxiomMode):
        return mode
    try:
        return AxiomMode(str(mode).lower())
    except ValueError:
        raise ValidationError(f"unknown axiom mode {mode!r}") from None


def compare(a: Cardinal, b: Cardinal, mode=AxiomMode.ZFC) -> Verdict:
    """Three-valued comparison of two cardinal expressions."""
    return _compare(normalize(a), normalize(b), _mode(mode))


@lru_cache(maxsize=65536)
def _compare(a: Cardinal, b: Cardinal, mode: AxiomMode) -> Verdict:
    if a == b:
        return Verdict.EQ
    if mode is AxiomMode.GCH:
        return _gch_compare(a, b)
    return _Closure((a, b)).verdict(a, b)


def _require_infinite(k: Cardinal) -> Cardinal:
    k = normalize(k)
    if k.is_finite():
        raise ValidationError(f"{k} is finite; an infinite cardinal is required")
    return k


def is_strong_limit(k: Cardinal, mode=AxiomMode.ZFC) -> Tri:
    """Whether 2^b < k for every b < k."""
    k = _require_infinite(k)
    if _mode(mode) is AxiomMode.GCH:
        v = gch_value(k)
        return Tri.of(not v.index.is_successor())
    if _is_strong_limit_node(k):
        return Tri.TRUE
    if _pow_arg(k) is not None or _succ_arg(k) is not None:
        # 2^k and k^+ both have a predecessor b with 2^b >= them
        return Tri.FALSE
    return Tri.UNKNOWN


def _indices(e: Cardinal):
    for t in e.subterms():
        if isinstance(t, (Aleph, Beth)):
            yield t.index


def least_perfect_bound(k: Cardinal, mode=AxiomMode.ZFC) -> CardinalOrUnknown:
    """Least cardinal >= k of the form sup{2^b | b < g}, or ``Tri.UNKNOWN``.

    Under GCH every infinite cardinal has that form, so ``k`` is returned.
    In ZFC, beths and symbolic hats already qualify; otherwise the answer is
    the least beth above ``k``, accepted only when it is provably above ``k``
    and the beth below it is a strong limit strictly below ``k`` (which rules
    out any hat value in between).
    """
    k = _require_infinite(k)
    if _mode(mode) is AxiomMode.GCH:
        return k
    if k == ALEPH_0 or isinstance(k, (Beth, Hat)):
        return k
    height = k.depth + 1
    candidates = set()
    for base in list(_indices(k)) + [ZERO]:
        for j in range(height + 1):
            candidates.add(base + Ordinal.of(j))
    for delta in sorted(candidates):
        beth = _beth(delta)
        verdict = compare(k, beth, AxiomMode.ZFC)
        if verdict is Verdict.EQ:
            return beth
        if verdict is Verdict.LT:
            if not delta.is_successor():
                return Tri.UNKNOWN
            below = _beth(delta.pred())
            if _is_strong_limit_node(below) and compare(below, k) is Verdict.LT:
                return beth
            return Tri.UNKNOWN
    return Tri.UNKNOWN


###############################################################################
# Enumeration helpers (tests and selftest)
###############################################################################


def expressions_up_to_depth(depth: int, indices=None, finites=(0, 1, 2)) -> list:
    """Every expression tree of constructor depth <= ``depth`` over small leaves."""
    if indices is None:
        indices = [ZERO, ONE, OMEGA]
    layer = [Finite(n) for n in finites]
    layer += [Aleph(i) for i in indices] + [Beth(i) for i in indices]
    seen = list(dict.fromkeys(layer))
    for _ in range(depth - 1):
        new = [ctor(e) for e in seen for ctor in (PowSet, Succ, Hat)]
        seen = list(dict.fromkeys(seen + new))
    return seen


def format_result(value) -> str:
    if isinstance(value, (Tri, Verdict)):
        return value.value
    return str(value)


__all__ = [
    "ALEPH_0",
    "Aleph",
    "AxiomMode",
    "Beth",
    "Cardinal",
    "DepthLimitError",
    "Finite",
    "Hat",
    "OMEGA",
    "ONE",
    "Ordinal",
    "PowSet",
    "RefusalError",
    "Succ",
    "ZERO",
    "compare",
    "expressions_up_to_depth",
    "gch_value",
    "hat",
    "is_strong_limit",
    "least_perfect_bound",
    "normalize",
    "parse_cardinal",
    "parse_ordinal",
]
