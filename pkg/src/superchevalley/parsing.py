"""Recursive-descent parser for the ASCII expression grammar.

See README.md for the EBNF.  Every error carries the offending position.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import roots as R
from .carriers import Carrier, CarrierElement
from .kostant import CartanBinomial, DividedPower, OddVector, atom_element
from .roots import CartanElement, Root, RootError, coroot
from .scalars import A, ONE, ZERO, ScalarA
from .superalgebra import SuperVector, root_vector
from .supergroup import GeneratorRecord


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.message, self.text, self.pos = message, text, pos
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^(),;\[\]]))")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            raise ParseError(f"unexpected character {text[i]!r}", text, i)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        i = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _RawPBW:
    """Unordered PBW combination; products concatenate words."""

    def __init__(self, terms: dict):
        self.terms = {w: c for w, c in terms.items() if c}

    @classmethod
    def scalar(cls, c: ScalarA) -> "_RawPBW":
        return cls({(): c})

    def __add__(self, o: "_RawPBW") -> "_RawPBW":
        out = dict(self.terms)
        for w, c in o.terms.items():
            out[w] = out.get(w, ZERO) + c
        return _RawPBW(out)

    def scale(self, s: ScalarA) -> "_RawPBW":
        return _RawPBW({w: c * s for w, c in self.terms.items()})

    def __mul__(self, o: "_RawPBW") -> "_RawPBW":
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in o.terms.items():
                w = w1 + w2
                out[w] = out.get(w, ZERO) + c1 * c2
        return _RawPBW(out)


class Parser:
    def __init__(self, text: str, carrier: Carrier | None = None):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.carrier = carrier

    # -- token helpers ------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        raise ParseError(msg, self.text, (tok or self.tok).pos)

    def accept(self, value: str) -> bool:
        if self.tok.kind != "end" and self.tok.value == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> Token:
        t = self.tok
        if not self.accept(value):
            self.error(f"expected {value!r}, found {t.value or 'end of input'!r}")
        return t

    def expect_kind(self, kind: str) -> Token:
        t = self.tok
        if t.kind != kind:
            self.error(f"expected {kind}, found {t.value or 'end of input'!r}")
        self.i += 1
        return t

    def done(self) -> None:
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.value!r}")

    # -- roots --------------------------------------------------------------
    def root_weight(self) -> tuple[tuple[int, int, int], int]:
        start = self.tok
        w = (0, 0, 0)
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        while True:
            k = 1
            if self.tok.kind == "num":
                k = int(self.tok.value)
                self.i += 1
            t = self.tok
            if t.kind != "name" or not re.fullmatch(r"[ae][123]", t.value):
                self.error("expected a root term a1..a3 or e1..e3")
            self.i += 1
            idx = int(t.value[1]) - 1
            if t.value[0] == "a":
                term = R.SIMPLE_ROOTS[idx]
            else:
                term = tuple(1 if j == idx else 0 for j in range(3))
            w = R.add(w, term, sign * k)
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                return w, start.pos

    def root(self) -> Root:
        w, pos = self.root_weight()
        if not R.is_root(w):
            raise ParseError(f"{w} (epsilon coordinates) is not a root", self.text, pos)
        return Root(w)

    # -- generic expression skeleton -----------------------------------------
    def expr(self, atom: Callable, lift: Callable, mul: Callable):
        """Sum of products; scalars mix with context values via ``lift``."""
        neg = False
        if self.accept("-"):
            neg = True
        else:
            self.accept("+")
        first = self.tok
        acc = self.term(atom, lift, mul)
        if neg:
            acc = self._scale(acc, -ONE)
        while True:
            if self.accept("+"):
                sign = ONE
            elif self.accept("-"):
                sign = -ONE
            else:
                return acc
            start = self.tok
            y = self._scale(self.term(atom, lift, mul), sign)
            acc = self._add(acc, y, lift, first, start)

    def term(self, atom, lift, mul):
        acc = self.factor(atom, lift, mul)
        while True:
            if self.accept("*"):
                acc = self._mul(acc, self.factor(atom, lift, mul), mul)
            elif self.tok.value == "/":
                t = self.tok
                self.i += 1
                d = self.factor(atom, lift, mul)
                if not isinstance(d, ScalarA):
                    self.error("can only divide by a scalar", t)
                try:
                    acc = self._scale(acc, ONE / d)
                except ZeroDivisionError:
                    self.error(f"{d} is not invertible", t)
            else:
                return acc

    def factor(self, atom, lift, mul):
        if self.accept("-"):
            return self._scale(self.factor(atom, lift, mul), -ONE)
        base = self.primary(atom, lift, mul)
        if self.tok.value == "^" and self.toks[self.i + 1].kind == "num":
            self.i += 1
            n = int(self.expect_kind("num").value)
            if isinstance(base, ScalarA):
                return base ** n
            if isinstance(base, CarrierElement):
                return base ** n
            self.error("powers apply to scalars and carrier elements")
        return base

    def primary(self, atom, lift, mul):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return ScalarA(int(t.value))
        if t.kind == "name" and t.value == "a":
            self.i += 1
            return A
        if self.accept("("):
            v = self.expr(atom, lift, mul)
            self.expect(")")
            return v
        v = atom(self) if atom else None
        if v is None:
            self.error(f"unexpected {t.value or 'end of input'!r}")
        return v

    @staticmethod
    def _scale(v, s: ScalarA):
        if isinstance(v, ScalarA):
            return v * s
        if isinstance(v, _RawPBW):
            return v.scale(s)
        return v * s

    def _add(self, x, y, lift, xtok: Token, ytok: Token):
        """``x + y``; ``lift`` turns a scalar into a context value or reports at its token."""
        if isinstance(x, ScalarA) and isinstance(y, ScalarA):
            return x + y
        if isinstance(x, ScalarA):
            x = lift(self, x, xtok)
        if isinstance(y, ScalarA):
            y = lift(self, y, ytok)
        return x + y

    def _mul(self, x, y, mul):
        if isinstance(x, ScalarA):
            return self._scale(y, x)
        if isinstance(y, ScalarA):
            return self._scale(x, y)
        if mul is None:
            self.error("product of two non-scalars is not defined here")
        return mul(self, x, y)

    # -- scalars ------------------------------------------------------------
    def scalar(self) -> ScalarA:
        v = self.expr(None, None, None)
        return v

    # -- vectors of g -------------------------------------------------------
    def cartan_atom(self) -> CartanElement | None:
        t = self.tok
        if t.kind == "name" and re.fullmatch(r"H[123]", t.value):
            self.i += 1
            return CartanElement.basis(int(t.value[1]))
        if t.kind == "name" and t.value == "H" and self.toks[self.i + 1].value == "[":
            self.i += 2
            r = self.root()
            self.expect("]")
            return coroot(r)
        return None

    def vector_atom(self) -> SuperVector | None:
        t = self.tok
        if t.kind == "name" and t.value in ("E", "F") and self.toks[self.i + 1].value == "(":
            self.i += 2
            r = self.root()
            self.expect(")")
            if t.value == "F":
                r = -r
            return SuperVector.basis(root_vector(r))
        H = self.cartan_atom()
        if H is not None:
            return SuperVector.cartan(H)
        return None

    def vector(self) -> SuperVector:
        def atom(p):
            return p.vector_atom()

        def lift(p, s, tok):
            p.error("a scalar cannot be added to a vector", tok)

        v = self.expr(atom, lift, None)
        if isinstance(v, ScalarA):
            if v:
                self.error("expected a vector, found a scalar")
            return SuperVector()
        return v

    def cartan(self) -> CartanElement:
        start = self.tok
        v = self.vector()
        if any(k >= 3 for k in v.coords):
            self.error("expected a Cartan element", start)
        return v.cartan_part()

    # -- Kostant words ------------------------------------------------------
    def pbw_atom(self) -> _RawPBW | None:
        t = self.tok
        if t.kind == "name" and t.value == "binom" and self.toks[self.i + 1].value == "(":
            self.i += 2
            start = self.tok
            H = self.cartan()
            self.expect(",")
            n = int(self.expect_kind("num").value)
            self.expect(")")
            if not H.in_h_Za():
                self.error("binom needs H with Z[a]-coordinates", start)
            return _RawPBW(atom_element(CartanBinomial(H, n)).terms)
        if t.kind == "name" and t.value in ("E", "F") and self.toks[self.i + 1].value == "(":
            self.i += 2
            r = self.root()
            self.expect(")")
            if t.value == "F":
                r = -r
            n = 1
            if self.tok.value == "^" and self.toks[self.i + 1].value == "(":
                self.i += 2
                n = int(self.expect_kind("num").value)
                self.expect(")")
            if r.is_odd:
                if n > 1:
                    return _RawPBW({})
                return _RawPBW(atom_element(OddVector(r)).terms) if n else _RawPBW.scalar(ONE)
            return _RawPBW(atom_element(DividedPower(r, n)).terms)
        H = self.cartan_atom()
        if H is not None:
            return _RawPBW(atom_element(CartanBinomial(H, 1)).terms)
        return None

    def pbw(self) -> dict:
        def atom(p):
            return p.pbw_atom()

        def lift(p, s, tok):
            return _RawPBW.scalar(s)

        def mul(p, x, y):
            return x * y

        v = self.expr(atom, lift, mul)
        if isinstance(v, ScalarA):
            v = _RawPBW.scalar(v)
        return v.terms

    # -- carrier elements ---------------------------------------------------
    def carrier_atom(self) -> CarrierElement | None:
        t = self.tok
        car = self.carrier
        if t.kind != "name" or car is None:
            return None
        m = re.fullmatch(r"(x|th)(\d+)", t.value)
        if m:
            i = int(m.group(2))
            if not 1 <= i <= car.odd:
                self.error(f"odd generator {t.value} out of range 1..{car.odd}")
            self.i += 1
            return car.xi(i)
        m = re.fullmatch(r"eps(\d*)", t.value)
        if m:
            k = int(m.group(1) or 1)
            if not 1 <= k <= car.duals:
                self.error(f"dual generator {t.value} not available")
            self.i += 1
            return car.eps(k)
        return None

    def carrier_element(self) -> CarrierElement:
        def atom(p):
            return p.carrier_atom()

        def lift(p, s, tok):
            return p.carrier.scalar(s)

        def mul(p, x, y):
            return x * y

        v = self.expr(atom, lift, mul)
        if isinstance(v, ScalarA):
            v = self.carrier.scalar(v)
        return v

    # -- group words --------------------------------------------------------
    def record(self) -> GeneratorRecord:
        t = self.expect_kind("name")
        if t.value not in ("xE", "xO", "hC", "hA"):
            self.error(f"unknown generator {t.value!r}; expected xE, xO, hC or hA", t)
        self.expect("(")
        root = H = None
        start = self.tok
        if t.value in ("xE", "xO"):
            root = self.root()
            if (t.value == "xE") != root.is_even:
                self.error(f"{t.value} needs an {'even' if t.value == 'xE' else 'odd'} root", start)
        else:
            H = self.cartan()
        self.expect(";")
        pstart = self.tok
        param = self.carrier_element()
        self.expect(")")
        try:
            return GeneratorRecord(t.value, root, H, param)
        except ValueError as exc:
            raise ParseError(str(exc), self.text, pstart.pos) from None

    def group_word(self) -> list[GeneratorRecord]:
        out = [self.record()]
        while self.accept(";"):
            out.append(self.record())
        return out


def _run(text: str, method: str, carrier: Carrier | None = None):
    p = Parser(text, carrier)
    try:
        v = getattr(p, method)()
    except RootError as exc:
        raise ParseError(str(exc), text, p.tok.pos) from None
    p.done()
    return v


def parse_root(text: str) -> Root:
    return _run(text, "root")


def parse_scalar(text: str) -> ScalarA:
    return _run(text, "scalar")


def parse_vector(text: str) -> SuperVector:
    return _run(text, "vector")


def parse_cartan(text: str) -> CartanElement:
    return _run(text, "cartan")


def parse_pbw(text: str) -> dict:
    """An unordered combination of Kostant words, ``{word: coefficient}``."""
    return _run(text, "pbw")


def parse_carrier_element(text: str, carrier: Carrier) -> CarrierElement:
    return _run(text, "carrier_element", carrier)


def parse_group_word(text: str, carrier: Carrier) -> list[GeneratorRecord]:
    return _run(text, "group_word", carrier)


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError("expected a rational number P/Q", text, 0) from None
