"""Parser and printer for the line-table / multisegment input language.

::

    -- comments run to end of line
    line a { degree = 2, sigma = self orthogonal }
    line b { degree = 1, sigma = c }
    line c { degree = 1, sigma = b }
    pi p = St(1, a) + St(2, b, -1/2) + St(2, c, 1/2)

Exponents are integers or halves; the exponent defaults to 0.  All line
declarations come before all ``pi`` bindings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .core import ORTHOGONAL, SYMPLECTIC, CuspidalLine, LineTable, Multisegment, St, format_exponent
from .errors import InputError, LineTableError

KEYWORDS = frozenset({"line", "pi", "St", "degree", "sigma", "self", "orthogonal", "symplectic"})

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>--[^\n]*)
  | (?P<int>-?[0-9]+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[{}(),=+/])
    """,
    re.VERBOSE,
)


class ParseError(InputError):
    """Syntax or semantic error at a 1-based ``line:column`` position."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{line}:{column}: {message}" if line else message)
        self.line = line
        self.column = column


class DanglingLine(ParseError):
    pass


class DuplicateName(ParseError):
    pass


class UnknownBinding(InputError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class SegmentSyntax:
    length: int
    line: str
    exponent: Fraction = Fraction(0)
    pos: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Binding:
    name: str
    segments: tuple[SegmentSyntax, ...]
    pos: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class LineDecl:
    line: CuspidalLine
    pos: tuple[int, int] = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class SourceFile:
    decls: tuple[LineDecl, ...]
    bindings: tuple[Binding, ...]
    text: str = field(default="", compare=False, repr=False)

    @property
    def table(self) -> LineTable:
        return LineTable(d.line for d in self.decls)

    @property
    def names(self) -> list[str]:
        return [b.name for b in self.bindings]

    def binding(self, name: str) -> Binding:
        for b in self.bindings:
            if b.name == name:
                return b
        raise UnknownBinding(f"no binding named {name!r}; available: {', '.join(self.names) or 'none'}")

    def multisegment(self, name: str) -> Multisegment:
        table = self.table
        b = self.binding(name)
        return Multisegment(tuple(St(s.length, table[s.line], s.exponent) for s in b.segments), table)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        chunk = m.group()
        if kind not in ("ws", "comment"):
            if kind == "name" and chunk in KEYWORDS:
                kind = chunk
            elif kind == "punct":
                kind = chunk
            tokens.append(Token(kind, chunk, line, pos - line_start + 1))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None, cls=ParseError):
        tok = tok or self.tok
        return cls(message, tok.line, tok.column)

    def expect(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise self.error(f"expected {kind!r}, found {found}")
        self.i += 1
        return tok

    def integer(self, what: str, positive: bool = True) -> int:
        tok = self.expect("int")
        try:
            value = int(tok.text)
        except ValueError:
            raise self.error(f"{what} is too large", tok) from None
        if positive and value < 1:
            raise self.error(f"{what} must be a positive integer, got {value}", tok)
        return value

    def parse(self) -> SourceFile:
        decls, bindings = [], []
        while self.tok.kind == "line":
            decls.append(self.decl())
        while self.tok.kind == "pi":
            bindings.append(self.binding())
        if self.tok.kind != "eof":
            expected = "'pi' or end of input" if bindings else "'line', 'pi' or end of input"
            raise self.error(f"expected {expected}, found {self.tok.text!r}")
        return self.check(SourceFile(tuple(decls), tuple(bindings), self.text))

    def decl(self) -> LineDecl:
        start = self.expect("line")
        name = self.expect("name").text
        self.expect("{")
        self.expect("degree")
        self.expect("=")
        degree = self.integer("degree")
        self.expect(",")
        self.expect("sigma")
        self.expect("=")
        if self.tok.kind == "self":
            self.i += 1
            if self.tok.kind == "orthogonal":
                sign = ORTHOGONAL
            elif self.tok.kind == "symplectic":
                sign = SYMPLECTIC
            else:
                raise self.error("expected 'orthogonal' or 'symplectic' after 'self'")
            self.i += 1
            line = CuspidalLine.self_dual(name, degree, sign)
        else:
            line = CuspidalLine.paired(name, degree, self.expect("name").text)
        self.expect("}")
        return LineDecl(line, (start.line, start.column))

    def binding(self) -> Binding:
        start = self.expect("pi")
        name = self.expect("name").text
        self.expect("=")
        segs = [self.segment()]
        while self.tok.kind == "+":
            self.i += 1
            segs.append(self.segment())
        return Binding(name, tuple(segs), (start.line, start.column))

    def segment(self) -> SegmentSyntax:
        start = self.expect("St")
        self.expect("(")
        length = self.integer("segment length")
        self.expect(",")
        line = self.expect("name").text
        exponent = Fraction(0)
        if self.tok.kind == ",":
            self.i += 1
            exponent = self.rational()
        self.expect(")")
        return SegmentSyntax(length, line, exponent, (start.line, start.column))

    def rational(self) -> Fraction:
        num = self.integer("exponent", positive=False)
        if self.tok.kind != "/":
            return Fraction(num)
        self.i += 1
        den_tok = self.tok
        den = self.integer("denominator", positive=False)
        if den != 2:
            raise self.error(
                f"exponent {num}/{den} is not allowed: exponents are integers or halves", den_tok
            )
        return Fraction(num, 2)

    def check(self, sf: SourceFile) -> SourceFile:
        seen: dict[str, LineDecl] = {}
        for d in sf.decls:
            if d.line.name in seen:
                raise DuplicateName(f"line {d.line.name} declared twice", *d.pos)
            seen[d.line.name] = d
        try:
            LineTable(d.line for d in sf.decls)
        except LineTableError as exc:
            pos = seen[exc.line].pos if exc.line in seen else (0, 0)
            raise ParseError(f"{type(exc).__name__}: {exc}", *pos) from exc
        names: set[str] = set()
        for b in sf.bindings:
            if b.name in names:
                raise DuplicateName(f"binding {b.name} defined twice", *b.pos)
            names.add(b.name)
            for s in b.segments:
                if s.line not in seen:
                    raise DanglingLine(f"segment uses undeclared line {s.line}", *s.pos)
        return sf


def parse(source: str | bytes) -> SourceFile:
    if isinstance(source, (bytes, bytearray)):
        try:
            source = bytes(source).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8 (byte offset {exc.start})") from None
    return _Parser(source).parse()


def format_segment(s: SegmentSyntax) -> str:
    if s.exponent == 0:
        return f"St({s.length}, {s.line})"
    return f"St({s.length}, {s.line}, {format_exponent(s.exponent)})"


def format_source(sf: SourceFile) -> str:
    out = []
    for d in sf.decls:
        line = d.line
        if line.is_self_partnered:
            sigma = "self " + ("orthogonal" if line.self_sign == ORTHOGONAL else "symplectic")
        else:
            sigma = line.sigma_partner
        out.append(f"line {line.name} {{ degree = {line.degree}, sigma = {sigma} }}")
    for b in sf.bindings:
        out.append(f"pi {b.name} = " + " + ".join(format_segment(s) for s in b.segments))
    return "\n".join(out) + "\n"


def format_multisegment(pi: Multisegment, name: str = "p") -> str:
    """Render ``pi`` with its full line table as a standalone source file."""
    decls = tuple(LineDecl(pi.table[n]) for n in sorted(pi.table))
    segs = tuple(SegmentSyntax(s.length, s.line.name, s.exponent) for s in pi.segments)
    return format_source(SourceFile(decls, (Binding(name, segs),) if segs else ()))
