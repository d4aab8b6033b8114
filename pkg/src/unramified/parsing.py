"""Text formats: polynomial expressions, scalar literals, presentation files
and map files.

The expression grammar accepts names, `^`, `*`, `/`, `+`, `-` and
parentheses.  Scalars follow the field: integers or integer fractions over
the rationals and prime fields, ratios of univariate polynomials in the
field variable over F_p(x); the field variable is just a name that is not a
ring variable.  Division is only defined by scalar (constant) denominators.
`format_polynomial` output always reparses to an equal polynomial.

Presentation files are line oriented::

    field QQ | Fp 5 | FpX 2
    ring X:1 Y:1          # name:weight pairs
    rel X^2*Y^2 + X^5 + Y^5
    mode local | graded | plain

A `#` starts a comment only at the beginning of a line or after whitespace,
so tensor-product variable names such as ``X#1`` survive a round trip.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebras import (
    MODE_GRADED,
    MODE_LOCAL,
    MODE_PLAIN,
    Presentation,
    QuotientAlgebra,
    artinian_local_model,
    make_quotient,
)
from .errors import ParseError
from .fields import (
    PRIME_FIELD,
    RATIONAL_FUNCTIONS,
    RATIONALS,
    FieldDescriptor,
    FieldElement,
    prime_field,
    rational_functions,
    rationals,
)
from .groebner import DEFAULT_BUDGET
from .polynomials import (
    GREVLEX,
    PolyRing,
    Polynomial,
    format_polynomial,
)

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_#]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str      # "num" | "name" | "op" | "end"
    text: str
    line: int
    column: int


def _tokenize(text: str, line: int = 1) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            break
        for kind in ("num", "name", "op"):
            value = match.group(kind)
            if value is not None:
                tokens.append(Token(kind, value, line, match.start(kind) + 1))
                break
        pos = match.end()
    rest = text[pos:]
    if rest.strip():
        offset = len(rest) - len(rest.lstrip())
        raise ParseError(f"unexpected character {rest.lstrip()[0]!r}",
                         line, pos + offset + 1)
    tokens.append(Token("end", "", line, len(text) + 1))
    return tokens


class _ExpressionParser:
    """Recursive descent over the token list, producing a Polynomial."""

    def __init__(self, tokens: list, ring: PolyRing):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, text: str):
        tok = self.advance()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", tok.line, tok.column)

    def parse(self) -> Polynomial:
        value = self.expression()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.column)
        return value

    def expression(self) -> Polynomial:
        value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def term(self) -> Polynomial:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "*/":
                self.advance()
                rhs = self.factor()
                if tok.text == "*":
                    value = value * rhs
                else:
                    if not rhs.is_constant():
                        raise ParseError("can only divide by scalars",
                                         tok.line, tok.column)
                    c = rhs.constant_coefficient()
                    if c.is_zero():
                        raise ParseError("division by zero", tok.line, tok.column)
                    value = value.scale(c.inverse())
            else:
                return value

    def factor(self) -> Polynomial:
        value = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            exp = self.advance()
            if exp.kind != "num":
                raise ParseError("exponent must be a non-negative integer",
                                 exp.line, exp.column)
            value = value ** int(exp.text)
        return value

    def atom(self) -> Polynomial:
        tok = self.advance()
        if tok.kind == "num":
            return self.ring.from_int(int(tok.text))
        if tok.kind == "name":
            if tok.text in self.ring.names:
                return self.ring.variable(tok.text)
            field = self.ring.field
            if field.kind == RATIONAL_FUNCTIONS and tok.text == field.variable:
                return self.ring.from_scalar(field.generator())
            raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.column)
        if tok.kind == "op" and tok.text == "(":
            value = self.expression()
            self.expect_op(")")
            return value
        if tok.kind == "op" and tok.text == "-":
            return -self.factor()
        if tok.kind == "op" and tok.text == "+":
            return self.factor()
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}",
                         tok.line, tok.column)


def parse_polynomial(text: str, ring: PolyRing, line: int = 1) -> Polynomial:
    """Parse an expression in the ring's variables (plus the field variable
    over F_p(x)).  Errors carry line and column."""
    return _ExpressionParser(_tokenize(text, line), ring).parse()


def parse_scalar(text: str, field: FieldDescriptor) -> FieldElement:
    """Parse a scalar literal by evaluating the expression in a variable-free
    ring over the field."""
    ring = PolyRing(field, ())
    value = parse_polynomial(text, ring)
    return value.constant_coefficient()


def parse_field_spec(text: str) -> FieldDescriptor:
    """Field syntax: QQ, Fp:5 (or "Fp 5"), FpX:2 (or "FpX 2")."""
    parts = text.replace(":", " ").split()
    if not parts:
        raise ParseError("empty field specification")
    kind = parts[0]
    if kind == "QQ":
        if len(parts) != 1:
            raise ParseError("QQ takes no parameter")
        return rationals()
    if kind in ("Fp", "FpX"):
        if len(parts) != 2 or not parts[1].isdigit():
            raise ParseError(f"{kind} needs a prime parameter, e.g. {kind}:5")
        p = int(parts[1])
        try:
            return prime_field(p) if kind == "Fp" else rational_functions(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field {kind!r} (expected QQ, Fp:p or FpX:p)")


_COMMENT_RE = re.compile(r"(?:^|(?<=\s))#.*$")


def _strip_comment(line: str) -> str:
    return _COMMENT_RE.sub("", line)


def parse_presentation(text: str) -> Presentation:
    """Parse a presentation file into a Presentation (mode included)."""
    field: FieldDescriptor | None = None
    ring: PolyRing | None = None
    names: list = []
    weights: list = []
    relations: list = []
    mode = MODE_PLAIN
    saw_mode = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "field":
            if field is not None:
                raise ParseError("duplicate field line", lineno)
            try:
                field = parse_field_spec(rest)
            except ParseError as exc:
                raise ParseError(exc.message, lineno) from None
        elif keyword == "ring":
            if field is None:
                raise ParseError("field must come before ring", lineno)
            if ring is not None:
                raise ParseError("duplicate ring line", lineno)
            for col, chunk in enumerate(rest.split()):
                name, sep, weight = chunk.partition(":")
                if not sep:
                    names.append(name)
                    weights.append(1)
                    continue
                if not weight.isdigit() or int(weight) < 1:
                    raise ParseError(f"bad weight in {chunk!r}", lineno)
                names.append(name)
                weights.append(int(weight))
            try:
                ring = PolyRing(field, tuple(names), tuple(weights))
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
        elif keyword == "rel":
            if ring is None:
                raise ParseError("ring must come before rel", lineno)
            relations.append(parse_polynomial(rest, ring, lineno))
        elif keyword == "mode":
            if saw_mode:
                raise ParseError("duplicate mode line", lineno)
            if rest not in (MODE_PLAIN, MODE_GRADED, MODE_LOCAL):
                raise ParseError(f"unknown mode {rest!r}", lineno)
            mode = rest
            saw_mode = True
        else:
            raise ParseError(f"unknown directive {keyword!r}", lineno)
    if field is None:
        raise ParseError("missing field line")
    if ring is None:
        ring = PolyRing(field, ())
    try:
        return Presentation(ring, tuple(relations), mode)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_presentation(presentation: Presentation) -> str:
    """Canonical dump; parse_presentation round-trips it."""
    field = presentation.ring.field
    if field.kind == RATIONALS:
        field_line = "field QQ"
    elif field.kind == PRIME_FIELD:
        field_line = f"field Fp {field.p}"
    else:
        field_line = f"field FpX {field.p}"
    lines = [field_line]
    if presentation.ring.nvars:
        lines.append("ring " + " ".join(
            f"{n}:{w}" for n, w in zip(presentation.ring.names,
                                       presentation.ring.weights)))
    for rel in presentation.relations:
        lines.append("rel " + format_polynomial(rel))
    lines.append(f"mode {presentation.mode}")
    return "\n".join(lines) + "\n"


def build_algebra(presentation: Presentation, *, budget: int = DEFAULT_BUDGET,
                  power_cap: int = 64) -> QuotientAlgebra:
    """Materialize a parsed presentation: local mode goes through the
    power-of-the-maximal-ideal stabilization, the others are plain quotients."""
    if presentation.mode == MODE_LOCAL:
        return artinian_local_model(presentation.ring, presentation.relations,
                                    power_cap=power_cap, budget=budget)
    return make_quotient(presentation, budget=budget)


@dataclass
class MapFile:
    source: Presentation
    target: Presentation
    images: dict  # source variable name -> expression text


def parse_map_file(text: str) -> MapFile:
    """A map file has three sections:

        [source]
        <presentation lines>
        [target]
        <presentation lines>
        [map]
        X = X^2
        ...
    """
    sections: dict = {}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if current not in ("source", "target", "map"):
                raise ParseError(f"unknown section {current!r}", lineno)
            if current in sections:
                raise ParseError(f"duplicate section {current!r}", lineno)
            sections[current] = []
            continue
        if current is None:
            raise ParseError("content before the first section", lineno)
        sections[current].append((lineno, raw))
    for needed in ("source", "target", "map"):
        if needed not in sections:
            raise ParseError(f"missing [{needed}] section")
    source = parse_presentation("\n".join(raw for _, raw in sections["source"]))
    target = parse_presentation("\n".join(raw for _, raw in sections["target"]))
    images: dict = {}
    for lineno, raw in sections["map"]:
        line = _strip_comment(raw).strip()
        name, sep, expr = line.partition("=")
        if not sep:
            raise ParseError("map lines look like NAME = expression", lineno)
        name = name.strip()
        if name in images:
            raise ParseError(f"duplicate image for {name!r}", lineno)
        images[name] = expr.strip()
    return MapFile(source, target, images)
