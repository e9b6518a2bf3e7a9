"""Tokenizer and recursive-descent parser for the core dialect and the two
foreign dialects (annotated and constraint programs).

Directives (``#lattice``, ``#conj``, ``#sneg``, ``#wneg``, ``#atoms``) may
appear anywhere at the top level and configure the lattice for the whole file.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .lattice import (
    ONE,
    ZERO,
    LatticeConfig,
    LatticeError,
    UnknownConnectiveError,
    make_config,
)
from .program import (
    App,
    Const,
    CornejoConstraint,
    CornejoProgram,
    CornejoRule,
    Formula,
    Literal,
    Program,
    Rule,
    SaadBodyLiteral,
    SaadProgram,
    SaadRule,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        loc = f"line {line}, col {col}: " if line is not None else ""
        super().__init__(f"{loc}{message}")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""
    (?P<WS>\s+)
  | (?P<COMMENT>%[^\n]*)
  | (?P<NUMBER>\d+(?:\.\d+)?(?:/\d+)?)
  | (?P<IDENT>@?[A-Za-z_][A-Za-z0-9_]*)
  | (?P<ARROW><-)
  | (?P<LBRACK>\[) | (?P<RBRACK>\])
  | (?P<LPAREN>\() | (?P<RPAREN>\))
  | (?P<COMMA>,) | (?P<AMP>&) | (?P<PIPE>\|)
  | (?P<MINUS>-) | (?P<COLON>:) | (?P<DOT>\.) | (?P<HASH>\#)
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind not in ("WS", "COMMENT"):
            tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(Token("EOF", "", line, col))
    return tokens


def _parse_number(tok: Token) -> Fraction:
    try:
        v = Fraction(tok.text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad number {tok.text!r}", tok.line, tok.col) from None
    if not ZERO <= v <= ONE:
        raise ParseError(f"constant {tok.text} outside [0,1]", tok.line, tok.col)
    return v


Parsed = Union[Program, SaadProgram, CornejoProgram]


@dataclass
class ParseResult:
    program: Parsed
    config: LatticeConfig
    dialect: str


class _Parser:
    def __init__(self, tokens: list[Token], dialect: str):
        self.tokens = tokens
        self.i = 0
        self.dialect = dialect

    # -- token helpers -------------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.text!r}", tok.line, tok.col)
        return self.next()

    def error(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.col)

    # -- directives (collected in a first pass) ------------------------------

    def collect_directives(self) -> tuple[LatticeConfig, list[str]]:
        settings = {"lattice": "rational", "conj": "godel",
                    "sneg": "standard", "wneg": "standard"}
        declared: list[str] = []
        kept: list[Token] = []
        i = 0
        toks = self.tokens
        while toks[i].kind != "EOF":
            if toks[i].kind != "HASH":
                kept.append(toks[i])
                i += 1
                continue
            hash_tok = toks[i]
            i += 1
            if toks[i].kind != "IDENT":
                raise ParseError("expected directive name after '#'",
                                 hash_tok.line, hash_tok.col)
            name = toks[i].text
            i += 1
            args: list[Token] = []
            while toks[i].kind not in ("DOT", "EOF"):
                args.append(toks[i])
                i += 1
            if toks[i].kind != "DOT":
                raise ParseError(f"directive #{name} not terminated by '.'",
                                 hash_tok.line, hash_tok.col)
            i += 1
            if name == "atoms":
                for tok in args:
                    if tok.kind == "COMMA":
                        continue
                    if tok.kind != "IDENT":
                        raise ParseError("bad atom in #atoms", tok.line, tok.col)
                    declared.append(tok.text)
            elif name in ("lattice", "conj", "sneg", "wneg"):
                settings[name] = "".join(t.text for t in args)
            else:
                raise ParseError(f"unknown directive #{name}",
                                 hash_tok.line, hash_tok.col)
        kept.append(toks[-1])
        self.tokens = kept
        self.i = 0
        try:
            cfg = make_config(
                lattice=settings["lattice"],
                family=settings["conj"],
                strong_neg=settings["sneg"],
                weak_neg=settings["wneg"],
            )
        except LatticeError as exc:
            raise ParseError(str(exc)) from None
        return cfg, declared

    # -- core dialect ---------------------------------------------------------

    def parse_core(self) -> ParseResult:
        cfg, declared = self.collect_directives()
        rules: list[Rule] = []
        while self.peek().kind != "EOF":
            rules.append(self.core_rule(cfg))
        return ParseResult(Program.build(rules, declared), cfg, "core")

    def literal(self) -> Literal:
        tok = self.peek()
        if tok.kind == "MINUS":
            self.next()
            atom = self.expect("IDENT")
            return Literal(atom.text, True)
        if tok.kind == "IDENT" and tok.text == "neg" and self.peek(1).kind == "IDENT":
            self.next()
            atom = self.expect("IDENT")
            return Literal(atom.text, True)
        if tok.kind == "IDENT":
            self.next()
            return Literal(tok.text, False)
        raise self.error(f"expected a literal, found {tok.text!r}")

    def core_rule(self, cfg: LatticeConfig) -> Rule:
        start = self.peek()
        head = self.literal()
        weight: Fraction | None = None
        family: str | None = None
        if self.peek().kind == "ARROW":
            self.next()
            if self.peek().kind == "LBRACK":
                self.next()
                weight = _parse_number(self.expect("NUMBER"))
                if self.peek().kind == "COMMA":
                    self.next()
                    family = self.expect("IDENT").text
                self.expect("RBRACK")
            body = self.formula(cfg)
        else:
            body = Const(ONE)  # a fact
        self.expect("DOT")
        return Rule(head, body, weight=weight, weight_family=family,
                    span=(start.line, start.col))

    def formula(self, cfg: LatticeConfig) -> Formula:
        return self.disjunction(cfg)

    def disjunction(self, cfg: LatticeConfig) -> Formula:
        out = self.conjunction(cfg)
        while self.peek().kind == "PIPE":
            self.next()
            rhs = self.conjunction(cfg)
            out = App(f"{cfg.family}_disj", (out, rhs))
        return out

    def conjunction(self, cfg: LatticeConfig) -> Formula:
        out = self.unary(cfg)
        while self.peek().kind == "AMP":
            self.next()
            rhs = self.unary(cfg)
            out = App(cfg.family, (out, rhs))
        return out

    def unary(self, cfg: LatticeConfig) -> Formula:
        from .program import WeakNeg

        tok = self.peek()
        if tok.kind == "IDENT" and tok.text == "not":
            self.next()
            return WeakNeg(self.unary(cfg))
        if tok.kind == "MINUS":
            return self.literal()
        if tok.kind == "IDENT" and tok.text == "neg" and self.peek(1).kind == "IDENT":
            return self.literal()
        if tok.kind == "NUMBER":
            self.next()
            return Const(_parse_number(tok))
        if tok.kind == "LPAREN":
            self.next()
            inner = self.formula(cfg)
            self.expect("RPAREN")
            return inner
        if tok.kind == "IDENT":
            if self.peek(1).kind == "LPAREN":
                name = self.next().text
                self.next()
                args = [self.formula(cfg)]
                while self.peek().kind == "COMMA":
                    self.next()
                    args.append(self.formula(cfg))
                self.expect("RPAREN")
                try:
                    conn = cfg.connective(name)
                except UnknownConnectiveError:
                    raise ParseError(f"unknown connective {name!r}",
                                     tok.line, tok.col) from None
                if len(args) != conn.arity:
                    raise ParseError(
                        f"connective {name} expects {conn.arity} arguments, "
                        f"got {len(args)}", tok.line, tok.col)
                return App(name, tuple(args))
            self.next()
            return Literal(tok.text, False)
        raise self.error(f"expected a formula, found {tok.text!r}")

    # -- annotated (Saad) dialect ---------------------------------------------

    def parse_saad(self) -> ParseResult:
        cfg, declared = self.collect_directives()
        rules: list[SaadRule] = []
        while self.peek().kind != "EOF":
            rules.append(self.saad_rule())
        return ParseResult(SaadProgram.build(rules, declared), cfg, "saad")

    def annotated(self) -> tuple[Literal, Fraction]:
        lit = self.literal()
        if lit.atom.startswith("@"):
            raise self.error("reserved '@' atoms are not allowed in source programs")
        self.expect("COLON")
        bound = _parse_number(self.expect("NUMBER"))
        return lit, bound

    def saad_rule(self) -> SaadRule:
        head, head_bound = self.annotated()
        body: list[SaadBodyLiteral] = []
        if self.peek().kind == "ARROW":
            self.next()
            while True:
                weak = False
                if self.peek().kind == "IDENT" and self.peek().text == "not":
                    self.next()
                    weak = True
                lit, bound = self.annotated()
                body.append(SaadBodyLiteral(lit, bound, weak))
                if self.peek().kind != "COMMA":
                    break
                self.next()
        self.expect("DOT")
        return SaadRule(head, head_bound, tuple(body))

    # -- constraint (Cornejo) dialect -----------------------------------------

    def parse_cornejo(self) -> ParseResult:
        cfg, declared = self.collect_directives()
        rules: list[CornejoRule] = []
        constraints: list[CornejoConstraint] = []
        while self.peek().kind != "EOF":
            item = self.cornejo_item(cfg)
            if isinstance(item, CornejoRule):
                rules.append(item)
            else:
                constraints.append(item)
        return ParseResult(
            CornejoProgram.build(rules, constraints, declared), cfg, "cornejo"
        )

    def cornejo_item(self, cfg: LatticeConfig):
        tok = self.peek()
        if tok.kind == "NUMBER":
            self.next()
            bound = _parse_number(tok)
            self.expect("ARROW")
            body = self.cornejo_formula(cfg)
            self.expect("DOT")
            return CornejoConstraint(bound, body)
        if tok.kind == "IDENT":
            if tok.text == "neg" and self.peek(1).kind == "IDENT":
                raise self.error("strong negation is not allowed in this dialect")
            head = self.next().text
            if head.startswith("@"):
                raise self.error("reserved '@' atoms are not allowed in source programs")
            if self.peek().kind == "ARROW":
                self.next()
                body = self.cornejo_formula(cfg)
            else:
                body = Const(ONE)
            self.expect("DOT")
            return CornejoRule(head, body)
        raise self.error(f"expected a rule or constraint, found {tok.text!r}")

    def cornejo_formula(self, cfg: LatticeConfig) -> Formula:
        phi = self.formula(cfg)
        self._check_cornejo(phi)
        return phi

    def _check_cornejo(self, phi: Formula) -> None:
        from .program import WeakNeg, subformulas

        for f in subformulas(phi):
            if isinstance(f, Literal):
                if f.negated:
                    raise ParseError("strong negation is not allowed in this dialect")
                if f.atom.startswith("@"):
                    raise ParseError(
                        "reserved '@' atoms are not allowed in source programs")
            elif isinstance(f, WeakNeg) and not isinstance(f.child, Literal):
                raise ParseError("'not' applies only to atoms in this dialect")


def parse(text: str, dialect: str = "core") -> ParseResult:
    """Parse program text in the given dialect, returning the AST together
    with the lattice configuration assembled from the file's directives."""
    parser = _Parser(tokenize(text), dialect)
    if dialect == "core":
        return parser.parse_core()
    if dialect == "saad":
        return parser.parse_saad()
    if dialect == "cornejo":
        return parser.parse_cornejo()
    raise ParseError(f"unknown dialect {dialect!r}")
