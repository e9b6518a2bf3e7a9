"""AST, validation, weight desugaring, and pretty printing for extended fuzzy
logic programs and the annotated (Saad) and constraint (Cornejo) dialects."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .lattice import (
    ONE,
    LatticeConfig,
    UnknownConnectiveError,
)

RESERVED_PREFIX = "@"


@dataclass(frozen=True)
class Literal:
    """An atom or its strong negation."""

    atom: str
    negated: bool = False

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.negated)

    @property
    def key(self) -> tuple[str, bool]:
        return (self.atom, self.negated)

    def __str__(self) -> str:
        return f"-{self.atom}" if self.negated else self.atom


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class WeakNeg:
    child: "Formula"


@dataclass(frozen=True)
class App:
    conn: str
    args: tuple["Formula", ...]


# The text grammar only allows weak negation directly on literals; WeakNeg over
# arbitrary children is produced internally (dialect translations) and the
# evaluators accept it.
Formula = Union[Const, Literal, WeakNeg, App]


def subformulas(phi: Formula) -> Iterator[Formula]:
    yield phi
    if isinstance(phi, WeakNeg):
        yield from subformulas(phi.child)
    elif isinstance(phi, App):
        for a in phi.args:
            yield from subformulas(a)


def formula_atoms(phi: Formula) -> set[str]:
    return {f.atom for f in subformulas(phi) if isinstance(f, Literal)}


def formula_constants(phi: Formula) -> set[Fraction]:
    return {f.value for f in subformulas(phi) if isinstance(f, Const)}


def uses_weak_negation(phi: Formula) -> bool:
    return any(isinstance(f, WeakNeg) for f in subformulas(phi))


def uses_strong_negation(phi: Formula) -> bool:
    return any(isinstance(f, Literal) and f.negated for f in subformulas(phi))


@dataclass(frozen=True)
class Rule:
    head: Literal
    body: Formula
    weight: Fraction | None = None
    weight_family: str | None = None  # implicator family of the weight sugar
    span: tuple[int, int] | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...]
    atoms: frozenset[str]

    @classmethod
    def build(cls, rules: Iterable[Rule], declared: Iterable[str] = ()) -> "Program":
        rules = tuple(rules)
        atoms = set(declared)
        for r in rules:
            atoms.add(r.head.atom)
            atoms |= formula_atoms(r.body)
        return cls(rules, frozenset(atoms))

    def literals(self) -> frozenset[Literal]:
        return frozenset(
            Literal(a, neg) for a in self.atoms for neg in (False, True)
        )

    def has_weights(self) -> bool:
        return any(r.weight is not None for r in self.rules)


@dataclass(frozen=True)
class SaadBodyLiteral:
    literal: Literal
    bound: Fraction
    weak: bool = False  # under default negation


@dataclass(frozen=True)
class SaadRule:
    head: Literal
    head_bound: Fraction
    body: tuple[SaadBodyLiteral, ...]


@dataclass(frozen=True)
class SaadProgram:
    rules: tuple[SaadRule, ...]
    atoms: frozenset[str]

    @classmethod
    def build(cls, rules: Iterable[SaadRule], declared: Iterable[str] = ()) -> "SaadProgram":
        rules = tuple(rules)
        atoms = set(declared)
        for r in rules:
            atoms.add(r.head.atom)
            atoms |= {b.literal.atom for b in r.body}
        return cls(rules, frozenset(atoms))

    def literals(self) -> frozenset[Literal]:
        return frozenset(
            Literal(a, neg) for a in self.atoms for neg in (False, True)
        )


@dataclass(frozen=True)
class CornejoRule:
    head: str  # plain atom; the dialect has no strong negation
    body: Formula


@dataclass(frozen=True)
class CornejoConstraint:
    bound: Fraction  # upper bound for the body's truth value
    body: Formula


@dataclass(frozen=True)
class CornejoProgram:
    rules: tuple[CornejoRule, ...]
    constraints: tuple[CornejoConstraint, ...]
    atoms: frozenset[str]

    @classmethod
    def build(
        cls,
        rules: Iterable[CornejoRule],
        constraints: Iterable[CornejoConstraint],
        declared: Iterable[str] = (),
    ) -> "CornejoProgram":
        rules = tuple(rules)
        constraints = tuple(constraints)
        atoms = set(declared)
        for r in rules:
            atoms.add(r.head)
            atoms |= formula_atoms(r.body)
        for c in constraints:
            atoms |= formula_atoms(c.body)
        return cls(rules, constraints, frozenset(atoms))


class DesugarError(ValueError):
    pass


def desugar_weights(cfg: LatticeConfig, program: Program) -> Program:
    """Rewrite every weighted rule ``head <-[w] body`` into the weight-free
    form with the weight conjoined to the body via the implicator's adjoint
    conjunctor. Idempotent; preserves the atom universe."""
    out = []
    for r in program.rules:
        if r.weight is None:
            out.append(r)
            continue
        family = r.weight_family or cfg.family
        try:
            cfg.implicator_pair(family)
        except (UnknownConnectiveError, ValueError) as exc:
            raise DesugarError(str(exc)) from None
        body = App(family, (Const(r.weight), r.body))
        out.append(Rule(r.head, body, span=r.span))
    return Program(tuple(out), program.atoms)


@dataclass(frozen=True)
class Diagnostic:
    message: str
    line: int | None = None
    col: int | None = None

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"line {self.line}, col {self.col}: {self.message}"


def validate(
    cfg: LatticeConfig, program: Program, allow_reserved: bool = False
) -> list[Diagnostic]:
    """Check a parsed program against a lattice configuration.

    Returns an empty list iff all constants lie in the carrier, every
    connective is registered with matching arity, and (unless
    ``allow_reserved``) no reserved-prefix atom appears.
    """
    diags: list[Diagnostic] = []

    def check_formula(phi: Formula, where: str) -> None:
        for f in subformulas(phi):
            if isinstance(f, Const):
                if not cfg.contains(f.value):
                    diags.append(Diagnostic(
                        f"constant {f.value} not in {cfg.describe()} lattice ({where})"
                    ))
            elif isinstance(f, App):
                try:
                    conn = cfg.connective(f.conn)
                except UnknownConnectiveError:
                    diags.append(Diagnostic(f"unknown connective {f.conn!r} ({where})"))
                    continue
                if len(f.args) != conn.arity:
                    diags.append(Diagnostic(
                        f"connective {f.conn} expects {conn.arity} arguments, "
                        f"got {len(f.args)} ({where})"
                    ))

    if not allow_reserved:
        for a in sorted(program.atoms):
            if a.startswith(RESERVED_PREFIX):
                diags.append(Diagnostic(
                    f"atom {a!r} uses the reserved prefix {RESERVED_PREFIX!r}"
                ))
    for i, r in enumerate(program.rules):
        where = f"rule {i + 1}"
        check_formula(r.body, where)
        if r.weight is not None:
            if not cfg.contains(r.weight):
                diags.append(Diagnostic(
                    f"weight {r.weight} not in {cfg.describe()} lattice ({where})"
                ))
            family = r.weight_family or cfg.family
            if family not in cfg.connectives:
                diags.append(Diagnostic(
                    f"weight implicator {family!r} has no adjoint conjunctor on "
                    f"{cfg.describe()} ({where})"
                ))
    return diags


def frac_text(v: Fraction) -> str:
    return str(v)  # Fraction renders as "1/2", "0", "1": parseable by the grammar


def formula_text(phi: Formula) -> str:
    if isinstance(phi, Const):
        return frac_text(phi.value)
    if isinstance(phi, Literal):
        return str(phi)
    if isinstance(phi, WeakNeg):
        return f"not {formula_text(phi.child)}"
    return f"{phi.conn}({', '.join(formula_text(a) for a in phi.args)})"


def rule_text(rule: Rule) -> str:
    head = str(rule.head)
    if rule.weight is not None:
        fam = f", {rule.weight_family}" if rule.weight_family else ""
        return f"{head} <-[{frac_text(rule.weight)}{fam}] {formula_text(rule.body)}."
    if rule.body == Const(ONE):
        return f"{head}."
    return f"{head} <- {formula_text(rule.body)}."


def pretty_program(cfg: LatticeConfig, program: Program) -> str:
    """Render a program as core-dialect text that parses back to an equal AST
    and an equal configuration."""
    lines = [
        f"#lattice {cfg.describe()}.",
        f"#conj {cfg.family}.",
        f"#sneg {cfg.strong_neg}.",
        f"#wneg {cfg.weak_neg}.",
    ]
    if program.atoms:
        lines.append(f"#atoms {', '.join(sorted(program.atoms))}.")
    lines.extend(rule_text(r) for r in program.rules)
    return "\n".join(lines) + "\n"


def saad_text(cfg: LatticeConfig, program: SaadProgram) -> str:
    lines = [f"#lattice {cfg.describe()}."]
    if program.atoms:
        lines.append(f"#atoms {', '.join(sorted(program.atoms))}.")
    for r in program.rules:
        items = []
        for b in r.body:
            ann = f"{b.literal}:{frac_text(b.bound)}"
            items.append(f"not {ann}" if b.weak else ann)
        head = f"{r.head}:{frac_text(r.head_bound)}"
        lines.append(f"{head}." if not items else f"{head} <- {', '.join(items)}.")
    return "\n".join(lines) + "\n"


def cornejo_text(cfg: LatticeConfig, program: CornejoProgram) -> str:
    lines = [f"#lattice {cfg.describe()}.", f"#conj {cfg.family}."]
    if program.atoms:
        lines.append(f"#atoms {', '.join(sorted(program.atoms))}.")
    for r in program.rules:
        lines.append(f"{r.head} <- {formula_text(r.body)}.")
    for c in program.constraints:
        lines.append(f"{frac_text(c.bound)} <- {formula_text(c.body)}.")
    return "\n".join(lines) + "\n"
