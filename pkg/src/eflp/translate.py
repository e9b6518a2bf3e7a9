"""Translations of the annotated and constraint dialects into core extended
programs, plus the interpretation lifts used by the equivalence checks."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .lattice import ONE, ZERO, LatticeConfig, geq_name
from .program import (
    App,
    Const,
    CornejoProgram,
    Formula,
    Literal,
    Program,
    RESERVED_PREFIX,
    Rule,
    SaadProgram,
)
from .interpretation import ParaInterp, evaluate


class TranslationError(ValueError):
    pass


def _check_no_reserved(atoms) -> None:
    for a in sorted(atoms):
        if a.startswith(RESERVED_PREFIX):
            raise TranslationError(
                f"source atom {a!r} collides with the reserved {RESERVED_PREFIX!r} prefix"
            )


# -- annotated programs -------------------------------------------------------------

# Fresh-atom names are deterministic functions of the tracked literal, with
# distinct prefixes for positive and negated literals so decoding is injective.
_DOMAIN_POS = "@d_"
_DOMAIN_NEG = "@dn_"


def domain_atom(lit: Literal) -> str:
    return (_DOMAIN_NEG if lit.negated else _DOMAIN_POS) + lit.atom


def domain_atom_literal(name: str) -> Literal | None:
    if name.startswith(_DOMAIN_NEG):
        return Literal(name[len(_DOMAIN_NEG):], True)
    if name.startswith(_DOMAIN_POS):
        return Literal(name[len(_DOMAIN_POS):], False)
    return None


def _bound_check(lit: Literal, bound: Fraction) -> Formula:
    # A zero bound asks whether the literal is defined at all, which the
    # domain atom records; positive bounds become threshold connectives.
    if bound == ZERO:
        return Literal(domain_atom(lit))
    return App(geq_name(bound), (lit,))


def translate_saad(cfg: LatticeConfig, program: SaadProgram) -> Program:
    """Per rule: the head keeps its literal, and the body conjoins the head
    bound with a threshold check per body literal (negated ones under weak
    negation). Whenever a literal occurs both with bound 0 and with a positive
    bound, a rule deriving its domain atom from each positive threshold is
    added, which blocks spurious stable models."""
    from .program import WeakNeg

    _check_no_reserved(program.atoms)

    bounds_seen: dict[Literal, set[Fraction]] = {}

    def note(lit: Literal, bound: Fraction) -> None:
        bounds_seen.setdefault(lit, set()).add(bound)

    rules: list[Rule] = []
    for r in program.rules:
        note(r.head, r.head_bound)
        body: Formula = Const(r.head_bound)
        for item in r.body:
            note(item.literal, item.bound)
            check = _bound_check(item.literal, item.bound)
            if item.weak:
                check = WeakNeg(check)
            body = App(cfg.family, (body, check))
        rules.append(Rule(r.head, body))

    for lit in sorted(bounds_seen, key=lambda l: l.key):
        bounds = bounds_seen[lit]
        if ZERO in bounds:
            for c in sorted(b for b in bounds if b > ZERO):
                rules.append(
                    Rule(Literal(domain_atom(lit)), App(geq_name(c), (lit,)))
                )

    return Program.build(rules, declared=program.atoms)


def lift_saad(g, translated: Program) -> ParaInterp:
    """Lift a partial literal-to-value map over the translated program's atom
    universe: atom truth/falsity from the positive/negated literal where
    defined (0 otherwise), and each domain atom true iff its literal is
    defined."""
    out = {}
    for a in translated.atoms:
        tracked = domain_atom_literal(a)
        if tracked is not None:
            out[a] = (ONE if g.defined(tracked) else ZERO, ZERO)
            continue
        t = g.value(Literal(a)) if g.defined(Literal(a)) else ZERO
        f = g.value(Literal(a, True)) if g.defined(Literal(a, True)) else ZERO
        out[a] = (t, f)
    return ParaInterp(out)


# -- constraint programs -------------------------------------------------------------


def constraint_atom(index: int) -> str:
    return f"@c_{index}"


def translate_cornejo(cfg: LatticeConfig, program: CornejoProgram) -> Program:
    """Rules are copied; the constraint with upper bound c and body B becomes
    a fresh atom defined by B plus a strongly negated fact with value neg(c),
    so that the fresh atom is consistent exactly when the constraint holds.
    Requires the involutive standard negator, which the encoding inverts."""
    if cfg.strong_neg != "standard":
        raise TranslationError(
            "constraint translation needs the involutive standard strong negator"
        )
    _check_no_reserved(program.atoms)

    rules: list[Rule] = [Rule(Literal(r.head), r.body) for r in program.rules]
    for i, c in enumerate(program.constraints, start=1):
        fresh = constraint_atom(i)
        rules.append(Rule(Literal(fresh), c.body))
        rules.append(Rule(Literal(fresh, True), Const(ONE - c.bound)))
    return Program.build(rules, declared=program.atoms)


def lift_cornejo(
    cfg: LatticeConfig, k: Mapping[str, Fraction], translated: Program
) -> ParaInterp:
    """Lift an atom-to-value map to the exact interpretation the translated
    program forces: source atoms get falsity 0 (they have no negated-head
    rules), and each constraint atom gets its body's value as truth and the
    negated bound as falsity, both read off the translated rules."""
    base = {
        a: (k[a], ZERO)
        for a in translated.atoms
        if not a.startswith(RESERVED_PREFIX)
    }
    for a, v in k.items():
        if a not in base and not a.startswith(RESERVED_PREFIX):
            base[a] = (v, ZERO)
    interp = ParaInterp(base | {
        a: (ZERO, ZERO)
        for a in translated.atoms
        if a.startswith(RESERVED_PREFIX)
    })
    out = dict(base)
    for a in translated.atoms:
        if not a.startswith(RESERVED_PREFIX):
            continue
        t = ZERO
        f = ZERO
        for r in translated.rules:
            if r.head.atom != a:
                continue
            if r.head.negated:
                f = max(f, evaluate(cfg, interp, r.body))
            else:
                t = max(t, evaluate(cfg, interp, r.body))
        out[a] = (t, f)
    return ParaInterp(out)
