"""Seeded random generators for programs and interpretations.

All generators draw from explicitly ordered pools so that a fixed seed yields
the same corpus on every run and platform.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .lattice import ONE, ZERO, LatticeConfig, make_config
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
    WeakNeg,
)
from .interpretation import InterpPair, ParaInterp

ATOM_POOL = ("a", "b", "c", "d", "e")


def _atoms(rng: random.Random, max_atoms: int) -> list[str]:
    return list(ATOM_POOL[: rng.randint(1, max_atoms)])


def _literal(rng: random.Random, atoms: Sequence[str]) -> Literal:
    return Literal(rng.choice(atoms), rng.random() < 0.5)


def fold_conj(cfg: LatticeConfig, items: Sequence[Formula]) -> Formula:
    if not items:
        return Const(ONE)
    out = items[0]
    for item in items[1:]:
        out = App(cfg.family, (out, item))
    return out


def boolean_conjunctive(
    rng: random.Random, max_atoms: int = 5, max_rules: int = 8
) -> tuple[LatticeConfig, Program]:
    """A crisp program whose rule bodies are conjunctions of literals and
    weakly negated literals (facts included)."""
    cfg = make_config("bool")
    atoms = _atoms(rng, max_atoms)
    rules = []
    for _ in range(rng.randint(0, max_rules)):
        head = _literal(rng, atoms)
        items: list[Formula] = []
        for _ in range(rng.randint(0, 3)):
            lit = _literal(rng, atoms)
            items.append(WeakNeg(lit) if rng.random() < 0.5 else lit)
        rules.append(Rule(head, fold_conj(cfg, items)))
    return cfg, Program.build(rules, declared=atoms)


def _formula(
    rng: random.Random,
    cfg: LatticeConfig,
    atoms: Sequence[str],
    depth: int,
    allow_strong: bool = True,
    constants: Sequence[Fraction] | None = None,
) -> Formula:
    if constants is None:
        carrier = cfg.carrier()
        constants = carrier if carrier is not None else (
            ZERO, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), ONE,
        )
    if depth <= 0 or rng.random() < 0.4:
        roll = rng.random()
        if roll < 0.2:
            return Const(rng.choice(list(constants)))
        lit = Literal(rng.choice(atoms), allow_strong and rng.random() < 0.4)
        if roll < 0.55:
            return lit
        return WeakNeg(lit)
    names = [n for n in ("godel", "godel_disj", "lukasiewicz", "lukasiewicz_disj")
             if n in cfg.connectives]
    name = rng.choice(names)
    return App(name, (
        _formula(rng, cfg, atoms, depth - 1, allow_strong, constants),
        _formula(rng, cfg, atoms, depth - 1, allow_strong, constants),
    ))


def extended_program(
    rng: random.Random,
    cfg: LatticeConfig,
    max_atoms: int = 4,
    max_rules: int = 6,
    depth: int = 2,
) -> Program:
    """A general extended program over the given lattice, with arbitrary
    monotone-connective bodies."""
    atoms = _atoms(rng, max_atoms)
    rules = [
        Rule(_literal(rng, atoms), _formula(rng, cfg, atoms, depth))
        for _ in range(rng.randint(0, max_rules))
    ]
    return Program.build(rules, declared=atoms)


def tilde_free_program(
    rng: random.Random,
    cfg: LatticeConfig,
    max_atoms: int = 4,
    max_rules: int = 6,
    depth: int = 2,
) -> Program:
    """An extended program without weak negation."""
    program = extended_program(rng, cfg, max_atoms, max_rules, depth)

    def strip(phi: Formula) -> Formula:
        if isinstance(phi, WeakNeg):
            return strip(phi.child)
        if isinstance(phi, App):
            return App(phi.conn, tuple(strip(a) for a in phi.args))
        return phi

    return Program(
        tuple(Rule(r.head, strip(r.body)) for r in program.rules), program.atoms
    )


def normal_program(
    rng: random.Random,
    cfg: LatticeConfig,
    max_atoms: int = 4,
    max_rules: int = 6,
    depth: int = 2,
) -> Program:
    """A program without strong negation: atom heads, weak negation on atoms."""
    atoms = _atoms(rng, max_atoms)
    rules = [
        Rule(
            Literal(rng.choice(atoms)),
            _formula(rng, cfg, atoms, depth, allow_strong=False),
        )
        for _ in range(rng.randint(0, max_rules))
    ]
    return Program.build(rules, declared=atoms)


def interpretation(
    rng: random.Random, cfg: LatticeConfig, atoms: Sequence[str]
) -> ParaInterp:
    carrier = cfg.carrier()
    values = carrier if carrier is not None else (
        ZERO, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), ONE,
    )
    return ParaInterp({
        a: (rng.choice(list(values)), rng.choice(list(values))) for a in atoms
    })


def nonpara_interpretation(
    rng: random.Random, cfg: LatticeConfig, atoms: Sequence[str]
) -> dict[str, Fraction]:
    carrier = cfg.carrier()
    values = carrier if carrier is not None else (
        ZERO, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), ONE,
    )
    return {a: rng.choice(list(values)) for a in atoms}


def precision_related_pairs(
    rng: random.Random, cfg: LatticeConfig, atoms: Sequence[str]
) -> tuple[InterpPair, InterpPair]:
    """Two interpretation pairs with the first below the second in the
    precision ordering (built by widening the second pair pointwise)."""
    inner = InterpPair(
        interpretation(rng, cfg, atoms), interpretation(rng, cfg, atoms)
    )
    lo = {}
    hi = {}
    for a in atoms:
        lt, lf = inner.lower.pair(a)
        ut, uf = inner.upper.pair(a)
        shrink = lambda v: v * Fraction(rng.randint(0, 4), 4)  # noqa: E731
        grow = lambda v: v + (ONE - v) * Fraction(rng.randint(0, 4), 4)  # noqa: E731
        if cfg.is_finite():
            carrier = cfg.carrier()
            below = lambda v: rng.choice([w for w in carrier if w <= v])  # noqa: E731
            above = lambda v: rng.choice([w for w in carrier if w >= v])  # noqa: E731
            lo[a] = (below(lt), below(lf))
            hi[a] = (above(ut), above(uf))
        else:
            lo[a] = (shrink(lt), shrink(lf))
            hi[a] = (grow(ut), grow(uf))
    return InterpPair(ParaInterp(lo), ParaInterp(hi)), inner


SAAD_BODY_BOUNDS = (ZERO, Fraction(1, 2), ONE)
SAAD_HEAD_BOUNDS = (Fraction(1, 2), ONE)


def saad_program(
    rng: random.Random, max_atoms: int = 4, max_rules: int = 6
) -> SaadProgram:
    """An annotated program with head bounds from {1/2, 1} and body bounds
    from {0, 1/2, 1}.

    Zero head bounds are excluded: they mark a literal as defined while
    deriving the value 0, a distinction the domain-atom translation cannot
    express, and the correspondence theorem genuinely fails there (e.g. the
    single rule "p:0 <- not p:0" has no stable model while its translation
    has one).
    """
    atoms = _atoms(rng, max_atoms)
    rules = []
    for _ in range(rng.randint(0, max_rules)):
        head = _literal(rng, atoms)
        body = tuple(
            SaadBodyLiteral(
                _literal(rng, atoms),
                rng.choice(SAAD_BODY_BOUNDS),
                rng.random() < 0.5,
            )
            for _ in range(rng.randint(0, 3))
        )
        rules.append(SaadRule(head, rng.choice(SAAD_HEAD_BOUNDS), body))
    return SaadProgram.build(rules, declared=atoms)


def cornejo_program(
    rng: random.Random,
    chain_size: int,
    max_atoms: int = 4,
    max_rules: int = 4,
    max_constraints: int = 2,
) -> tuple[LatticeConfig, CornejoProgram]:
    """A constraint program over a finite chain, with weak negation on atoms
    and chain-closed connectives."""
    cfg = make_config(f"chain({chain_size})")
    atoms = _atoms(rng, max_atoms)
    rules = [
        CornejoRule(
            rng.choice(atoms),
            _normal_body(rng, cfg, atoms, depth=2),
        )
        for _ in range(rng.randint(0, max_rules))
    ]
    constraints = [
        CornejoConstraint(
            rng.choice(list(cfg.carrier())),
            _normal_body(rng, cfg, atoms, depth=2),
        )
        for _ in range(rng.randint(0, max_constraints))
    ]
    return cfg, CornejoProgram.build(rules, constraints, declared=atoms)


def _normal_body(
    rng: random.Random, cfg: LatticeConfig, atoms: Sequence[str], depth: int
) -> Formula:
    if depth <= 0 or rng.random() < 0.45:
        roll = rng.random()
        if roll < 0.2:
            return Const(rng.choice(list(cfg.carrier())))
        if roll < 0.6:
            return Literal(rng.choice(atoms))
        return WeakNeg(Literal(rng.choice(atoms)))
    names = [n for n in ("godel", "godel_disj", "lukasiewicz", "lukasiewicz_disj")
             if n in cfg.connectives]
    name = rng.choice(names)
    return App(name, (
        _normal_body(rng, cfg, atoms, depth - 1),
        _normal_body(rng, cfg, atoms, depth - 1),
    ))
