"""The two central operators: the immediate consequence operator on single
interpretations and its approximator on interpretation pairs, plus model
checking and the separate approximator for strong-negation-free programs."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .lattice import ZERO, LatticeConfig
from .program import App, Formula, Literal, Program, Rule, WeakNeg
from .interpretation import InterpPair, ParaInterp, evaluate, evaluate_pair


@lru_cache(maxsize=256)
def _head_index(program: Program) -> dict[Literal, tuple[Formula, ...]]:
    # Rules grouped by head once per program; all per-atom joins run off this.
    idx: dict[Literal, list[Formula]] = {}
    for r in program.rules:
        idx.setdefault(r.head, []).append(r.body)
    return {lit: tuple(bodies) for lit, bodies in idx.items()}


def _require_weight_free(program: Program) -> None:
    if program.has_weights():
        raise ValueError("program still carries rule weights; desugar first")


def immediate_consequence(
    cfg: LatticeConfig, program: Program, interp: ParaInterp
) -> ParaInterp:
    """One application of the consequence operator: for each atom, the truth
    component joins the body values of its positive-head rules and the falsity
    component those of its negative-head rules. Atoms without rules get (0, 0)."""
    _require_weight_free(program)
    idx = _head_index(program)
    out = {}
    for a in program.atoms:
        pos = idx.get(Literal(a), ())
        neg = idx.get(Literal(a, True), ())
        t = max((evaluate(cfg, interp, b) for b in pos), default=ZERO)
        f = max((evaluate(cfg, interp, b) for b in neg), default=ZERO)
        out[a] = (t, f)
    return ParaInterp(out)


def is_model(cfg: LatticeConfig, program: Program, interp: ParaInterp) -> bool:
    """True iff every rule body evaluates no higher than its head literal."""
    _require_weight_free(program)
    return all(
        evaluate(cfg, interp, r.body) <= interp.value(r.head)
        for r in program.rules
    )


def weighted_rule_satisfied(
    cfg: LatticeConfig, rule: Rule, interp: ParaInterp
) -> bool:
    """Satisfaction of a weighted rule: the weight is below the implication
    from body value to head value, using the rule's implicator family."""
    if rule.weight is None:
        return evaluate(cfg, interp, rule.body) <= interp.value(rule.head)
    impl, _ = cfg.implicator_pair(rule.weight_family or cfg.family)
    body = evaluate(cfg, interp, rule.body)
    return rule.weight <= impl(interp.value(rule.head), body)


def approximator_first(
    cfg: LatticeConfig, program: Program, lower: ParaInterp, upper: ParaInterp
) -> ParaInterp:
    """First component of the approximator: like the consequence operator but
    bodies are evaluated under the (lower, upper) pair."""
    _require_weight_free(program)
    idx = _head_index(program)
    out = {}
    for a in program.atoms:
        pos = idx.get(Literal(a), ())
        neg = idx.get(Literal(a, True), ())
        t = max((evaluate_pair(cfg, lower, upper, b) for b in pos), default=ZERO)
        f = max((evaluate_pair(cfg, lower, upper, b) for b in neg), default=ZERO)
        out[a] = (t, f)
    return ParaInterp(out)


def approximator(
    cfg: LatticeConfig, program: Program, pair: InterpPair
) -> InterpPair:
    """The symmetric approximator of the consequence operator: the second
    component is the first with the arguments swapped. Precision-monotone and
    exact on exact pairs."""
    lower, upper = pair
    return InterpPair(
        approximator_first(cfg, program, lower, upper),
        approximator_first(cfg, program, upper, lower),
    )


# -- strong-negation-free programs, implemented independently --------------------

NonParaInterp = Mapping[str, Fraction]


def _check_normal(program: Program) -> None:
    for r in program.rules:
        if r.head.negated:
            raise ValueError("strong negation in a rule head of a normal program")
    from .program import uses_strong_negation

    for r in program.rules:
        if uses_strong_negation(r.body):
            raise ValueError("strong negation in a rule body of a normal program")


def _eval_normal(
    cfg: LatticeConfig, k: NonParaInterp, l: NonParaInterp, phi: Formula
) -> Fraction:
    if isinstance(phi, Literal):
        return k[phi.atom]
    if isinstance(phi, App):
        conn = cfg.connective(phi.conn)
        return conn.fn(*[_eval_normal(cfg, k, l, a) for a in phi.args])
    if isinstance(phi, WeakNeg):
        if not isinstance(phi.child, Literal):
            raise ValueError("normal programs apply 'not' to atoms only")
        return cfg.weak_negation(l[phi.child.atom])
    return phi.value


def normal_approximator(
    cfg: LatticeConfig, program: Program, k: NonParaInterp, l: NonParaInterp
) -> dict[str, Fraction]:
    """The approximator for programs without strong negation, on plain
    atom-to-value interpretations: atoms read from the first argument, weakly
    negated atoms from the second. Kept independent of the paraconsistent
    operator so the two can cross-check each other."""
    _require_weight_free(program)
    _check_normal(program)
    idx = _head_index(program)
    return {
        a: max(
            (_eval_normal(cfg, k, l, b) for b in idx.get(Literal(a), ())),
            default=ZERO,
        )
        for a in program.atoms
    }


def embed_nonpara(k: NonParaInterp) -> ParaInterp:
    """Lift an atom-to-value interpretation by pairing every truth degree with
    falsity degree 0."""
    return ParaInterp({a: (v, ZERO) for a, v in k.items()})
