"""Independent reference implementations of the four reconstructed semantics,
used as test oracles for the equivalence theorems.

These share the lattice and AST types but none of the operator code in
``semantics``/``fixpoint``: the crisp oracles run on plain literal sets, the
annotated oracle on partial literal-to-value maps, and the constraint oracle
on plain atom-to-value maps, so every equivalence check compares two genuinely
independent computations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .lattice import ONE, ZERO, LatticeConfig
from .program import (
    App,
    Const,
    CornejoProgram,
    CornejoRule,
    Formula,
    Literal,
    Program,
    Rule,
    SaadProgram,
    SaadRule,
    WeakNeg,
)
from .interpretation import (
    ParaInterp,
    SakamaPair,
    all_literals,
    canonical_key,
    from_literal_set,
    to_literal_set,
)

_ORACLE_MAX_ITER = 100_000


class OracleError(ValueError):
    pass


# -- conjunctive crisp programs as (head, positive set, negated set) triples -----


def conjunctive_body(
    cfg: LatticeConfig, phi: Formula
) -> tuple[frozenset[Literal], frozenset[Literal]]:
    """Split a body that is a conjunction of literals and weakly negated
    literals into its positive and negated literal sets. The constant 1 is the
    empty conjunction. Anything else is out of the crisp oracles' scope."""
    pos: set[Literal] = set()
    neg: set[Literal] = set()

    def walk(f: Formula) -> None:
        if isinstance(f, Literal):
            pos.add(f)
        elif isinstance(f, WeakNeg) and isinstance(f.child, Literal):
            neg.add(f.child)
        elif isinstance(f, App) and cfg.connective(f.conn).kind == "conj":
            for a in f.args:
                walk(a)
        elif isinstance(f, Const) and f.value == ONE:
            pass
        else:
            raise OracleError(
                "rule body is not a conjunction of literals and negated literals"
            )

    walk(phi)
    return frozenset(pos), frozenset(neg)


def _require_boolean(cfg: LatticeConfig) -> None:
    if cfg.kind != "boolean":
        raise OracleError("crisp oracles require the boolean lattice")


ConjRules = list[tuple[Literal, frozenset[Literal], frozenset[Literal]]]


def conjunctive_rules(cfg: LatticeConfig, program: Program) -> ConjRules:
    _require_boolean(cfg)
    return [
        (r.head, *conjunctive_body(cfg, r.body)) for r in program.rules
    ]


# -- paraconsistent well-founded semantics on proven/default pairs ----------------


def sakama_proven_step(
    rules: ConjRules,
    lits: frozenset[Literal],
    sigma: frozenset[Literal],
    delta: frozenset[Literal],
    alpha: frozenset[Literal],
) -> frozenset[Literal]:
    """Literals with a rule whose positive body is covered by the proven facts
    plus the accumulator and whose negated body is covered by the defaults."""
    covered = sigma | alpha
    return frozenset(
        head
        for head, pos, neg in rules
        if pos <= covered and neg <= delta
    )


def sakama_default_step(
    rules: ConjRules,
    lits: frozenset[Literal],
    sigma: frozenset[Literal],
    delta: frozenset[Literal],
    alpha: frozenset[Literal],
) -> frozenset[Literal]:
    """Literals all of whose rules are blocked: a positive body literal is
    already default/accumulated, or a negated body literal is proven.
    Literals without rules are always included."""
    blocked_if = alpha | delta
    out = set(lits)
    for head, pos, neg in rules:
        if head not in out:
            continue
        if not (pos & blocked_if) and not (neg & sigma):
            out.discard(head)
    return frozenset(out)


def sakama_well_founded(cfg: LatticeConfig, program: Program) -> SakamaPair:
    """Least fixpoint of the proven/default revision operator: each round adds
    the least fixpoint of the proven step (from the empty set) and the
    greatest fixpoint of the default step (descending from all literals)."""
    rules = conjunctive_rules(cfg, program)
    lits = all_literals(program.atoms)

    def revise(state: SakamaPair) -> SakamaPair:
        sigma, delta = state
        alpha: frozenset[Literal] = frozenset()
        for _ in range(_ORACLE_MAX_ITER):
            nxt = sakama_proven_step(rules, lits, sigma, delta, alpha)
            if nxt == alpha:
                break
            alpha = nxt
        beta = lits
        for _ in range(_ORACLE_MAX_ITER):
            nxt = sakama_default_step(rules, lits, sigma, delta, beta)
            if nxt == beta:
                break
            beta = nxt
        return SakamaPair(sigma | alpha, delta | beta)

    state = SakamaPair(frozenset(), frozenset())
    for _ in range(_ORACLE_MAX_ITER):
        nxt = revise(state)
        if nxt == state:
            return state
        state = nxt
    raise OracleError("proven/default revision did not stabilize")


# -- paraconsistent stable models via the reduct -----------------------------------


def sakama_inoue_reduct(
    cfg: LatticeConfig, program: Program, interp: ParaInterp
) -> Program:
    """Drop every rule with a weakly negated body literal that holds in the
    interpretation; strip weak negation from the survivors."""
    s = to_literal_set(cfg, interp)
    kept = []
    for r in program.rules:
        pos, neg = conjunctive_body(cfg, r.body)
        if neg & s:
            continue
        if not neg:
            kept.append(r)  # weak-negation-free rules survive untouched
            continue
        body: Formula = Const(ONE)
        for lit in sorted(pos, key=lambda l: l.key):
            body = lit if body == Const(ONE) else App(cfg.family, (body, lit))
        kept.append(Rule(r.head, body))
    return Program(tuple(kept), program.atoms)


def _closure(
    rules: ConjRules, start: frozenset[Literal]
) -> frozenset[Literal]:
    # Least set of literals closed under the weak-negation-free rules.
    s = set(start)
    changed = True
    while changed:
        changed = False
        for head, pos, _ in rules:
            if head not in s and pos <= s:
                s.add(head)
                changed = True
    return frozenset(s)


def sakama_inoue_stable_models(
    cfg: LatticeConfig, program: Program
) -> list[ParaInterp]:
    """All literal sets equal to the closure of their own reduct, returned as
    paraconsistent interpretations (inconsistent ones included)."""
    rules = conjunctive_rules(cfg, program)
    lits = sorted(all_literals(program.atoms), key=lambda l: l.key)
    found = []
    for mask in range(1 << len(lits)):
        s = frozenset(lit for k, lit in enumerate(lits) if mask >> k & 1)
        reduct = [
            (head, pos, frozenset())
            for head, pos, neg in rules
            if not neg & s
        ]
        if _closure(reduct, frozenset()) == s:
            found.append(from_literal_set(s, program.atoms))
    found.sort(key=canonical_key)
    return found


def gelfond_lifschitz_answer_sets(
    cfg: LatticeConfig, program: Program
) -> list[ParaInterp]:
    """Classic answer sets: consistent literal sets equal to the consequences
    of their reduct, where a contradictory closure explodes to all literals."""
    rules = conjunctive_rules(cfg, program)
    lits = sorted(all_literals(program.atoms), key=lambda l: l.key)
    every = all_literals(program.atoms)
    found = []
    for mask in range(1 << len(lits)):
        s = frozenset(lit for k, lit in enumerate(lits) if mask >> k & 1)
        if any(lit.complement() in s for lit in s):
            continue
        reduct = [
            (head, pos, frozenset())
            for head, pos, neg in rules
            if not neg & s
        ]
        closure = _closure(reduct, frozenset())
        if any(lit.complement() in closure for lit in closure):
            closure = every
        if closure == s:
            found.append(from_literal_set(s, program.atoms))
    found.sort(key=canonical_key)
    return found


# -- annotated programs with partial interpretations -------------------------------


class SaadInterp:
    """A partial map literal -> value: undefined literals are distinct from
    literals mapped to 0."""

    __slots__ = ("_m",)

    def __init__(self, mapping: Mapping[Literal, Fraction] | None = None):
        self._m = dict(mapping or {})

    @classmethod
    def empty(cls) -> "SaadInterp":
        return cls()

    @property
    def domain(self) -> frozenset[Literal]:
        return frozenset(self._m)

    def defined(self, lit: Literal) -> bool:
        return lit in self._m

    def value(self, lit: Literal) -> Fraction:
        return self._m[lit]

    def items(self) -> Iterator[tuple[Literal, Fraction]]:
        return iter(self._m.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SaadInterp):
            return NotImplemented
        return self._m == other._m

    def __hash__(self) -> int:
        return hash(frozenset(self._m.items()))

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{lit}: {v}" for lit, v in sorted(self._m.items(), key=lambda kv: kv[0].key)
        )
        return f"SaadInterp({{{inner}}})"


def saad_satisfies_positive(g: SaadInterp, lit: Literal, bound: Fraction) -> bool:
    return g.defined(lit) and g.value(lit) >= bound


def saad_satisfies_negative(g: SaadInterp, lit: Literal, bound: Fraction) -> bool:
    return not g.defined(lit) or g.value(lit) < bound


def _saad_body_satisfied(g: SaadInterp, rule: SaadRule) -> bool:
    return all(
        saad_satisfies_negative(g, b.literal, b.bound)
        if b.weak
        else saad_satisfies_positive(g, b.literal, b.bound)
        for b in rule.body
    )


def saad_consequence(program: SaadProgram, g: SaadInterp) -> SaadInterp:
    """One step of the annotated consequence operator: each literal maps to
    the maximum head bound over its rules whose bodies are satisfied, and
    stays undefined when no rule fires."""
    out: dict[Literal, Fraction] = {}
    for r in program.rules:
        if _saad_body_satisfied(g, r):
            prev = out.get(r.head)
            if prev is None or r.head_bound > prev:
                out[r.head] = r.head_bound
    return SaadInterp(out)


def saad_reduct(program: SaadProgram, g: SaadInterp) -> SaadProgram:
    """Keep the rules whose weakly negated body literals are all satisfied,
    with those negated literals removed."""
    kept = []
    for r in program.rules:
        if all(
            saad_satisfies_negative(g, b.literal, b.bound)
            for b in r.body
            if b.weak
        ):
            kept.append(
                SaadRule(r.head, r.head_bound,
                         tuple(b for b in r.body if not b.weak))
            )
    return SaadProgram(tuple(kept), program.atoms)


def saad_least_fixpoint(program: SaadProgram) -> SaadInterp:
    """Least fixpoint of the consequence operator of a negation-free program,
    iterated from the empty partial map (on which the operator is monotone:
    domains and values only grow)."""
    g = SaadInterp.empty()
    for _ in range(_ORACLE_MAX_ITER):
        nxt = saad_consequence(program, g)
        if nxt == g:
            return g
        g = nxt
    raise OracleError("annotated consequence iteration did not stabilize")


def saad_is_inconsistent(g: SaadInterp) -> bool:
    """Complementary literals both defined with values that do not sum to 1."""
    for lit, v in g.items():
        comp = lit.complement()
        if g.defined(comp) and g.value(comp) != ONE - v:
            return True
    return False


@dataclass(frozen=True)
class SaadStableModel:
    interp: SaadInterp
    consistent: bool


def _saad_candidates(program: SaadProgram) -> Iterator[SaadInterp]:
    # Sound candidate space: the consequence operator maps every literal to a
    # head bound of one of its own rules (or leaves it undefined), so stable
    # models assign each literal one of its head bounds.
    per_literal: dict[Literal, set[Fraction]] = {}
    for r in program.rules:
        per_literal.setdefault(r.head, set()).add(r.head_bound)
    lits = sorted(per_literal, key=lambda l: l.key)
    options = [[None, *sorted(per_literal[lit])] for lit in lits]

    def rec(k: int, acc: dict[Literal, Fraction]) -> Iterator[SaadInterp]:
        if k == len(lits):
            yield SaadInterp(acc)
            return
        for choice in options[k]:
            if choice is None:
                yield from rec(k + 1, acc)
            else:
                acc[lits[k]] = choice
                yield from rec(k + 1, acc)
                del acc[lits[k]]

    return rec(0, {})


def saad_stable_models(
    program: SaadProgram, collapse_inconsistent: bool = False
) -> list[SaadStableModel]:
    """All partial interpretations equal to the least fixpoint of their own
    reduct's consequence operator, each flagged for consistency.

    ``collapse_inconsistent`` applies the convention of replacing an
    inconsistent stable model by the all-1 total map; it is off by default so
    that inconsistency is reported rather than rewritten.
    """
    found = []
    seen = set()
    for g in _saad_candidates(program):
        if g in seen:
            continue
        seen.add(g)
        if saad_least_fixpoint(saad_reduct(program, g)) == g:
            found.append(SaadStableModel(g, not saad_is_inconsistent(g)))
    if collapse_inconsistent:
        every = all_literals(program.atoms)
        found = [
            m if m.consistent
            else SaadStableModel(SaadInterp({lit: ONE for lit in every}), False)
            for m in found
        ]
    found.sort(key=lambda m: sorted((lit.key, v) for lit, v in m.interp.items()))
    return found


# -- constraint programs on plain atom-to-value interpretations ---------------------

NonParaMap = dict[str, Fraction]


def cornejo_body_reduct(
    cfg: LatticeConfig, phi: Formula, k: Mapping[str, Fraction]
) -> Formula:
    """Replace every weakly negated atom by the constant value of its weak
    negation under the candidate interpretation; the result is negation-free."""
    if isinstance(phi, Literal):
        if phi.negated:
            raise OracleError("strong negation in a constraint-program body")
        return phi
    if isinstance(phi, WeakNeg):
        child = phi.child
        if not isinstance(child, Literal) or child.negated:
            raise OracleError("'not' applies only to atoms in this dialect")
        return Const(cfg.weak_negation(k[child.atom]))
    if isinstance(phi, App):
        return App(phi.conn, tuple(cornejo_body_reduct(cfg, a, k) for a in phi.args))
    return phi


def _eval_plain(cfg: LatticeConfig, k: Mapping[str, Fraction], phi: Formula) -> Fraction:
    if isinstance(phi, Literal):
        if phi.negated:
            raise OracleError("strong negation in a constraint-program body")
        return k[phi.atom]
    if isinstance(phi, App):
        conn = cfg.connective(phi.conn)
        return conn.fn(*[_eval_plain(cfg, k, a) for a in phi.args])
    if isinstance(phi, Const):
        return phi.value
    raise OracleError("weak negation survived the body reduct")


def cornejo_least_model(
    cfg: LatticeConfig, rules: Iterable[CornejoRule], atoms: Iterable[str]
) -> NonParaMap:
    """Least model of a negation-free rule set: iterate the plain one-step
    operator from the all-0 interpretation to its least fixpoint."""
    rules = list(rules)
    k: NonParaMap = {a: ZERO for a in atoms}
    for _ in range(_ORACLE_MAX_ITER):
        nxt = dict.fromkeys(k, ZERO)
        for r in rules:
            v = _eval_plain(cfg, k, r.body)
            if v > nxt[r.head]:
                nxt[r.head] = v
        if nxt == k:
            return k
        k = nxt
    raise OracleError("least-model iteration did not stabilize")


def cornejo_stable_models(
    cfg: LatticeConfig,
    program: CornejoProgram,
    grid: Iterable[Fraction] | None = None,
    cap: int = 1_000_000,
) -> list[NonParaMap]:
    """Grid-enumerated stable models: candidates equal to the least model of
    their own program reduct that also satisfy every constraint (a constraint
    bounds its body's value from above). Complete on finite lattices with the
    carrier as grid."""
    from .fixpoint import SearchSpaceError

    if grid is None:
        grid = cfg.carrier()
        if grid is None:
            raise OracleError("an explicit grid is required over the rationals")
    grid = sorted(grid)
    atoms = sorted(program.atoms)
    if len(grid) ** len(atoms) > cap:
        raise SearchSpaceError(
            f"{len(grid) ** len(atoms)} candidates exceed the cap of {cap}"
        )
    found = []
    for combo in itertools.product(grid, repeat=len(atoms)):
        k = dict(zip(atoms, combo))
        reduct = [
            CornejoRule(r.head, cornejo_body_reduct(cfg, r.body, k))
            for r in program.rules
        ]
        if cornejo_least_model(cfg, reduct, atoms) != k:
            continue
        ok = True
        for c in program.constraints:
            body = cornejo_body_reduct(cfg, c.body, k)
            if not _eval_plain(cfg, k, body) <= c.bound:
                ok = False
                break
        if ok:
            found.append(k)
    found.sort(key=lambda k: tuple(sorted(k.items())))
    return found
