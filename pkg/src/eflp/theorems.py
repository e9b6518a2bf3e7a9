"""Equivalence checks between the core fixpoint semantics and the oracle
semantics, over supplied programs or seeded random corpora.

Stable-fixpoint enumeration for translated programs exploits the structure a
fixpoint must have (generated atoms take values the source atoms force, and
derived components live in small finite sets), so the checks stay exact
without searching an exponential grid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import ONE, ZERO, LatticeConfig, make_config
from .program import (
    CornejoProgram,
    Program,
    RESERVED_PREFIX,
    SaadProgram,
    cornejo_text,
    pretty_program,
    saad_text,
)
from .interpretation import (
    ParaInterp,
    canonical_key,
    evaluate,
    interp_to_json,
    is_consistent,
    literal_set_to_json,
    to_sakama_pair,
)
from .semantics import embed_nonpara, immediate_consequence, normal_approximator
from .fixpoint import enumerate_stable_models, is_stable_model, well_founded
from . import generate, oracles
from .translate import lift_cornejo, lift_saad, translate_cornejo, translate_saad

THEOREMS = ("5.1", "5.2", "6.1", "6.2", "7")


@dataclass
class EquivalenceReport:
    theorem: str
    cases: int = 0
    agreements: int = 0
    divergences: int = 0
    first_divergence: dict | None = None

    def record(self, agreed: bool, witness: dict | None = None) -> None:
        self.cases += 1
        if agreed:
            self.agreements += 1
        else:
            self.divergences += 1
            if self.first_divergence is None:
                self.first_divergence = witness

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "cases": self.cases,
            "agreements": self.agreements,
            "divergences": self.divergences,
            "first_divergence": self.first_divergence,
        }


# -- well-founded correspondence ------------------------------------------------


def check_wf_correspondence(
    programs: Iterable[tuple[LatticeConfig, Program]] | None = None,
    count: int = 500,
    seed: int = 7,
) -> EquivalenceReport:
    """The well-founded pair, read as proven/default literal sets, equals the
    proven/default well-founded model computed on literal sets."""
    report = EquivalenceReport("5.1")
    for cfg, program in _crisp_corpus(programs, count, seed):
        wf = well_founded(cfg, program).value
        lhs = to_sakama_pair(cfg, wf)
        rhs = oracles.sakama_well_founded(cfg, program)
        report.record(
            lhs == rhs,
            witness={
                "program": pretty_program(cfg, program),
                "fixpoint_side": _sakama_json(lhs),
                "oracle_side": _sakama_json(rhs),
            },
        )
    return report


def check_stable_correspondence(
    programs: Iterable[tuple[LatticeConfig, Program]] | None = None,
    count: int = 500,
    seed: int = 7,
) -> EquivalenceReport:
    """Exact stable fixpoints equal the reduct-defined stable models, and
    their consistent part equals the classic answer sets (a third path)."""
    report = EquivalenceReport("5.2")
    for cfg, program in _crisp_corpus(programs, count, seed):
        core = enumerate_stable_models(cfg, program)
        reduct_side = oracles.sakama_inoue_stable_models(cfg, program)
        consistent = [i for i in core if is_consistent(cfg, i)]
        gl = oracles.gelfond_lifschitz_answer_sets(cfg, program)
        report.record(
            core == reduct_side and consistent == gl,
            witness={
                "program": pretty_program(cfg, program),
                "fixpoint_side": [interp_to_json(i) for i in core],
                "reduct_side": [interp_to_json(i) for i in reduct_side],
                "consistent_fixpoint_side": [interp_to_json(i) for i in consistent],
                "answer_set_side": [interp_to_json(i) for i in gl],
            },
        )
    return report


def _crisp_corpus(programs, count, seed):
    if programs is not None:
        yield from programs
        return
    rng = random.Random(seed)
    for _ in range(count):
        yield generate.boolean_conjunctive(rng)


def _sakama_json(pair) -> dict:
    return {
        "proven": literal_set_to_json(pair.proven),
        "default": literal_set_to_json(pair.default),
    }


# -- annotated-program correspondence ---------------------------------------------


def saad_translation_stable_fixpoints(
    cfg: LatticeConfig, translated: Program
) -> list[ParaInterp]:
    """All exact stable fixpoints of a translated annotated program.

    At any fixpoint of the consequence operator each source component is a
    join of values from {0} union its head bounds (a finite totally ordered
    set, so closed under join), and every domain atom's pair is determined by
    the source components. Enumerating source components over those sets and
    completing domain atoms by one operator pass is therefore exhaustive.
    """
    import itertools

    source_atoms = sorted(
        a for a in translated.atoms if not a.startswith(RESERVED_PREFIX)
    )
    truth_opts: dict[str, set[Fraction]] = {a: {ZERO} for a in source_atoms}
    falsity_opts: dict[str, set[Fraction]] = {a: {ZERO} for a in source_atoms}
    for r in translated.rules:
        if r.head.atom.startswith(RESERVED_PREFIX):
            continue
        head_bound = _head_constant(r)
        (falsity_opts if r.head.negated else truth_opts)[r.head.atom].add(head_bound)

    spaces = [
        [(t, f) for t in sorted(truth_opts[a]) for f in sorted(falsity_opts[a])]
        for a in source_atoms
    ]
    found = []
    for combo in itertools.product(*spaces):
        partial = dict(zip(source_atoms, combo))
        candidate = _complete_generated(cfg, translated, partial)
        if immediate_consequence(cfg, translated, candidate) != candidate:
            continue
        if is_stable_model(cfg, translated, candidate):
            found.append(candidate)
    found.sort(key=canonical_key)
    return found


def _head_constant(rule) -> Fraction:
    # Translated rule bodies fold the head bound in as their leftmost constant.
    from .program import App, Const

    phi = rule.body
    while isinstance(phi, App):
        phi = phi.args[0]
    if isinstance(phi, Const):
        return phi.value
    return ONE


def _complete_generated(
    cfg: LatticeConfig, translated: Program, source: dict
) -> ParaInterp:
    """Extend source-atom components with the generated-atom pairs any
    fixpoint must assign (joins of their rule bodies over the source part)."""
    full = dict(source)
    for a in translated.atoms:
        if a.startswith(RESERVED_PREFIX):
            full[a] = (ZERO, ZERO)
    interp = ParaInterp(full)
    out = dict(source)
    for a in translated.atoms:
        if not a.startswith(RESERVED_PREFIX):
            continue
        t = ZERO
        f = ZERO
        for r in translated.rules:
            if r.head.atom != a:
                continue
            v = evaluate(cfg, interp, r.body)
            if r.head.negated:
                f = max(f, v)
            else:
                t = max(t, v)
        out[a] = (t, f)
    return ParaInterp(out)


def check_saad_correspondence(
    programs: Iterable[SaadProgram] | None = None,
    count: int = 200,
    seed: int = 11,
) -> EquivalenceReport:
    """Stable models of an annotated program correspond one to one, through
    the lift, with the exact stable fixpoints of its translation."""
    report = EquivalenceReport("6.1")
    if programs is None:
        rng = random.Random(seed)
        programs = [generate.saad_program(rng) for _ in range(count)]
    cfg = make_config("rational")
    for q in programs:
        translated = translate_saad(cfg, q)
        oracle_models = oracles.saad_stable_models(q)
        lifted = sorted(
            (lift_saad(m.interp, translated) for m in oracle_models),
            key=canonical_key,
        )
        core = saad_translation_stable_fixpoints(cfg, translated)
        report.record(
            lifted == core and len(oracle_models) == len(core),
            witness={
                "program": saad_text(cfg, q),
                "translation": pretty_program(cfg, translated),
                "oracle_side": [interp_to_json(i) for i in lifted],
                "fixpoint_side": [interp_to_json(i) for i in core],
            },
        )
    return report


# -- constraint-program correspondence ---------------------------------------------


def cornejo_translation_stable_fixpoints(
    cfg: LatticeConfig, translated: Program
) -> list[ParaInterp]:
    """All consistent exact stable fixpoints of a translated constraint
    program. Source atoms have no negated-head rules, so fixpoints give them
    falsity 0 and are determined by their truth components (a finite chain);
    constraint atoms are completed by one operator pass."""
    import itertools

    carrier = cfg.carrier()
    source_atoms = sorted(
        a for a in translated.atoms if not a.startswith(RESERVED_PREFIX)
    )
    found = []
    for combo in itertools.product(carrier, repeat=len(source_atoms)):
        partial = {a: (v, ZERO) for a, v in zip(source_atoms, combo)}
        candidate = _complete_generated(cfg, translated, partial)
        if immediate_consequence(cfg, translated, candidate) != candidate:
            continue
        if not is_consistent(cfg, candidate):
            continue
        if is_stable_model(cfg, translated, candidate):
            found.append(candidate)
    found.sort(key=canonical_key)
    return found


def check_cornejo_correspondence(
    programs: Iterable[tuple[LatticeConfig, CornejoProgram]] | None = None,
    count: int = 200,
    seed: int = 13,
    chain_sizes: Sequence[int] = (3, 5),
) -> EquivalenceReport:
    """Stable models of a constraint program correspond one to one, through
    the lift, with the consistent exact stable fixpoints of its translation."""
    report = EquivalenceReport("6.2")
    if programs is None:
        rng = random.Random(seed)
        programs = [
            generate.cornejo_program(rng, chain_sizes[i % len(chain_sizes)])
            for i in range(count)
        ]
    for cfg, q in programs:
        translated = translate_cornejo(cfg, q)
        oracle_models = oracles.cornejo_stable_models(cfg, q)
        lifted = sorted(
            (lift_cornejo(cfg, k, translated) for k in oracle_models),
            key=canonical_key,
        )
        core = cornejo_translation_stable_fixpoints(cfg, translated)
        report.record(
            lifted == core and len(oracle_models) == len(core),
            witness={
                "program": cornejo_text(cfg, q),
                "translation": pretty_program(cfg, translated),
                "oracle_side": [interp_to_json(i) for i in lifted],
                "fixpoint_side": [interp_to_json(i) for i in core],
            },
        )
    return report


# -- strong-negation-free generalization --------------------------------------------


def check_normal_generalization(
    programs: Iterable[tuple[LatticeConfig, Program]] | None = None,
    count: int = 200,
    seed: int = 17,
    pairs_per_program: int = 5,
) -> EquivalenceReport:
    """On programs without strong negation, the paraconsistent approximator's
    first component on lifted interpretation pairs equals the lift of the
    independent normal-program approximator, with all falsity components 0."""
    from .semantics import approximator_first

    report = EquivalenceReport("7")
    rng = random.Random(seed)
    if programs is None:
        cfg0 = make_config("chain(3)")
        programs = [
            (cfg0, generate.normal_program(rng, cfg0)) for _ in range(count)
        ]
    for cfg, program in programs:
        atoms = sorted(program.atoms)
        agreed = True
        witness = None
        for _ in range(pairs_per_program):
            k = generate.nonpara_interpretation(rng, cfg, atoms)
            l = generate.nonpara_interpretation(rng, cfg, atoms)
            via_pairs = approximator_first(
                cfg, program, embed_nonpara(k), embed_nonpara(l)
            )
            direct = embed_nonpara(normal_approximator(cfg, program, k, l))
            zero_falsity = all(f == ZERO for _, (_, f) in via_pairs.items())
            if via_pairs != direct or not zero_falsity:
                agreed = False
                witness = {
                    "program": pretty_program(cfg, program),
                    "paraconsistent_side": interp_to_json(via_pairs),
                    "normal_side": interp_to_json(direct),
                }
                break
        report.record(agreed, witness)
    return report


def run_theorem(
    theorem: str,
    count: int | None = None,
    seed: int = 7,
    programs=None,
) -> EquivalenceReport:
    if theorem == "5.1":
        return check_wf_correspondence(programs, count or 500, seed)
    if theorem == "5.2":
        return check_stable_correspondence(programs, count or 500, seed)
    if theorem == "6.1":
        return check_saad_correspondence(programs, count or 200, seed)
    if theorem == "6.2":
        return check_cornejo_correspondence(programs, count or 200, seed)
    if theorem == "7":
        return check_normal_generalization(programs, count or 200, seed)
    raise ValueError(f"unknown theorem {theorem!r}; pick one of {', '.join(THEOREMS)}")
