import random
from fractions import Fraction

import pytest

from eflp import generate, oracles
from eflp.lattice import ONE, ZERO, make_config
from eflp.parser import parse
from eflp.program import Const, Literal, Program, WeakNeg
from eflp.interpretation import (
    ParaInterp,
    SakamaPair,
    all_literals,
)

F = Fraction
BOOL = make_config("bool")


def interp(d):
    return ParaInterp({a: (F(t), F(f)) for a, (t, f) in d.items()})


def lits(*specs):
    return frozenset(
        Literal(s[1:], True) if s.startswith("-") else Literal(s) for s in specs
    )


P1 = parse("neg q <- not p. p <- p.").program
P2 = parse("neg q <- neg p. p <- p.").program
TWONEG = parse("p <- not q. q <- not p.").program
I1 = interp({"p": (0, 0), "q": (0, 1)})
P1_RULES = oracles.conjunctive_rules(BOOL, P1)
P1_LITS = all_literals(P1.atoms)


def test_conjunctive_body_rejects_disjunction():
    program = parse("p <- q | r.").program
    with pytest.raises(oracles.OracleError):
        oracles.conjunctive_rules(BOOL, program)


def test_proven_step_examples():
    empty = frozenset()
    assert oracles.sakama_proven_step(P1_RULES, P1_LITS, empty, empty, empty) == empty
    assert oracles.sakama_proven_step(
        P1_RULES, P1_LITS, empty, lits("p"), empty
    ) == lits("-q")
    assert oracles.sakama_proven_step(
        P1_RULES, P1_LITS, empty, P1_LITS, P1_LITS
    ) == lits("p", "-q")  # heads of all rules


def test_default_step_examples():
    empty = frozenset()
    assert oracles.sakama_default_step(
        P1_RULES, P1_LITS, empty, empty, P1_LITS
    ) == lits("p", "q", "-p")
    # with no sets populated, only rule-less literals are blocked everywhere
    assert oracles.sakama_default_step(
        P1_RULES, P1_LITS, empty, empty, empty
    ) == lits("q", "-p")
    p2_rules = oracles.conjunctive_rules(BOOL, P2)
    # every rule-less literal is included (vacuous blocking), alongside -q
    # whose single rule is blocked by -p in the accumulator
    assert oracles.sakama_default_step(
        p2_rules, P1_LITS, empty, empty, lits("-p")
    ) == lits("q", "-p", "-q")


def test_sakama_well_founded_examples():
    wf = oracles.sakama_well_founded(BOOL, P1)
    assert wf == SakamaPair(lits("-q"), lits("p", "q", "-p"))

    empty = Program.build([], declared=["p", "q"])
    assert oracles.sakama_well_founded(BOOL, empty) == SakamaPair(
        frozenset(), all_literals(["p", "q"])
    )

    # nothing is decided for the two-cycle: only the rule-less negative
    # literals are default-false
    assert oracles.sakama_well_founded(BOOL, TWONEG) == SakamaPair(
        frozenset(), lits("-p", "-q")
    )


def test_sakama_inoue_reduct_examples():
    bot = ParaInterp.bottom(P1.atoms)
    reduct = oracles.sakama_inoue_reduct(BOOL, P1, bot)
    assert [r.head for r in reduct.rules] == [Literal("q", True), Literal("p")]
    assert reduct.rules[0].body == Const(ONE)
    assert reduct.rules[1].body == Literal("p")

    kept = oracles.sakama_inoue_reduct(BOOL, P1, interp({"p": (1, 0), "q": (0, 0)}))
    assert [r.head for r in kept.rules] == [Literal("p")]

    assert oracles.sakama_inoue_reduct(BOOL, P2, bot) == P2  # tilde-free: unchanged


def test_sakama_inoue_stable_models_examples():
    assert oracles.sakama_inoue_stable_models(BOOL, P1) == [I1]

    two = oracles.sakama_inoue_stable_models(BOOL, TWONEG)
    assert two == sorted(
        [interp({"p": (0, 0), "q": (1, 0)}), interp({"p": (1, 0), "q": (0, 0)})],
        key=lambda i: tuple(sorted(i.items())),
    )

    facts = parse("p. neg p.").program
    models = oracles.sakama_inoue_stable_models(BOOL, facts)
    assert models == [interp({"p": (1, 1)})]  # paraconsistent stable model


def test_gelfond_lifschitz_answer_sets():
    assert oracles.gelfond_lifschitz_answer_sets(BOOL, P1) == [I1]
    # contradictory facts admit no consistent answer set
    facts = parse("p. neg p.").program
    assert oracles.gelfond_lifschitz_answer_sets(BOOL, facts) == []


# -- annotated programs ------------------------------------------------------------


def test_saad_consequence_examples():
    q = parse("p:1 <- not q:0.", dialect="saad").program
    empty = oracles.SaadInterp.empty()
    out = oracles.saad_consequence(q, empty)
    assert out == oracles.SaadInterp({Literal("p"): ONE})

    g = oracles.SaadInterp({Literal("q"): ZERO})
    assert oracles.saad_consequence(q, g) == empty  # q in the domain blocks the rule

    assert oracles.saad_consequence(
        parse("", dialect="saad").program, empty
    ) == empty


def test_saad_stable_models_examples():
    q = parse("p:1 <- not q:0.", dialect="saad").program
    models = oracles.saad_stable_models(q)
    assert len(models) == 1
    assert models[0].interp == oracles.SaadInterp({Literal("p"): ONE})
    assert models[0].consistent

    self_block = parse("p:1 <- not p:0.", dialect="saad").program
    assert oracles.saad_stable_models(self_block) == []

    empty = parse("", dialect="saad").program
    only = oracles.saad_stable_models(empty)
    assert len(only) == 1 and only[0].interp == oracles.SaadInterp.empty()


def test_saad_inconsistency_flag_and_collapse():
    q = parse("p:1. neg p:1/2.", dialect="saad").program
    models = oracles.saad_stable_models(q)
    assert len(models) == 1 and not models[0].consistent
    collapsed = oracles.saad_stable_models(q, collapse_inconsistent=True)
    assert collapsed[0].interp == oracles.SaadInterp(
        {lit: ONE for lit in all_literals(q.atoms)}
    )


def test_saad_consequence_monotone_on_reducts():
    rng = random.Random(41)
    for _ in range(150):
        q = generate.saad_program(rng)
        g = oracles.SaadInterp.empty()
        reduct = oracles.saad_reduct(q, g)
        prev = oracles.SaadInterp.empty()
        for _ in range(20):
            nxt = oracles.saad_consequence(reduct, prev)
            assert prev.domain <= nxt.domain
            assert all(prev.value(lit) <= nxt.value(lit) for lit in prev.domain)
            if nxt == prev:
                break
            prev = nxt


# -- constraint programs -------------------------------------------------------------


def test_cornejo_body_reduct_examples():
    cfg = make_config("rational")
    body = parse("p <- godel(p, not q).", dialect="cornejo").program.rules[0].body
    reduced = oracles.cornejo_body_reduct(cfg, body, {"p": ONE, "q": F(3, 10)})
    from eflp.program import App

    assert reduced == App("godel", (Literal("p"), Const(F(7, 10))))

    tilde_free = Literal("p")
    assert oracles.cornejo_body_reduct(cfg, tilde_free, {"p": ZERO}) == tilde_free

    assert oracles.cornejo_body_reduct(
        cfg, WeakNeg(Literal("q")), {"q": ONE}
    ) == Const(ZERO)


def test_cornejo_body_reduct_rejects_strong_negation():
    cfg = make_config("rational")
    with pytest.raises(oracles.OracleError):
        oracles.cornejo_body_reduct(cfg, Literal("p", True), {"p": ZERO})


def test_cornejo_stable_models_examples():
    cfg2 = make_config("chain(2)")
    q = parse("#lattice chain(2). p <- not q.", dialect="cornejo").program
    assert oracles.cornejo_stable_models(cfg2, q) == [{"p": ONE, "q": ZERO}]

    killed = parse("#lattice chain(2). p <- not q. 0 <- p.", dialect="cornejo").program
    assert oracles.cornejo_stable_models(cfg2, killed) == []

    empty = parse("#lattice chain(2).", dialect="cornejo").program
    assert oracles.cornejo_stable_models(cfg2, empty) == [{}]
