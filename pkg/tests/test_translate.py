from fractions import Fraction

import pytest

from eflp import oracles
from eflp.lattice import ONE, ZERO, make_config
from eflp.parser import parse
from eflp.program import App, Const, Literal, Program, Rule, WeakNeg, pretty_program
from eflp.interpretation import ParaInterp
from eflp.fixpoint import is_stable_model
from eflp.theorems import (
    cornejo_translation_stable_fixpoints,
    saad_translation_stable_fixpoints,
)
from eflp.translate import (
    TranslationError,
    domain_atom,
    lift_cornejo,
    lift_saad,
    translate_cornejo,
    translate_saad,
)

F = Fraction
RAT = make_config("rational")


def interp(d):
    return ParaInterp({a: (F(t), F(f)) for a, (t, f) in d.items()})


def test_translate_saad_zero_bound_under_negation():
    q = parse("p:1 <- not q:0.", dialect="saad").program
    out = translate_saad(RAT, q)
    assert out.atoms == {"p", "q", "@d_q"}
    assert out.rules == (
        Rule(Literal("p"), App("godel", (Const(ONE), WeakNeg(Literal("@d_q"))))),
    )


def test_translate_saad_adds_domain_rules():
    q = parse("p:1 <- not p:0.", dialect="saad").program
    out = translate_saad(RAT, q)
    assert out.rules == (
        Rule(Literal("p"), App("godel", (Const(ONE), WeakNeg(Literal("@d_p"))))),
        Rule(Literal("@d_p"), App("geq_1_1", (Literal("p"),))),
    )


def test_translate_saad_empty_and_deterministic():
    empty = parse("", dialect="saad").program
    assert translate_saad(RAT, empty).rules == ()
    q = parse("p:1 <- not q:0, q:1/2. neg q:1/2.", dialect="saad").program
    first = translate_saad(RAT, q)
    assert translate_saad(RAT, q) == first
    assert pretty_program(RAT, first) == pretty_program(RAT, first)


def test_translate_saad_positive_zero_bound_uses_domain_atom():
    q = parse("q:1 <- p:0.", dialect="saad").program
    out = translate_saad(RAT, q)
    assert out.rules[0].body == App("godel", (Const(ONE), Literal("@d_p")))


def test_translated_text_reparses():
    q = parse("p:1 <- not q:0, q:1/2. neg p:1/2 <- p:1.", dialect="saad").program
    translated = translate_saad(RAT, q)
    back = parse(pretty_program(RAT, translated))
    assert back.program == translated


def test_lift_saad_examples():
    q = parse("p:1 <- not q:0.", dialect="saad").program
    translated = translate_saad(RAT, q)
    g = oracles.SaadInterp({Literal("p"): ONE})
    assert lift_saad(g, translated) == interp(
        {"p": (1, 0), "q": (0, 0), "@d_q": (0, 0)}
    )
    assert lift_saad(oracles.SaadInterp.empty(), translated) == ParaInterp.bottom(
        translated.atoms
    )


def test_lift_saad_negative_literal_value():
    q = parse("q:1 <- not neg p:0.", dialect="saad").program
    translated = translate_saad(RAT, q)
    assert "@dn_p" in translated.atoms
    g = oracles.SaadInterp({Literal("p", True): F(2, 5)})
    lifted = lift_saad(g, translated)
    assert lifted.pair("p") == (ZERO, F(2, 5))
    assert lifted.pair("@dn_p") == (ONE, ZERO)


def test_domain_atom_names_are_injective():
    assert domain_atom(Literal("n_x", True)) == "@dn_n_x"
    assert domain_atom(Literal("dn_x")) == "@d_dn_x"
    assert domain_atom(Literal("x", True)) != domain_atom(Literal("n_x"))


def test_naive_translation_regression():
    # Without the domain rules the self-blocking program gains a spurious
    # stable fixpoint; the full translation has none.
    naive = Program.build([
        Rule(Literal("p"), App("godel", (Const(ONE), WeakNeg(Literal("@d_p"))))),
    ])
    spurious = interp({"p": (1, 0), "@d_p": (0, 0)})
    assert is_stable_model(RAT, naive, spurious)

    q = parse("p:1 <- not p:0.", dialect="saad").program
    proper = translate_saad(RAT, q)
    assert not is_stable_model(
        RAT, proper, interp({"p": (1, 0), "@d_p": (0, 0)})
    )
    assert saad_translation_stable_fixpoints(RAT, proper) == []


def test_translate_saad_rejects_reserved_atoms():
    q = parse("p:1 <- not q:0.", dialect="saad").program
    from eflp.program import SaadProgram, SaadRule

    bad = SaadProgram.build(
        [SaadRule(Literal("@d_x"), ONE, ())], declared=[]
    )
    with pytest.raises(TranslationError):
        translate_saad(RAT, bad)


def test_translate_cornejo_examples():
    q = parse("p <- not q. 0.3 <- p.", dialect="cornejo").program
    out = translate_cornejo(RAT, q)
    assert out.rules == (
        Rule(Literal("p"), WeakNeg(Literal("q"))),
        Rule(Literal("@c_1"), Literal("p")),
        Rule(Literal("@c_1", True), Const(F(7, 10))),
    )

    plain = parse("p <- not q.", dialect="cornejo").program
    assert translate_cornejo(RAT, plain).rules == (
        Rule(Literal("p"), WeakNeg(Literal("q"))),
    )

    never = parse("1 <- p.", dialect="cornejo").program
    out = translate_cornejo(RAT, never)
    assert out.rules[1] == Rule(Literal("@c_1", True), Const(ZERO))


def test_translate_cornejo_needs_involutive_negator():
    cfg = make_config("rational", strong_neg="godel")
    q = parse("p <- not q. 1/2 <- p.", dialect="cornejo").program
    with pytest.raises(TranslationError):
        translate_cornejo(cfg, q)


def test_lift_cornejo_examples():
    q = parse("p <- not q. 0.3 <- p.", dialect="cornejo").program
    translated = translate_cornejo(RAT, q)
    lifted = lift_cornejo(RAT, {"p": F(3, 5), "q": ZERO}, translated)
    # source atoms carry no falsity; the constraint atom records its body
    # value and the inverted bound
    assert lifted.pair("p") == (F(3, 5), ZERO)
    assert lifted.pair("q") == (ZERO, ZERO)
    assert lifted.pair("@c_1") == (F(3, 5), F(7, 10))

    # an atom outside the program is carried along with falsity 0
    extra = lift_cornejo(RAT, {"p": ONE, "q": ZERO, "x": F(1, 2)}, translated)
    assert extra.pair("x") == (F(1, 2), ZERO)


def test_lift_cornejo_constraint_consistency_matches_satisfaction():
    q = parse("#lattice chain(2). p <- not q. 1 <- p.", dialect="cornejo").program
    cfg = make_config("chain(2)")
    translated = translate_cornejo(cfg, q)
    lifted = lift_cornejo(cfg, {"p": ONE, "q": ZERO}, translated)
    assert lifted.pair("@c_1") == (ONE, ZERO)
    from eflp.interpretation import is_consistent

    assert is_consistent(cfg, lifted)


def test_cornejo_translation_stable_fixpoints_respect_constraints():
    cfg = make_config("chain(2)")
    q = parse("#lattice chain(2). p <- not q. 0 <- p.", dialect="cornejo").program
    translated = translate_cornejo(cfg, q)
    assert cornejo_translation_stable_fixpoints(cfg, translated) == []
    assert oracles.cornejo_stable_models(cfg, q) == []


def test_geq_threshold_is_pointwise_step_function():
    cfg = RAT
    for value, expected in [
        (ZERO, ZERO), (F(49, 100), ZERO), (F(1, 2), ONE), (ONE, ONE),
    ]:
        assert cfg.apply("geq_1_2", [value]) == expected
