import random
from fractions import Fraction

import pytest

from eflp import generate
from eflp.lattice import ONE, ZERO, make_config
from eflp.parser import parse
from eflp.program import Program
from eflp.interpretation import (
    InterpPair,
    ParaInterp,
    precision_leq,
    truth_leq,
)
from eflp.semantics import (
    approximator,
    approximator_first,
    embed_nonpara,
    immediate_consequence,
    is_model,
    normal_approximator,
)

F = Fraction
BOOL = make_config("bool")


def interp(d):
    return ParaInterp({a: (F(t), F(f)) for a, (t, f) in d.items()})


P1 = parse("neg q <- not p. p <- p.").program
P2 = parse("neg q <- neg p. p <- p.").program
I1 = interp({"p": (0, 0), "q": (0, 1)})


def test_consequence_operator_examples():
    bot = ParaInterp.bottom(P1.atoms)
    assert immediate_consequence(BOOL, P1, bot) == I1
    assert immediate_consequence(BOOL, P2, bot) == bot  # the least model of P2
    empty = Program.build([], declared=["p", "q"])
    assert immediate_consequence(BOOL, empty, interp({"p": (1, 1), "q": (1, 0)})) \
        == ParaInterp.bottom(["p", "q"])


def test_consequence_requires_weight_free_program():
    weighted = parse("p <-[1] q.").program
    with pytest.raises(ValueError, match="desugar"):
        immediate_consequence(make_config("rational"), weighted,
                              ParaInterp.bottom(weighted.atoms))


def test_is_model_examples():
    assert is_model(BOOL, P1, I1)
    assert not is_model(BOOL, P1, ParaInterp.bottom(P1.atoms))
    empty = Program.build([], declared=["p"])
    assert is_model(BOOL, empty, interp({"p": (1, 1)}))


def test_approximator_from_least_precision_pair():
    bot = ParaInterp.bottom(P1.atoms)
    top = ParaInterp.top(P1.atoms)
    out = approximator(BOOL, P1, InterpPair(bot, top))
    assert out.lower == bot
    assert out.upper == interp({"p": (1, 0), "q": (0, 1)})


def test_approximator_trivial_and_exactness():
    empty = Program.build([], declared=["p"])
    pair = approximator(BOOL, empty, InterpPair(interp({"p": (1, 1)}),
                                                interp({"p": (0, 1)})))
    assert pair.lower == pair.upper == ParaInterp.bottom(["p"])

    out = approximator(BOOL, P1, InterpPair(I1, I1))
    assert out.lower == out.upper == immediate_consequence(BOOL, P1, I1) == I1


def test_model_iff_prefixpoint():
    rng = random.Random(21)
    for _ in range(400):
        cfg = make_config(rng.choice(["bool", "chain(3)"]))
        program = generate.extended_program(rng, cfg)
        i = generate.interpretation(rng, cfg, sorted(program.atoms))
        assert is_model(cfg, program, i) == truth_leq(
            immediate_consequence(cfg, program, i), i
        )


def test_tilde_free_consequence_monotone():
    rng = random.Random(22)
    for _ in range(300):
        cfg = make_config(rng.choice(["bool", "chain(3)"]))
        program = generate.tilde_free_program(rng, cfg)
        atoms = sorted(program.atoms)
        i = generate.interpretation(rng, cfg, atoms)
        j = generate.interpretation(rng, cfg, atoms)
        from eflp.interpretation import truth_join

        j = truth_join(i, j)  # force i <= j
        assert truth_leq(
            immediate_consequence(cfg, program, i),
            immediate_consequence(cfg, program, j),
        )


def test_approximator_precision_monotone():
    rng = random.Random(23)
    for _ in range(300):
        cfg = make_config(rng.choice(["bool", "chain(3)"]))
        program = generate.extended_program(rng, cfg)
        atoms = sorted(program.atoms)
        outer, inner = generate.precision_related_pairs(rng, cfg, atoms)
        assert precision_leq(
            approximator(cfg, program, outer), approximator(cfg, program, inner)
        )


def test_approximator_symmetry():
    rng = random.Random(24)
    for _ in range(200):
        cfg = make_config(rng.choice(["bool", "chain(3)"]))
        program = generate.extended_program(rng, cfg)
        atoms = sorted(program.atoms)
        l = generate.interpretation(rng, cfg, atoms)
        u = generate.interpretation(rng, cfg, atoms)
        out = approximator(cfg, program, InterpPair(l, u))
        assert out.upper == approximator_first(cfg, program, u, l)


def test_normal_approximator_examples():
    cfg = BOOL
    program = parse("p <- not q.").program
    zero = {"p": ZERO, "q": ZERO}
    assert normal_approximator(cfg, program, zero, zero)["p"] == ONE

    empty = Program.build([], declared=["p"])
    assert normal_approximator(cfg, empty, {"p": ZERO}, {"p": ZERO}) == {"p": ZERO}

    out = approximator_first(cfg, program, embed_nonpara(zero), embed_nonpara(zero))
    assert out == embed_nonpara(normal_approximator(cfg, program, zero, zero))


def test_normal_approximator_rejects_strong_negation():
    program = parse("p <- neg q.").program
    with pytest.raises(ValueError):
        normal_approximator(BOOL, program, {"p": ZERO, "q": ZERO},
                            {"p": ZERO, "q": ZERO})


def test_normal_generalization_on_chain3():
    rng = random.Random(25)
    cfg = make_config("chain(3)")
    for _ in range(200):
        program = generate.normal_program(rng, cfg)
        atoms = sorted(program.atoms)
        k = generate.nonpara_interpretation(rng, cfg, atoms)
        l = generate.nonpara_interpretation(rng, cfg, atoms)
        lifted = approximator_first(cfg, program, embed_nonpara(k), embed_nonpara(l))
        assert lifted == embed_nonpara(normal_approximator(cfg, program, k, l))
        assert all(f == ZERO for _, (_, f) in lifted.items())
