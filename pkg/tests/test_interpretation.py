import itertools
import random
from fractions import Fraction

import pytest

from eflp import generate
from eflp.lattice import ONE, ZERO, LatticeError, make_config
from eflp.program import App, Const, Literal, WeakNeg
from eflp.interpretation import (
    InterpPair,
    ParaInterp,
    SakamaPair,
    all_literals,
    consistency_violations,
    evaluate,
    evaluate_pair,
    from_literal_set,
    interp_from_json,
    interp_to_json,
    is_consistent,
    literal_set_to_json,
    precision_leq,
    precision_meet,
    precision_join,
    to_literal_set,
    to_sakama_pair,
    truth_join,
    truth_leq,
    truth_meet,
)

F = Fraction


def interp(d):
    return ParaInterp({a: (F(t), F(f)) for a, (t, f) in d.items()})


BOOL = make_config("bool")
RAT = make_config("rational")


def test_evaluate_examples():
    assert evaluate(BOOL, interp({"p": (0, 0)}), WeakNeg(Literal("p"))) == ONE
    i1 = interp({"p": (0, 0), "q": (0, 1)})
    assert evaluate(BOOL, i1, Literal("q", True)) == ONE
    i = interp({"p": (F(6, 10), F(2, 10))})
    phi = App("godel", (Literal("p"), WeakNeg(Literal("p"))))
    assert evaluate(RAT, i, phi) == F(2, 5)


def test_evaluate_pair_examples():
    bot = interp({"p": (0, 0)})
    top = interp({"p": (1, 1)})
    assert evaluate_pair(BOOL, bot, top, WeakNeg(Literal("p"))) == ZERO
    assert evaluate_pair(BOOL, bot, bot, WeakNeg(Literal("p"))) == ONE
    lower = interp({"p": (0, 0)})
    upper = interp({"p": (1, 0)})
    phi = App("godel", (WeakNeg(Literal("p")), Const(F(1, 2))))
    assert evaluate_pair(RAT, lower, upper, phi) == ZERO


def test_evaluate_pair_equals_evaluate_on_exact_pairs():
    rng = random.Random(3)
    for _ in range(200):
        cfg = make_config(rng.choice(["bool", "chain(3)", "rational"]))
        program = generate.extended_program(rng, cfg)
        if not program.rules:
            continue
        i = generate.interpretation(rng, cfg, sorted(program.atoms))
        for r in program.rules:
            assert evaluate_pair(cfg, i, i, r.body) == evaluate(cfg, i, r.body)


def test_consistency_examples():
    assert not is_consistent(BOOL, interp({"p": (1, 1)}))
    assert is_consistent(BOOL, interp({"p": (0, 0)}))
    assert is_consistent(RAT, interp({"p": (F(6, 10), F(4, 10))}))
    assert not is_consistent(RAT, interp({"p": (F(7, 10), F(4, 10))}))
    assert consistency_violations(RAT, interp({"p": (F(7, 10), F(4, 10))})) == ["p"]


def test_consistency_uses_strong_negator():
    godel_neg = make_config("rational", strong_neg="godel")
    # godel: neg(0.4) = 0, so any positive truth degree is inconsistent with it
    assert not is_consistent(godel_neg, interp({"p": (F(1, 10), F(4, 10))}))
    assert is_consistent(godel_neg, interp({"p": (F(9, 10), ZERO)}))


def test_orderings():
    bot = interp({"p": (0, 0)})
    top = interp({"p": (1, 1)})
    least = InterpPair(bot, top)
    assert precision_leq(least, InterpPair(interp({"p": (1, 0)}), interp({"p": (1, 0)})))
    assert truth_leq(interp({"p": (0, 1)}), interp({"p": (1, 1)}))
    assert not truth_leq(interp({"p": (1, 1)}), interp({"p": (0, 1)}))
    assert truth_meet(interp({"p": (1, 0)}), interp({"p": (0, 1)})) == bot
    assert truth_join(interp({"p": (1, 0)}), interp({"p": (0, 1)})) == top


def test_precision_lattice_operations():
    a = InterpPair(interp({"p": (0, 0)}), interp({"p": (1, 0)}))
    b = InterpPair(interp({"p": (0, 1)}), interp({"p": (1, 1)}))
    meet = precision_meet(a, b)
    join = precision_join(a, b)
    assert precision_leq(meet, a) and precision_leq(meet, b)
    assert precision_leq(a, join) and precision_leq(b, join)


def test_mismatched_atom_sets_rejected():
    with pytest.raises(LatticeError):
        truth_leq(interp({"p": (0, 0)}), interp({"q": (0, 0)}))


def test_literal_set_encoding_examples():
    i1 = interp({"p": (0, 0), "q": (0, 1)})
    assert to_literal_set(BOOL, i1) == {Literal("q", True)}
    atoms = ["p", "q"]
    assert to_literal_set(BOOL, ParaInterp.bottom(atoms)) == frozenset()
    assert to_literal_set(BOOL, ParaInterp.top(atoms)) == all_literals(atoms)
    assert to_literal_set(BOOL, interp({"p": (1, 1)})) == {
        Literal("p"), Literal("p", True),
    }
    with pytest.raises(LatticeError):
        to_literal_set(RAT, i1)


def test_literal_set_roundtrip_exhaustive():
    atoms = ["a", "b"]
    values = [ZERO, ONE]
    for combo in itertools.product(values, repeat=4):
        i = ParaInterp({"a": (combo[0], combo[1]), "b": (combo[2], combo[3])})
        assert from_literal_set(to_literal_set(BOOL, i), atoms) == i


def test_sakama_pair_encoding_examples():
    atoms = ["p", "q"]
    bot, top = ParaInterp.bottom(atoms), ParaInterp.top(atoms)
    assert to_sakama_pair(BOOL, InterpPair(bot, top)) == SakamaPair(
        frozenset(), frozenset()
    )
    assert to_sakama_pair(BOOL, InterpPair(bot, bot)) == SakamaPair(
        frozenset(), all_literals(atoms)
    )
    i1 = interp({"p": (0, 0), "q": (0, 1)})
    pair = to_sakama_pair(BOOL, InterpPair(i1, i1))
    assert pair.proven == {Literal("q", True)}
    assert pair.default == {Literal("p"), Literal("p", True), Literal("q")}


def test_json_encoding():
    i = interp({"b": (F(1, 2), 0), "a": (1, 0)})
    data = interp_to_json(i)
    assert data == {"a": ["1/1", "0/1"], "b": ["1/2", "0/1"]}
    assert interp_from_json(data) == i
    assert literal_set_to_json({Literal("q", True), Literal("p")}) == ["p", "-q"]
    with pytest.raises(LatticeError):
        interp_from_json({"a": ["3/2", "0/1"]})
