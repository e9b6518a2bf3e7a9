"""Paraconsistent interpretations, truth/precision orderings, consistency,
formula evaluation (single and pair form), and the crisp-case encodings into
literal sets and proven/default pairs."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

from .lattice import ONE, ZERO, LatticeConfig, LatticeError
from .program import App, Formula, Literal, WeakNeg

Pair = tuple[Fraction, Fraction]


class ParaInterp:
    """A total map atom -> (truth degree, falsity degree); immutable."""

    __slots__ = ("_m", "_hash")

    def __init__(self, mapping: Mapping[str, Pair]):
        self._m = dict(mapping)
        self._hash: int | None = None

    @classmethod
    def uniform(cls, atoms: Iterable[str], pair: Pair) -> "ParaInterp":
        return cls({a: pair for a in atoms})

    @classmethod
    def bottom(cls, atoms: Iterable[str]) -> "ParaInterp":
        return cls.uniform(atoms, (ZERO, ZERO))

    @classmethod
    def top(cls, atoms: Iterable[str]) -> "ParaInterp":
        return cls.uniform(atoms, (ONE, ONE))

    @property
    def atoms(self) -> frozenset[str]:
        return frozenset(self._m)

    def pair(self, atom: str) -> Pair:
        return self._m[atom]

    def truth(self, atom: str) -> Fraction:
        return self._m[atom][0]

    def falsity(self, atom: str) -> Fraction:
        return self._m[atom][1]

    def value(self, lit: Literal) -> Fraction:
        t, f = self._m[lit.atom]
        return f if lit.negated else t

    def items(self) -> Iterator[tuple[str, Pair]]:
        return iter(self._m.items())

    def updated(self, atom: str, pair: Pair) -> "ParaInterp":
        m = dict(self._m)
        m[atom] = pair
        return ParaInterp(m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParaInterp):
            return NotImplemented
        return self._m == other._m

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._m.items()))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{a}: ({t}, {f})" for a, (t, f) in sorted(self._m.items())
        )
        return f"ParaInterp({{{inner}}})"


class InterpPair(NamedTuple):
    """A (lower, upper) pair of interpretations; an approximation interval."""

    lower: ParaInterp
    upper: ParaInterp


class SakamaPair(NamedTuple):
    """Crisp proven-facts / default-facts pair of literal sets."""

    proven: frozenset[Literal]
    default: frozenset[Literal]


def canonical_key(interp: ParaInterp) -> tuple:
    return tuple(sorted(interp.items()))


# -- evaluation ----------------------------------------------------------------


def evaluate(cfg: LatticeConfig, interp: ParaInterp, phi: Formula) -> Fraction:
    """Evaluate a formula under one interpretation: atoms read the truth
    degree, strongly negated atoms the falsity degree, weak negation applies
    the weak negator, connectives their truth functions."""
    if isinstance(phi, Literal):
        return interp.value(phi)
    if isinstance(phi, App):
        conn = cfg.connective(phi.conn)
        return conn.fn(*[evaluate(cfg, interp, a) for a in phi.args])
    if isinstance(phi, WeakNeg):
        return cfg.weak_negation(evaluate(cfg, interp, phi.child))
    return phi.value


def evaluate_pair(
    cfg: LatticeConfig, lower: ParaInterp, upper: ParaInterp, phi: Formula
) -> Fraction:
    """Evaluate a formula under a pair: literals read the lower bound, weak
    negation evaluates its child with the roles swapped (so a negated literal
    reads the upper bound). Coincides with ``evaluate`` on exact pairs."""
    if isinstance(phi, Literal):
        return lower.value(phi)
    if isinstance(phi, App):
        conn = cfg.connective(phi.conn)
        return conn.fn(*[evaluate_pair(cfg, lower, upper, a) for a in phi.args])
    if isinstance(phi, WeakNeg):
        return cfg.weak_negation(evaluate_pair(cfg, upper, lower, phi.child))
    return phi.value


# -- consistency ----------------------------------------------------------------


def consistency_violations(cfg: LatticeConfig, interp: ParaInterp) -> list[str]:
    """Atoms whose (truth, falsity) pair violates truth <= strong_neg(falsity).

    The strong negator decides consistency; it plays no role in evaluation.
    """
    bad = []
    for a, (t, f) in sorted(interp.items()):
        if not t <= cfg.strong_negation(f):
            bad.append(a)
    return bad


def is_consistent(cfg: LatticeConfig, interp: ParaInterp) -> bool:
    return not consistency_violations(cfg, interp)


# -- truth and precision orderings ----------------------------------------------


def _require_same_atoms(a: ParaInterp, b: ParaInterp) -> None:
    if a.atoms != b.atoms:
        raise LatticeError("interpretations range over different atom sets")


def truth_leq(a: ParaInterp, b: ParaInterp) -> bool:
    _require_same_atoms(a, b)
    return all(t <= b.truth(at) and f <= b.falsity(at) for at, (t, f) in a.items())


def truth_meet(a: ParaInterp, b: ParaInterp) -> ParaInterp:
    _require_same_atoms(a, b)
    return ParaInterp({
        at: (min(t, b.truth(at)), min(f, b.falsity(at))) for at, (t, f) in a.items()
    })


def truth_join(a: ParaInterp, b: ParaInterp) -> ParaInterp:
    _require_same_atoms(a, b)
    return ParaInterp({
        at: (max(t, b.truth(at)), max(f, b.falsity(at))) for at, (t, f) in a.items()
    })


def precision_leq(p: InterpPair, q: InterpPair) -> bool:
    return truth_leq(p.lower, q.lower) and truth_leq(q.upper, p.upper)


def precision_meet(p: InterpPair, q: InterpPair) -> InterpPair:
    return InterpPair(truth_meet(p.lower, q.lower), truth_join(p.upper, q.upper))


def precision_join(p: InterpPair, q: InterpPair) -> InterpPair:
    return InterpPair(truth_join(p.lower, q.lower), truth_meet(p.upper, q.upper))


def is_ordered(pair: InterpPair) -> bool:
    return truth_leq(pair.lower, pair.upper)


def is_exact(pair: InterpPair) -> bool:
    return pair.lower == pair.upper


# -- crisp-case encodings ---------------------------------------------------------


def _require_boolean(cfg: LatticeConfig) -> None:
    if cfg.kind != "boolean":
        raise LatticeError("literal-set encodings require the boolean lattice")


def all_literals(atoms: Iterable[str]) -> frozenset[Literal]:
    return frozenset(Literal(a, neg) for a in atoms for neg in (False, True))


def complement_literals(
    s: frozenset[Literal], atoms: Iterable[str]
) -> frozenset[Literal]:
    return all_literals(atoms) - s


def to_literal_set(cfg: LatticeConfig, interp: ParaInterp) -> frozenset[Literal]:
    """Boolean interpretations as literal sets: atom in iff truth 1, strong
    negation in iff falsity 1. An order isomorphism with the truth ordering."""
    _require_boolean(cfg)
    out = set()
    for a, (t, f) in interp.items():
        if t == ONE:
            out.add(Literal(a))
        if f == ONE:
            out.add(Literal(a, True))
    return frozenset(out)


def from_literal_set(s: Iterable[Literal], atoms: Iterable[str]) -> ParaInterp:
    s = set(s)
    return ParaInterp({
        a: (ONE if Literal(a) in s else ZERO, ONE if Literal(a, True) in s else ZERO)
        for a in atoms
    })


def to_sakama_pair(cfg: LatticeConfig, pair: InterpPair) -> SakamaPair:
    """Boolean interpretation pairs as proven/default pairs: proven facts from
    the lower bound, default facts as the complement of the upper bound."""
    _require_boolean(cfg)
    atoms = pair.lower.atoms
    return SakamaPair(
        to_literal_set(cfg, pair.lower),
        complement_literals(to_literal_set(cfg, pair.upper), atoms),
    )


# -- JSON encoding ----------------------------------------------------------------


def fraction_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def parse_fraction(s: str) -> Fraction:
    try:
        v = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise LatticeError(f"bad rational {s!r}") from exc
    if not ZERO <= v <= ONE:
        raise LatticeError(f"rational {s!r} outside [0,1]")
    return v


def interp_to_json(interp: ParaInterp) -> dict[str, list[str]]:
    return {
        a: [fraction_str(t), fraction_str(f)]
        for a, (t, f) in sorted(interp.items())
    }


def interp_from_json(data: Mapping[str, Iterable[str]]) -> ParaInterp:
    out = {}
    for a, pair in data.items():
        vals = list(pair)
        if len(vals) != 2:
            raise LatticeError(f"atom {a!r} needs a [truth, falsity] pair")
        out[a] = (parse_fraction(vals[0]), parse_fraction(vals[1]))
    return ParaInterp(out)


def literal_set_to_json(s: Iterable[Literal]) -> list[str]:
    return [str(lit) for lit in sorted(s, key=lambda l: l.key)]
