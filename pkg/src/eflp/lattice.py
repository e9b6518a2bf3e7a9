"""Truth-value algebra: rational complete lattices, fuzzy connectives, negators,
and adjoint implicator/conjunctor pairs.

All truth values are exact rationals (``fractions.Fraction``); fixpoint
detection elsewhere relies on exact equality, so floating point is never used.
Boolean and chain lattices are carried as finite sets of rationals, which keeps
a single arithmetic core for every configuration.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Mapping

TruthValue = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class LatticeError(ValueError):
    """Bad lattice configuration, or a value outside the configured carrier."""


class UnknownConnectiveError(LatticeError):
    pass


def _godel_conj(x: Fraction, y: Fraction) -> Fraction:
    return x if x <= y else y


def _godel_disj(x: Fraction, y: Fraction) -> Fraction:
    return x if x >= y else y


def _luk_conj(x: Fraction, y: Fraction) -> Fraction:
    z = x + y - 1
    return z if z > 0 else ZERO


def _luk_disj(x: Fraction, y: Fraction) -> Fraction:
    z = x + y
    return z if z < 1 else ONE


def _product_conj(x: Fraction, y: Fraction) -> Fraction:
    return x * y


def _product_disj(x: Fraction, y: Fraction) -> Fraction:
    return x + y - x * y


# Residual implicators; impl(z, x) reads "z if x", so the adjoint law is
# conj(x, y) <= z  iff  y <= impl(z, x).
def _godel_impl(z: Fraction, x: Fraction) -> Fraction:
    return ONE if x <= z else z


def _luk_impl(z: Fraction, x: Fraction) -> Fraction:
    w = ONE - x + z
    return w if w < 1 else ONE


def _product_impl(z: Fraction, x: Fraction) -> Fraction:
    if x == 0:
        return ONE
    w = z / x
    return w if w < 1 else ONE


NEGATORS: dict[str, Callable[[Fraction], Fraction]] = {
    "standard": lambda x: ONE - x,
    "godel": lambda x: ONE if x == 0 else ZERO,
}

# family -> (implicator fn, adjoint conjunctor fn)
IMPLICATOR_FAMILIES: dict[str, tuple[Callable, Callable]] = {
    "godel": (_godel_impl, _godel_conj),
    "lukasiewicz": (_luk_impl, _luk_conj),
    "product": (_product_impl, _product_conj),
}

# Connective name -> (kind, truth function).  Conjunctor names double as
# implicator family names so weighted rules can pick their adjoint partner.
_BUILTIN_BINARY: dict[str, tuple[str, Callable]] = {
    "godel": ("conj", _godel_conj),
    "godel_disj": ("disj", _godel_disj),
    "lukasiewicz": ("conj", _luk_conj),
    "lukasiewicz_disj": ("disj", _luk_disj),
    "product": ("conj", _product_conj),
    "product_disj": ("disj", _product_disj),
}

_GEQ_ID = re.compile(r"^geq_(\d+)_(\d+)$")


@dataclass(frozen=True)
class Connective:
    name: str
    arity: int
    fn: Callable[..., Fraction]
    kind: str = "other"  # conj | disj | other
    monotone: bool = True  # declared at registration, spot-checked by sampling


@dataclass(frozen=True)
class AdjointReport:
    ok: bool
    checked: int
    counterexample: tuple[Fraction, Fraction, Fraction] | None = None


def parse_lattice(text: str) -> tuple[str, int | None]:
    """Parse a lattice directive value: ``bool``, ``chain(n)``, ``rational``."""
    text = text.strip()
    if text in ("bool", "boolean"):
        return "boolean", None
    if text == "rational":
        return "rational", None
    m = re.fullmatch(r"chain\((\d+)\)", text)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise LatticeError(f"chain size must be at least 2, got {n}")
        return "chain", n
    raise LatticeError(f"unknown lattice {text!r}")


@dataclass(frozen=True)
class LatticeConfig:
    """A concrete complete lattice plus its registered connectives and negators."""

    kind: str  # boolean | chain | rational
    size: int | None = None  # chain length; carrier is {k/(size-1)}
    family: str = "godel"  # default conj/disj/implicator family
    strong_neg: str = "standard"
    weak_neg: str = "standard"
    connectives: Mapping[str, Connective] = field(default_factory=dict)

    def describe(self) -> str:
        if self.kind == "boolean":
            return "bool"
        if self.kind == "chain":
            return f"chain({self.size})"
        return "rational"

    def is_finite(self) -> bool:
        return self.kind in ("boolean", "chain")

    def carrier(self) -> tuple[Fraction, ...] | None:
        """The carrier set for finite lattices, None for the rational interval."""
        if self.kind == "boolean":
            return (ZERO, ONE)
        if self.kind == "chain":
            n = self.size
            return tuple(Fraction(k, n - 1) for k in range(n))
        return None

    def contains(self, v: Fraction) -> bool:
        if not isinstance(v, Fraction):
            return False
        if self.kind == "rational":
            return ZERO <= v <= ONE
        return v in self.carrier()

    def require(self, v: Fraction) -> Fraction:
        if not self.contains(v):
            raise LatticeError(f"value {v} is not in the {self.describe()} lattice")
        return v

    def join(self, values: Iterable[Fraction]) -> Fraction:
        """Least upper bound of a finite set; the empty join is 0."""
        vals = [self.require(v) for v in values]
        return max(vals, default=ZERO)

    def meet(self, values: Iterable[Fraction]) -> Fraction:
        """Greatest lower bound of a finite set; the empty meet is 1."""
        vals = [self.require(v) for v in values]
        return min(vals, default=ONE)

    def connective(self, name: str) -> Connective:
        conn = self.connectives.get(name)
        if conn is not None:
            return conn
        m = _GEQ_ID.match(name)
        if m:
            c = Fraction(int(m.group(1)), int(m.group(2)))
            if not ZERO <= c <= ONE:
                raise UnknownConnectiveError(f"threshold of {name} outside [0,1]")
            return Connective(name, 1, _make_geq(c), kind="other", monotone=True)
        raise UnknownConnectiveError(f"unknown connective {name!r}")

    def apply(self, name: str, args: list[Fraction] | tuple[Fraction, ...]) -> Fraction:
        conn = self.connective(name)
        if len(args) != conn.arity:
            raise LatticeError(
                f"connective {name} expects {conn.arity} arguments, got {len(args)}"
            )
        for a in args:
            self.require(a)
        return conn.fn(*args)

    def negator(self, which: str) -> Callable[[Fraction], Fraction]:
        name = self.strong_neg if which == "strong" else self.weak_neg
        return NEGATORS[name]

    def strong_negation(self, v: Fraction) -> Fraction:
        return NEGATORS[self.strong_neg](v)

    def weak_negation(self, v: Fraction) -> Fraction:
        return NEGATORS[self.weak_neg](v)

    def implicator_pair(self, family: str | None = None) -> tuple[Callable, Callable]:
        """The (implicator, adjoint conjunctor) pair for a registered family."""
        fam = family or self.family
        if fam not in IMPLICATOR_FAMILIES:
            raise UnknownConnectiveError(f"unknown implicator family {fam!r}")
        if fam not in self.connectives:
            raise LatticeError(
                f"family {fam!r} has no adjoint conjunctor on {self.describe()} "
                "(its connectives are not closed on this carrier)"
            )
        return IMPLICATOR_FAMILIES[fam]

    def with_connective(
        self,
        name: str,
        arity: int,
        fn: Callable[..., Fraction],
        kind: str = "other",
        monotone: bool = True,
    ) -> "LatticeConfig":
        table = dict(self.connectives)
        table[name] = Connective(name, arity, fn, kind=kind, monotone=monotone)
        return replace(self, connectives=table)


def _make_geq(c: Fraction) -> Callable[[Fraction], Fraction]:
    def geq(x: Fraction) -> Fraction:
        return ONE if x >= c else ZERO

    return geq


def geq_name(c: Fraction) -> str:
    return f"geq_{c.numerator}_{c.denominator}"


def _closed(fn: Callable, carrier: tuple[Fraction, ...]) -> bool:
    return all(fn(x, y) in carrier for x in carrier for y in carrier)


def make_config(
    lattice: str = "rational",
    family: str = "godel",
    strong_neg: str = "standard",
    weak_neg: str = "standard",
) -> LatticeConfig:
    """Build a lattice configuration with every built-in connective that is
    closed on the carrier (so e.g. product is rejected on chain(n>2))."""
    kind, size = parse_lattice(lattice)
    if strong_neg not in NEGATORS:
        raise LatticeError(f"unknown strong negator {strong_neg!r}")
    if weak_neg not in NEGATORS:
        raise LatticeError(f"unknown weak negator {weak_neg!r}")

    cfg = LatticeConfig(kind=kind, size=size, family=family,
                        strong_neg=strong_neg, weak_neg=weak_neg)
    carrier = cfg.carrier()
    table: dict[str, Connective] = {}
    for name, (conn_kind, fn) in _BUILTIN_BINARY.items():
        if carrier is not None and not _closed(fn, carrier):
            continue
        table[name] = Connective(name, 2, fn, kind=conn_kind)
    cfg = replace(cfg, connectives=table)

    if family not in IMPLICATOR_FAMILIES:
        raise LatticeError(f"unknown connective family {family!r}")
    if family not in table:
        raise LatticeError(
            f"family {family!r} is not closed on {cfg.describe()} and cannot "
            "be the default"
        )
    return cfg


def _sample_value(rng: random.Random) -> Fraction:
    den = rng.randint(1, 12)
    return Fraction(rng.randint(0, den), den)


def check_adjoint(
    cfg: LatticeConfig,
    family: str | None = None,
    samples: int = 1000,
    seed: int = 0,
    implicator: Callable | None = None,
    conjunctor: Callable | None = None,
) -> AdjointReport:
    """Verify conj(x, y) <= z iff y <= impl(z, x): exhaustively over finite
    carriers, on sampled rational triples otherwise.

    Passing explicit ``implicator``/``conjunctor`` functions allows checking a
    deliberately mismatched pair.
    """
    if implicator is None or conjunctor is None:
        fam = family or cfg.family
        if fam not in IMPLICATOR_FAMILIES:
            raise UnknownConnectiveError(f"unknown implicator family {fam!r}")
        impl0, conj0 = IMPLICATOR_FAMILIES[fam]
        implicator = implicator or impl0
        conjunctor = conjunctor or conj0

    carrier = cfg.carrier()
    if carrier is not None:
        triples: Iterable = product(carrier, repeat=3)
    else:
        rng = random.Random(seed)
        triples = (
            (_sample_value(rng), _sample_value(rng), _sample_value(rng))
            for _ in range(samples)
        )

    checked = 0
    for x, y, z in triples:
        checked += 1
        if (conjunctor(x, y) <= z) != (y <= implicator(z, x)):
            return AdjointReport(False, checked, (x, y, z))
    return AdjointReport(True, checked)


def sample_monotone(
    cfg: LatticeConfig, name: str, samples: int = 1000, seed: int = 0
) -> AdjointReport:
    """Spot-check that a registered connective is monotone in each argument.

    Exhaustive over finite carriers; sampled pairs over rationals.  Proving
    monotonicity on an infinite carrier is impossible here, so registration
    declares it and this check only probes.
    """
    conn = cfg.connective(name)
    carrier = cfg.carrier()
    checked = 0
    if carrier is not None:
        for args in product(carrier, repeat=conn.arity):
            base = conn.fn(*args)
            for i in range(conn.arity):
                for v in carrier:
                    if v < args[i]:
                        continue
                    bumped = args[:i] + (v,) + args[i + 1:]
                    checked += 1
                    if conn.fn(*bumped) < base:
                        return AdjointReport(False, checked, (args[i], v, base))
        return AdjointReport(True, checked)

    rng = random.Random(seed)
    for _ in range(samples):
        args = tuple(_sample_value(rng) for _ in range(conn.arity))
        base = conn.fn(*args)
        i = rng.randrange(conn.arity)
        hi = args[i] + (ONE - args[i]) * Fraction(rng.randint(0, 8), 8)
        bumped = args[:i] + (hi,) + args[i + 1:]
        checked += 1
        if conn.fn(*bumped) < base:
            return AdjointReport(False, checked, (args[i], hi, base))
    return AdjointReport(True, checked)
