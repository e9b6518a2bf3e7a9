"""Monotone least-fixpoint iteration and the semantics built on it:
Kripke-Kleene fixpoint, stable revision, well-founded fixpoint, and stable
model checking / grid enumeration.

Fixpoint detection is exact value equality (truth values are exact rationals).
Non-convergence within the iteration bound is an explicit error, never a
silent truncation: over the rational lattice some operators (e.g. with the
product t-norm) have ascending chains that never stabilize.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence, TypeVar

from .lattice import ONE, ZERO, LatticeConfig
from .program import Program, formula_constants
from .interpretation import (
    InterpPair,
    ParaInterp,
    canonical_key,
    truth_leq,
)
from .semantics import approximator, approximator_first, immediate_consequence

DEFAULT_MAX_ITER = 10_000

T = TypeVar("T")


class NonConvergenceError(RuntimeError):
    def __init__(self, max_iter: int):
        self.max_iter = max_iter
        super().__init__(
            f"no fixpoint within {max_iter} iterations; the operator may have "
            "an infinite ascending chain on this lattice"
        )


class SearchSpaceError(ValueError):
    pass


@dataclass
class FixpointResult:
    value: object
    iterations: int  # productive (value-changing) operator applications
    converged: bool


def iterate_to_fixpoint(
    step: Callable[[T], T], start: T, max_iter: int = DEFAULT_MAX_ITER
) -> FixpointResult:
    """Iterate a monotone operator from ``start`` until two consecutive values
    are equal. Monotonicity (and start below its image, e.g. start = bottom)
    is the caller's obligation; under it the converged value from bottom is
    the least fixpoint."""
    current = start
    changes = 0
    while changes < max_iter:
        nxt = step(current)
        if nxt == current:
            return FixpointResult(current, changes, True)
        current = nxt
        changes += 1
    nxt = step(current)
    if nxt == current:
        return FixpointResult(current, changes, True)
    return FixpointResult(current, changes, False)


def least_fixpoint(
    step: Callable[[T], T], bottom: T, max_iter: int = DEFAULT_MAX_ITER
) -> T:
    result = iterate_to_fixpoint(step, bottom, max_iter)
    if not result.converged:
        raise NonConvergenceError(max_iter)
    return result.value


def bottom_pair(program: Program) -> InterpPair:
    return InterpPair(
        ParaInterp.bottom(program.atoms), ParaInterp.top(program.atoms)
    )


def kripke_kleene(
    cfg: LatticeConfig, program: Program, max_iter: int = DEFAULT_MAX_ITER
) -> FixpointResult:
    """Least fixpoint of the approximator from the least-precision pair
    (all-bottom, all-top). The result is an ordered pair."""
    result = iterate_to_fixpoint(
        lambda pr: approximator(cfg, program, pr), bottom_pair(program), max_iter
    )
    if not result.converged:
        raise NonConvergenceError(max_iter)
    return result


def stable_revision(
    cfg: LatticeConfig,
    program: Program,
    pair: InterpPair,
    max_iter: int = DEFAULT_MAX_ITER,
) -> InterpPair:
    """Revise a pair into the least fixpoints of the approximator with one
    argument frozen. By symmetry the second component is the first-component
    operator with the frozen argument swapped in."""
    lower, upper = pair
    bottom = ParaInterp.bottom(program.atoms)
    new_lower = least_fixpoint(
        lambda z: approximator_first(cfg, program, z, upper), bottom, max_iter
    )
    new_upper = least_fixpoint(
        lambda z: approximator_first(cfg, program, z, lower), bottom, max_iter
    )
    return InterpPair(new_lower, new_upper)


def well_founded(
    cfg: LatticeConfig, program: Program, max_iter: int = DEFAULT_MAX_ITER
) -> FixpointResult:
    """Least fixpoint of stable revision from (all-bottom, all-top)."""
    result = iterate_to_fixpoint(
        lambda pr: stable_revision(cfg, program, pr, max_iter),
        bottom_pair(program),
        max_iter,
    )
    if not result.converged:
        raise NonConvergenceError(max_iter)
    return result


def is_stable_model(
    cfg: LatticeConfig,
    program: Program,
    interp: ParaInterp,
    max_iter: int = DEFAULT_MAX_ITER,
) -> bool:
    """True iff the interpretation is the least fixpoint of the approximator's
    first component with the upper argument frozen at the interpretation
    itself, i.e. iff its exact pair is a fixpoint of stable revision."""
    bottom = ParaInterp.bottom(program.atoms)
    lfp = least_fixpoint(
        lambda z: approximator_first(cfg, program, z, interp), bottom, max_iter
    )
    return lfp == interp


def default_grid(cfg: LatticeConfig, program: Program) -> tuple[Fraction, ...]:
    """Candidate component values for enumeration: the whole carrier on finite
    lattices; over the rationals, the constants of the program closed once
    under each negator, plus 0 and 1 (a documented heuristic, since no finite
    grid is complete for continuous connectives)."""
    carrier = cfg.carrier()
    if carrier is not None:
        return carrier
    values = {ZERO, ONE}
    for r in program.rules:
        values |= formula_constants(r.body)
        if r.weight is not None:
            values.add(r.weight)
    for base in list(values):
        values.add(cfg.strong_negation(base))
        values.add(cfg.weak_negation(base))
    return tuple(sorted(values))


def _candidates(
    atoms: Sequence[str], grid: Sequence[Fraction], cap: int
) -> Iterable[ParaInterp]:
    pairs = [(t, f) for t in grid for f in grid]
    total = len(pairs) ** len(atoms)
    if total > cap:
        raise SearchSpaceError(
            f"{total} candidate interpretations exceed the cap of {cap}; "
            "narrow the grid or raise the cap"
        )
    for combo in itertools.product(pairs, repeat=len(atoms)):
        yield ParaInterp(dict(zip(atoms, combo)))


def enumerate_stable_models(
    cfg: LatticeConfig,
    program: Program,
    grid: Sequence[Fraction] | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
    cap: int = 1_000_000,
) -> list[ParaInterp]:
    """All stable models with component values drawn from the grid, in
    canonical order. Complete for boolean/chain lattices with the full
    carrier as grid; over the rationals the default grid is a heuristic and
    the enumeration is inherently incomplete.

    Every stable model is a fixpoint of the consequence operator, so
    candidates failing that cheap test are skipped before the inner
    least-fixpoint check.
    """
    if grid is None:
        grid = default_grid(cfg, program)
    atoms = sorted(program.atoms)
    found = []
    for cand in _candidates(atoms, grid, cap):
        if immediate_consequence(cfg, program, cand) != cand:
            continue
        if is_stable_model(cfg, program, cand, max_iter):
            found.append(cand)
    found.sort(key=canonical_key)
    return found


def grid_is_complete(cfg: LatticeConfig, grid: Sequence[Fraction] | None) -> bool:
    carrier = cfg.carrier()
    if carrier is None:
        return False
    return grid is None or set(grid) >= set(carrier)


def minimal_fixpoints(
    cfg: LatticeConfig,
    program: Program,
    grid: Sequence[Fraction] | None = None,
    cap: int = 1_000_000,
) -> list[ParaInterp]:
    """Fixpoints of the consequence operator on the grid that are minimal in
    the truth ordering among the fixpoints found."""
    if grid is None:
        grid = default_grid(cfg, program)
    atoms = sorted(program.atoms)
    fixpoints = [
        cand
        for cand in _candidates(atoms, grid, cap)
        if immediate_consequence(cfg, program, cand) == cand
    ]
    minimal = [
        i
        for i in fixpoints
        if not any(j != i and truth_leq(j, i) for j in fixpoints)
    ]
    minimal.sort(key=canonical_key)
    return minimal
