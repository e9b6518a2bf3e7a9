"""Request/response models and handlers shared by the HTTP API and the CLI.

Handlers are pure: they parse program text, run the requested computation, and
build a response model. All rationals travel as "num/den" strings and every
collection is sorted, so serialized responses are byte-stable.
"""

from __future__ import annotations

from typing import Literal as TypingLiteral

from pydantic import BaseModel, Field

from .lattice import LatticeConfig, LatticeError
from .program import (
    CornejoProgram,
    DesugarError,
    Program,
    SaadProgram,
    desugar_weights,
    pretty_program,
    validate,
)
from .parser import ParseError, parse
from .interpretation import (
    interp_from_json,
    interp_to_json,
    is_consistent,
    is_exact,
    parse_fraction,
    fraction_str,
)
from .semantics import is_model
from .fixpoint import (
    DEFAULT_MAX_ITER,
    NonConvergenceError,
    SearchSpaceError,
    enumerate_stable_models,
    grid_is_complete,
    is_stable_model,
    kripke_kleene,
    well_founded,
)
from .oracles import OracleError
from .translate import TranslationError, translate_cornejo, translate_saad
from .theorems import run_theorem

Dialect = TypingLiteral["core", "saad", "cornejo"]
Semantics = TypingLiteral["kk", "wf", "stable", "model-check"]

InterpJson = dict[str, list[str]]


class InputError(ValueError):
    """Anything wrong with the request contents (exit code 2 at the CLI)."""


class SolveRequest(BaseModel):
    text: str
    dialect: Dialect = "core"
    semantics: Semantics = "wf"
    interpretation: InterpJson | None = None  # required for model-check
    max_iter: int | None = Field(default=None, ge=1)
    grid: list[str] | None = None


class SolveResponse(BaseModel):
    semantics: str
    dialect: str
    lattice: str
    atoms: list[str]
    iterations: int | None = None
    lower: InterpJson | None = None
    upper: InterpJson | None = None
    exact: bool | None = None
    consistent: bool | None = None
    models: list[InterpJson] | None = None
    count: int | None = None
    grid: list[str] | None = None
    grid_complete: bool | None = None
    is_model: bool | None = None
    is_stable: bool | None = None


class TranslateRequest(BaseModel):
    text: str
    dialect: TypingLiteral["saad", "cornejo"]


class TranslateResponse(BaseModel):
    core_text: str


class OracleCompareRequest(BaseModel):
    theorem: TypingLiteral["5.1", "5.2", "6.1", "6.2", "7"]
    text: str | None = None
    random_count: int | None = Field(default=None, ge=1)
    seed: int = 7


class OracleCompareResponse(BaseModel):
    theorem: str
    cases: int
    agreements: int
    divergences: int
    first_divergence: dict | None = None


def _load_core(text: str, dialect: Dialect) -> tuple[LatticeConfig, Program, str]:
    """Parse in the requested dialect and bring the program into validated,
    weight-free core form (foreign dialects are translated)."""
    try:
        result = parse(text, dialect)
    except ParseError as exc:
        raise InputError(str(exc)) from None
    cfg = result.config
    try:
        if isinstance(result.program, SaadProgram):
            program = translate_saad(cfg, result.program)
        elif isinstance(result.program, CornejoProgram):
            program = translate_cornejo(cfg, result.program)
        else:
            program = desugar_weights(cfg, result.program)
    except (TranslationError, DesugarError, LatticeError) as exc:
        raise InputError(str(exc)) from None
    diags = validate(cfg, program, allow_reserved=True)
    if diags:
        raise InputError("; ".join(str(d) for d in diags))
    return cfg, program, result.dialect


def solve(request: SolveRequest) -> SolveResponse:
    cfg, program, dialect = _load_core(request.text, request.dialect)
    max_iter = request.max_iter or DEFAULT_MAX_ITER
    base = dict(
        semantics=request.semantics,
        dialect=dialect,
        lattice=cfg.describe(),
        atoms=sorted(program.atoms),
    )

    if request.semantics in ("kk", "wf"):
        run = kripke_kleene if request.semantics == "kk" else well_founded
        result = run(cfg, program, max_iter)
        pair = result.value
        exact = is_exact(pair)
        return SolveResponse(
            **base,
            iterations=result.iterations,
            lower=interp_to_json(pair.lower),
            upper=interp_to_json(pair.upper),
            exact=exact,
            consistent=is_consistent(cfg, pair.lower) if exact else None,
        )

    if request.semantics == "stable":
        grid = None
        if request.grid is not None:
            try:
                grid = sorted({parse_fraction(s) for s in request.grid})
            except LatticeError as exc:
                raise InputError(str(exc)) from None
        try:
            models = enumerate_stable_models(cfg, program, grid, max_iter)
        except SearchSpaceError as exc:
            raise InputError(str(exc)) from None
        from .fixpoint import default_grid

        used = grid if grid is not None else list(default_grid(cfg, program))
        return SolveResponse(
            **base,
            models=[interp_to_json(m) for m in models],
            count=len(models),
            grid=[fraction_str(v) for v in sorted(used)],
            grid_complete=grid_is_complete(cfg, grid),
        )

    # model-check
    if request.interpretation is None:
        raise InputError("model-check needs an interpretation")
    try:
        interp = interp_from_json(request.interpretation)
    except LatticeError as exc:
        raise InputError(str(exc)) from None
    if interp.atoms != program.atoms:
        raise InputError(
            "interpretation atoms "
            f"{sorted(interp.atoms)} do not match program atoms "
            f"{sorted(program.atoms)}"
        )
    for a, (t, f) in interp.items():
        if not (cfg.contains(t) and cfg.contains(f)):
            raise InputError(f"value for {a!r} outside the {cfg.describe()} lattice")
    return SolveResponse(
        **base,
        is_model=is_model(cfg, program, interp),
        is_stable=is_stable_model(cfg, program, interp, max_iter),
        consistent=is_consistent(cfg, interp),
    )


def translate(request: TranslateRequest) -> TranslateResponse:
    try:
        result = parse(request.text, request.dialect)
    except ParseError as exc:
        raise InputError(str(exc)) from None
    cfg = result.config
    try:
        if isinstance(result.program, SaadProgram):
            program = translate_saad(cfg, result.program)
        else:
            program = translate_cornejo(cfg, result.program)
    except (TranslationError, LatticeError) as exc:
        raise InputError(str(exc)) from None
    return TranslateResponse(core_text=pretty_program(cfg, program))


def oracle_compare(request: OracleCompareRequest) -> OracleCompareResponse:
    programs = None
    if request.text is not None:
        programs = [_single_program(request.theorem, request.text)]
    elif request.random_count is None:
        raise InputError("provide program text or a random corpus size")
    try:
        report = run_theorem(
            request.theorem,
            count=request.random_count,
            seed=request.seed,
            programs=programs,
        )
    except (OracleError, SearchSpaceError, NonConvergenceError) as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:  # e.g. a file outside the theorem's program class
        raise InputError(str(exc)) from None
    return OracleCompareResponse(**report.to_json())


def _single_program(theorem: str, text: str):
    dialect = {"6.1": "saad", "6.2": "cornejo"}.get(theorem, "core")
    try:
        result = parse(text, dialect)
    except ParseError as exc:
        raise InputError(str(exc)) from None
    if theorem == "6.1":
        return result.program
    if theorem == "6.2":
        return (result.config, result.program)
    try:
        program = desugar_weights(result.config, result.program)
    except DesugarError as exc:
        raise InputError(str(exc)) from None
    return (result.config, program)
