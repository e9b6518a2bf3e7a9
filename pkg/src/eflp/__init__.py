"""Fixpoint semantics for extended fuzzy logic programs.

The core pipeline: parse a program (``parser.parse``), desugar rule weights,
and compute Kripke-Kleene / well-founded / stable semantics (``fixpoint``)
through the pair approximator of the consequence operator (``semantics``).
Oracle semantics (``oracles``), dialect translations (``translate``), and
equivalence checks (``theorems``) support verification; ``api``/``cli`` wrap
everything as a service and a thin command-line client.
"""

from .lattice import (
    ONE,
    ZERO,
    AdjointReport,
    Connective,
    LatticeConfig,
    LatticeError,
    TruthValue,
    UnknownConnectiveError,
    check_adjoint,
    make_config,
)
from .program import (
    App,
    Const,
    CornejoConstraint,
    CornejoProgram,
    CornejoRule,
    Diagnostic,
    Formula,
    Literal,
    Program,
    Rule,
    SaadBodyLiteral,
    SaadProgram,
    SaadRule,
    WeakNeg,
    desugar_weights,
    pretty_program,
    validate,
)
from .parser import ParseError, ParseResult, parse
from .interpretation import (
    InterpPair,
    ParaInterp,
    SakamaPair,
    evaluate,
    evaluate_pair,
    from_literal_set,
    interp_from_json,
    interp_to_json,
    is_consistent,
    precision_leq,
    to_literal_set,
    to_sakama_pair,
    truth_leq,
)
from .semantics import (
    approximator,
    immediate_consequence,
    is_model,
    normal_approximator,
)
from .fixpoint import (
    FixpointResult,
    NonConvergenceError,
    enumerate_stable_models,
    is_stable_model,
    iterate_to_fixpoint,
    kripke_kleene,
    minimal_fixpoints,
    stable_revision,
    well_founded,
)
from .translate import (
    TranslationError,
    lift_cornejo,
    lift_saad,
    translate_cornejo,
    translate_saad,
)

__version__ = "0.1.0"
