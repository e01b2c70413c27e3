"""Exact delta-invariant computations for degree-1 Du Val del Pezzo
surface configurations: parametric Zariski decompositions over Q, Fujita
expected orders, localized point bounds, blowup bookkeeping, a frozen
regression catalog and randomized cross-checking oracles."""
from __future__ import annotations

from .applications import (
    MAIN_THEOREM_ROWS,
    SingularityEntry,
    base_delta,
    kstability_verdict,
    main_theorem_delta,
    multiplier_family_1_11,
    multiplier_family_2_1,
    parse_singularities,
    smooth_delta,
    threefold_delta_bound,
    verify_main_theorem_table,
)
from .blowup import BlowupResult, blowup
from .catalog import (
    CaseRecord,
    CaseReport,
    case_names,
    case_reports,
    catalog_root,
    certified_delta,
    load_case,
    verify_all,
    verify_case,
)
from .config import (
    CurveRecord,
    DivisorClass,
    PointSpec,
    SurfaceConfig,
    config_from_json,
    config_to_json,
    load,
    save,
)
from .delta import (
    FlagReport,
    PointRow,
    certify_minimum,
    flag_report,
    local_h,
    s_flag,
    s_w_point,
)
from .errors import (
    Ambiguous,
    DimensionMismatch,
    DpDeltaError,
    InconsistentIncidence,
    IrrationalRoot,
    MissingFlag,
    NoSolution,
    NotCertified,
    NotPseudoEffective,
    NotSmooth,
    OutOfDomain,
    SchemaError,
)
from .oracle import (
    EquivalenceReport,
    QuadratureReport,
    brute_force_negative_part,
    negative_definite_subsets,
    quadrature_check,
    random_equivalence,
    sample_parameters,
    subset_table,
)
from .poly import PiecewisePoly, Poly
from .rationals import format_rational, parse_rational
from .zariski import (
    Chamber,
    Decomposition,
    NegativePart,
    decomposition_from_json,
    decomposition_to_json,
    negative_part_at,
    parametric_decompose,
    same_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "MAIN_THEOREM_ROWS",
    "SingularityEntry",
    "base_delta",
    "kstability_verdict",
    "main_theorem_delta",
    "multiplier_family_1_11",
    "multiplier_family_2_1",
    "parse_singularities",
    "smooth_delta",
    "threefold_delta_bound",
    "verify_main_theorem_table",
    "BlowupResult",
    "blowup",
    "CaseRecord",
    "CaseReport",
    "case_names",
    "case_reports",
    "catalog_root",
    "certified_delta",
    "load_case",
    "verify_all",
    "verify_case",
    "CurveRecord",
    "DivisorClass",
    "PointSpec",
    "SurfaceConfig",
    "config_from_json",
    "config_to_json",
    "load",
    "save",
    "FlagReport",
    "PointRow",
    "certify_minimum",
    "flag_report",
    "local_h",
    "s_flag",
    "s_w_point",
    "Ambiguous",
    "DimensionMismatch",
    "DpDeltaError",
    "InconsistentIncidence",
    "IrrationalRoot",
    "MissingFlag",
    "NoSolution",
    "NotCertified",
    "NotPseudoEffective",
    "NotSmooth",
    "OutOfDomain",
    "SchemaError",
    "EquivalenceReport",
    "QuadratureReport",
    "brute_force_negative_part",
    "negative_definite_subsets",
    "quadrature_check",
    "random_equivalence",
    "sample_parameters",
    "subset_table",
    "PiecewisePoly",
    "Poly",
    "format_rational",
    "parse_rational",
    "Chamber",
    "Decomposition",
    "NegativePart",
    "decomposition_from_json",
    "decomposition_to_json",
    "negative_part_at",
    "parametric_decompose",
    "same_decomposition",
    "__version__",
]
