from .errors import InputError, PreconditionError, ResourceError, StructuralError, SymquadError
from .algebra import (
    TermAccumulator,
    add_quadforms,
    canonicalize,
    eval_poly,
    eval_quadform,
    eval_symmetric,
    interpolate_multilinear,
    interpolate_symmetric,
    truth_table,
)
from .representation import (
    alphas_half,
    closed_form_alphas,
    eval_rep,
    fix_representation,
    solve_representation,
)
from .identities import add_scaled_identity, derive_identity, eval_identity, make_identity
from .verify import (
    is_x_symmetric,
    is_y_linear,
    minimize_over_y,
    parity_3cube_degree_oracle,
    verify_quadratization,
)
from .families import (
    FUNCTION_FAMILIES,
    build_spec,
    dedicated_family,
    family_names,
    implied_threshold,
    resolve_spec,
    target_spec,
)
from .quadratize import (
    from_nonneg_rep,
    quadratize_exact_t,
    quadratize_family,
    quadratize_neg_monomial_asymmetric,
    quadratize_neg_monomial_half,
    quadratize_neg_monomial_standard,
    quadratize_parity,
    quadratize_parity_complement,
    quadratize_pos_monomial,
    quadratize_pos_monomial_split,
    quadratize_symmetric_fix,
    quadratize_symmetric_general,
    quadratize_t_out_of_n,
)
from .lift import embed, eval_lifted, lift_function, lift_roundtrip, project_quadratization
from .report import ReportBuilder, render_table

__all__ = [
    "SymquadError",
    "InputError",
    "StructuralError",
    "PreconditionError",
    "ResourceError",
    "TermAccumulator",
    "add_quadforms",
    "canonicalize",
    "eval_poly",
    "eval_quadform",
    "eval_symmetric",
    "interpolate_multilinear",
    "interpolate_symmetric",
    "truth_table",
    "alphas_half",
    "closed_form_alphas",
    "eval_rep",
    "fix_representation",
    "solve_representation",
    "add_scaled_identity",
    "derive_identity",
    "eval_identity",
    "make_identity",
    "is_x_symmetric",
    "is_y_linear",
    "minimize_over_y",
    "parity_3cube_degree_oracle",
    "verify_quadratization",
    "FUNCTION_FAMILIES",
    "build_spec",
    "target_spec",
    "dedicated_family",
    "family_names",
    "implied_threshold",
    "resolve_spec",
    "from_nonneg_rep",
    "quadratize_exact_t",
    "quadratize_family",
    "quadratize_neg_monomial_asymmetric",
    "quadratize_neg_monomial_half",
    "quadratize_neg_monomial_standard",
    "quadratize_parity",
    "quadratize_parity_complement",
    "quadratize_pos_monomial",
    "quadratize_pos_monomial_split",
    "quadratize_symmetric_fix",
    "quadratize_symmetric_general",
    "quadratize_t_out_of_n",
    "embed",
    "eval_lifted",
    "lift_function",
    "lift_roundtrip",
    "project_quadratization",
    "ReportBuilder",
    "render_table",
]
