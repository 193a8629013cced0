"""smalg: a finite-model workbench for state-morphism algebras."""

from .core import (
    App,
    CapExceeded,
    EvalError,
    FiniteAlgebra,
    Identity,
    Morphism,
    NotCompatible,
    Signature,
    SignatureMismatch,
    Term,
    Var,
    WorkbenchError,
    app,
    direct_product,
    enumerate_morphisms,
    eval_term,
    find_isomorphism,
    holds_identity,
    induced_subalgebra,
    make_algebra,
    quotient,
    signature,
    subuniverse_generated,
    var,
)
from .congruence import (
    Congruence,
    MalcevStep,
    MalcevWitness,
    cep_extension,
    congruence_lattice,
    generated_congruence,
    is_congruence,
    is_subdirectly_irreducible,
    malcev_witness,
    monolith,
    principal_congruence,
)
from .state_morphism import (
    StateMorphismAlgebra,
    SubdiagonalCertificate,
    con_sma,
    diagonal,
    idempotent_endomorphisms,
    lift_congruence,
    si_transfer_check,
    subdiagonal_embedding,
    theta_tau,
    verify_state_morphism,
)
from .residuated import (
    BL_SIGNATURE,
    HOOP_SIGNATURE,
    Filter,
    ResiduatedView,
    TrichotomyResult,
    build_example,
    check_axioms,
    check_state_operator,
    classify_trichotomy,
    disjunction_property,
    filters,
    si_state_bl_report,
    structure_probes,
)
from .tnorm import (
    ChainSpec,
    GroupoidTable,
    goedel_spec,
    grid_closure_check,
    lukasiewicz_spec,
    make_chain,
    ordinal_sum_spec,
    residuum_from_table,
    validate_nat_norm,
)
from .fileformat import (
    AlgebraDocument,
    ParseError,
    parse_algebra_file,
    parse_algebra_text,
    render_algebra,
)

__version__ = "0.1.0"
