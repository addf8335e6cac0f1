"""Exact-arithmetic kernel for stuffle products and their split operations.

The package works over the tensor module on a pool of letters whose product
is supplied by a small pluggable coefficient algebra. Everything is computed
with ``fractions.Fraction``; there are no floats and no tolerances anywhere.
"""

from .coeff import (
    CoeffAlgebraSpec,
    CoeffCombination,
    DomainError,
    Letter,
    LetterDomainError,
    MissingInvolutionError,
    algebra_by_name,
    atom_letter,
    builtin_algebras,
    involute_letter,
    mono_letter,
    multiply_letters,
    stuffle_y_algebra,
    sym_algebra,
    weight_letter,
    word_algebra,
    word_letter,
    zero_algebra,
)
from .lincomb import LinearCombination, as_scalar
from .tensorq import (
    EMPTY_WORD,
    OPERATIONS,
    LatticePath,
    TensorElement,
    TensorSquareElement,
    UnitPairingError,
    Word,
    coradical_degree,
    deconcatenate,
    enumerate_lattice_paths,
    involute_element,
    is_primitive,
    op_dot,
    op_left,
    op_right,
    project_to_letters,
    quasi_shuffle,
    quasi_shuffle_paths,
    reduced_coproduct,
    square_star,
    word_degree,
)
from .freectd import (
    FreeTerm,
    NormalForm,
    OUPartition,
    SignatureError,
    comb_term,
    dot,
    egf_check,
    enumerate_ou_partitions,
    eval_ctd,
    eval_itd,
    eval_phi,
    fubini,
    fubini_egf_series,
    gen,
    generating_series_check,
    involute_term,
    itd_dimension,
    multilinear_terms,
    normal_form,
    ordered_ordered_partitions,
    ordered_unordered_partitions,
    prec,
    rewrite_to_normal_form,
    succ,
    uctd_dot,
    uctd_identifies_letter_products,
    uctd_left,
    uctd_product,
    uctd_star,
)
from .bialg import (
    CompatReport,
    CompatViolation,
    TensorSquareCtdElement,
    check_compat,
    check_compatibility,
    delta_free_ctd,
    free_ctd_coproduct,
    generator_inclusion,
    generator_projection,
    graded_basis_words,
    phi_coalgebra,
    primitives_closed_under_dot,
    reduced_coproduct_kernel,
    splitting_identity_holds,
    square_dot,
    square_dot_pairs,
    square_left,
    square_left_pairs,
)
from .rota import (
    DerivedStructure,
    FiniteAlgebra,
    LinearOperator,
    RotaBaxterError,
    check_star_morphism,
    derived_structure,
    example_by_name,
    identity_operator,
    pointwise_function_algebra,
    rota_baxter_defect,
    star_product,
    summation_operator,
    verify_rota_baxter,
    zero_operator,
)
from .grammar import (
    ParseError,
    element_from_json,
    element_to_json,
    normal_form_to_json,
    parse_element,
    parse_free_term,
    parse_letter,
    parse_word,
    render_element,
    render_normal_form,
    render_partition,
    render_square_element,
    render_word,
    square_to_json,
)
from .laws import LawReport, LawViolation, run_suite
from .sampling import (
    random_ctd_term,
    random_element,
    random_letter,
    random_td_term,
    random_word,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
