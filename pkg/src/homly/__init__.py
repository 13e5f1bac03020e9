"""Exact verification of Hom-Leibniz and Hom-Lie-Yamaguti structures."""
__version__ = "0.1.0"

from .coeff import GaussRational, Scalar, scalar_add, scalar_eq, scalar_mul, scalar_subst
from .core import (
    AlgebraSpec,
    BinaryTensor,
    HomLYSpec,
    LinearMap,
    TernaryTensor,
    Vector,
    apply_map,
    compose,
    hom_associator,
    hom_jacobian,
    left_translation,
    product,
    skew_symmetrize,
    ternary,
)
from .errors import (
    ConfigurationError,
    DimensionError,
    HomlyError,
    ParseError,
    PreconditionError,
    SubstitutionError,
    UnknownAlgebraError,
)
from .identities import (
    AxiomSuiteReport,
    CheckReport,
    Counterexample,
    check_anticommutative,
    check_cyclic_bracket_form,
    check_hom_akivis,
    check_hom_lie,
    check_hom_ly,
    check_identity_3_1,
    check_identity_3_2,
    check_left_hom_leibniz,
    check_ly,
    check_multiplicative,
    check_right_hom_leibniz,
    check_symmetric_annihilation,
    check_translation_derivation,
)
from .constructions import (
    hom_akivis_from_algebra,
    hom_ly_from_hom_leibniz,
    hom_ly_from_hom_lie,
    natural_hom_ly,
    ternary_eq_3_5,
    ternary_eq_3_6,
    ternary_eq_3_7,
    ternary_from_associators,
    ternary_from_bracket,
    ternary_from_product,
    yau_twist,
)
from .io import (
    builtin,
    builtin_names,
    emit_algebra_file,
    emit_file,
    emit_hom_ly_file,
    emit_report,
    parse_algebra_file,
    parse_file,
    parse_hom_ly_file,
)
