"""Exact combinatorics of normal coherent sheaves on the monoid projective
line: chart monoids, finite pointed modules, sheaf classification, the Hall
algebra, and its loop-algebra description."""

from .monoids import (
    F1Monoid,
    MonoidElement,
    ONE,
    T_LAURENT,
    T_NEG,
    T_POS,
    ZERO,
    localize,
    mul,
    prime_ideals,
    t_power,
)
from .modules import (
    BASEPOINT,
    FinModule,
    ModuleClass,
    NotNormalError,
    check_normal,
    classify,
    direct_sum,
    format_module,
    localize_module,
    parse_module,
    quotient,
    realize,
    smash_product,
    submodules,
    torsion_submodule,
)
from .sheaves import (
    GluingData,
    Indecomposable,
    K0Class,
    P0,
    PINF,
    SheafClass,
    ZERO_SHEAF,
    cyclic,
    elementary_pairs,
    extensions,
    format_sheaf,
    glue,
    hall_number,
    hom_count,
    k0_class,
    line_bundle,
    line_subsheaves,
    parse_sheaf,
    sheaf,
    torsion0,
    torsion_at,
    torsion_inf,
)
from .hall import (
    DegreeMarker,
    HALL_UNIT,
    HallElement,
    HallTensor,
    bracket,
    coproduct,
    degree,
    delta,
    format_hall,
    is_primitive,
    parse_hall,
    star,
    tensor,
)
from .lie import (
    LieBasisVector,
    LieElement,
    RhoMode,
    e,
    h1,
    h2,
    kappa,
    lie_bracket,
    rho,
    sl2_subalgebra_check,
    verify_rho,
)

__version__ = "0.1.0"
