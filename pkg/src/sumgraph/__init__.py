"""Perfect codes in subgroup sum graphs of finite groups.

Given a finite group G and a normal subgroup H, the subgroup sum graph
joins distinct x, y whenever x·y lands in H minus the identity (the
extended variant allows x·y = e as well).  This package builds those
graphs, decides when they admit perfect and total perfect codes, verifies
every decision against brute-force search, and classifies the groups whose
every normal subgroup yields a perfect code.
"""

from .codes import (
    Code,
    CrossCheckEntry,
    CrossCheckReport,
    Verdict,
    construct_perfect_code,
    cross_check,
    decide_code,
    decide_perfect_code,
    decide_perfect_code_extended,
    decide_total_perfect_code,
    decide_total_perfect_code_extended,
    find_perfect_code_bruteforce,
    find_total_perfect_code_bruteforce,
    is_perfect_code,
    is_total_perfect_code,
    verdict_to_json,
)
from .errors import (
    BadParameterError,
    InternalInconsistencyError,
    NoIdentityError,
    NoInverseError,
    NotAbelianError,
    NotASubgroupError,
    NotAssociativeError,
    NotDedekindError,
    NotLatinSquareError,
    NotNormalError,
    ParseError,
    PreconditionViolatedError,
    SumGraphError,
)
from .exprs import (
    CyclicExpr,
    DicyclicExpr,
    DihedralExpr,
    ElementaryAbelianExpr,
    GroupExpr,
    ProductExpr,
    QuaternionExpr,
    build_group,
    format_group_expr,
    parse_group_expr,
)
from .families import (
    abelian_2group_perfect_code,
    abelian_total_perfect_code,
    coordinate_product_form,
    cyclic_perfect_code,
    dicyclic_perfect_code,
    dihedral_perfect_code,
    is_code_perfect,
    order_three_coset_scan,
)
from .graphs import (
    BlockRecord,
    StructureReport,
    SumGraph,
    build_graph,
    components,
    graph_to_json,
    to_dot,
    verify_structure,
)
from .groups import (
    AbelianType,
    Coset,
    Group,
    Subgroup,
    Tag,
    abelian,
    abelian_isomorphism_types,
    abelian_type,
    all_subgroups,
    conjugacy_classes,
    coset_has_involution,
    coset_square_membership,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    element_order,
    elementary_abelian_2,
    group_from_cayley_table,
    group_from_json,
    involutions,
    is_abelian,
    is_dedekind,
    max_supported_order,
    normal_subgroups,
    quaternion,
    right_cosets,
    right_transversal,
    squares,
    subgroup,
    subgroup_as_group,
    subgroup_generated,
    trivial_subgroup,
    whole_group,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # groups
    "Group",
    "Subgroup",
    "Coset",
    "Tag",
    "AbelianType",
    "group_from_cayley_table",
    "group_from_json",
    "cyclic",
    "dihedral",
    "dicyclic",
    "quaternion",
    "direct_product",
    "abelian",
    "elementary_abelian_2",
    "element_order",
    "involutions",
    "squares",
    "is_abelian",
    "conjugacy_classes",
    "subgroup",
    "subgroup_generated",
    "trivial_subgroup",
    "whole_group",
    "normal_subgroups",
    "all_subgroups",
    "right_cosets",
    "right_transversal",
    "coset_square_membership",
    "coset_has_involution",
    "abelian_type",
    "abelian_isomorphism_types",
    "is_dedekind",
    "subgroup_as_group",
    "max_supported_order",
    # graphs
    "SumGraph",
    "BlockRecord",
    "StructureReport",
    "build_graph",
    "components",
    "verify_structure",
    "graph_to_json",
    "to_dot",
    # codes
    "Code",
    "Verdict",
    "CrossCheckEntry",
    "CrossCheckReport",
    "is_perfect_code",
    "is_total_perfect_code",
    "find_perfect_code_bruteforce",
    "find_total_perfect_code_bruteforce",
    "decide_perfect_code",
    "decide_total_perfect_code",
    "decide_perfect_code_extended",
    "decide_total_perfect_code_extended",
    "decide_code",
    "construct_perfect_code",
    "verdict_to_json",
    "cross_check",
    # families / classifiers
    "cyclic_perfect_code",
    "abelian_2group_perfect_code",
    "coordinate_product_form",
    "dihedral_perfect_code",
    "dicyclic_perfect_code",
    "abelian_total_perfect_code",
    "order_three_coset_scan",
    "is_code_perfect",
    # expressions
    "GroupExpr",
    "CyclicExpr",
    "DihedralExpr",
    "DicyclicExpr",
    "QuaternionExpr",
    "ElementaryAbelianExpr",
    "ProductExpr",
    "parse_group_expr",
    "format_group_expr",
    "build_group",
    # errors
    "SumGraphError",
    "BadParameterError",
    "NotLatinSquareError",
    "NoIdentityError",
    "NoInverseError",
    "NotAssociativeError",
    "NotASubgroupError",
    "NotNormalError",
    "NotAbelianError",
    "NotDedekindError",
    "PreconditionViolatedError",
    "InternalInconsistencyError",
    "ParseError",
]
