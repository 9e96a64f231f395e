"""Frame starters in finite abelian groups: construction, search, verification."""

from .groups import (
    DirectProduct,
    Element,
    Group,
    QuotientView,
    Subgroup,
    SubgroupEmbedding,
    abelian_basis,
    classify_abelian,
    direct_product,
    make_group,
    parse_element,
    parse_generator_list,
    parse_group,
    quotient,
    subgroup_as_group,
    subgroup_closure,
    sylow_cyclic_nontrivial,
)

__version__ = "0.1.0"
