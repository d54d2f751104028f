"""Finite-group certification toolkit.

Validates concretely-presented finite groups against target specs
(order, ambivalence, class-size list, index-2 subgroup), constructs the
canonical isomorphism onto the reference group for passing inputs, and
checks uniqueness extensionally over catalogs of same-order groups.
"""

from .canonical import (MarkingSet, ReplayReport, build_marking_set,
                        canonical_isomorphism, conjugation_action,
                        expected_group, proof_replay)
from .catalog import (CatalogEntry, UniquenessReport, build_catalog, standard,
                      verify_uniqueness)
from .core import (FiniteGroup, SubgroupRef, direct_product, element_order,
                   from_generators, from_table, semidirect_product)
from .groupspec import (Certificate, RefinementVerdict, SpecialSpec,
                        builtin_spec, certify, check_refinement, product_spec)
from .perm import Permutation
from .structure import (ClassProfile, ConjugacyClass, Isomorphism,
                        are_isomorphic, centralizer, conjugacy_classes,
                        derived_subgroup, index2_subgroups, is_ambivalent)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CatalogEntry",
    "ClassProfile",
    "ConjugacyClass",
    "FiniteGroup",
    "Isomorphism",
    "MarkingSet",
    "Permutation",
    "RefinementVerdict",
    "ReplayReport",
    "SpecialSpec",
    "SubgroupRef",
    "UniquenessReport",
    "are_isomorphic",
    "build_catalog",
    "build_marking_set",
    "builtin_spec",
    "canonical_isomorphism",
    "centralizer",
    "certify",
    "check_refinement",
    "conjugacy_classes",
    "conjugation_action",
    "derived_subgroup",
    "direct_product",
    "element_order",
    "expected_group",
    "from_generators",
    "from_table",
    "index2_subgroups",
    "is_ambivalent",
    "product_spec",
    "proof_replay",
    "semidirect_product",
    "standard",
    "verify_uniqueness",
]
