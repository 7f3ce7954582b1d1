"""Diameter-2 Cayley graphs on abelian groups from generalized difference sets."""

from .algebra import (FiniteField, FiniteGroup, Subgroup, additive_group, cyclic_group,
                      direct_product, field_make, group_from_descriptor, twisted_group,
                      unit_group)
from .bounds import ac_upper, df_upper, moore
from .constructions import (best_for_degree, build_construction1, build_construction2,
                            build_example31, pad_to_degree)
from .covering import CoveringConfig, check_cover, search_cover, tau_bound, tau_exhaustive
from .diffsets import (GdsDescriptor, GdsParams, check_type_equation, dpds, lemma34_identity,
                       neofield_gds, odd_planar_rds, trivial_planar_rds, verify_gds)
from .graph import (CayleyCertificate, all_pairs_diameter, certify, certify_spec,
                    diameter_bfs, diameter_groupring)

__version__ = "0.1.0"
