"""Base sizes, minimum bases and Saxl hypergraphs of finite permutation groups."""

from .analysis import (
    ConjectureVerdict,
    SaxlInstance,
    build_saxl,
    check_cnc,
    check_edge_disjoint_cnc,
    disjointify_edges,
    flag_tour_verdict,
    gossip_profile,
    is_kn_complete,
    prime_valency_scan,
    rays_semiregular_check,
    valency_check,
)
from .bases import BaseSearchConfig, BaseSet, base_size, extend_to_minimal_base, is_adjacent, is_base, minimal_bases
from .constructions import (
    affine_deleted_module,
    agl1_subgroup,
    catalog_lookup,
    coset_action,
    natural_group,
    projective_group,
    wreath_product_action,
)
from .field import Field, FieldElement, ProjectiveLine, field_arith, field_make, primitive_element
from .group import PermGroup, group_from_generators
from .hypergraph import Hypergraph, Ray, SArc, enumerate_s_arcs, gossip_number, has_flag_spanning_tour, rays
from .perm import Permutation
from .report import build_group, parse_spec, run_report, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
