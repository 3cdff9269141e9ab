"""Exact polynomial functions on Young diagrams: shape functionals, bipartite
graph embeddings, graph derivations and map-sum character formulas."""

from .bigraphs import (BipartiteGraph, DecoratedGraph, FormalSum, GraphError,
                       ResourceBoundError, canonicalize, conjecture_scan, criterion_check,
                       del_x, del_y, del_z)
from .decomposition import (decomposition_identity_check, fit_s_basis, interpolate_in_z)
from .diagrams import (DiagramError, Partition, Profile, anisotropic_scale, dilate,
                       profile_of_partition, triangle_profile)
from .embeddings import (count_embeddings, count_embeddings_sum, decorated_value,
                         embedding_volume, mc_volume)
from .functionals import (SPolynomial, ZPolynomial, content_derivative, evaluate_s_polynomial,
                          s_k_partition, s_k_profile)
from .maps import (character_maps, enumerate_gluings, mn_character, normalized_sigma,
                   orientability)

__version__ = "0.1.0"
