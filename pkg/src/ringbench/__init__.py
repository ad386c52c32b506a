"""Finite commutative ring workbench.

Build rings from declarative specs, enumerate their ideal lattices, construct
annihilating-ideal and zero-divisor graphs, compute exact graph invariants,
and verify a battery of theorems over a corpus of finite rings.
"""

from .errors import AxiomViolationError, InvalidSpecError, ResourceLimitError, RingBenchError
from .rings import (FiniteRing, PolyQuotientSpec, ProductSpec, RingSpec, StructureSpec,
                    ZmodSpec, build_poly_quotient, build_product, build_ring,
                    build_structure_ring, build_zmod, load_ring_spec, parse_ring_spec,
                    ring_spec_to_dict, spec_name, validate_ring_axioms)
from .ideals import (Ideal, IdealLattice, ZeroDivisorSet, ZrProfile, annihilator,
                     enumerate_ideals, ideal_from_generators, ideal_product, ideal_sum,
                     is_reduced, minimal_generators, nilradical, principal_ideal,
                     zero_divisor_set, zr_condition_profile)
from .graphs import (SimpleGraph, build_ag, build_zd, export_dot, export_json,
                     graph_from_edges, make_family, parse_graph_json)
from .invariants import (INFINITE, InvariantReport, Shape, all_pairs_distances,
                         chromatic_number, classify_shape, clique_number, compute_report,
                         diameter, girth, is_bipartite, is_connected, max_clique,
                         maximal_cliques, smarandache_vertices)
from .theorems import (HOLDS, VACUOUS, VIOLATED, RingContext, TheoremVerdict,
                       run_ring_checks, synthetic_checks)
from .corpus import (Caps, CorpusReport, CorpusSpec, RandomGraphConfig, RingFailure,
                     default_corpus, load_corpus, parse_corpus, run_corpus)

__version__ = "0.1.0"
