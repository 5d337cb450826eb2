"""Zariski, patch and ultrafilter topologies on Spec(Z), Spec(Z/n) and Spec(GF(p)[x])."""

__version__ = "0.1.0"

from .constructible import (boolean_subalgebra, from_basic, is_constructible, is_patch_closed,
                            patch_closure, patch_membership)
from .errors import (DomainError, GrammarError, InvalidDescriptorError, NoWitnessError,
                     PreconditionError, RefusedError, RingMismatchError, SpectopError,
                     ZeroElementError)
from .grammar import parse_set
from .rings import Integers, Modular, PolyRing, factor, parse_ring
from .spectrum import (PrimeIdeal, SpectrumSubset, all_closed, closed_point, cofinite, d_of,
                       empty, finite, full, generic_point, ideal, predicate, progression,
                       residue_classes, spec_enumerate, v_of, zariski_closure)
from .ultrafilter import (FiniteUltrafilter, Nonprincipal, Principal, check_ultrafilter_axioms,
                          enumerate_ultrafilters, induce_on_member, induce_on_superset,
                          limit_contains, limit_primality_check, ultrafilter_closure,
                          ultrafilter_limit, witness_ultrafilter)
from .vnr import (VnrRing, contraction_map, e_of, epimorphism_evidence, is_vnr,
                  principal_generator, punctual_inverse, relatively_prime_lemma_check, t_of,
                  try_punctual_inverse)

__all__ = [
    "DomainError", "FiniteUltrafilter", "GrammarError", "Integers", "InvalidDescriptorError",
    "Modular", "NoWitnessError", "Nonprincipal", "PolyRing", "PreconditionError", "PrimeIdeal",
    "Principal", "RefusedError", "RingMismatchError", "SpectopError", "SpectrumSubset",
    "VnrRing", "ZeroElementError", "all_closed", "boolean_subalgebra",
    "check_ultrafilter_axioms", "closed_point", "cofinite", "contraction_map", "d_of", "e_of",
    "empty", "enumerate_ultrafilters", "epimorphism_evidence", "factor", "finite", "from_basic",
    "full", "generic_point", "ideal", "induce_on_member", "induce_on_superset",
    "is_constructible", "is_patch_closed", "is_vnr", "limit_contains", "limit_primality_check",
    "parse_ring", "parse_set", "patch_closure", "patch_membership", "predicate",
    "principal_generator", "progression", "punctual_inverse", "relatively_prime_lemma_check",
    "residue_classes", "spec_enumerate", "t_of", "try_punctual_inverse", "ultrafilter_closure",
    "ultrafilter_limit", "v_of", "witness_ultrafilter", "zariski_closure",
]
