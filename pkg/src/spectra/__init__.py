"""Finite spaces, Boolean algebras, finite commutative rings, and the
constructions connecting their spectra: component analysis, profinite
reflection, and soberification, with a verification suite over generated
corpora."""

from .boolean_algebra import (
    BooleanAlgebra,
    Filter,
    all_ultrafilters,
    atoms,
    boolean_algebra,
    filter_generated,
    is_homomorphism,
    is_ultrafilter,
    powerset_algebra,
    principal_filter,
    stone_decomposition,
    stone_spectrum,
    validate_boolean_algebra,
)
from .bridge import (
    check_component_space,
    check_connected_iff_trivial_idempotents,
    check_idempotent_clopen_bijection,
    check_spectrum_to_mr,
    clopen_of_idempotent,
    component_space,
    components_via_max_regular,
    spectrum_to_mr_map,
)
from .caps import DEFAULT_CAPS, Caps, caps_from_env
from .errors import (
    AlgebraAxiomError,
    CapExceeded,
    InvalidPartition,
    MismatchWitness,
    MissingEmptyOrFull,
    NotAFilter,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotContinuous,
    NotIdempotent,
    NotProfiniteTarget,
    NotUltrafilter,
    RingAxiomError,
    SpectraError,
    ValidationError,
)
from .harness import (
    ALIASES,
    CLAIMS,
    Corpus,
    CorpusConfig,
    SuiteReport,
    generate_corpus,
    resolve_suite,
    run_suite,
)
from .reflection import Reflection, check_adjunction, check_functor_laws, reflect_map, reflect_space
from .report import Report
from .rings import (
    FiniteRing,
    Ideal,
    boolean_spectrum,
    ideal_generated,
    idempotent_algebra,
    idempotents,
    max_regular_ideals,
    mr_decomposition,
    mr_space,
    prime_ideals,
    product,
    quotient,
    regular_ideals,
    ring_from_json,
    ring_from_tables,
    ultrafilter_to_max_regular,
    validate_ring,
    zariski_spectrum,
    zmod,
)
from .sober import (
    SoberSpace,
    is_sober,
    sober_unit,
    soberify,
    soberify_map,
)
from .topology import (
    ContinuousMap,
    FiniteSpace,
    Partition,
    clopen_generated_component_space,
    clopens,
    compose,
    connected_components,
    discrete_space,
    disjoint_union,
    enumerate_continuous_maps,
    enumerate_topologies,
    generate_topology,
    homeomorphic,
    identity_map,
    indiscrete_space,
    is_connected,
    is_connected_subset,
    is_hausdorff,
    is_profinite_finite,
    is_totally_disconnected,
    quotient_projection,
    quotient_topology,
    space_from_json,
    space_to_json,
    specialization_dot,
    validate_topology,
)

__version__ = "0.1.0"
