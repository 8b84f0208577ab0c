"""Dichotomy witnesses, extremal certificates, and exhaustive small-order
Ramsey oracles for paths versus generalized Jahangir graphs."""

from .embedding import (
    Budget,
    BudgetExhausted,
    DEFAULT_BUDGET,
    Embedding,
    PathWitness,
    SubgraphSearch,
    check_embedding,
    find_disjoint_paths,
    find_path_at_least,
    find_subgraph,
    fits_complete_multipartite,
    longest_path,
    verify_embedding,
)
from .families import (
    CliqueUnion,
    Complete,
    Cycle,
    DisjointPaths,
    Jahangir,
    Path,
    PatternSpec,
    TheoremCase,
    Thm1,
    Thm2EvenM,
    Thm2OddM,
    Thm3,
    UnsupportedPartitionError,
    Wheel,
    build,
    build_complete_multipartite,
    extremal_graph,
    format_spec,
    multipartite_contains_even_cycle,
    parse_spec,
    pattern_edges,
)
from .graphs import (
    Graph,
    Graph6Error,
    add_edge,
    clique_union_sizes,
    complement,
    complete,
    components,
    disjoint_union,
    empty,
    from_edges,
    from_graph6,
    induced,
    relabel,
    to_graph6,
)
from .oracle import (
    ArrowsReport,
    CANONICAL_CAP,
    CanonicalCapError,
    CanonicalForm,
    CertificateError,
    ENUMERATION_CAP,
    EnumerationCapError,
    RamseyCertificate,
    RamseyIndeterminate,
    are_isomorphic,
    arrows,
    canonical_form,
    canonical_graph,
    certificate_from_json,
    certificate_to_json,
    count_classes_cycle_index,
    count_classes_naive,
    enumerate_graphs,
    ramsey,
)
from .suites import (
    SUITE_COMPONENT_CAP,
    SUITES,
    SuiteSpec,
    case_seed,
    generate_case,
    run_suite,
    splitmix64,
)
from .witness import (
    DichotomyWitness,
    ExtractionTrace,
    ExtremalReport,
    MaximalityViolation,
    PathSystem,
    PreconditionError,
    WheelNotFound,
    build_path_system,
    extract_t_paths,
    extract_theorem1,
    extract_theorem2,
    thm1_min_n,
    thm2_min_n,
    trace_document,
    trace_json,
    verify_extremal,
    verify_witness,
    wheel_to_jahangir,
)

__version__ = "0.1.0"
