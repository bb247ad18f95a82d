"""Exact independent-set counting for layered ring and clique graphs."""

from .bijection import (
    LevelChoice,
    MalformedSequenceError,
    VertexLabel,
    compatible_outer,
    from_sequence,
    independent_selections,
    labels_at_level,
    to_sequence,
    valid_sequences,
)
from .families import (
    EdgeInterpretation,
    ExplicitGraph,
    Family,
    FamilySpec,
    ResourceLimitError,
    acceptance,
    build_graph,
    compatible,
    degree_profile,
    level_vectors,
    to_dot,
)
from .genfunc import (
    Aux3State,
    NoCertifiedRecurrenceError,
    NoKnownGFError,
    QuadIrrational,
    RationalGF,
    binomial_transform,
    g3_closed_form,
    g3_order2,
    g3_order3,
    g3_via_aux,
    gf_from_transfer,
    known_gf,
    lucas,
    min_recurrence,
    p_gf,
    pell,
    series_of,
    verify_resolvent_row,
)
from .oracle import OracleReport, compare, count_independent_sets
from .transfer import TransferMatrix, build_transfer, count, count_series

__version__ = "0.1.0"

__all__ = [
    "Aux3State",
    "EdgeInterpretation",
    "ExplicitGraph",
    "Family",
    "FamilySpec",
    "LevelChoice",
    "MalformedSequenceError",
    "NoCertifiedRecurrenceError",
    "NoKnownGFError",
    "OracleReport",
    "QuadIrrational",
    "RationalGF",
    "ResourceLimitError",
    "TransferMatrix",
    "VertexLabel",
    "acceptance",
    "binomial_transform",
    "build_graph",
    "build_transfer",
    "compare",
    "compatible",
    "compatible_outer",
    "count",
    "count_independent_sets",
    "count_series",
    "degree_profile",
    "from_sequence",
    "g3_closed_form",
    "g3_order2",
    "g3_order3",
    "g3_via_aux",
    "gf_from_transfer",
    "independent_selections",
    "known_gf",
    "labels_at_level",
    "level_vectors",
    "lucas",
    "min_recurrence",
    "p_gf",
    "pell",
    "series_of",
    "to_dot",
    "to_sequence",
    "valid_sequences",
    "verify_resolvent_row",
]
