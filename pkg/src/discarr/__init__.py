"""Exact-arithmetic discriminantal arrangements.

Build B(n,k,A) from a generic arrangement A over an exact field, detect
the coincidence patterns that make A non-very-generic (4-set, five
triple, and good-partition conditions), walk the intersection lattice,
and classify 6-element arrangements by the type their detected pattern
set induces on the labeled complete graph K_6.
"""

from .exactfield import (
    Cyclotomic,
    DivisionByZero,
    FieldDescriptor,
    FieldElement,
    FieldMismatch,
    Galois,
    ParseError,
    Prime,
    Quadratic,
    Rational,
    descriptor_from_json,
    descriptor_to_json,
    embed,
    format_element,
    parse_element,
)
from .linalg import Matrix, cross3, det, det2, kernel, rank, rank_of_rows, solve
from .arrangement import (
    Arrangement,
    IndexFamily,
    NotGeneric,
    ProjectiveMap,
    arrangement_from_json,
    arrangement_to_json,
    cross_ratio,
    is_generic,
    projective_map_through,
    translate_solver,
)
from .discriminantal import (
    DiscriminantalArrangement,
    Flat,
    Lattice,
    build_discriminantal,
    discriminantal_normal,
    intersection_lattice,
    nvg_flats,
    ordered_normal,
    reference_very_generic,
)
from .detectors import (
    FourSet,
    Good6Partition,
    QuintFamily,
    ceva_value,
    crossratio_form,
    find_involutions,
    good6_condition,
    good6_points,
    pappus_closure_check,
    perfect_matchings,
    quadral_points,
    quint_closure_checks,
    quint_value,
    quintuple_points,
)
from .permtype import (
    ClosureViolation,
    PartitionType,
    Perm,
    TYPE_ORDER,
    TypeReport,
    VertexPartition,
    all_matchings,
    all_partitions_of_6,
    arrangement_type,
    edge_label,
    induced_edges,
    m_of_type,
    matching_to_edge,
    o_map,
    partition_from_edges,
    phi,
    upper_bound_check,
)
from .gallery import (
    DODECAHEDRAL_DEPENDENCIES,
    WitnessSpec,
    build_gallery,
    classification_witness,
    crapo,
    dependency_residual,
    dodecahedral,
    f4_arrangement,
    f5_arrangement,
    gallery_names,
    is_parameter_generic,
    octahedral,
    parameter_conditions,
    parametrized,
    predicted_polygon_sets,
    quadral_lower_bound,
    quint_lower_bound,
    regular_polygon,
    witness_spec,
)

__version__ = "0.1.0"
