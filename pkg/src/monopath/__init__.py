"""Monotone path polytopes of lifted piles of cubes, in exact arithmetic.

The coherent monotone lattice paths of a lifted pile of cubes are the
non-nesting lambda-permutations; they label the regions of a deformed braid
arrangement.  This package decides coherence, counts and enumerates the
objects involved, and checks the accompanying identities exactly.
"""
from .arrangements import (
    CosetLabel,
    DeformedArrangement,
    build_arrangement,
    catalan_face_count,
    char_poly_closed,
    char_poly_finite_field,
    coset_map,
    region_count,
    stirling2,
    verify_coset_bijection,
)
from .coherence import (
    GenericFunctional,
    delta_sequence,
    is_coherent_path,
    is_coherent_subdivision,
    path_coherence_system,
    region_of_point,
    subdivision_coherence_system,
    word_of_functional,
)
from .constraints import DifferenceConstraintSystem, FeasibilityResult, feasibility
from .errors import (
    CapExceeded,
    NestingWord,
    NonGenericFunctional,
    NotPrime,
    NotSwappable,
    OutOfBox,
    TooLarge,
    UnsupportedDimension,
)
from .geometry import (
    LiftedPath,
    ZonotopeSpec,
    lift,
    lifted_path,
    path_integral,
    pile_vertices,
    swap_difference,
    upper_facet_paths,
    vertex_certificate,
    zonotope_generators,
)
from .subdivisions import (
    OrderedPartition,
    SubdivisionFace,
    enumerate_proper_partitions,
    flip_neighbors,
    incoherency,
    max_incoherency_census,
    refines,
    subdivision_faces,
)
from .words import (
    Composition,
    LambdaWord,
    LatticePath,
    coherent_count_formula,
    enumerate_words,
    is_non_nesting,
    multinomial_count,
    nesting_count,
    word_to_path,
)

__all__ = [
    "build_arrangement",
    "CapExceeded",
    "catalan_face_count",
    "char_poly_closed",
    "char_poly_finite_field",
    "coherent_count_formula",
    "Composition",
    "coset_map",
    "CosetLabel",
    "DeformedArrangement",
    "delta_sequence",
    "DifferenceConstraintSystem",
    "enumerate_proper_partitions",
    "enumerate_words",
    "feasibility",
    "FeasibilityResult",
    "flip_neighbors",
    "GenericFunctional",
    "incoherency",
    "is_coherent_path",
    "is_coherent_subdivision",
    "is_non_nesting",
    "LambdaWord",
    "LatticePath",
    "lift",
    "lifted_path",
    "LiftedPath",
    "max_incoherency_census",
    "multinomial_count",
    "nesting_count",
    "NestingWord",
    "NonGenericFunctional",
    "NotPrime",
    "NotSwappable",
    "OrderedPartition",
    "OutOfBox",
    "path_coherence_system",
    "path_integral",
    "pile_vertices",
    "refines",
    "region_count",
    "region_of_point",
    "stirling2",
    "subdivision_coherence_system",
    "subdivision_faces",
    "SubdivisionFace",
    "swap_difference",
    "TooLarge",
    "UnsupportedDimension",
    "upper_facet_paths",
    "verify_coset_bijection",
    "vertex_certificate",
    "word_of_functional",
    "word_to_path",
    "zonotope_generators",
    "ZonotopeSpec",
]

__version__ = "0.1.0"
