"""Finite generating bases for bounded-degree degree sequences.

Degree sequences of a fixed maximum degree k, viewed as regularity
sequences (counts of vertices per degree), form an additive semigroup
under disjoint union. This package decides realizability for the graph
and bipartite families, computes the finite generating set of the
semigroup, decomposes any realizable sequence into a disjoint union
whose components have bounded size, and includes a brute-force checker
for the induced-subgraph realization order used in the well-quasi-order
analysis.
"""

from .decomposition import (
    Decomposition,
    RealizedDecomposition,
    decompose,
    decompose_over_basis,
    max_component_bound,
    realize_decomposition,
)
from .errors import (
    BasisIncomplete,
    CapExceeded,
    CapMismatch,
    DegbasisError,
    DegreeExceedsCap,
    NoRegularFound,
    NotBigraphic,
    NotGraphic,
    NotMember,
    SearchLimitExceeded,
    SplitSpaceExceeded,
)
from .estimators import BasisDecomposer, RealizabilityClassifier
from .families import (
    GroundElement,
    StructuredFamily,
    bipartite_family,
    bipartite_is_member,
    get_family,
    graph_family,
    graph_is_member,
    ground_element,
    realize_member,
)
from .graphs import (
    BipartiteGraph,
    Embedding,
    Graph,
    bipartite_realize,
    degree_sequence,
    disjoint_union,
    disjoint_union_all,
    gale_ryser_violation,
    havel_hakimi_realize,
    induced_embedding,
)
from .semigroup import (
    BasisReport,
    GeneratingSet,
    ResidueLabel,
    ResidueModulus,
    generating_set,
    greedy_minimize,
    minimal_elements,
    residue_class_of,
    residue_modulus,
    verify_basis,
)
from .sequences import (
    DegreeSequence,
    RegularitySequence,
    add_regularity,
    degree_to_regularity,
    regularity_to_degree,
)
from .validation import coerce_sequences, ensure_degree_sequence, ensure_regularity_sequence
from .wqo import (
    ComparabilityWitness,
    Comparison,
    MultiplicityVector,
    RaoVerdict,
    enumerate_realizations,
    find_comparable_pair,
    multiplicity_vector,
    multiplicity_witness,
    pointwise_compare,
    rao_leq_bruteforce,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # sequences
    "DegreeSequence",
    "RegularitySequence",
    "degree_to_regularity",
    "regularity_to_degree",
    "add_regularity",
    # graphs
    "Graph",
    "BipartiteGraph",
    "Embedding",
    "degree_sequence",
    "disjoint_union",
    "disjoint_union_all",
    "havel_hakimi_realize",
    "gale_ryser_violation",
    "bipartite_realize",
    "induced_embedding",
    # families
    "StructuredFamily",
    "GroundElement",
    "graph_family",
    "bipartite_family",
    "get_family",
    "graph_is_member",
    "bipartite_is_member",
    "ground_element",
    "realize_member",
    # semigroup
    "ResidueModulus",
    "ResidueLabel",
    "GeneratingSet",
    "BasisReport",
    "residue_modulus",
    "residue_class_of",
    "greedy_minimize",
    "minimal_elements",
    "generating_set",
    "verify_basis",
    # decomposition
    "Decomposition",
    "RealizedDecomposition",
    "decompose",
    "decompose_over_basis",
    "realize_decomposition",
    "max_component_bound",
    # wqo
    "Comparison",
    "ComparabilityWitness",
    "RaoVerdict",
    "MultiplicityVector",
    "pointwise_compare",
    "rao_leq_bruteforce",
    "enumerate_realizations",
    "multiplicity_vector",
    "multiplicity_witness",
    "find_comparable_pair",
    # validation
    "ensure_degree_sequence",
    "ensure_regularity_sequence",
    "coerce_sequences",
    # estimators
    "BasisDecomposer",
    "RealizabilityClassifier",
    # errors
    "DegbasisError",
    "DegreeExceedsCap",
    "CapMismatch",
    "CapExceeded",
    "NotGraphic",
    "NotBigraphic",
    "SearchLimitExceeded",
    "SplitSpaceExceeded",
    "NoRegularFound",
    "NotMember",
    "BasisIncomplete",
]
