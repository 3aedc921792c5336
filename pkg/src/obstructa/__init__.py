"""Universal-obstruction toolkit: containment relations, parametric graph
families, exact desk-scale parameter solvers, and obstruction enumeration
for small graphs."""

from .graphs import (
    Graph,
    apply_move,
    DeleteVertex,
    DeleteEdge,
    ContractEdge,
    SubdivideEdge,
    LiftPair,
    LocalComplement,
    disjoint_union_power,
)
from .canon import canonical_form, canonical_graph, are_isomorphic
from .codec import to_graph6, from_graph6, to_sparse6, from_sparse6, to_multig, from_multig

__version__ = "0.1.0"
