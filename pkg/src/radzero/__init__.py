"""Conjugacy classes of left ideals in radical-square-zero algebras.

Decides finiteness via separated quivers, Dynkin/Euclidean recognition and
the Tits form, counts classes through positive-root decompositions, and
cross-checks counts against exhaustive orbit enumeration over small fields.
"""

__version__ = "0.1.0"

from .algebra import (
    AlgebraSpec,
    SpecError,
    SpecInvariantError,
    SpecSchemaError,
    SpecSyntaxError,
    ValidationReport,
    a_vector,
    parse,
    scale,
    serialize,
    validate,
)
from .decide import RepType, Status, Verdict, decide, decide_scaled, verify_verdict
from .graphs import (
    DynkinType,
    EuclideanCertificate,
    Graph,
    GraphClassification,
    GraphError,
    classify,
    dynkin_graph,
    euclidean_template,
    find_euclidean_subgraph,
    verify_certificate,
)
from .oracle import (
    BudgetExceeded,
    FFInstance,
    enumerate_ideals,
    growth_probe,
    orbit_count_matrices,
    orbit_count_subspaces,
)
from .quiver import Quiver, dimension_vector, ordinary_quiver, reverse, separated, separated_graph
from .tits import (
    INFINITE,
    UNKNOWN,
    QuadraticForm,
    RootSet,
    count_classes,
    find_radical_obstruction,
    positive_roots,
    radical_generator,
    tits_value,
    tits_values,
)

__all__ = [name for name in dir() if not name.startswith("_")]
