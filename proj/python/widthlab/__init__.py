"""Branch decompositions, mim-width and sim-width of graphs.

Patterns are given in the mini-language of the command-line tool, for
example ``"K4"``, ``"2P3+P2+P1"`` or ``"co(K[3,4]+P1)"``. Rational weights
come back as :class:`fractions.Fraction`.
"""

from ._widthlab import (
    BranchDecomposition,
    CapExceeded,
    Graph,
    InvariantViolation,
    PreconditionFailed,
    build_hgraph,
    caterpillar_decomposition,
    classify_complete,
    classify_edgeless,
    complement,
    contains_induced,
    decompose_3p1,
    decompose_4p1,
    evaluate,
    exact_width,
    generate_family,
    is_free,
    list_colouring,
    maxdeg2_decomposition,
    mwis,
    ramsey,
    solve_packing,
    verify_family,
)

__all__ = [
    "BranchDecomposition",
    "CapExceeded",
    "Graph",
    "InvariantViolation",
    "PreconditionFailed",
    "build_hgraph",
    "caterpillar_decomposition",
    "classify_complete",
    "classify_edgeless",
    "complement",
    "contains_induced",
    "decompose_3p1",
    "decompose_4p1",
    "evaluate",
    "exact_width",
    "generate_family",
    "is_free",
    "list_colouring",
    "maxdeg2_decomposition",
    "mwis",
    "ramsey",
    "solve_packing",
    "verify_family",
]
