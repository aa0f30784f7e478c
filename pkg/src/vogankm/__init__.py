"""Generalized Cartan matrices, hyperbolicity tests, and Vogan diagram
equivalence classes for hyperbolic Kac-Moody algebras.

Quick start::

    from vogankm import catalog, classify, all_classes

    entry = catalog.lookup("E10")
    print(classify(entry.gcm).hyperbolic)          # True
    report = all_classes(entry.gcm)                # 1024-painting partition
"""

from .gcm import (
    AlgebraType,
    DynkinDiagram,
    GeneralizedCartanMatrix,
    Symmetrizer,
    TypeTag,
    classify,
    connected_components,
    diagram_of,
    gcm_of,
    principal_minor,
    subdiagram,
    symmetrizer,
    validate,
)
from .vogan import (
    Claim,
    DiagramInvolution,
    OrbitReport,
    VoganDiagram,
    all_classes,
    automorphisms,
    f_move,
    identity_involution,
    involution,
    involutions,
    orbit,
    reduce_to_minimal,
    replay,
    verify_borel_de_siebenthal,
    verify_lemma_instances,
    vogan_diagram,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraType",
    "Claim",
    "DiagramInvolution",
    "DynkinDiagram",
    "GeneralizedCartanMatrix",
    "OrbitReport",
    "Symmetrizer",
    "TypeTag",
    "VoganDiagram",
    "all_classes",
    "automorphisms",
    "classify",
    "connected_components",
    "diagram_of",
    "f_move",
    "gcm_of",
    "identity_involution",
    "involution",
    "involutions",
    "orbit",
    "principal_minor",
    "reduce_to_minimal",
    "replay",
    "subdiagram",
    "symmetrizer",
    "validate",
    "verify_borel_de_siebenthal",
    "verify_lemma_instances",
    "vogan_diagram",
]
