"""Positive Dehn-twist factorization calculus.

Surfaces with boundary and their curves; signed twist words with a
commutation-certified rewriting engine; a database of relators with
signature and exponent ledger values; exact planar filling invariants and
ledger-relative signatures; homology of the boundary open book; and
non-planarity certificates.
"""

__version__ = "0.1.0"

from .errors import (
    BaselineUnavailableError,
    CommutationUndecidedError,
    ConsistencyAlarmError,
    DocumentError,
    IncomparableSigmaError,
    NotApplicableError,
    RankMismatchError,
    SteincalcError,
    UnsupportedInputError,
)
from .surfaces import (
    Arc,
    Curve,
    HomologyClass,
    Surface,
    arc_pairing,
    convex_curve,
    curves_commute,
    intersection_pairing,
    standard_arc,
    twist_action,
)
from .words import (
    ContainmentWitness,
    Relator,
    RelatorReport,
    SubstitutionRecord,
    Twist,
    Word,
    commute_adjacent,
    compose,
    contains,
    free_reduce,
    substitute,
    verify_relator,
    word_of,
)
from .relators import (
    BoundingCase,
    ChainConfig,
    RelatorEntry,
    bounding_case,
    braid_relator,
    builtin_entries,
    chain,
    compose_relators,
    genus_boundary_relator,
    lantern,
    non_standard_relator,
    standard_braid,
    standard_chain_config,
    standard_lantern,
)
from .invariants import (
    ChernData,
    EsigReport,
    FillingInvariants,
    H1Group,
    PlanarForm,
    SigmaLedger,
    SigmaValue,
    chern_pd,
    esig_check,
    euler_characteristic,
    filling_invariants,
    h1_boundary,
    planar_intersection_form,
    sigma,
)
from .planarity import (
    BoundingDeclaration,
    PlanarityCertificate,
    detect_bounding,
    detect_relator,
    esig_planarity_test,
)
from .document import (
    Document,
    chain_document,
    lantern_document,
    non_standard_document,
    parse,
    serialize,
    tau_boundary_document,
)
