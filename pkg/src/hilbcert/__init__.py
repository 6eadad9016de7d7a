"""Exact Hilbert-function combinatorics: Macaulay expansions, Gotzmann
persistence, Gorenstein and complete-intersection h-vectors, and a
replayable certificate for the quintic case analysis."""

from .binomial import BinomialTerm, binom, binom_shifted
from .gorenstein import (
    GorensteinConstraints,
    HVector,
    LemdiVerdict,
    Multidegree,
    check_lemdi,
    ci_hvector,
    enumerate_candidate_hvectors,
    min_nodes,
)
from .gotzmann import (
    ExpansionPolynomial,
    PersistenceVerdict,
    ZeroDimVerdict,
    evaluate_persistent,
    green_stabilization,
    min_hilbert_for_base_dim,
    persistence_check,
)
from .macaulay import MacaulayExpansion, OSequenceCheck, growth_bound, is_o_sequence, macaulay_expansion
from .oracle import (
    LexSegment,
    MonomialIdeal,
    lex_segment_span,
    standard_monomial_count,
    verify_gotzmann_on_lex,
    verify_macaulay_bound,
)
from .replay import ProofCertificate, ProofStep, StepKind, replay_d5, replay_plane_case

__version__ = "0.1.0"
