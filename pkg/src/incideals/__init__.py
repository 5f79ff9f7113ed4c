"""Invariants of chains of monomial ideals under index-increasing maps."""
from .asymptotics import (
    CheckResult,
    LinearFit,
    RandomChainParams,
    SeriesReport,
    check_betti_propagation,
    check_colon_filtration,
    check_msat_identities,
    check_pd_linearity,
    check_reg_slope,
    detect_linear,
    random_chain,
    series,
)
from .betti import (
    BettiTable,
    betti_table,
    euler_consistency,
    koszul_complex,
    lcm_lattice,
    pd,
    reg,
    reg_colon_bounds_check,
)
from .chainfile import ChainFileError, load_chain, loads_chain, parse_monomial
from .chains import (
    Chain,
    ChainInvariants,
    MSaturationChain,
    OrbitChain,
    SaturationChain,
    Symmetry,
    chain_invariants,
    colon_filtration,
    colon_filtration_term,
    inc_orbit,
    inc_orbit_by_shifts,
    m_saturation,
    saturated_truncation,
    saturation,
    sym_orbit,
    term,
)
from .errors import AmbientMismatch, CapExceeded, ImproperIdeal
from .gflinalg import DEFAULT_FIELD, FieldSpec, gf_rank
from .monomials import (
    IdealWeights,
    Monomial,
    MonomialIdeal,
    colon_stable_exponent,
    hilbert_count,
    lcm,
    minimalize,
    q_invariant,
)
from .primes import (
    MonomialPrime,
    associated_primes,
    associated_primes_brute,
    irreducible_components,
)
from .simplicial import SimplicialComplex, alexander_dual, boundary_matrix, homology_ranks

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "BettiTable",
    "CapExceeded",
    "Chain",
    "ChainFileError",
    "ChainInvariants",
    "CheckResult",
    "DEFAULT_FIELD",
    "FieldSpec",
    "IdealWeights",
    "ImproperIdeal",
    "LinearFit",
    "MSaturationChain",
    "Monomial",
    "MonomialIdeal",
    "MonomialPrime",
    "OrbitChain",
    "RandomChainParams",
    "SaturationChain",
    "SeriesReport",
    "SimplicialComplex",
    "Symmetry",
    "alexander_dual",
    "associated_primes",
    "associated_primes_brute",
    "betti_table",
    "boundary_matrix",
    "chain_invariants",
    "check_betti_propagation",
    "check_colon_filtration",
    "check_msat_identities",
    "check_pd_linearity",
    "check_reg_slope",
    "colon_filtration",
    "colon_filtration_term",
    "colon_stable_exponent",
    "detect_linear",
    "euler_consistency",
    "gf_rank",
    "hilbert_count",
    "homology_ranks",
    "inc_orbit",
    "inc_orbit_by_shifts",
    "irreducible_components",
    "koszul_complex",
    "lcm",
    "lcm_lattice",
    "load_chain",
    "loads_chain",
    "m_saturation",
    "minimalize",
    "parse_monomial",
    "pd",
    "q_invariant",
    "random_chain",
    "reg",
    "reg_colon_bounds_check",
    "saturated_truncation",
    "saturation",
    "series",
    "sym_orbit",
    "term",
]
