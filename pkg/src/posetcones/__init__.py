"""Cone polynomials of finite posets: transverse partitions, cycle
bijections, multiset factorizations, and the disjoint-chain generating
function."""

from .errors import (
    CycleDetected,
    DegreeExceeded,
    IndexOutOfRange,
    NotDisjointChains,
    NotLinearExtension,
    NotNaturallyLabeled,
    NotTransverse,
    ParseError,
    PosetconesError,
    SupportMismatch,
    WidthExceeded,
    ZeroPolynomial,
)
from .polynomials import IntPolynomial, count_real_roots, poly_from_machine
from .posets import (
    ChainDecomposition,
    Poset,
    antichain,
    chain,
    chain_cover_width2,
    count_linear_extensions,
    disjoint_chain_lengths,
    grid,
    is_antichain,
    is_linear_extension,
    linear_extensions,
    opposite,
    ordinal_sum,
    parse_poset,
    poset_from_relations,
    poset_to_text,
    random_poset,
    union_of_chains,
    width,
)
from .partitions import (
    SetPartition,
    all_partitions,
    enumerate_transverse,
    is_transverse,
    mobius_abs,
    parse_partition,
    partition_to_text,
    quotient_preposet,
    transverse_count_check,
    transverse_poly_coeffs,
)
from .whitney import (
    p_eulerian,
    poincare,
    poincare_via_foata,
    poincare_via_lrmax,
    poincare_via_transverse,
    poincare_via_width2,
    whitney_numbers,
)
from .bijections import (
    LeveledExtension,
    Permutation,
    des_p1p2,
    level_decompose,
    levels_of_permutation,
    lrmax_count,
    omega,
    omega_inv,
    parse_permutation,
    permutation_to_text,
    phi,
    psi,
    transverse_permutations,
)
from .foata import (
    MultisetPermutation,
    dependence_poset,
    enumerate_multiset_perms,
    factorization_count,
    fcyc,
    foata_phi,
    foata_phi_inv,
    intercalation,
    is_prime,
    multiset_decode,
    multiset_encode,
    multiset_perm_to_text,
    parse_multiset_perm,
    prime_decompose,
)
from .genfun import (
    TruncatedSeries,
    chains_gf_rhs,
    coefficient,
    elementary_symmetric,
    falling_bracket,
    fcyc_distribution,
    mmt_bracket,
    stirling_first_kind_row,
    stirling_row_check,
    tmmt_rhs,
    verify_chains_gf,
)

__version__ = "0.1.0"
