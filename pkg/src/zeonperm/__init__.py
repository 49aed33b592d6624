"""Exact zeon powers of matrices, permanents, the Johnson-scheme expansion of
(sI+tJ)^(l), exponential moment polynomials, generalized derangement and
arrangement numbers, group orbit identities and elementary subgraphs."""

from .algebra import (
    BiPoly, ONE, PolyParseError, S, T, UniPoly, ZERO, binom, charpoly_exact, det_bareiss,
    eval_2f0, expgf_check, pochhammer,
)
from .derangements import (
    A, D, JohnsonReadOffError, count_triangle, oracle_arrangement_count, oracle_deranged_count,
    read_off_johnson_basis, specialized_spectrum,
)
from .groups import (
    Permutation, burnside_counts, cycle_index, group_closure, molien_check,
    orbit_count_ellsets, parse_cycles, parse_generators,
)
from .johnson import (
    SpectrumEntry, assemble_sItJ, expand_sItJ, js_eigenvalue, js_matrix, multiplicity,
    rank_subset, spectrum_sItJ, subsets, unrank_subset,
)
from .kernels import BACKEND
from .matrix import ExactMatrix, load_matrix
from .moments import M_matrix, P_triangle, Triangle, h, q_asymptotic_ratio
from .permanents import (
    per_via_traces, permanent, permanent_naive, zeon_power_perm, zeon_power_sum,
)
from .subgraphs import enumerate_elementary, perm_via_subgraphs
from .zeon import ZeonElement, induced_matrix_zeon, zeon_mul

__version__ = "0.1.0"
