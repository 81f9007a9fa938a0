"""Kirillov-Reshetikhin crystals for the generalized quantum group of type
A(M-1|N-1): graded tableaux, Kashiwara operators, super column insertion, the
affine node, the combinatorial R matrix and energy, and exact q-series checks."""

from .alphabet import SIGMA, STANDARD, GroundData, NodeKind, Weight, coroot_pairing, node_kind, sigma_compare, simple_root
from .tableaux import (
    CapExceeded,
    Tableau,
    TensorElement,
    count_sst,
    enumerate_sst,
    genuine_highest_tableau,
    genuine_lowest_rectangle,
    hw_weight,
    is_hook,
    is_valid,
    reading_word,
    weight_of,
)
from .crystal import CrystalGraph, apply_e, apply_f, component_bfs, decompose, eps_phi, is_genuine_hw
from .insertion import (
    InsertionResult,
    anti_rectify,
    column_insert_letter,
    knuth_equivalent,
    p_tableau,
    recording_tableau,
    rectify,
)
from .affine import (
    KRCrystal,
    TensorCrystal,
    apply_e0_kr,
    apply_e0_tensor,
    apply_f0_kr,
    apply_f0_tensor,
    kr_crystal,
    kr_graph,
    sigma,
    sigma_inverse,
)
from .rmatrix import (
    HwvDatum,
    combinatorial_R,
    energy,
    energy_recurrence_check,
    genuine_hwv_pairs,
    hlm_set,
    lambda_hat,
    raising_sequence_witness,
    yang_baxter_check,
)
from .qseries import (
    LaurentPoly,
    RationalFn,
    a0_regular,
    polarization_norm,
    q_binom,
    q_factorial,
    q_int,
    rhat_pole_check,
    rho_coeff,
    value_at_0,
)

__all__ = [name for name in dir() if not name.startswith("_")]
