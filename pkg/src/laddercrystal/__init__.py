"""Partition combinatorics of ladder crystals.

Rim hooks and cores, (ell,0)-JM partitions, classical and ladder crystal
operators, regularization and deregularization, the Mullineux map, and
crystal graph construction with verification suites.
"""

from .partitions import (
    Box,
    Partition,
    addable_boxes,
    arm,
    boxes,
    check_partition,
    contains,
    dominance_compare,
    hook_grid,
    hook_length,
    is_regular,
    ladder_index,
    leg,
    removable_boxes,
    residue,
    transpose,
)
from .rimhooks import CoreResult, RimHook, adjacent, ell_core, is_core, remove_rim_hook, removable_rim_hooks
from .jm import (
    FayersWitness,
    JMDecomposition,
    compose_jm,
    count_jm,
    decompose_jm,
    enumerate_jm,
    fayers_witness,
    is_ell_partition,
    is_generalized_ell_partition,
    is_jm,
    star_condition,
)
from .crystal import (
    SignatureEntry,
    SignatureWord,
    box_type,
    e_hat,
    e_tilde,
    epsilon,
    f_hat,
    f_tilde,
    i_signature,
    ladder_epsilon,
    ladder_i_signature,
    ladder_phi,
    phi,
    reduce_signature,
    residue_content,
)
from .regular import (
    LOCKED_I,
    LOCKED_II,
    UNLOCKED,
    NotRegularError,
    RegClass,
    deregularize,
    is_L_partition,
    is_ladder_node,
    is_weak_ell_partition,
    lock_labels,
    mullineux,
    reg_class,
    regularize,
)
from .graph import CrystalGraph, VerificationReport, build_crystal, export_dot, theorem_suite, verify_isomorphism
from .strings import format_partition, parse_partition

__version__ = "0.1.0"
