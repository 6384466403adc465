"""Stack-sorting operators from lattice congruences on symmetric,
hyperoctahedral, and affine symmetric groups."""

from .perm import (
    Perm,
    alpha_conjugate,
    avoids_231,
    catalan,
    compose,
    descents,
    direct_sum,
    inverse,
    left_to_right_maxima,
    leq_left_weak,
    leq_right_weak,
    meet_left_weak,
    pop_stack,
    right_inversions,
    stack_sort,
    standardize,
)
from .permutree import (
    DecreasingPermutree,
    in_order,
    insert,
    permutree_sort,
    pi_down,
    postorder_reading,
    same_congruence_class,
)
from .congruence import (
    Congruence,
    Fence,
    all_fences,
    congruence_from_decoration,
    congruence_from_ideal,
    congruence_from_interval,
    descent_congruence,
    forcing_leq,
    is_essential,
    refine,
    sort_op,
    up_op,
    verify_descent_bounds,
)
from .signed import (
    descents_b,
    from_signed_window,
    iter_hyperoctahedral,
    orbit_b,
    preimage_census,
    stack_b,
    to_signed_window,
)
from .hooks import (
    brute_fertility,
    enumerate_vhcs,
    fertility,
    is_uniquely_sorted,
    preimages,
    q_composition,
    slmax,
)
from .affine import (
    AffinePermutation,
    affine_fertility,
    affine_preimages,
    affine_stack,
    count_2ss,
    enumerate_231_avoiders,
    is_231_avoiding,
    iota,
    make_affine,
    parse_window,
    pi_down_affine,
    skylines,
    uniquely_sorted_class_count,
)

__version__ = "0.1.0"
