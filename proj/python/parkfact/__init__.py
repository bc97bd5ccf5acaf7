"""Parking functions, labelled trees and minimal factorizations of full cycles."""

from ._core import (
    areas,
    bounce,
    caps,
    catalan_qt,
    enumerate_factorizations,
    factorization_enumerator,
    inversion_enumerator,
    is_major,
    is_parking,
    is_unimodal,
    is_valid_arch,
    l_inverse,
    lower,
    parking_enumerators,
    pinv_stats,
    poly_to_string,
    push_heights,
    run_suite,
    sigma_diagram,
    suite_names,
    theta,
    theta_inverse,
    tree_stats,
    u_inverse,
    unimodal_cycles,
    upper,
)

__all__ = [
    "areas",
    "bounce",
    "caps",
    "catalan_qt",
    "enumerate_factorizations",
    "factorization_enumerator",
    "inversion_enumerator",
    "is_major",
    "is_parking",
    "is_unimodal",
    "is_valid_arch",
    "l_inverse",
    "lower",
    "parking_enumerators",
    "pinv_stats",
    "poly_to_string",
    "push_heights",
    "run_suite",
    "sigma_diagram",
    "suite_names",
    "theta",
    "theta_inverse",
    "tree_stats",
    "u_inverse",
    "unimodal_cycles",
    "upper",
]
