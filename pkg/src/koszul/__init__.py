"""Capelli bitableaux, the Koszul map and a superpolarization oracle for U(gl(n))."""

from .capelli import (
    capelli_bitableau,
    capelli_cdet,
    capelli_H,
    capelli_K,
    char_poly_check,
    column_capelli,
    column_capelli_star,
    is_central,
    poly_h,
    right_young_capelli,
    star_capelli_bitableau,
)
from .enveloping import (
    UEAElement,
    act_on_poly,
    adjoint_T,
    commutator,
    degree,
    element_from_json,
    element_to_json,
    format_element,
    gen,
    multiply,
    parse_element,
)
from .koszul_map import check_equivariance, inverse_koszul, koszul
from .polynomials import (
    Poly,
    add,
    biproduct,
    bitableau,
    crossing_sign,
    format_poly,
    mul,
    parse_poly,
    polarize_left,
    polarize_right,
    poly_from_json,
    poly_to_json,
    rep_adjoint,
    rho,
    scale,
    star_biproduct,
    star_bitableau,
    symmetrized_bitableau,
)
from .tableaux import (
    Tableau,
    column_permutations,
    conjugate,
    conjugate_tableau,
    enumerate_costandard,
    enumerate_row_increasing,
    enumerate_standard,
    format_tableau,
    is_costandard,
    is_standard,
    parse_tableau,
    partition,
)



def clear_caches() -> None:
    """Drop every memo table (products, recursions, actions), e.g. before timing."""
    from . import capelli, enveloping, koszul_map

    for fn in (
        capelli._column,
        enveloping._word_times_generator,
        enveloping._word_product,
        enveloping._polarize_monomial,
        enveloping._act_word_monomial,
        koszul_map._koszul_word,
    ):
        fn.cache_clear()


__all__ = [name for name in dir() if not name.startswith("_")]
