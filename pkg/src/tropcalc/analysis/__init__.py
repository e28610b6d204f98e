from .fermat import fermat_combination, fermat_sum_check
from .hayman import hayman_product, hayman_census, hayman_linearity_check
from .bruck import bruck_check, periodic_residue
from .growth import looks_transcendental
from .examples import (
    EXAMPLES,
    Example,
    run_example,
    min_one_two_minus_x,
    min_one_x,
    meromorphic_fermat_family,
    mixed_sign_pair,
    product_pair,
)

__all__ = [
    "fermat_combination",
    "fermat_sum_check",
    "hayman_product",
    "hayman_census",
    "hayman_linearity_check",
    "bruck_check",
    "periodic_residue",
    "looks_transcendental",
    "EXAMPLES",
    "Example",
    "run_example",
    "min_one_two_minus_x",
    "min_one_x",
    "meromorphic_fermat_family",
    "mixed_sign_pair",
    "product_pair",
]
