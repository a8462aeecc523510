"""Zeta-plus-one and zeta-minus-one functions at positive even integers.

    zeta_{+1}(s) = sum_{n>=1} 1/(n^s + 1),    zeta_{-1}(s) = sum_{n>=2} 1/(n^s - 1)
"""

__version__ = "0.1.0"

from .bernoulli_zeta import bernoulli, zeta_even, zeta_even_exact
from .closed_forms import (
    EvalResult,
    zeta_minus_one_even,
    zeta_minus_one_real,
    zeta_plus_one_even,
    zeta_plus_one_real,
)
from .errors import (
    CapacityError,
    DomainError,
    NumericError,
    PoleError,
    QuadratureError,
    UnsupportedError,
    WrongPoleError,
    ZetaOneError,
)
from .residue_verifier import ContourReport, contour_integral, lemma_bound, verify
from .series_engine import (
    IdentityReport,
    euler_goldbach_partial,
    even_sum_partial,
    perfect_powers_upto,
    shallit_zikan_partial,
    zeta_int_series,
    zeta_minus_one_series,
    zeta_mod_sum_partial,
    zeta_plus_one_series,
)

__all__ = [
    "bernoulli",
    "zeta_even",
    "zeta_even_exact",
    "EvalResult",
    "zeta_plus_one_even",
    "zeta_minus_one_even",
    "zeta_plus_one_real",
    "zeta_minus_one_real",
    "zeta_int_series",
    "zeta_plus_one_series",
    "zeta_minus_one_series",
    "IdentityReport",
    "shallit_zikan_partial",
    "even_sum_partial",
    "zeta_mod_sum_partial",
    "perfect_powers_upto",
    "euler_goldbach_partial",
    "ContourReport",
    "contour_integral",
    "lemma_bound",
    "verify",
    "ZetaOneError",
    "DomainError",
    "UnsupportedError",
    "PoleError",
    "WrongPoleError",
    "NumericError",
    "CapacityError",
    "QuadratureError",
]
