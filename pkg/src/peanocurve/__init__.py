"""Exact n-dimensional Peano space-filling curve.

Parameters and coordinates are triadic rationals held exactly; see
:mod:`peanocurve.ternary` for the digit representation.
"""

from .core import SState, coordinate, eval_curve, s_value, xi_apply
from .errors import DomainError, ResourceError
from .inverse import SfcKey, encode_point, invert, key_decode, key_encode, point_digits
from .selfaffine import (
    AffineDecomposition,
    check_self_affinity,
    classic_peano_s,
    decompose,
    self_affine_params,
)
from .ternary import (
    DigitSeq,
    Tail,
    TriadicRational,
    alternate_rep,
    extend,
    from_triadic,
    parse_digits,
    to_triadic,
)

__version__ = "0.1.0"
