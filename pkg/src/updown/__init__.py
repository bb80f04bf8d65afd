"""Exact counting of up-down, weakly up-down and cyclic up-down words."""

from .closed_form import (
    PrecisionPolicy,
    closed_cyclic,
    closed_updown,
    closed_updown_sinform,
    estimate_bits,
)
from .enumeration import (
    Word,
    WordClass,
    brute_count,
    dp_count,
    dp_cyclic_count,
    is_member,
    updown_to_weakly,
    weakly_to_updown,
)
from .errors import (
    BudgetExceeded,
    Cancelled,
    InvalidK,
    LengthOneExcluded,
    NonIntegerResult,
    NotUpDown,
    NotWeaklyUpDown,
    PrecisionExhausted,
    UpDownError,
)
from .interval import RealInterval
from .poly_exact import (
    DyadicPoly,
    IntPoly,
    carlitz_p,
    carlitz_q,
    chebyshev_t,
    chebyshev_u,
    chebyshev_v,
    compose_one_minus_half_xsq,
)
from .series_engine import (
    SeriesTable,
    count_updown,
    cyclic_newton,
    linear_recurrence_signature,
    series_cyclic,
    series_updown,
    series_weakly,
)

__version__ = "0.1.0"
