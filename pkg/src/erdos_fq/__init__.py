"""Certified Erdős sums over F_q[x]: exact polynomial counts, Mordell sums and interval bounds."""

from .bounds import (
    BanksMartinReport,
    QkBoundResult,
    Verdict,
    banks_martin_scan,
    fkq_lower_bound,
    fkq_upper_bound,
    irreducible_sum_bounds,
    qk_bound,
    universal_bound_check,
)
from .counting import (
    IrreducibleCountTable,
    SmoothCountTable,
    irreducible_count,
    irreducible_count_bounds,
    smooth_count,
)
from .enclosure import (
    DEFAULT_CONFIG,
    DomainError,
    Enclosure,
    PrecisionConfig,
    certified_decimal,
    dilog,
    enclosure_arith,
    euler_gamma,
    zeta_int,
)
from .exact import (
    FieldOrder,
    NotAPrimePowerError,
    Rational,
    binomial_shifted,
    divisors,
    harmonic,
    moebius,
    validate_field_order,
)
from .mordell import MordellCache, MordellKey, mordell
from .oracle import OracleFactorTable, oracle_enumerate
from .sums import (
    InsufficientPrecisionError,
    SumResult,
    erdos_sum_irreducibles,
    fkq,
    head_sum,
    mertens_coefficient,
    mertens_product,
    tail_estimate,
)

__version__ = "0.1.0"
