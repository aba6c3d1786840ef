"""Low-degree Chebyshev approximation of x**n on [-1, 1] with exact error."""

from .approx_error import (
    DegreePlan,
    ErrorReport,
    erfc,
    estimates,
    exact_error,
    grid_sup_error,
    hoeffding_bound,
    select_degree,
    select_degree_bound,
    select_degree_exact,
)
from .chebyshev import (
    ChebSeries,
    OutOfDomainWarning,
    cheb_nodes,
    clenshaw_eval,
    eval_exact,
    monomial_expansion,
    to_power_basis,
    truncate,
)
from .exact_combinatorics import (
    DomainError,
    binomial,
    coin_toss_oracle,
    p_exact,
    partial_sum_bound,
    tail_sum,
)
from .matpow import (
    MatVecCounter,
    SpectrumWarning,
    SymMatrix,
    auto_matpow,
    cheb_apply,
    cheb_matpow,
    repeated_matpow,
)

__version__ = "0.1.0"
