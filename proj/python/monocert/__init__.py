"""Monogamy exponents and certificates for tripartite pure states."""

from ._core import (
    DomainError,
    Error,
    InvalidArgument,
    MeasureTriple,
    PureState,
    alpha_from_bound,
    certify_log_base,
    certify_relaxed,
    concurrence_of_assistance,
    eof_from_concurrence,
    figure1_rows,
    figure2_rows,
    from_schmidt,
    haar_random,
    in_lambda,
    is_witness,
    measure_triple,
    min_alpha,
    named_state,
    reduced_density,
    residual,
    solve_x,
    sweep,
    w_class,
    wootters_concurrence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
