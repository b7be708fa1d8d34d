"""
__init__.py file for utils folder
"""

from .data_export import config_hash, export_to_csv, read_csv
from .errors import (
    CommutationError,
    ConfigError,
    ConvergenceError,
    DataError,
    DefinitenessError,
    DegenerateSeriesError,
    DimensionError,
    DomainError,
    LangevinGraphError,
    NumericalError,
    ScopeError,
    SingularityError,
    StabilityError,
    ValidationError,
)
from .linalg import (
    check_spd,
    eigenvalues,
    expm,
    is_skew_symmetric,
    is_symmetric,
    solve_discrete_lyapunov,
    solve_lyapunov,
    spectral_abscissa,
    sqrtm_spd,
)
from .logging import (
    get_logger,
    get_verbosity,
    set_formatting,
    set_handler,
    set_verbosity,
    set_verbosity_debug,
    set_verbosity_error,
    set_verbosity_from_name,
    set_verbosity_info,
    set_verbosity_warning,
    unset_formatting,
    unset_handler,
    warning_once,
)
from .prettify_exec_info import prettify_exec_info

__all__ = [
    # Errors
    "LangevinGraphError",
    "ConfigError",
    "ValidationError",
    "DomainError",
    "DimensionError",
    "ScopeError",
    "DataError",
    "DegenerateSeriesError",
    "NumericalError",
    "StabilityError",
    "DefinitenessError",
    "SingularityError",
    "CommutationError",
    "ConvergenceError",
    # Linear algebra
    "eigenvalues",
    "spectral_abscissa",
    "expm",
    "solve_lyapunov",
    "solve_discrete_lyapunov",
    "sqrtm_spd",
    "check_spd",
    "is_symmetric",
    "is_skew_symmetric",
    # Export
    "config_hash",
    "export_to_csv",
    "read_csv",
    "prettify_exec_info",
    # Logging
    "get_logger",
    "get_verbosity",
    "set_formatting",
    "set_handler",
    "set_verbosity",
    "set_verbosity_debug",
    "set_verbosity_error",
    "set_verbosity_from_name",
    "set_verbosity_info",
    "set_verbosity_warning",
    "unset_formatting",
    "unset_handler",
    "warning_once",
]
