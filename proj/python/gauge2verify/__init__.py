"""Exact verification engine for 2-connection identities (python frontend)."""

try:
    from ._gauge2 import (  # noqa: F401
        bianchi_residual_terms,
        run_scenario_file,
        run_scenario_text,
        scenario_all_pass,
        simplex_monomial_integral,
        validate_builtin,
    )
except ImportError:  # in-tree build: extension on PYTHONPATH next to the package
    from _gauge2 import (  # noqa: F401
        bianchi_residual_terms,
        run_scenario_file,
        run_scenario_text,
        scenario_all_pass,
        simplex_monomial_integral,
        validate_builtin,
    )

__all__ = [
    "bianchi_residual_terms",
    "run_scenario_file",
    "run_scenario_text",
    "scenario_all_pass",
    "simplex_monomial_integral",
    "validate_builtin",
]
