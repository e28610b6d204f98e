from .numbers import (
    parse_rational,
    parse_scalar,
    format_rational,
    parse_window,
    parse_coefficients,
    parse_rational_list,
)
from .spec_io import (
    KINDS,
    parse_function,
    emit_function,
    load_document,
    load_function,
    dump_function,
    parse_periodic_profile,
    parse_antiperiodic_profile,
    parse_params,
)
from .formatting import (
    event_to_dict,
    census_to_dict,
    nevanlinna_to_dict,
    fermat_to_dict,
    linearity_to_dict,
    bruck_to_dict,
    format_json,
    format_plot_tsv,
)

__all__ = [
    "parse_rational",
    "parse_scalar",
    "format_rational",
    "parse_window",
    "parse_coefficients",
    "parse_rational_list",
    "KINDS",
    "parse_function",
    "emit_function",
    "load_document",
    "load_function",
    "dump_function",
    "parse_periodic_profile",
    "parse_antiperiodic_profile",
    "parse_params",
    "event_to_dict",
    "census_to_dict",
    "nevanlinna_to_dict",
    "fermat_to_dict",
    "linearity_to_dict",
    "bruck_to_dict",
    "format_json",
    "format_plot_tsv",
]
