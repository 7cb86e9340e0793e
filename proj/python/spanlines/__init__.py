"""Spanned-line spectra of planar point configurations in exact arithmetic."""

import json as _json

from ._spanlines import (
    Configuration,
    FieldError,
    FormatError,
    GeometryError,
    InequalityReport,
    LineSpectrum,
    RenderError,
    any_failure,
    check_names,
    cli,
    generate,
    oracle_spanned_lines,
    rational_configuration,
    read_configuration,
    render_svg,
    run_checks,
    spanned_lines,
    spectrum,
    write_configuration,
)
from ._spanlines import exhaustive_search as _exhaustive_search
from ._spanlines import local_search as _local_search

__all__ = [
    "Configuration",
    "FieldError",
    "FormatError",
    "GeometryError",
    "InequalityReport",
    "LineSpectrum",
    "RenderError",
    "any_failure",
    "check",
    "check_names",
    "cli",
    "exhaustive_search",
    "generate",
    "local_search",
    "oracle_spanned_lines",
    "rational_configuration",
    "read_configuration",
    "render_svg",
    "run_checks",
    "spanned_lines",
    "spectrum",
    "write_configuration",
]


def check(config, which="all", threads=1):
    """Reports for one configuration (spectrum computed on the fly)."""
    return run_checks(spectrum(config, threads=threads), config.is_real, which)


def exhaustive_search(**kwargs):
    """Exhaustive grid search; returns the search record as a dict."""
    return _json.loads(_exhaustive_search(**kwargs))


def local_search(**kwargs):
    """Seeded local search; returns the search record as a dict."""
    return _json.loads(_local_search(**kwargs))
