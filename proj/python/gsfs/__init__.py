"""Generalized Seifert fiber space symbols: notation, canonical forms,
equivalence, double branched covers, local-action bridge and census."""

from ._core import (
    BoundsError,
    CensusRecord,
    EnumBounds,
    Epsilon,
    FormatError,
    GsfsError,
    GsfsSymbol,
    InvalidSymbol,
    LocalActionSymbol,
    NotBranched,
    NotInImage,
    OverflowError,
    ParseError,
    Rule,
    Violation,
    build_census,
    census_text,
    check_cover_consistency,
    double_cover,
    enumerate,
    equivalent,
    equivalent_local,
    from_local_action,
    is_manifold,
    is_normalized,
    local_sing_count,
    normalize_gsfs,
    normalize_local,
    parse_gsfs,
    parse_local,
    read_census,
    render_gsfs,
    render_local,
    reverse_orientation,
    sing_count,
    to_local_action,
    validate_gsfs,
    validate_local,
    write_census,
)

__all__ = [name for name in dir() if not name.startswith("_")]
