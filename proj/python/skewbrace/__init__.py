"""Finite skew braces: subgroup lattices, holomorph constructions, Galois counts."""

from ._skewbrace import (
    Brace,
    Group,
    SkewBraceError,
    automorphism_count,
    brace_from_algebra,
    brace_from_holomorph_regular,
    fixture,
    fixture_names,
    galois_report,
    holomorph_size,
    load_json,
    subgroups,
)

__all__ = [
    "Brace",
    "Group",
    "SkewBraceError",
    "automorphism_count",
    "brace_from_algebra",
    "brace_from_holomorph_regular",
    "fixture",
    "fixture_names",
    "galois_report",
    "holomorph_size",
    "load_json",
    "subgroups",
]
