"""Exact checks for chain complexes, simplicial modules and dg-categories."""

import json

from ._core import (
    ChainComplex,
    Error,
    Field,
    FieldMismatch,
    FormatError,
    ShapeError,
    StructuralError,
    UnsupportedField,
    chain_interval_json,
    normalize_gamma,
    tensor,
)
from . import _core

__all__ = [
    "ChainComplex",
    "Error",
    "Field",
    "FieldMismatch",
    "FormatError",
    "ShapeError",
    "StructuralError",
    "UnsupportedField",
    "chain_interval_json",
    "characterization",
    "dk_check",
    "dold_kan",
    "normalize_gamma",
    "path_object",
    "suite_category",
    "tensor",
    "verify_hopf",
    "verify_interval",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def verify_interval(builtin, field=None, mode="strict", truncation=2):
    """Cocategory and cylinder reports for a builtin interval: chain, smod or cat."""
    return json.loads(_core._verify_interval(builtin, field, mode, truncation))


def verify_hopf(algebra, field=None, mode="strict", actions="trivial"):
    """Reports for the interval of a Hopf algebra given as a dict or JSON text."""
    return json.loads(_core._verify_hopf(_text(algebra), field, mode, actions))


def dold_kan(trials=100, seed=42, max_degree=4, max_rank=3, field="F7", inject_fault=False):
    """Seeded Dold-Kan property suite; the summary is determined by the arguments."""
    return json.loads(_core._dold_kan(trials, seed, max_degree, max_rank, field, inject_fault))


def path_object(category, field=None, max_objects=64):
    """Builds and verifies the path object of a category given as a dict or JSON text."""
    return json.loads(_core._path_object(_text(category), field, max_objects))


def dk_check(functor, field=None):
    """DK predicates of a functor given as a dict or JSON text."""
    return json.loads(_core._dk_check(_text(functor), field))


def characterization(trials=50, seed=2024, field="F2"):
    """Compares both sides of the trivial fibration characterization on random functors."""
    return json.loads(_core._characterization(trials, seed, field))


def suite_category(name, field):
    """One of unit, disk, groupoid, dual_numbers as a category document."""
    return json.loads(_core._suite_category(name, field))
