"""Centralizers of involutions in finite Coxeter groups."""

import json

from ._core import (
    Analysis,
    CapabilityError,
    brute_force_orders,
    check_ids,
    coxeter_order,
    predict_profile,
)

__all__ = [
    "Analysis",
    "CapabilityError",
    "analyze",
    "brute_force_orders",
    "check_ids",
    "coxeter_order",
    "predict_profile",
    "theorems",
    "verify",
]


def analyze(type, rank=None, m=None):
    """Profiles of every involution class, sorted by degree then label."""
    return Analysis(type, rank=rank, m=m).profiles()


def verify(type, rank=None, m=None):
    """Diff against the embedded tables: {'ok': bool, 'mismatches': [...], ...}."""
    return json.loads(Analysis(type, rank=rank, m=m).verify_json())


def theorems(type, rank=None, m=None, checks=()):
    return json.loads(Analysis(type, rank=rank, m=m).theorems_json(list(checks)))
