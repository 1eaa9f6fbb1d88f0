"""Rationality, cut and Gruenberg-Kegel graph queries on small finite groups."""

from ._ratgk import (
    Group,
    GroupError,
    SpecError,
    admissible_graphs,
    group_from_spec,
    named_group,
    verify_paper,
    witness_suite,
)

__all__ = [
    "Group",
    "GroupError",
    "SpecError",
    "admissible_graphs",
    "group_from_spec",
    "named_group",
    "verify_paper",
    "witness_suite",
]
