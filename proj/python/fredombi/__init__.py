"""Fuzzy relational equations A phi x = b under the max-Dombi composition."""

from ._core import (
    CandidateCapError,
    check_feasible,
    compose,
    dombi,
    generate,
    max_solution,
    residual,
    solve,
)

__all__ = [
    "CandidateCapError",
    "check_feasible",
    "compose",
    "dombi",
    "generate",
    "max_solution",
    "residual",
    "solve",
]
