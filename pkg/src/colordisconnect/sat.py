"""Brute-force SAT and NAE-SAT oracles for small formulas."""

from __future__ import annotations

from typing import Callable, Iterator

from .reductions import Assignment, CnfFormula

MAX_VARIABLES = 24


def assignments(n: int) -> Iterator[dict[int, bool]]:
    """All assignments in binary order, variable 1 being the lowest bit."""
    for z in range(1 << n):
        yield {j: bool(z >> (j - 1) & 1) for j in range(1, n + 1)}


def _first(phi: CnfFormula, test: Callable[[dict[int, bool]], bool]) -> Assignment | None:
    if phi.n > MAX_VARIABLES:
        raise ValueError(f"{phi.n} variables exceed the brute-force limit of {MAX_VARIABLES}")
    for values in assignments(phi.n):
        if test(values):
            return Assignment(values)
    return None


def sat_bruteforce(phi: CnfFormula) -> Assignment | None:
    """Least satisfying assignment, or ``None``."""
    return _first(phi, phi.satisfied_by)


def nae_sat_bruteforce(phi: CnfFormula) -> Assignment | None:
    """Least assignment giving every clause a true and a false literal."""
    return _first(phi, phi.nae_satisfied_by)
