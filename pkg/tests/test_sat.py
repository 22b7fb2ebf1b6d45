import pytest

from colordisconnect.generators import random_cnf
from colordisconnect.reductions import CnfFormula
from colordisconnect.sat import MAX_VARIABLES, assignments, nae_sat_bruteforce, sat_bruteforce


def test_assignment_order():
    order = [tuple(a.values()) for a in assignments(2)]
    assert order == [(False, False), (True, False), (False, True), (True, True)]


def test_nae_least_witness():
    phi = CnfFormula.from_ints(2, [[1, 2, 2]])
    w = nae_sat_bruteforce(phi)
    assert w.as_tuple() == (True, False)


def test_sat_examples():
    assert sat_bruteforce(CnfFormula.from_ints(1, [[1, 1, 1], [-1, -1, -1]])) is None
    assert sat_bruteforce(CnfFormula.from_ints(2, [[-1, 2, 2]])).as_tuple() == (False, False)
    assert nae_sat_bruteforce(CnfFormula.from_ints(1, [[1, 1, 1]])) is None


def test_nae_complement_symmetry():
    for seed in range(30):
        phi = random_cnf(4, 3, seed)
        for a in assignments(4):
            flipped = {j: not v for j, v in a.items()}
            assert phi.nae_satisfied_by(a) == phi.nae_satisfied_by(flipped)


def test_nae_implies_sat():
    for seed in range(30):
        phi = random_cnf(3, 3, seed)
        if nae_sat_bruteforce(phi) is not None:
            assert sat_bruteforce(phi) is not None


def test_variable_limit():
    phi = CnfFormula.from_ints(MAX_VARIABLES + 1, [[1, 2, 3]])
    with pytest.raises(ValueError):
        sat_bruteforce(phi)
