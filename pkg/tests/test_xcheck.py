import pytest

from colordisconnect.generators import all_cnf
from colordisconnect.reductions import CnfFormula
from colordisconnect.solvers import BudgetExceeded
from colordisconnect.xcheck import RunConfig, build_rvd_variant, xcheck_nae, xcheck_pad, xcheck_sat_rvd


def test_nae_reports():
    for phi in all_cnf(1, 1):
        report = xcheck_nae(phi)
        assert report.ok, report.summary()
        assert set(report.timings) == {"build", "cut", "oracle"}


def test_pad_and_rvd_reports():
    phi = CnfFormula.from_ints(2, [[1, -2, 2], [-1, -1, 2]])
    assert xcheck_pad(phi, 3).ok
    for variant in ("base", "deg3", "bipartite"):
        report = xcheck_sat_rvd(phi, variant)
        assert report.ok and report.oracle_sat and report.structure["decoded_satisfies"]


def test_summary_text():
    report = xcheck_nae(CnfFormula.from_ints(1, [[1, 1, 1]]))
    assert report.summary().startswith("nae [[1, 1, 1]] oracle=unsat cut=absent agree")


def test_limits():
    big = CnfFormula.from_ints(5, [[1, 2, 3]])
    with pytest.raises(BudgetExceeded):
        xcheck_nae(big)
    with pytest.raises(BudgetExceeded):
        xcheck_sat_rvd(big, config=RunConfig(rvd_max_n=2))
    with pytest.raises(ValueError):
        RunConfig(budget_edges=0)
    with pytest.raises(ValueError):
        build_rvd_variant(big, "planar")
