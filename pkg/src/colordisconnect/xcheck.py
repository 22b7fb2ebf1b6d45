"""Cross-validation of every reduction against the brute-force oracles."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .cuts import find_matching_cut, find_proper_edge_cut, find_rainbow_vertex_cut
from .graph import is_bipartite
from .reductions import (
    CnfFormula,
    build_Gphi_rvd,
    build_Hphi_prime,
    decode_assignment,
    pad_with_path,
    rvd_variant_bipartite,
    rvd_variant_deg3,
)
from .sat import nae_sat_bruteforce, sat_bruteforce
from .solvers import BudgetExceeded, DEFAULT_MAX_EDGES, DEFAULT_MAX_VERTICES

RVD_VARIANTS = ("base", "deg3", "bipartite")


@dataclass
class RunConfig:
    budget_edges: int = DEFAULT_MAX_EDGES
    budget_vertices: int = DEFAULT_MAX_VERTICES
    nae_max_n: int = 4
    nae_max_m: int = 3
    rvd_max_n: int = 3
    rvd_max_m: int = 2
    seed: int = 0
    out: str | None = None

    def __post_init__(self):
        for name in ("budget_edges", "budget_vertices", "nae_max_n", "nae_max_m", "rvd_max_n", "rvd_max_m"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


@dataclass
class CrossCheckReport:
    formula: CnfFormula
    reduction: str
    oracle_sat: bool
    cut_present: bool
    timings: dict[str, float] = field(default_factory=dict)
    certificate: object = None
    oracle_assignment: object = None
    decoded: object = None
    structure: dict[str, bool] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def agreement(self) -> bool:
        return self.oracle_sat == self.cut_present

    @property
    def ok(self) -> bool:
        """Agreement, every structural check holds, and no hard decode failure."""
        return self.agreement and all(self.structure.values())

    def summary(self) -> str:
        verdict = "sat" if self.oracle_sat else "unsat"
        cut = "present" if self.cut_present else "absent"
        checks = ",".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in self.structure.items())
        status = "agree" if self.agreement else "DISAGREE"
        line = f"{self.reduction} {self.formula.to_ints()} oracle={verdict} cut={cut} {status}"
        if checks:
            line += f" [{checks}]"
        for w in self.warnings:
            line += f" warning: {w}"
        return line


def _check_size(phi: CnfFormula, max_n: int, max_m: int) -> None:
    if phi.n > max_n or phi.m > max_m:
        raise BudgetExceeded(f"formula with n={phi.n}, m={phi.m} exceeds the cross-check limit n<={max_n}, m<={max_m}")


def xcheck_nae(phi: CnfFormula, config: RunConfig | None = None) -> CrossCheckReport:
    """Matching cut between u and v in H'_phi against NAE-satisfiability."""
    config = config or RunConfig()
    _check_size(phi, config.nae_max_n, config.nae_max_m)
    t0 = time.perf_counter()
    art = build_Hphi_prime(phi)
    t1 = time.perf_counter()
    cert = find_matching_cut(art.graph, *art.terminals)
    t2 = time.perf_counter()
    witness = nae_sat_bruteforce(phi)
    t3 = time.perf_counter()
    report = CrossCheckReport(
        phi,
        "nae",
        witness is not None,
        cert is not None,
        {"build": t1 - t0, "cut": t2 - t1, "oracle": t3 - t2},
        cert,
        witness,
        structure={"max_degree_4": art.graph.max_degree() == 4, "simple": art.graph.is_simple()},
    )
    if cert is not None:
        report.decoded = decode_assignment(art, cert)
        if not report.decoded.satisfies:
            report.warnings.append("decoded assignment is not NAE-satisfying")
    return report


def xcheck_pad(phi: CnfFormula, k: int, config: RunConfig | None = None) -> CrossCheckReport:
    """Proper u-v edge-cut in the padded graph against NAE-satisfiability."""
    config = config or RunConfig()
    _check_size(phi, config.nae_max_n, config.nae_max_m)
    t0 = time.perf_counter()
    art = pad_with_path(build_Hphi_prime(phi), k)
    t1 = time.perf_counter()
    cert = find_proper_edge_cut(art.graph, art.edge_coloring, *art.terminals)
    t2 = time.perf_counter()
    witness = nae_sat_bruteforce(phi)
    t3 = time.perf_counter()
    return CrossCheckReport(
        phi,
        f"pad-{k}",
        witness is not None,
        cert is not None,
        {"build": t1 - t0, "cut": t2 - t1, "oracle": t3 - t2},
        cert,
        witness,
        structure={
            "max_degree_4": art.graph.max_degree() == 4,
            "colors_used": len(art.edge_coloring.used()) == max(k, 1),
        },
    )


def build_rvd_variant(phi: CnfFormula, variant: str):
    if variant not in RVD_VARIANTS:
        raise ValueError(f"unknown rvd variant {variant!r}")
    art = build_Gphi_rvd(phi)
    if variant == "deg3":
        return rvd_variant_deg3(art)
    if variant == "bipartite":
        return rvd_variant_bipartite(art)
    return art


def xcheck_sat_rvd(phi: CnfFormula, variant: str = "base", config: RunConfig | None = None) -> CrossCheckReport:
    """Rainbow s-t vertex-cut in the chosen variant against satisfiability."""
    config = config or RunConfig()
    _check_size(phi, config.rvd_max_n, config.rvd_max_m)
    t0 = time.perf_counter()
    base = build_Gphi_rvd(phi)
    art = build_rvd_variant(phi, variant)
    t1 = time.perf_counter()
    cert = find_rainbow_vertex_cut(art.graph, art.vertex_coloring, *art.terminals)
    t2 = time.perf_counter()
    witness = sat_bruteforce(phi)
    t3 = time.perf_counter()
    structure = {
        "order": base.graph.n == 10 * phi.m + 2 * phi.n + 2,
        "colors": len(base.vertex_coloring.used()) == phi.n + 5 * phi.m + 1,
    }
    if variant == "deg3":
        structure["max_degree_3"] = art.graph.max_degree() == 3
    if variant == "bipartite":
        structure["bipartite"] = is_bipartite(art.graph)
    report = CrossCheckReport(
        phi,
        f"rvd-{variant}",
        witness is not None,
        cert is not None,
        {"build": t1 - t0, "cut": t2 - t1, "oracle": t3 - t2},
        cert,
        witness,
        structure=structure,
    )
    if cert is not None:
        report.decoded = decode_assignment(art, cert)
        # the rvd decoding rule is exact, so a failure here is a hard error
        structure["decoded_satisfies"] = report.decoded.satisfies
    return report
