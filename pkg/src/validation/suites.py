"""
Acceptance suites

Each suite compares closed forms against an independent oracle (exact
rationals, ODEs, quadrature, Monte Carlo) and returns one CheckResult per
comparison. run_suite("all") runs every suite in order.
"""

import logging
import time
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

import numpy as np
from scipy.stats import qmc

from ..covariance.engine import cov_trace, g2_exact, g2_expansion, kernel_characteristic, limit_characteristic
from ..covariance.resolvent import resolvent_set
from ..errors import GueExpandError
from ..expansion.coefficients import alpha_j, expand_expectation
from ..expansion.smooth_input import SmoothInput
from ..hermite.density import density_arrays, whole_line_integral
from ..hermite.kernel import kernel_field, rho_n_grid
from ..montecarlo.sampler import GueSampler
from ..montecarlo.statistics import empirical_statistics
from ..numerics.rate_fit import RateEstimator
from ..symbolic.bivariate import gamma_l, gamma_zero_closed_form, upsilon_l
from ..symbolic.semicircle_expr import SemicircleExpr
from ..symbolic.tables import cjr_table, eta, eta_ode_residual
from .models import CheckResult, SuiteReport

logger = logging.getLogger(__name__)

LADDER = [8, 16, 32, 64]

GOLDEN_CJR = {
    (1, 2): Fraction(1),
    (2, 4): Fraction(21),
    (2, 5): Fraction(105),
    (3, 6): Fraction(1485),
    (3, 7): Fraction(18018),
    (3, 8): Fraction(50050),
}

STIELTJES_POINTS = [3j, 2 + 2j, -1 + 0.5j]
TWO_DIM_PAIRS = [(3j, 2 + 2j), (3j, 2j)]
NONLINEAR_POINTS = [complex(re, im) for re in (-3.0, -1.5, 0.0, 1.5, 3.0) for im in (-1.5, -0.5, 0.5, 1.5)]


def _bound(name: str, value: float, tolerance: float, detail: str = "") -> CheckResult:
    value = float(value)
    return CheckResult(name=name, passed=bool(value <= tolerance), value=value, tolerance=tolerance, detail=detail)


def _slope_check(name: str, slope, bound: float, points_used: int) -> CheckResult:
    if slope is None:
        return CheckResult(
            name=name,
            passed=False,
            tolerance=bound,
            detail=f"no slope fitted ({points_used} ladder points above the noise floor)",
        )
    return _bound(name, slope, bound)


def _zero_check(name: str, values: Sequence, tolerance: float) -> CheckResult:
    worst = max((abs(v) for v in values), default=0.0)
    return _bound(name, worst, tolerance)


def golden_suite() -> List[CheckResult]:
    checks = []
    table = cjr_table(3)
    for (j, r), expected in GOLDEN_CJR.items():
        got = table.get(j, r)
        checks.append(
            CheckResult(name=f"C[{j},{r}]", passed=got == expected, detail=f"{got} (expected {expected})")
        )
    for j in range(5):
        checks.append(CheckResult(name=f"eta_{j} recursion", passed=eta_ode_residual(j).is_zero()))
    text = eta(2).to_text()
    checks.append(
        CheckResult(
            name="eta_2 text",
            passed=text == "21·(λ²−4)^(−9/2) + 105·(λ²−4)^(−11/2)",
            detail=text,
        )
    )
    return checks


def ode_suite() -> List[CheckResult]:
    x = 8.0 * qmc.Halton(d=1, scramble=False).random(200)[:, 0] - 4.0
    checks = []
    for n in [1, 2, 4, 8, 16, 32, 64]:
        dens = density_arrays(n, x)
        scaled = dens.ode_residual / (1.0 + np.abs(dens.h3_direct) / n ** 2)
        checks.append(_bound(f"density ODE n={n}", np.max(scaled), 1e-8))
    return checks


def kernel_suite() -> List[CheckResult]:
    grid = np.linspace(-3.0, 3.0, 41)
    checks = []
    for n in [2, 5, 10, 50]:
        gap = np.max(np.abs(rho_n_grid(n, grid, grid, "hermite") - rho_n_grid(n, grid, grid, "density")))
        checks.append(_bound(f"kernel forms n={n}", gap, 1e-8))
        mass = kernel_field(n).total_mass()
        checks.append(_bound(f"kernel mass n={n}", abs(mass - 1.0), 1e-6))
    return checks


def expansion_suite() -> List[CheckResult]:
    inputs = [SmoothInput.gaussian(), SmoothInput.cosine(), SmoothInput.resolvent(3j).imag_part()]
    checks = []
    for g in inputs:
        for k in [0, 1, 2]:
            report = expand_expectation(g, n=LADDER[0], k=k, ladder=LADDER)
            checks.append(
                _slope_check(f"{g.name} k={k} remainder rate", report.slope, -(2 * k + 1.5), report.rate.points_used)
            )
    # odd input: every coefficient and every mean vanishes
    odd = SmoothInput.resolvent(3j).real_part()
    report = expand_expectation(odd, n=LADDER[0], k=2, ladder=LADDER)
    checks.append(_zero_check(f"{odd.name} coefficients", report.alphas, 1e-12))
    checks.append(_zero_check(f"{odd.name} means", [report.exact] + list(report.ladder_remainders), 1e-12))
    return checks


def stieltjes_suite() -> List[CheckResult]:
    checks = []
    for lam in STIELTJES_POINTS:
        g = SmoothInput.resolvent(lam)
        for j in range(4):
            expected = eta(j).evaluate(lam)
            rel = abs(alpha_j(g, j) - expected) / abs(expected)
            checks.append(_bound(f"alpha_{j}(g_{lam}) vs eta_{j}", rel, 1e-8))
    return checks


def moments_suite() -> List[CheckResult]:
    checks = []
    x2, x4 = SmoothInput.monomial(2), SmoothInput.monomial(4)
    for n in [1, 2, 4, 8]:
        checks.append(_bound(f"second moment n={n}", abs(whole_line_integral(x2.value, n) - 1.0), 1e-9))
        fourth = whole_line_integral(x4.value, n)
        checks.append(_bound(f"fourth moment n={n}", abs(fourth - (2.0 + 1.0 / n ** 2)), 1e-9))
    return checks


def two_dim_suite() -> List[CheckResult]:
    checks = []
    for lam, mu in TWO_DIM_PAIRS:
        f, g = SmoothInput.resolvent(lam), SmoothInput.resolvent(mu)
        gap = abs(cov_trace(f, g, 8) - g2_exact(8, lam, mu))
        checks.append(_bound(f"g2 closed form vs kernel ({lam}, {mu})", gap, 1e-7))
        gap0 = abs(gamma_l(0).evaluate(lam, mu) - gamma_zero_closed_form(lam, mu))
        checks.append(_bound(f"Gamma_0 closed form ({lam}, {mu})", gap0, 1e-12))
    for k in [0, 1]:
        report = g2_expansion(LADDER[0], 3j, 2j, k, ladder=LADDER)
        checks.append(
            _slope_check(f"g2 k={k} remainder rate", report.slope_diagnostic, -(2 * k + 1.5), report.rate.points_used)
        )
    lam = SemicircleExpr.lam()
    expected = (lam * lam * 21 + 20) * SemicircleExpr.power(-10) * 4
    checks.append(CheckResult(name="Upsilon_1 closed form", passed=upsilon_l(1) == expected))
    return checks


def nonlinear_suite() -> List[CheckResult]:
    checks = []
    for n in [4, 16]:
        worst = max(resolvent_set(n, lam).nonlinear_residual for lam in NONLINEAR_POINTS)
        checks.append(_bound(f"nonlinear identity n={n}", worst, 1e-7))
    return checks


def weak_suite() -> List[CheckResult]:
    checks = [
        _bound("limit mass", abs(limit_characteristic(0.0, 0.0) - 1.0), 1e-12),
        _bound("kernel mass", abs(kernel_characteristic(LADDER[0], 0.0, 0.0) - 1.0), 1e-8),
    ]
    for z, w in [(1.0, 0.0), (1.0, 2.0)]:
        limit = limit_characteristic(z, w)
        gaps = [kernel_characteristic(n, z, w) - limit for n in LADDER]
        fit = RateEstimator().fit(LADDER, gaps)
        checks.append(_slope_check(f"characteristic ({z:g}, {w:g}) rate", fit.slope, -1.8, fit.points_used))
    return checks


def mc_suite(draws: int = 100_000, seed: int = 20240101) -> List[CheckResult]:
    x, x2 = SmoothInput.monomial(1), SmoothInput.monomial(2)
    re_g = SmoothInput.resolvent(3j).real_part()

    second = empirical_statistics(GueSampler(8, seed=seed), x2, draws=draws)
    trace = empirical_statistics(GueSampler(8, seed=seed + 1), x, x, draws=draws)
    resolvent = empirical_statistics(GueSampler(8, seed=seed + 2), re_g, re_g, draws=draws)
    reference = cov_trace(re_g, re_g, 8)

    def sigmas(err, stderr):
        return abs(err) / stderr if stderr > 0 else float("inf")

    return [
        _bound("E tr x^2 (sigmas)", sigmas(second.mean_f - 1.0, second.mean_f_stderr), 4.0),
        _bound("Cov(Tr x, Tr x) (sigmas)", sigmas(trace.cov_fg - 1.0, trace.cov_stderr), 4.0),
        _bound("Cov(Tr Re g, Tr Re g) (sigmas)", sigmas(resolvent.cov_fg - reference, resolvent.cov_stderr), 4.0),
    ]


SUITES: Dict[str, Callable[[], List[CheckResult]]] = {
    "golden": golden_suite,
    "ode": ode_suite,
    "kernel": kernel_suite,
    "expansion": expansion_suite,
    "stieltjes": stieltjes_suite,
    "moments": moments_suite,
    "two-dim": two_dim_suite,
    "nonlinear": nonlinear_suite,
    "weak": weak_suite,
    "mc": mc_suite,
}


def _run_one(name: str) -> SuiteReport:
    start = time.perf_counter()
    try:
        checks = SUITES[name]()
    except GueExpandError as e:
        logger.error(f"Suite {name} aborted: {e}")
        checks = [CheckResult(name=f"{name} aborted", passed=False, detail=str(e))]
    report = SuiteReport(suite=name, checks=checks, elapsed=time.perf_counter() - start)
    status = "passed" if report.passed else f"FAILED ({len(report.failures)} checks)"
    logger.info(f"Suite {name} {status} in {report.elapsed:.1f}s")
    return report


def run_suite(name: str) -> List[SuiteReport]:
    """
    Run one named suite, or every suite for "all"

    Raises:
        KeyError: If the suite name is unknown
    """
    if name == "all":
        return [_run_one(s) for s in SUITES]
    if name not in SUITES:
        raise KeyError(f"Unknown suite: {name}")
    return [_run_one(name)]
