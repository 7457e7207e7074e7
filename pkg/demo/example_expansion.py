"""
Example script demonstrating the expansion library

This script shows how to use the density, expansion, covariance and
Monte Carlo modules programmatically.
"""

import sys
import os

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.covariance import g2_expansion, variance_clt_limit
from src.expansion import SmoothInput, alpha_estimate, expand_expectation
from src.hermite import density_bundle
from src.montecarlo import GueSampler, empirical_statistics
from src.symbolic import eta

LADDER = [8, 16, 32, 64]


def example_density():
    """Example: Spectral density and its ODE"""
    print("Example 1: Spectral Density")
    print("-" * 50)

    for n in [1, 4, 16]:
        bundle = density_bundle(n, 0.5)
        print(f"n={n:>2}: h={bundle.h:.6f}  h'={bundle.h1:+.6f}  ODE residual={bundle.ode_residual:.1e}")
    print()


def example_mean_expansion():
    """Example: Expansion of E{tr_n g(X_n)}"""
    print("Example 2: Mean Expansion")
    print("-" * 50)

    g = SmoothInput.gaussian()
    for k in [0, 1, 2]:
        report = expand_expectation(g, n=16, k=k, ladder=LADDER)
        print(f"k={k}: remainder={report.remainder:.3e}, slope={report.slope:.2f}")

    estimate = alpha_estimate(SmoothInput.resolvent(2 + 2j), 2)
    print(f"alpha_2(g_2+2i) = {estimate.distribution:.10f}")
    print(f"eta_2(2+2i)     = {eta(2).evaluate(2 + 2j):.10f}")
    print(f"Iterated-T gap  = {estimate.gap:.1e}")
    print()


def example_covariance():
    """Example: Resolvent covariance expansion"""
    print("Example 3: Covariance Expansion")
    print("-" * 50)

    report = g2_expansion(16, 3j, 2j, k=1, ladder=LADDER)
    print(f"Exact:      {report.exact:.10f}")
    print(f"Order 1:    {report.expansion_partials[-1]:.10f}")
    print(f"Remainder slope: {report.slope_diagnostic:.2f}")
    print(f"Limit Var Tr X^2: {variance_clt_limit(SmoothInput.monomial(2)):.6f}")
    print()


def example_monte_carlo():
    """Example: Monte Carlo cross-check"""
    print("Example 4: Monte Carlo")
    print("-" * 50)

    stats = empirical_statistics(GueSampler(8, seed=7), SmoothInput.monomial(1), draws=20_000)
    print(f"E tr x          = {stats.mean_f:+.4f} ± {stats.mean_f_stderr:.4f}")
    print(f"Var Tr x        = {stats.cov_fg:.4f} ± {stats.cov_stderr:.4f} (exact 1)")
    print()


if __name__ == "__main__":
    print("Expansion Examples")
    print("=" * 50)
    print()

    example_density()
    example_mean_expansion()
    example_covariance()
    example_monte_carlo()

    print("All examples completed successfully!")
