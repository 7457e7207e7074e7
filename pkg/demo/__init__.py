"""
Demo and test suite for gue-expand

This package contains demonstration code and test cases for:
- Hermite functions, spectral density and kernels
- Transfer operator and expansion coefficients
- Exact coefficient algebra and Cauchy transforms
- Monte Carlo validation and the CLI
"""
