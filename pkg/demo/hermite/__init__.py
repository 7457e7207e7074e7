"""Tests for Hermite functions, density and kernels"""
