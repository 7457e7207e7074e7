"""Tests for the Monte Carlo sampler"""
