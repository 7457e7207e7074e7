"""Tests for Cauchy transforms and trace covariances"""
