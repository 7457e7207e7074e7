"""Tests for the transfer operator and expansion coefficients"""
