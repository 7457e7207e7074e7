"""Tests for the exact semicircle-family algebra"""
