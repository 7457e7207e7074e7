"""Tests for acceptance suites"""
