"""Tests for shared numerical support"""
