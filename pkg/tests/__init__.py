"""Test suite for tradenet."""
