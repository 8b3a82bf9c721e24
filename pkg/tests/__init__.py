"""Test suite for ultralis."""
