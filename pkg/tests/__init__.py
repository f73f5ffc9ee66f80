"""Test package for cauchy-projection."""
