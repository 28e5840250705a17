"""Test package for fdmac."""
