"""Core utilities for qbist tools."""
