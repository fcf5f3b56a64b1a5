"""Utility functions and helpers.

Common utilities for:
- Configuration loading
- Logging configuration
- Error types
- Exact arithmetic over Q(sqrt 2)
"""
