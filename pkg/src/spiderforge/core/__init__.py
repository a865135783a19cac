"""Core package – errors, constants, and shared utilities."""
