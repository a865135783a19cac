"""Distortion errors – invalid intensity levels and illegal accumulation orders."""

from .error import Error


class InvalidLevel(Error):
    error_name = "Invalid Level"


class IllegalOrder(Error):
    error_name = "Illegal Order"
