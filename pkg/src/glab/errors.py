"""Shared exception types."""


class GlabError(Exception):
    pass


class CapExceededError(GlabError):
    """An enumeration would exceed a configured combinatorial cap."""
