"""Certification of hyponormality for terraced matrices generated by transcendental sequences."""

__version__ = "0.1.0"
