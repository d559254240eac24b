"""Verification workbench for three-state vertex models on genus-five curves."""

__version__ = "0.1.0"
