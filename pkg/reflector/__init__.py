"""Reflections of marked posemigroups into quantales.

The package can be imported (`python -m reflector.cli`) or run as a script
(`python reflector/cli.py`).
"""
