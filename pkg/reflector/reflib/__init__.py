"""Internal library code for the reflector.

Posets, posemigroups, markings, nuclei and both reflections live here so
that the command modules only parse arguments and print.
"""
