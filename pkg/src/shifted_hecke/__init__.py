"""Kraskiewicz-Hecke insertion for signed permutations and GQ expansions."""
