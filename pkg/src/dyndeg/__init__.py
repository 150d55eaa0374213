"""Dynamical degrees of simple abelian varieties: exact polynomial tools."""
