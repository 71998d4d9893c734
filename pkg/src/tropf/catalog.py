"""Small root configurations used throughout the tests and demos."""

from .seeds import RootConfig

A2 = ((0, 1), (-1, 0))
A3 = ((0, 1, 0), (-1, 0, 1), (0, -1, 0))
B2 = ((0, 1), (-2, 0))
MARKOV = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))


def a2_principal():
    return RootConfig.principal(A2)


def a3_principal():
    return RootConfig.principal(A3)


def b2_principal():
    """Type B2 with skew-symmetrizer (2, 1)."""
    return RootConfig.principal(B2, s=(2, 1))


def markov_principal():
    return RootConfig.principal(MARKOV)


def a2_coefficient_free():
    return RootConfig(A2, lam=((0, 1), (-1, 0)), names=("x1", "x2"))
