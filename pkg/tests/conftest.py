import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from monoideal import VariableSet, minimalize, parse_ideal  # noqa: E402


@pytest.fixture
def xy():
    return VariableSet(("x", "y"))


@pytest.fixture
def xyz():
    return VariableSet(("x", "y", "z"))


@pytest.fixture
def hexagon():
    amb = VariableSet(tuple(f"x{i}" for i in range(1, 7)))
    return parse_ideal("x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x6*x1", amb)


@pytest.fixture
def triangle(xyz):
    return parse_ideal("x*y, y*z, z*x", xyz)


def ideal(text, names="x,y"):
    return parse_ideal(text, VariableSet.parse(names))


def from_exponents(gens, names="x,y,z"):
    amb = VariableSet.parse(names)
    return minimalize([tuple(g) for g in gens], amb)


def random_small_ideal(rng, arity, max_exp, n_gens=4):
    """Random proper nonzero ideal in the first ``arity`` of x,y,z,w."""
    names = ",".join("xyzw"[:arity])
    gens = [tuple(rng.randint(0, max_exp) for _ in range(arity)) for _ in range(n_gens)]
    gens = [g for g in gens if any(g)] or [(1,) + (0,) * (arity - 1)]
    return from_exponents(gens, names)
