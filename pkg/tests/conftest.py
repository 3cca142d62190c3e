import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ghfp import (
    Field,
    check_cocycle,
    elementary_abelian,
    lift,
    multiplication_cocycle,
    tensor,
    trivial_cocycle,
)
from ghfp.ghmatrix import sylvester_power_cocycle
from ghfp.planar import planar_coboundary

import paper_data


@pytest.fixture(scope="session")
def gf3():
    return Field(3, 1)


@pytest.fixture(scope="session")
def gf4():
    return Field(2, 2)


@pytest.fixture(scope="session")
def gf8():
    return Field(2, 3)


@pytest.fixture(scope="session")
def gf81():
    return Field(3, 4, paper_data.POLY_81)


@pytest.fixture(scope="session")
def s3_cocycle(gf3):
    return multiplication_cocycle(gf3)


@pytest.fixture(scope="session")
def s9_cocycle(gf3):
    """S^2: the order-9 Sylvester-type cocycle of the worked example."""
    return sylvester_power_cocycle(gf3, 2)


@pytest.fixture(scope="session")
def s8_cocycle(gf8):
    return multiplication_cocycle(gf8, "primitive-power")


@pytest.fixture(scope="session")
def order4_cocycle(gf4):
    return check_cocycle(paper_data.H_ORDER4, elementary_abelian(2, 2), gf4)


@pytest.fixture(scope="session")
def dphi43(gf81):
    return planar_coboundary(4, 3, gf81)


@pytest.fixture(scope="session")
def corpus(gf3, s3_cocycle, s9_cocycle, s8_cocycle, order4_cocycle, dphi43, gf81):
    """Named cocycles for the equivalence suite: base constructions plus
    tensors (lifting GF(3) factors into GF(81) where fields differ)."""
    s3_in_81 = lift(s3_cocycle, gf81)
    return {
        "trivial_z3": trivial_cocycle(elementary_abelian(3, 1), gf3),
        "s3": s3_cocycle,
        "s9": s9_cocycle,
        "s8": s8_cocycle,
        "order4": order4_cocycle,
        "dphi43": dphi43,
        "s3xs3": tensor(s3_cocycle, s3_cocycle),
        "s3xs9": tensor(s3_cocycle, s9_cocycle),
        "trivialxs3": tensor(trivial_cocycle(elementary_abelian(3, 1), gf3),
                             s3_cocycle),
        "s3lift_x_dphi43": tensor(s3_in_81, dphi43),
    }
