import pytest

from qpmut import load_example
from qpmut.core import Arrow, PathPoly, Quiver
from qpmut.potential import GradedQP
from qpmut.qpdoc import parse_algebra, parse_qp


@pytest.fixture
def diamond_quiver():
    return Quiver(
        ["1", "2", "3", "4"],
        [Arrow("a", "1", "2"), Arrow("b", "2", "4"),
         Arrow("c", "1", "3"), Arrow("d", "3", "4"),
         Arrow("rho", "4", "1", 1)],
    )


@pytest.fixture
def diamond_qp(diamond_quiver):
    w = PathPoly.of(diamond_quiver.path(["rho", "a", "b"]))
    return GradedQP(diamond_quiver, w, declared_degree=1)


@pytest.fixture
def diamond_algebra():
    return parse_algebra(load_example("diamond_algebra"))


def load_qp(name):
    return parse_qp(load_example(name))


def load_alg(name):
    return parse_algebra(load_example(name))
