import pytest

from quivalg.monomial import build
from quivalg.nakayama import KupischSeries, kupisch_to_algebra
from quivalg.quiver import Quiver, QuiverShape


def branching_example():
    """Five vertices, arrows 1->2, 3->2, 2->4, 2->5 (file labels), with the
    two composable products set to zero."""
    quiver = Quiver.from_arrows(5, [("a1", 0, 1), ("a2", 2, 1),
                                    ("a3", 1, 3), ("a4", 1, 4)])
    return build(quiver, [quiver.path(["a1", "a3"]), quiver.path(["a2", "a4"])])


@pytest.fixture(scope="session")
def branching_algebra():
    return branching_example()


@pytest.fixture(scope="session")
def dual_numbers():
    """One loop with square zero."""
    return kupisch_to_algebra(KupischSeries(QuiverShape.CYCLIC, (2,)))


@pytest.fixture(scope="session")
def a2():
    """Path algebra of the two-vertex chain."""
    return kupisch_to_algebra(KupischSeries(QuiverShape.LINEAR, (2, 1)))


@pytest.fixture(scope="session")
def a3_full():
    """Path algebra of the three-vertex chain, no relations."""
    return kupisch_to_algebra(KupischSeries(QuiverShape.LINEAR, (3, 2, 1)))


@pytest.fixture(scope="session")
def cyclic_32():
    """Two-vertex cycle with one quadratic relation: lengths (3, 2)."""
    return kupisch_to_algebra(KupischSeries(QuiverShape.CYCLIC, (3, 2)))


@pytest.fixture(scope="session")
def semisimple():
    return kupisch_to_algebra(KupischSeries(QuiverShape.LINEAR, (1,)))
