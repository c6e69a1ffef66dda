import pytest

from csgames.enumeration import EnumSpec, raw_pairs
from csgames.invariants import Invariants


def inv(n_bar, matrix) -> Invariants:
    return Invariants(tuple(n_bar), tuple(tuple(r) for r in matrix))


@pytest.fixture(scope="session")
def small_catalog():
    """Every canonical invariant pair for n <= 6, all class counts."""
    out = {}
    for n in range(1, 7):
        for t in range(1, n + 1):
            out[(n, t)] = [inv(s, m) for s, m in raw_pairs(EnumSpec(n=n, t=t))]
    return out
