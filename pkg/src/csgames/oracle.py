"""Extensional brute-force ground truth for small player counts.

Every monotone simple game on n players is generated as an antichain of
nonempty coalitions, complete ones are kept, and each is bucketed by its
canonical invariants.  Role flags come from the coalition-level definitions,
so counts derived here share nothing with the backtracking generator beyond
the canonical form itself.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .core import SimpleGame
from .errors import CapacityError, NotCompleteError
from .invariants import Invariants, extract
from .roles import Role, semantic_roles

ORACLE_MAX_PLAYERS = 5


def labeled_games(n: int) -> Iterator[tuple[int, ...]]:
    """Every nonempty antichain of nonempty coalition masks, exactly once."""
    subsets = list(range(1, 1 << n))

    def rec(idx: int, chosen: tuple[int, ...]):
        for j in range(idx, len(subsets)):
            m = subsets[j]
            ok = True
            for c in chosen:
                inter = c & m
                if inter == c or inter == m:
                    ok = False
                    break
            if ok:
                nxt = chosen + (m,)
                yield nxt
                yield from rec(j + 1, nxt)

    yield from rec(0, ())


@lru_cache(maxsize=8)
def catalog(n: int) -> dict[Invariants, frozenset[Role]]:
    """Canonical invariants of every complete game on n players, with role flags."""
    if n > ORACLE_MAX_PLAYERS:
        raise CapacityError(f"oracle enumerates all antichains; capped at n={ORACLE_MAX_PLAYERS}")
    out: dict[Invariants, frozenset[Role]] = {}
    for masks in labeled_games(n):
        game = SimpleGame(n, masks)
        try:
            inv = extract(game)
        except NotCompleteError:
            continue
        if inv not in out:
            out[inv] = semantic_roles(game).present
    return out


def oracle_count(
    n: int,
    t: int | None = None,
    require=(),
    forbid=(),
    rows: int | None = None,
) -> int:
    """Isomorphism-class count under the same filters the generator accepts."""
    require = frozenset(require)
    forbid = frozenset(forbid)
    total = 0
    for inv, roles in catalog(n).items():
        if t is not None and inv.t != t:
            continue
        if rows is not None and inv.r != rows:
            continue
        if not require <= roles:
            continue
        if forbid & roles:
            continue
        total += 1
    return total
