"""Extensional simple games: coalitions, winning sets, desirability.

Coalitions are bitmasks over players 1..n (player i is bit i-1).  Every value
is immutable after construction, so games can be shared freely across
processes.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable

from .errors import CapacityError, NotCompleteError, ValidationError

MAX_PLAYERS = 64
# The swap quantifier touches all 2^(n-2) subsets; keep it desk-sized.
DESIRABILITY_MAX_PLAYERS = 25
# from_weighted scans every coalition once.
WEIGHTED_MAX_PLAYERS = 20


def coalition_mask(members: Iterable[int], n: int) -> int:
    """Bitmask for a coalition given as an iterable of 1-based players."""
    mask = 0
    for i in members:
        if not 1 <= int(i) <= n:
            raise ValidationError(f"player {i} outside 1..{n}")
        mask |= 1 << (int(i) - 1)
    return mask


def coalition_members(mask: int) -> tuple[int, ...]:
    """Ascending 1-based players of a coalition bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _as_mask(coalition, n: int) -> int:
    if isinstance(coalition, int):
        if coalition < 0 or coalition >> n:
            raise ValidationError("coalition mask outside the player set")
        return coalition
    return coalition_mask(coalition, n)


@dataclass(frozen=True)
class SimpleGame:
    """A monotone voting game, stored by its antichain of minimal winning coalitions."""

    n: int
    min_winning: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_PLAYERS:
            raise ValidationError(f"player count must be in 1..{MAX_PLAYERS}, got {self.n}")
        masks = tuple(sorted(set(int(m) for m in self.min_winning), key=coalition_members))
        if not masks:
            raise ValidationError("a game needs at least one minimal winning coalition")
        for m in masks:
            if m == 0:
                raise ValidationError("the empty coalition cannot win")
            if m >> self.n:
                raise ValidationError("coalition contains a player outside 1..n")
        for a, b in itertools.combinations(masks, 2):
            c = a & b
            if c == a or c == b:
                raise ValidationError("min_winning must be an antichain under inclusion")
        object.__setattr__(self, "min_winning", masks)

    @classmethod
    def from_coalitions(cls, n: int, coalitions: Iterable[Iterable[int]]) -> "SimpleGame":
        return cls(n, tuple(coalition_mask(c, n) for c in coalitions))

    def coalitions(self) -> tuple[tuple[int, ...], ...]:
        return tuple(coalition_members(m) for m in self.min_winning)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "min_winning": [list(c) for c in self.coalitions()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "SimpleGame":
        try:
            n = int(data["n"])
            raw = data["min_winning"]
        except (KeyError, TypeError) as exc:
            raise ValidationError("game JSON needs 'n' and 'min_winning'") from exc
        return cls.from_coalitions(n, raw)


def normalize_min_winning(n: int, raw: Iterable[Iterable[int]]) -> SimpleGame:
    """Build a game from an arbitrary winning-coalition generator set.

    Supersets are dropped so the result stores the inclusion-minimal antichain;
    the monotone closure is unchanged.
    """
    masks = sorted({_as_mask(c, n) for c in raw}, key=lambda m: m.bit_count())
    if not masks:
        raise ValidationError("at least one winning coalition required")
    if masks[0] == 0:
        raise ValidationError("the empty coalition cannot win")
    minimal: list[int] = []
    for m in masks:
        if not any(k & m == k for k in minimal):
            minimal.append(m)
    return SimpleGame(n, tuple(minimal))


def is_winning(game: SimpleGame, coalition) -> bool:
    """True iff the coalition contains some minimal winning coalition."""
    s = _as_mask(coalition, game.n)
    return any(m & s == m for m in game.min_winning)


@lru_cache(maxsize=None)
def _absent_mask(n: int, p: int) -> int:
    """Bitset over coalition indices S in [0, 2^n) with player bit p clear."""
    half = 1 << p
    period = half << 1
    block = (1 << half) - 1
    reps = (1 << n) // period
    return block * (((1 << (reps * period)) - 1) // ((1 << period) - 1))


@lru_cache(maxsize=4096)
def _winning_table(game: SimpleGame) -> int:
    """Bitset with bit S set iff coalition mask S wins (monotone closure)."""
    if game.n > DESIRABILITY_MAX_PLAYERS:
        raise CapacityError(
            f"winning table needs 2^{game.n} bits; capped at n={DESIRABILITY_MAX_PLAYERS}"
        )
    f = 0
    for m in game.min_winning:
        f |= 1 << m
    for p in range(game.n):
        f |= (f & _absent_mask(game.n, p)) << (1 << p)
    return f


class Desirability(enum.Enum):
    MORE_DESIRABLE = "more"
    EQUALLY_DESIRABLE = "equal"
    LESS_DESIRABLE = "less"
    INCOMPARABLE = "incomparable"


def _at_least_as_desirable(f: int, n: int, i: int, j: int) -> bool:
    # i >= j  iff no S (without i, j) has S+{j} winning but S+{i} losing.
    yi = f >> (1 << (i - 1))
    yj = f >> (1 << (j - 1))
    both = _absent_mask(n, i - 1) & _absent_mask(n, j - 1)
    return (yj & ~yi) & both == 0


def desirability(game: SimpleGame, i: int, j: int) -> Desirability:
    """Exact swap relation between two players, quantified over all subsets."""
    if i == j:
        raise ValidationError("desirability needs two distinct players")
    for p in (i, j):
        if not 1 <= p <= game.n:
            raise ValidationError(f"player {p} outside 1..{game.n}")
    f = _winning_table(game)
    i_geq = _at_least_as_desirable(f, game.n, i, j)
    j_geq = _at_least_as_desirable(f, game.n, j, i)
    if i_geq and j_geq:
        return Desirability.EQUALLY_DESIRABLE
    if i_geq:
        return Desirability.MORE_DESIRABLE
    if j_geq:
        return Desirability.LESS_DESIRABLE
    return Desirability.INCOMPARABLE


@dataclass(frozen=True)
class TypePartition:
    """Equivalence classes of equally desirable players, strongest first.

    Within a class players keep ascending index order; class order is fixed by
    the strict desirability between representatives.
    """

    classes: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.classes)

    def class_of(self, player: int) -> int:
        for k, members in enumerate(self.classes):
            if player in members:
                return k
        raise ValidationError(f"player {player} not in partition")


def type_partition(game: SimpleGame) -> TypePartition:
    """Partition players by equal desirability; raises NotCompleteError if not total."""
    n = game.n
    f = _winning_table(game)
    geq = [[True] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a = _at_least_as_desirable(f, n, i, j)
            b = _at_least_as_desirable(f, n, j, i)
            if not (a or b):
                raise NotCompleteError(
                    f"players {i} and {j} are incomparable", pair=(i, j)
                )
            geq[i][j] = a
            geq[j][i] = b
    classes: list[list[int]] = []
    for i in range(1, n + 1):
        for members in classes:
            rep = members[0]
            if geq[i][rep] and geq[rep][i]:
                members.append(i)
                break
        else:
            classes.append([i])
    classes.sort(key=lambda members: members[0])
    # strongest class first; representatives are strictly ordered
    classes.sort(key=_class_sort_key(geq))
    return TypePartition(tuple(tuple(m) for m in classes))


def _class_sort_key(geq):
    import functools

    def cmp(a, b):
        i, j = a[0], b[0]
        if geq[i][j] and not geq[j][i]:
            return -1
        if geq[j][i] and not geq[i][j]:
            return 1
        return 0

    return functools.cmp_to_key(cmp)


@dataclass(frozen=True)
class WeightedRepresentation:
    """Quota plus one nonnegative weight per player, held as exact rationals."""

    quota: Fraction
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        quota = Fraction(self.quota)
        weights = tuple(Fraction(w) for w in self.weights)
        if not weights:
            raise ValidationError("at least one weight required")
        if any(w < 0 for w in weights):
            raise ValidationError("weights must be nonnegative")
        if quota <= 0:
            raise ValidationError("quota must be positive, otherwise the empty coalition wins")
        if quota > sum(weights):
            raise ValidationError("quota exceeds the total weight, no coalition can win")
        object.__setattr__(self, "quota", quota)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_json_dict(cls, data: dict) -> "WeightedRepresentation":
        try:
            quota = Fraction(str(data["quota"]))
            weights = tuple(Fraction(str(w)) for w in data["weights"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError("weighted JSON needs 'quota' and 'weights' strings") from exc
        return cls(quota, weights)


def from_weighted(rep: WeightedRepresentation) -> SimpleGame:
    """Game whose winning coalitions are those meeting the quota."""
    n = len(rep.weights)
    if n > WEIGHTED_MAX_PLAYERS:
        raise CapacityError(f"from_weighted scans 2^n coalitions; capped at n={WEIGHTED_MAX_PLAYERS}")
    denom = lcm(rep.quota.denominator, *(w.denominator for w in rep.weights))
    iq = rep.quota * denom
    iw = [int(w * denom) for w in rep.weights]
    size = 1 << n
    total = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        total[mask] = total[mask ^ low] + iw[low.bit_length() - 1]
    minimal = []
    for mask in range(1, size):
        w = total[mask]
        if w < iq:
            continue
        m = mask
        is_min = True
        while m:
            low = m & -m
            if w - iw[low.bit_length() - 1] >= iq:
                is_min = False
                break
            m ^= low
        if is_min:
            minimal.append(mask)
    return SimpleGame(n, tuple(minimal))
