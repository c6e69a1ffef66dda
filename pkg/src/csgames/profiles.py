"""Profiles compress coalitions classwise; the delta order compares prefix sums."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterator

from .core import TypePartition, _as_mask
from .errors import ValidationError


class DeltaRelation(enum.Enum):
    DOMINATES = "dominates"
    DOMINATED_BY = "dominated_by"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def prefix_sums(counts) -> tuple[int, ...]:
    return tuple(itertools.accumulate(counts))


@dataclass(frozen=True)
class Profile:
    """Per-class member counts of a coalition, with prefix sums alongside."""

    counts: tuple[int, ...]
    prefix: tuple[int, ...] = None  # derived, never passed

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if not counts:
            raise ValidationError("a profile needs at least one class")
        if any(c < 0 for c in counts):
            raise ValidationError("profile counts must be nonnegative")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "prefix", prefix_sums(counts))

    def __len__(self):
        return len(self.counts)


def compare_prefix(pa: tuple[int, ...], pb: tuple[int, ...]) -> DeltaRelation:
    """Delta comparison of two prefix-sum vectors of equal length."""
    if pa == pb:
        return DeltaRelation.EQUAL
    ge = all(a >= b for a, b in zip(pa, pb))
    if ge:
        return DeltaRelation.DOMINATES
    le = all(a <= b for a, b in zip(pa, pb))
    if le:
        return DeltaRelation.DOMINATED_BY
    return DeltaRelation.INCOMPARABLE


def delta_compare(p: Profile, q: Profile) -> DeltaRelation:
    if len(p.counts) != len(q.counts):
        raise ValidationError("profiles must have the same number of classes")
    return compare_prefix(p.prefix, q.prefix)


@dataclass(frozen=True)
class ProfileBox:
    """The hyper-rectangle of profiles compatible with the class sizes."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise ValidationError("class sizes must be positive")
        object.__setattr__(self, "sizes", sizes)

    @property
    def size(self) -> int:
        return prod(s + 1 for s in self.sizes)

    def __contains__(self, profile) -> bool:
        counts = profile.counts if isinstance(profile, Profile) else tuple(profile)
        if len(counts) != len(self.sizes):
            return False
        return all(0 <= c <= s for c, s in zip(counts, self.sizes))


def box_profiles(box: ProfileBox) -> Iterator[Profile]:
    """All profiles of the box exactly once, in decreasing lexicographic order."""
    for counts in itertools.product(*(range(s, -1, -1) for s in box.sizes)):
        yield Profile(counts)


def profile_of(partition: TypePartition, coalition) -> Profile:
    """Counts of coalition members per equivalence class."""
    mask = _as_mask(coalition, partition.n)
    counts = []
    for members in partition.classes:
        counts.append(sum(1 for i in members if mask >> (i - 1) & 1))
    return Profile(tuple(counts))
