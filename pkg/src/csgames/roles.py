"""Detection of the six distinguished voter roles.

``semantic_roles`` evaluates the role definitions literally on coalitions;
``structural_roles`` evaluates equivalent profile-level predicates straight on
the invariants, without expanding the game.  Both keep the literal reading,
including the degenerate overlaps (a null class can satisfy the semi-veto text
in unanimity-minus-one-class games).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import SimpleGame, type_partition, _absent_mask, _winning_table
from .errors import ValidationError
from .invariants import Invariants, wins_counts


class Role(enum.Enum):
    DICTATOR = "dictator"
    VETOER = "vetoer"
    PASSER = "passer"
    NULL = "null"
    SEMI_VETOER = "semi-vetoer"
    SEMI_PASSER = "semi-passer"

    @classmethod
    def from_name(cls, name: str) -> "Role":
        for role in cls:
            if role.value == name:
                return role
        raise ValidationError(f"unknown role {name!r}; choose from "
                              + ", ".join(r.value for r in cls))


@dataclass(frozen=True)
class RoleReport:
    """Role sets per equivalence class (strongest first) and per player (by index)."""

    per_class: tuple[frozenset[Role], ...]
    per_player: tuple[frozenset[Role], ...]
    class_sizes: tuple[int, ...]

    @property
    def class_count(self) -> int:
        return len(self.per_class)

    @property
    def present(self) -> frozenset[Role]:
        out = set()
        for roles in self.per_class:
            out |= roles
        return frozenset(out)

    def has(self, role: Role) -> bool:
        return role in self.present

    def to_json_dict(self) -> dict:
        return {
            "t": self.class_count,
            "class_sizes": list(self.class_sizes),
            "per_class": {
                str(k + 1): sorted(r.value for r in roles)
                for k, roles in enumerate(self.per_class)
            },
            "per_player": {
                str(i + 1): sorted(r.value for r in roles)
                for i, roles in enumerate(self.per_player)
            },
            "present": sorted(r.value for r in self.present),
        }


def _per_player_from_classes(per_class, sizes) -> tuple[frozenset[Role], ...]:
    out = []
    for roles, size in zip(per_class, sizes):
        out.extend([roles] * size)
    return tuple(out)


def semantic_roles(game: SimpleGame) -> RoleReport:
    """Roles read off the coalition level, one player at a time."""
    part = type_partition(game)
    n = game.n
    table = _winning_table(game)
    full = (1 << n) - 1
    per_player = []
    for i in range(1, n + 1):
        bit = 1 << (i - 1)
        roles = set()
        if game.min_winning == (bit,):
            roles.add(Role.DICTATOR)
        if all(m & bit for m in game.min_winning):
            roles.add(Role.VETOER)
        passer = bool(table >> bit & 1)
        if passer:
            roles.add(Role.PASSER)
        if not any(m & bit for m in game.min_winning):
            roles.add(Role.NULL)
        # the only winning coalition avoiding i is N minus i, and it wins
        if table & _absent_mask(n, i - 1) == 1 << (full ^ bit):
            roles.add(Role.SEMI_VETOER)
        if not passer and all(
            table >> (bit | (1 << (j - 1))) & 1 for j in range(1, n + 1) if j != i
        ):
            roles.add(Role.SEMI_PASSER)
        per_player.append(frozenset(roles))
    per_class = tuple(per_player[members[0] - 1] for members in part.classes)
    return RoleReport(per_class, tuple(per_player), part.sizes)


def _class_roles_raw(n_bar, matrix) -> list[set[Role]]:
    t = len(n_bar)
    n = sum(n_bar)
    wins = lambda counts: wins_counts(n_bar, matrix, counts)  # noqa: E731

    def unit(c, k=1):
        return tuple(k if d == c else 0 for d in range(t))

    roles = [set() for _ in range(t)]
    e1 = unit(0)
    if (t == 1 and n == 1 and matrix == ((1,),)) or (
        t >= 2 and n_bar[0] == 1 and matrix == (e1,)
    ):
        roles[0].add(Role.DICTATOR)
    last_zero = t >= 2 and all(row[-1] == 0 for row in matrix)
    for c in range(t):
        e_c = unit(c)
        top_c = tuple(s - 1 if d == c else s for d, s in enumerate(n_bar))
        top_wins = wins(top_c)
        if not top_wins:
            roles[c].add(Role.VETOER)
        e_c_wins = wins(e_c)
        if e_c_wins:
            roles[c].add(Role.PASSER)
        if last_zero and c == t - 1:
            roles[c].add(Role.NULL)
        if top_wins:
            # unique winning profile below full class c iff every one-lower loses
            unique = True
            for d in range(t):
                if top_c[d] > 0:
                    lower = tuple(v - 1 if e == d else v for e, v in enumerate(top_c))
                    if wins(lower):
                        unique = False
                        break
            if unique:
                roles[c].add(Role.SEMI_VETOER)
        if not e_c_wins:
            ok = all(
                wins(tuple((d == c) + (d == e) for d in range(t)))
                for e in range(t)
                if e != c
            )
            if ok and n_bar[c] >= 2:
                ok = wins(unit(c, 2))
            if ok:
                roles[c].add(Role.SEMI_PASSER)
    return roles


def structural_roles(inv: Invariants) -> RoleReport:
    """Roles computed on the invariants only; players follow the consecutive labeling."""
    per_class = tuple(frozenset(r) for r in _class_roles_raw(inv.n_bar, inv.matrix))
    return RoleReport(per_class, _per_player_from_classes(per_class, inv.n_bar), inv.n_bar)


def role_present_raw(n_bar, matrix, role: Role) -> bool:
    """Single-role presence test on raw (n_bar, matrix) tuples; used by filters."""
    t = len(n_bar)
    n = sum(n_bar)
    if role is Role.VETOER:
        n1 = n_bar[0]
        return all(row[0] == n1 for row in matrix)
    if role is Role.NULL:
        return t >= 2 and all(row[-1] == 0 for row in matrix)
    if role is Role.PASSER:
        e1 = (1,) + (0,) * (t - 1)
        return wins_counts(n_bar, matrix, e1)
    if role is Role.DICTATOR:
        e1 = (1,) + (0,) * (t - 1)
        return (t == 1 and n == 1 and matrix == ((1,),)) or (
            t >= 2 and n_bar[0] == 1 and matrix == (e1,)
        )
    roles = _class_roles_raw(n_bar, matrix)
    return any(role in r for r in roles)


def present_roles_raw(n_bar, matrix) -> frozenset[Role]:
    out = set()
    for r in _class_roles_raw(n_bar, matrix):
        out |= r
    return frozenset(out)


@dataclass
class AuditReport:
    """Tally of role combinations over a stream of games.

    Dictator games are bucketed separately; for the rest, both the exact
    present-role sets and the realized pair/triple sub-combinations are kept,
    each with the first game observed as an example.
    """

    dictator_count: int
    dictator_example: Invariants | None
    exact_counts: dict[frozenset[Role], int]
    exact_examples: dict[frozenset[Role], Invariants]

    def combination_count(self, roles: Iterable[Role]) -> int:
        want = frozenset(roles)
        return sum(c for s, c in self.exact_counts.items() if want <= s)

    def combination_example(self, roles: Iterable[Role]) -> Invariants | None:
        want = frozenset(roles)
        # insertion order of exact_examples follows first occurrence in the stream
        for s, example in self.exact_examples.items():
            if want <= s:
                return example
        return None

    def merge(self, other: "AuditReport") -> "AuditReport":
        """Combine per-shard tallies; earlier shards keep the examples."""
        counts = dict(self.exact_counts)
        examples = dict(self.exact_examples)
        for s, c in other.exact_counts.items():
            counts[s] = counts.get(s, 0) + c
            examples.setdefault(s, other.exact_examples[s])
        return AuditReport(
            self.dictator_count + other.dictator_count,
            self.dictator_example or other.dictator_example,
            counts,
            examples,
        )

    def csv_rows(self) -> Iterator[tuple[str, int, str]]:
        """(combination, count, example) rows for every realized pair and triple."""
        import itertools as _it
        import json as _json

        seen_roles = sorted(
            {r for s in self.exact_counts for r in s}, key=lambda r: r.value
        )
        for size in (2, 3):
            for combo in _it.combinations(seen_roles, size):
                count = self.combination_count(combo)
                if count == 0:
                    continue
                example = self.combination_example(combo)
                yield (
                    "+".join(r.value for r in combo),
                    count,
                    _json.dumps(example.to_json_dict(), sort_keys=True, separators=(",", ":")),
                )
        if self.dictator_count:
            yield (
                "dictator",
                self.dictator_count,
                _json.dumps(
                    self.dictator_example.to_json_dict(), sort_keys=True, separators=(",", ":")
                ),
            )


def audit_role_pairs(games: Iterable[Invariants]) -> AuditReport:
    """Tallies the distinguished-role sets present across a stream of invariants."""
    report = AuditReport(0, None, {}, {})
    for inv in games:
        present = present_roles_raw(inv.n_bar, inv.matrix)
        if Role.DICTATOR in present:
            report.dictator_count += 1
            if report.dictator_example is None:
                report.dictator_example = inv
            continue
        report.exact_counts[present] = report.exact_counts.get(present, 0) + 1
        report.exact_examples.setdefault(present, inv)
    return report
