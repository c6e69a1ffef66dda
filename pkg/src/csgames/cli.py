"""Command-line interface for batch use and verification runs.

Exit codes: 0 success, 1 validation or domain error, 2 usage error,
3 capacity abort, 4 verification suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formulas, refcounts
from .core import SimpleGame, WeightedRepresentation, from_weighted
from .enumeration import EnumSpec, count_games, enumerate_invariants
from .errors import CapacityError, GameError
from .invariants import Invariants, expand, extract
from .oracle import ORACLE_MAX_PLAYERS, oracle_count
from .roles import Role, semantic_roles, structural_roles
from .transforms import Bijection, apply_bijection, dual, dual_invariants

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_VERIFY = 4


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_json(path: str):
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameError(f"malformed JSON input: {exc}") from exc


def _load_any(data):
    """Game, invariants, or weighted JSON, by key shape."""
    if not isinstance(data, dict):
        raise GameError("input must be a JSON object")
    if "min_winning" in data:
        return SimpleGame.from_json_dict(data)
    if "M" in data or "n_bar" in data:
        return Invariants.from_json_dict(data)
    if "quota" in data:
        return from_weighted(WeightedRepresentation.from_json_dict(data))
    raise GameError("input is neither a game, invariants, nor a weighted representation")


def _as_game(obj) -> SimpleGame:
    return expand(obj) if isinstance(obj, Invariants) else obj


def _as_invariants(obj) -> Invariants:
    return obj if isinstance(obj, Invariants) else extract(obj)


def _cmd_validate(args) -> int:
    data = _read_json(args.input)
    inv = Invariants.from_json_dict(data)
    print(_dump(inv.to_json_dict()))
    return EXIT_OK


def _cmd_expand(args) -> int:
    inv = Invariants.from_json_dict(_read_json(args.input))
    print(_dump(expand(inv).to_json_dict()))
    return EXIT_OK


def _cmd_extract(args) -> int:
    game = _as_game(_load_any(_read_json(args.input)))
    print(_dump(extract(game).to_json_dict()))
    return EXIT_OK


def _cmd_classify(args) -> int:
    obj = _load_any(_read_json(args.input))
    report = structural_roles(obj) if isinstance(obj, Invariants) else semantic_roles(obj)
    print(_dump(report.to_json_dict()))
    return EXIT_OK


def _cmd_dual(args) -> int:
    obj = _load_any(_read_json(args.input))
    if isinstance(obj, Invariants):
        print(_dump(dual_invariants(obj).to_json_dict()))
    else:
        print(_dump(dual(obj).to_json_dict()))
    return EXIT_OK


def _cmd_map(args) -> int:
    inv = Invariants.from_json_dict(_read_json(args.input))
    out = apply_bijection(Bijection.from_name(args.bijection), inv, inverse=args.inverse)
    print(_dump(out.to_json_dict()))
    return EXIT_OK


def _roles_from(names) -> frozenset[Role]:
    return frozenset(Role.from_name(name) for name in names or ())


def _cmd_enumerate(args) -> int:
    spec = EnumSpec(
        n=args.n,
        t=args.t,
        rows=args.rows,
        require=_roles_from(args.require),
        forbid=_roles_from(args.forbid),
        count_only=args.count_only,
    )
    if args.count_only:
        print(count_games(spec, jobs=args.jobs))
        return EXIT_OK
    if args.format == "csv":
        by_rows: dict[int, int] = {}
        for inv in enumerate_invariants(spec, jobs=args.jobs):
            by_rows[inv.r] = by_rows.get(inv.r, 0) + 1
        filt = _filter_label(spec)
        print("n,t,r,filter,count")
        for r in sorted(by_rows):
            print(f"{args.n},{args.t},{r},{filt},{by_rows[r]}")
        return EXIT_OK
    for inv in enumerate_invariants(spec, jobs=args.jobs):
        print(_dump(inv.to_json_dict()))
    return EXIT_OK


def _filter_label(spec: EnumSpec) -> str:
    parts = [f"+{r.value}" for r in sorted(spec.require, key=lambda r: r.value)]
    parts += [f"-{r.value}" for r in sorted(spec.forbid, key=lambda r: r.value)]
    return "".join(parts) or "none"


def _cmd_count(args) -> int:
    spec = EnumSpec(
        n=args.n,
        t=args.t,
        rows=args.rows,
        require=_roles_from(args.require),
        forbid=_roles_from(args.forbid),
        count_only=True,
    )
    value = count_games(spec, jobs=args.jobs)
    if args.format == "csv":
        print("n,t,r,filter,count")
        print(f"{args.n},{args.t},{args.rows or ''},{_filter_label(spec)},{value}")
    else:
        print(value)
    return EXIT_OK


def _cmd_formula(args) -> int:
    fam = formulas.Family.from_name(args.family)
    print(formulas.evaluate(fam, args.n, t=args.t))
    return EXIT_OK


def _verify_formulas(max_n: int, jobs: int, emit) -> bool:
    ok = True
    checks = [
        (formulas.Family.CG_T1, 1, min(max_n, 12), 1, ()),
        (formulas.Family.CG_T2, 2, min(max_n, 12), 2, ()),
        (formulas.Family.CGV_T2, 2, min(max_n, 10), 2, (Role.VETOER,)),
        (formulas.Family.CGV_T3, 4, min(max_n, 9), 3, (Role.VETOER,)),
        (formulas.Family.CGVN_T3, 4, min(max_n, 9), 3, (Role.VETOER, Role.NULL)),
        (formulas.Family.CGVN_T4, 5, min(max_n, 9), 4, (Role.VETOER, Role.NULL)),
    ]
    for fam, lo, hi, t, require in checks:
        for n in range(lo, hi + 1):
            if t > n:
                continue
            expected = formulas.evaluate(fam, n)
            actual = count_games(
                EnumSpec(n=n, t=t, require=frozenset(require), count_only=True), jobs=jobs
            )
            match = expected == actual
            ok &= match
            emit(f"{fam.value},{n},{expected},{actual},{str(match).lower()}")
    return ok


def _verify_bijections(max_n: int, jobs: int, emit) -> bool:
    from .enumeration import catalog_with_roles

    ok = True
    plan = {
        "f": (Bijection.VETO_TO_NULL, {Role.VETOER}, {Role.NULL}, 2),
        "g": (Bijection.PASSER_TO_NULL, {Role.PASSER}, {Role.NULL}, 2),
        "h": (Bijection.VETO_TO_SEMI_VETO, {Role.VETOER}, {Role.SEMI_VETOER}, 1),
        "k": (Bijection.PASSER_TO_SEMI_PASSER, {Role.PASSER}, {Role.SEMI_PASSER}, 1),
        "h1": (Bijection.DUAL_SWAP, {Role.VETOER, Role.NULL}, {Role.PASSER, Role.NULL}, 2),
        "h2": (Bijection.SEMI_VETO_TO_NULL, {Role.VETOER, Role.SEMI_VETOER}, {Role.VETOER, Role.NULL}, 2),
    }
    for n in range(2, max_n + 1):
        for t in range(1, min(n, 4) + 1):
            catalog = catalog_with_roles(n, t, jobs=jobs)
            classes = {
                name: {
                    Invariants(sizes, matrix)
                    for sizes, matrix, roles in catalog
                    if frozenset(need) <= roles
                }
                for name, (_, need, _, _) in plan.items()
            }
            targets = {
                name: {
                    Invariants(sizes, matrix)
                    for sizes, matrix, roles in catalog
                    if frozenset(want) <= roles
                }
                for name, (_, _, want, _) in plan.items()
            }
            for name, (bij, _, _, min_t) in plan.items():
                if t < min_t:
                    continue
                domain = classes[name]
                images = {apply_bijection(bij, inv) for inv in domain}
                good = len(images) == len(domain) and images == targets[name]
                ok &= good
                emit(f"{n},{t},{name},{len(domain)},{len(targets[name])},{str(good).lower()}")
    return ok


def _verify_duality(max_n: int, jobs: int, emit) -> bool:
    from .enumeration import raw_pairs

    ok = True
    for n in range(1, min(max_n, 6) + 1):
        checked = 0
        good = True
        for t in range(1, n + 1):
            for sizes, matrix in raw_pairs(EnumSpec(n=n, t=t)):
                game = expand(Invariants(sizes, matrix))
                if dual(dual(game)) != game:
                    good = False
                checked += 1
        ok &= good
        emit(f"{n},dual_involution,{checked},{str(good).lower()}")
    return ok


def _verify_oracle(max_n: int, jobs: int, emit) -> bool:
    ok = True
    for n in range(1, min(max_n, ORACLE_MAX_PLAYERS) + 1):
        for t in range(1, n + 1):
            expected = oracle_count(n, t)
            actual = count_games(EnumSpec(n=n, t=t, count_only=True), jobs=jobs)
            match = expected == actual
            ok &= match
            emit(f"{n},{t},{expected},{actual},{str(match).lower()}")
    return ok


def _verify_rows(max_n: int, jobs: int, emit) -> bool:
    ok = True
    for n in range(1, max_n + 1):
        total = sum(
            count_games(EnumSpec(n=n, t=t, rows=1, count_only=True), jobs=jobs)
            for t in range(1, n + 1)
        )
        expected = 2**n - 1
        match = total == expected
        ok &= match
        emit(f"{n},rows1_sum,{expected},{total},{str(match).lower()}")
    return ok


def _verify_sequences(max_n: int, jobs: int, emit) -> bool:
    ok = True
    for n in range(4, max_n + 1):
        if n not in refcounts.CG_T3:
            break
        actual = count_games(EnumSpec(n=n, t=3, count_only=True), jobs=jobs)
        match = actual == refcounts.CG_T3[n]
        ok &= match
        emit(f"{n},3,{refcounts.CG_T3[n]},{actual},{str(match).lower()}")
    for (n, t), expected in sorted(refcounts.CG_LARGE.items()):
        if n > max_n or t > 4:
            continue
        actual = count_games(EnumSpec(n=n, t=t, count_only=True), jobs=jobs)
        match = actual == expected
        ok &= match
        emit(f"{n},{t},{expected},{actual},{str(match).lower()}")
    return ok


_SUITES = {
    "formulas": (_verify_formulas, "family,n,formula,enumerated,match"),
    "bijections": (_verify_bijections, "n,t,bijection,domain,codomain,match"),
    "duality": (_verify_duality, "n,check,cases,match"),
    "oracle": (_verify_oracle, "n,t,oracle,enumerated,match"),
    "rows": (_verify_rows, "n,check,expected,actual,match"),
    "sequences": (_verify_sequences, "n,t,expected,actual,match"),
}


def _cmd_verify(args) -> int:
    runner, header = _SUITES[args.suite]
    print(header)
    ok = runner(args.max_n, args.jobs, print)
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csgames",
        description="Represent, classify, transform, enumerate and count complete simple games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="JSON file path, or - for stdin")

    p = sub.add_parser("validate", help="check invariant JSON and echo its canonical form")
    add_input(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("expand", help="invariants JSON to extensional game JSON")
    add_input(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("extract", help="game JSON to canonical invariants JSON")
    add_input(p)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("classify", help="report the distinguished roles of a game")
    add_input(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("dual", help="dual game (or dual invariants)")
    add_input(p)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("map", help="apply one of the class bijections to invariants")
    p.add_argument("--bijection", required=True, choices=["f", "g", "h", "k", "h1", "h2"])
    p.add_argument("--inverse", action="store_true")
    add_input(p)
    p.set_defaults(func=_cmd_map)

    role_names = [r.value for r in Role]

    def add_enum_args(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--rows", type=int, default=None)
        p.add_argument("--with", dest="require", action="append", choices=role_names,
                       metavar="ROLE", help="require a role (repeatable)")
        p.add_argument("--without", dest="forbid", action="append", choices=role_names,
                       metavar="ROLE", help="forbid a role (repeatable)")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("enumerate", help="stream canonical invariants as JSONL")
    add_enum_args(p)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("count", help="count matching games")
    add_enum_args(p)
    p.add_argument("--format", choices=["plain", "csv"], default="plain")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("formula", help="evaluate a closed-form count")
    p.add_argument("--family", required=True, choices=[f.value for f in formulas.Family])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("verify", help="run a verification suite, emitting CSV")
    p.add_argument("--suite", required=True, choices=sorted(_SUITES))
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except GameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
