import pytest

from csgames.enumeration import (
    EnumSpec,
    compositions,
    count_by_rows,
    count_games,
    enumerate_invariants,
)
from csgames.errors import ValidationError
from csgames.formulas import Family, evaluate
from csgames.oracle import oracle_count
from csgames.roles import Role

from conftest import inv


def test_compositions_examples():
    assert list(compositions(3, 2)) == [(2, 1), (1, 2)]
    assert len(list(compositions(5, 2))) == 4
    assert list(compositions(4, 4)) == [(1, 1, 1, 1)]
    with pytest.raises(ValidationError):
        list(compositions(3, 4))


def test_compositions_order_and_count():
    out = list(compositions(7, 3))
    assert out == sorted(out, reverse=True)
    assert len(out) == 15  # C(6, 2)
    assert all(sum(c) == 7 and min(c) >= 1 for c in out)


def test_catalog_n3_t2_exact():
    got = [(g.n_bar, g.matrix) for g in enumerate_invariants(EnumSpec(n=3, t=2))]
    assert got == [
        ((2, 1), ((2, 0),)),
        ((2, 1), ((1, 0),)),
        ((1, 2), ((1, 1),)),
        ((1, 2), ((1, 0),)),
        ((1, 2), ((1, 0), (0, 2))),
    ]


def test_single_class_counts():
    assert [g.matrix for g in enumerate_invariants(EnumSpec(n=3, t=1))] == [
        ((3,),),
        ((2,),),
        ((1,),),
    ]
    for n in range(1, 13):
        assert count_games(EnumSpec(n=n, t=1)) == n


def test_veto_filter_n3():
    assert count_games(EnumSpec(n=3, t=2, require=frozenset({Role.VETOER}))) == 3


def test_count_equals_stream_length():
    for n in range(2, 7):
        for t in range(1, min(n, 4) + 1):
            spec = EnumSpec(n=n, t=t)
            assert count_games(spec) == sum(1 for _ in enumerate_invariants(spec))


def test_no_duplicates_and_all_valid():
    seen = set()
    for g in enumerate_invariants(EnumSpec(n=6, t=3)):
        key = (g.n_bar, g.matrix)
        assert key not in seen
        seen.add(key)
    assert len(seen) == 262


def test_determinism_across_job_counts():
    sequential = list(enumerate_invariants(EnumSpec(n=6, t=3)))
    parallel = list(enumerate_invariants(EnumSpec(n=6, t=3), jobs=2))
    assert sequential == parallel
    assert count_games(EnumSpec(n=7, t=3)) == count_games(EnumSpec(n=7, t=3), jobs=3) == 1114


def test_count_matches_formula_t2():
    for n in range(2, 11):
        assert count_games(EnumSpec(n=n, t=2)) == evaluate(Family.CG_T2, n)


def test_row_restricted_counts():
    # single-row games per class count at n=3: 3, 4, 0
    assert count_games(EnumSpec(n=3, t=1, rows=1)) == 3
    assert count_games(EnumSpec(n=3, t=2, rows=1)) == 4
    assert count_games(EnumSpec(n=3, t=3, rows=1)) == 0
    assert count_games(EnumSpec(n=1, t=1, rows=1)) == 1
    # exact-row filter agrees with bucketing the full stream
    for t in (2, 3):
        for r in (1, 2, 3):
            direct = count_games(EnumSpec(n=6, t=t, rows=r))
            bucketed = sum(1 for g in enumerate_invariants(EnumSpec(n=6, t=t)) if g.r == r)
            assert direct == bucketed


def test_count_by_rows_table():
    table = count_by_rows(3)
    assert table[(1, 1)] == 3
    assert table[(2, 1)] == 4
    assert table[(2, 2)] == 1
    assert (3, 1) not in table
    assert sum(v for (t, r), v in table.items() if r == 1) == 7
    assert count_by_rows(1) == {(1, 1): 1}
    n4 = count_by_rows(4)
    assert sum(v for (t, r), v in n4.items() if r == 1) == 15


def test_row_identity():
    for n in range(1, 11):
        total = sum(count_games(EnumSpec(n=n, t=t, rows=1)) for t in range(1, n + 1))
        assert total == 2**n - 1


def test_oracle_agreement_small():
    for n in range(1, 5):
        for t in range(1, n + 1):
            assert count_games(EnumSpec(n=n, t=t)) == oracle_count(n, t)
    assert count_games(EnumSpec(n=4, t=2, require=frozenset({Role.VETOER}))) == oracle_count(
        4, 2, require={Role.VETOER}
    )
    assert count_games(
        EnumSpec(n=4, t=3, require=frozenset({Role.VETOER, Role.NULL}))
    ) == oracle_count(4, 3, require={Role.VETOER, Role.NULL})


def test_filter_consistency_small():
    for n in range(2, 8):
        for t in range(1, min(n, 4) + 1):
            v = count_games(EnumSpec(n=n, t=t, require=frozenset({Role.VETOER})))
            p = count_games(EnumSpec(n=n, t=t, require=frozenset({Role.PASSER})))
            sv = count_games(EnumSpec(n=n, t=t, require=frozenset({Role.SEMI_VETOER})))
            sp = count_games(EnumSpec(n=n, t=t, require=frozenset({Role.SEMI_PASSER})))
            assert v == p == sv == sp
            if t >= 2:
                assert v == count_games(EnumSpec(n=n, t=t, require=frozenset({Role.NULL})))


def test_forbid_filter_partitions():
    spec_all = EnumSpec(n=6, t=3)
    with_veto = EnumSpec(n=6, t=3, require=frozenset({Role.VETOER}))
    without_veto = EnumSpec(n=6, t=3, forbid=frozenset({Role.VETOER}))
    assert count_games(spec_all) == count_games(with_veto) + count_games(without_veto)


def test_spec_validation():
    with pytest.raises(ValidationError):
        EnumSpec(n=0, t=1)
    with pytest.raises(ValidationError):
        EnumSpec(n=3, t=4)
    with pytest.raises(ValidationError):
        EnumSpec(n=3, t=2, rows=0)
    with pytest.raises(ValidationError):
        EnumSpec(n=3, t=2, require=frozenset({Role.NULL}), forbid=frozenset({Role.NULL}))


def test_emitted_invariants_revalidate():
    for g in enumerate_invariants(EnumSpec(n=5, t=3)):
        assert inv(g.n_bar, g.matrix) == g
