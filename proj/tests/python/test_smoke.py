import pytest

import fintop

SIERPINSKI = fintop.Topology(2, [[], [0], [0, 1]])
CHAIN = fintop.Topology(3, [[], [0], [0, 1], [0, 1, 2]])


def test_topology_basics():
    assert SIERPINSKI.n == 2
    assert SIERPINSKI.opens == [frozenset(), frozenset({0}), frozenset({0, 1})]
    assert SIERPINSKI.closure({1}) == frozenset({1})
    assert SIERPINSKI.closure({0}) == frozenset({0, 1})
    assert SIERPINSKI.interior({1}) == frozenset()
    assert len(fintop.Topology.discrete(3)) == 8
    assert fintop.Topology.from_json(SIERPINSKI.to_json()) == SIERPINSKI


def test_validation_reports_least_witness():
    assert fintop.validate(2, [[], [0], [0, 1]]) == []
    assert fintop.validate(2, [[], [0], [1]]) == ["contains carrier: {0,1}", "union closure: {0},{1}"]
    with pytest.raises(fintop.PreconditionError):
        fintop.Topology(2, [[], [0], [1]])
    with pytest.raises(fintop.Error):
        fintop.Topology(2, [[5]])
    with pytest.raises(fintop.LimitExceeded):
        fintop.Topology.discrete(17)


def test_subspace_three_ways_agree():
    for n in range(4):
        for t in fintop.census(n):
            for mask in range(1 << n):
                y = {p for p in range(n) if mask >> p & 1}
                direct, embed = fintop.subspace(t, y)
                canonical, _, certificate = fintop.subspace_canonical(t, y)
                closure, _ = fintop.subspace_via_closure(t, y)
                assert direct == canonical == closure
                assert embed == sorted(y)
                assert all(line.endswith("ok") for line in certificate)


def test_maximal_representative():
    assert fintop.maximal_open_representative(SIERPINSKI, {1}, set()) == frozenset({0})
    with pytest.raises(fintop.NotRelativelyOpen):
        fintop.maximal_open_representative(CHAIN, {1, 2}, {2})


def test_closure_operator_round_trip():
    op = fintop.ClosureOperator.from_topology(SIERPINSKI)
    assert op({0}) == frozenset({0, 1})
    assert op.topology() == SIERPINSKI
    assert fintop.ClosureOperator(2, op.table) == op
    assert fintop.validate_kuratowski(2, [[], [1], [1], [0, 1]]) == [
        "K2 extensive: {0}",
        "K4 preserves unions: {0},{1}",
    ]


def test_initial_topology():
    f = fintop.Function(2, 3, [0, 2])
    assert f.injective and not f.surjective
    results = {m: fintop.initial_topology(CHAIN, f, m) for m in ("direct", "image", "closure")}
    assert set(results.values()) == {SIERPINSKI}
    assert fintop.is_continuous(f, SIERPINSKI, CHAIN)
    assert fintop.verify_weakest(CHAIN, f, SIERPINSKI) == (True, "weakest: holds")
    holds, _ = fintop.verify_weakest(CHAIN, f, fintop.Topology.discrete(2))
    assert not holds
    with pytest.raises(fintop.PreconditionError):
        fintop.initial_topology(CHAIN, f, "magic")


def test_census_and_random():
    assert [len(fintop.census(n)) for n in range(5)] == [1, 1, 4, 29, 355]
    assert fintop.census(4, "preorder") == fintop.census(4)
    assert fintop.random_topology(8, 5) == fintop.random_topology(8, 5)
    assert fintop.random_topology(4, 1, k=0) == fintop.Topology.indiscrete(4)
    with pytest.raises(fintop.LimitExceeded):
        fintop.census(5)
