import pytest

from oracles import (
    brute_force_classify,
    brute_force_nilpotent_radical,
    brute_force_subspace_count,
    brute_force_subspaces,
    int_tensor,
    row_space,
)
from leibnizkit.algebra import Verdict
from leibnizkit.errors import BudgetExceeded, IdentityFailed
from leibnizkit.latticescan import (
    PropertyReport,
    ScanBudget,
    check_property_IorSI,
    count_subspaces,
    default_sample_set,
    enumerate_ideals,
    enumerate_subalgebras,
    enumerate_subspaces,
    gaussian_binomial,
    nilpotent_radical,
    verify_declared_radical,
)
from leibnizkit.scalars import GF, QQ, function_field
from leibnizkit.zoo import build_example_3_8, build_example_3_10, build_heisenberg, build_theorem_A

F2t = function_field(2, "t")


def _ints(s):
    return [tuple(int(str(x)) for x in row) for row in s.basis]


def test_gaussian_binomial_values():
    assert [gaussian_binomial(4, k, 2) for k in range(5)] == [1, 15, 35, 15, 1]
    assert gaussian_binomial(3, 4, 2) == 0


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_counts_match_all_matrices_oracle(q, n):
    assert brute_force_subspace_count(q, n) == count_subspaces(q, n)


@pytest.mark.parametrize("q,n", [(2, 3), (3, 3), (2, 4), (3, 4)])
def test_enumeration_hits_every_subspace_once(q, n):
    got = [row_space(_ints(s), q, n) for s in enumerate_subspaces(GF(q), n)]
    assert len(got) == len(set(got))
    assert set(got) == brute_force_subspaces(q, n)


def test_enumeration_order_is_canonical():
    first = [s.encode() for s in enumerate_subspaces(GF(2), 3, 1)]
    assert first[:3] == ["1,0,0", "1,0,1", "1,1,0"]


def test_guards():
    with pytest.raises(BudgetExceeded):
        list(enumerate_subspaces(GF(3), 11))
    with pytest.raises(BudgetExceeded):
        list(enumerate_subspaces(GF(5), 4, max_subspaces=100))
    with pytest.raises(BudgetExceeded):
        check_property_IorSI(build_heisenberg(QQ), ScanBudget("exhaustive"))


def test_heisenberg_counterexample_and_counts():
    a = build_heisenberg(GF(2))
    r = check_property_IorSI(a)
    assert not r.holds and r.claim == "counterexample found"
    assert r.counterexample.space.encode() == "1,0,0"
    assert r.classification.verdict is Verdict.NEITHER
    assert r.subspaces_scanned == 16
    assert r.subalgebras == r.ideals + r.self_idealizing + r.neither
    data = r.to_json()
    assert data["counterexample"]["span"] == "1,0,0"
    assert data["counterexample"]["verdict"] == "Neither"


@pytest.mark.parametrize("builder", [lambda: build_heisenberg(GF(3)), lambda: build_theorem_A(GF(3), 2, 1), lambda: build_theorem_A(GF(2), 2, 1)])
def test_classification_matches_brute_force(builder):
    a = builder()
    q, n = a.field.p, a.dim
    T = int_tensor(a)
    for h in enumerate_subalgebras(a):
        from leibnizkit.algebra import classify_subalgebra

        assert classify_subalgebra(a, h).verdict.value == brute_force_classify(T, row_space(_ints(h.space), q, n), q, n)


@pytest.mark.parametrize("builder", [lambda: build_heisenberg(GF(3)), lambda: build_theorem_A(GF(3), 2, 1), lambda: build_heisenberg(GF(2))])
def test_nilpotent_radical_matches_brute_force(builder):
    a = builder()
    q, n = a.field.p, a.dim
    assert row_space(_ints(nilpotent_radical(a)), q, n) == brute_force_nilpotent_radical(int_tensor(a), q, n)


def test_ideals_are_subalgebras():
    a = build_theorem_A(GF(3), 2, 1)
    ideals = list(enumerate_ideals(a))
    assert all(h.closed for h in ideals)
    assert a.whole() in [h.space for h in ideals]


def test_identity_checked_first():
    with pytest.raises(IdentityFailed) as exc:
        check_property_IorSI(build_example_3_8(F2t, F2t.gen(), F2t.gen()))
    assert len(exc.value.violations) == 4


def test_sampled_mode_and_claim():
    a = build_example_3_10(F2t, F2t.gen())
    r = check_property_IorSI(a, ScanBudget.for_field(F2t, 1))
    assert r.mode == "sampled" and r.holds
    assert r.claim == "no counterexample found within budget"
    with pytest.raises(BudgetExceeded):
        check_property_IorSI(a, ScanBudget.for_field(F2t, 2, max_subspaces=10))


def test_default_sample_sets():
    assert len(default_sample_set(F2t, 1)) == 1 + 1 + 2
    assert [str(x) for x in default_sample_set(F2t, 1)] == ["0", "1", "t", "t+1"]
    assert len(default_sample_set(QQ)) == 6


def test_merge_keeps_first_counterexample():
    a = build_heisenberg(GF(2))
    bad = check_property_IorSI(a)
    good = PropertyReport(a.name, "exhaustive", subalgebras=2, ideals=2)
    m = good.merge(bad)
    assert not m.holds and m.counterexample == bad.counterexample
    assert m.subalgebras == bad.subalgebras + 2


def test_declared_radical():
    a = build_theorem_A(GF(3), 2, 1)
    rep = verify_declared_radical(a, a.span("a1", "a2"))
    assert rep.passed and rep.details["nilpotent ideal"] == "yes"
    rep = verify_declared_radical(a, a.span("a1"))
    assert rep.status_of("maximal").value == "fail"
    e = build_example_3_10(F2t, F2t.gen())
    rep = verify_declared_radical(e, e.span("a", "z"))
    assert rep.details["nilpotent ideal"] == "yes"
    assert rep.status_of("maximal").value == "unknown"
    rep = verify_declared_radical(e, e.span("v"))
    assert rep.status_of("subalgebra").value == "fail"
