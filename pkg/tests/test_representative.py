import pytest
from hypothesis import given, strategies as st

from oracles import all_rules, cover_by_definition
from rulehide import Rule, cover, covers, join_targets, representative_set, rule_stats, strong_rules
from rulehide.hider import select_sensitive_rules

ALPHABET = "ABCDEF"


def rules_of(*texts):
    return {Rule.parse(t) for t in texts}


def test_cover_c_ab():
    assert set(cover(Rule.parse("C=>A,B")).members) == rules_of(
        "C=>A,B", "C=>A", "C=>B", "C,A=>B", "C,B=>A")


def test_cover_single_consequent():
    assert set(cover(Rule.parse("A=>B")).members) == {Rule.parse("A=>B")}


def test_cover_size_three():
    assert len(cover(Rule.parse("A=>B,C,D"))) == 19


def test_cover_size_exhaustive():
    checked = 0
    for r in all_rules(ALPHABET, 4):
        m = len(r.consequent)
        assert len(cover(r)) == 3 ** m - 2 ** m
        checked += 1
    assert checked > 0


rule_strategy = st.builds(
    lambda x, y: Rule(frozenset(x), frozenset(y) - frozenset(x) or frozenset({"Z"})),
    st.frozensets(st.sampled_from(ALPHABET), min_size=1, max_size=3),
    st.frozensets(st.sampled_from(ALPHABET), min_size=1, max_size=4),
)


@given(rule_strategy)
def test_cover_matches_definition(r):
    got = {(m.antecedent, m.consequent) for m in cover(r).members}
    assert got == cover_by_definition(r.antecedent, r.consequent)
    assert r in cover(r)


@given(rule_strategy, rule_strategy)
def test_covers_predicate_matches_materialized(outer, inner):
    assert covers(outer, inner) == (inner in cover(outer))


def test_covers_examples():
    assert covers(Rule.parse("C=>A,B"), Rule.parse("C,A=>B"))
    assert covers(Rule.parse("C=>A,B"), Rule.parse("C=>A,B"))
    assert not covers(Rule.parse("C=>A"), Rule.parse("C=>A,B"))


def test_representative_table1(db_abc, th):
    ar = strong_rules(db_abc, th)
    assert set(representative_set(ar)) == rules_of("C=>A,B", "B=>C,A")


def test_representative_trivial():
    assert representative_set({}) == {}
    ar = {Rule.parse("A=>B"): None}
    assert set(representative_set(ar)) == {Rule.parse("A=>B")}


@pytest.mark.parametrize("fixture", ["db_abc", "db_abcde"])
def test_representative_properties(fixture, th, request):
    d = request.getfixturevalue(fixture)
    ar = strong_rules(d, th)
    rr = representative_set(ar)
    for r in rr:
        assert not any(o != r and covers(o, r) for o in ar)
    for r in ar:
        assert any(covers(o, r) for o in rr)


@pytest.mark.parametrize("fixture", ["db_abc", "db_abcde"])
def test_cover_dominance(fixture, th, request):
    d = request.getfixturevalue(fixture)
    for base, s in strong_rules(d, th).items():
        for m in cover(base).members:
            ms = rule_stats(d, m)
            assert ms.support >= s.support and ms.confidence >= s.confidence


def test_join_table1_c_alone(db_abc, th):
    ar = strong_rules(db_abc, th)
    only_c = {r: s for r, s in ar.items() if r.antecedent == {"C"}}
    targets = join_targets(only_c, "C")
    assert len(targets) == 1
    t = targets[0]
    assert t.antecedent == {"C"} and t.joined_consequent == {"A", "B"}


def test_join_table2(db_abcde, th):
    ar = select_sensitive_rules(strong_rules(db_abcde, th), "C")
    only_c = {r: s for r, s in ar.items() if r.antecedent == {"C"}}
    (t,) = join_targets(only_c, "C")
    assert t.rule == Rule.parse("C=>A,B") and t.full_itemset == {"A", "B", "C"}


def test_join_order_all_groups(db_abcde, th):
    ar = select_sensitive_rules(strong_rules(db_abcde, th), "C")
    targets = [str(t) for t in join_targets(ar, "C")]
    # {h} group first among the size-3 targets, then canonical antecedent order
    assert targets == ["C => A,B", "A,D => C", "C,D => A", "A => C", "B => C"]


def test_join_empty():
    assert join_targets({}, "C") == []
