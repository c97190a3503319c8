from fractions import Fraction

import pytest

from conftest import ABC_HIDE_C, ABC_HIDE_B, ABCDE_HIDE_C, ABCDE_HIDE_B, db
from rulehide import Rule, ShapeMismatch, TransactionDB, analyze, hide_all, support_profile


def names(rules):
    return {str(r) for r in rules}


def test_abcde_c(db_abcde, th):
    rep = analyze(db_abcde, db(ABCDE_HIDE_C), th, ["C"])
    assert rep.rules_pruned == 6 and len(rep.hidden_sensitive) == 6
    assert rep.surviving_sensitive == {}
    assert names(rep.ghost_rules) == {"C => E", "E => C", "C,D => E", "D,E => C"}
    assert rep.support_invariant_ok
    assert rep.transactions_modified == 2 and rep.moves_applied == 1


def test_abc_b(db_abc, th):
    rep = analyze(db_abc, db(ABC_HIDE_B), th, ["B"])
    assert rep.rules_pruned == 6
    assert names(rep.surviving_sensitive) == {"B => A", "B,C => A"}


def test_abc_c_discrepancy(db_abc, th):
    """Only six of the eight C-rules can be hidden: A occurs in every row."""
    rep = analyze(db_abc, db(ABC_HIDE_C), th, ["C"])
    assert rep.rules_pruned == 6
    survivors = rep.surviving_sensitive
    assert set(survivors) == {Rule.parse("C=>A"), Rule.parse("B,C=>A")}
    assert survivors[Rule.parse("C=>A")].confidence == 1
    cb_a = survivors[Rule.parse("B,C=>A")]
    assert (cb_a.support, cb_a.confidence) == (Fraction(1, 3), 1)


def test_abcde_b(db_abcde, th):
    assert analyze(db_abcde, db(ABCDE_HIDE_B), th, ["B"]).rules_pruned == 4


def test_identity(db_abcde, th):
    rep = analyze(db_abcde, db_abcde, th, ["C"])
    assert rep.hidden_sensitive == rep.lost_rules == rep.ghost_rules == {}
    assert rep.moves_applied == rep.transactions_modified == 0
    assert rep.support_invariant_ok


def test_shape_mismatch(db_abc, th):
    with pytest.raises(ShapeMismatch):
        analyze(db_abc, TransactionDB.from_itemsets(["A"]), th, ["C"])


def test_support_invariance_flag(db_abc, th):
    broken = db("A B\nA B C\nA B C\nA B\nA\nA C\n")
    assert not analyze(db_abc, broken, th, ["C"]).support_invariant_ok


def test_support_profile(db_abc, db_abcde):
    assert support_profile(db_abc, ["C"]) == {"C": 4}
    assert support_profile(db(ABC_HIDE_C), ["C"]) == {"C": 4}
    assert support_profile(db_abcde, ["B"]) == {"B": 4}
    assert support_profile(db(ABCDE_HIDE_B), ["B"]) == {"B": 4}
    assert support_profile(db_abc, []) == {}


@pytest.mark.parametrize("fixture,h", [("db_abc", "C"), ("db_abc", "B"),
                                       ("db_abcde", "C"), ("db_abcde", "B")])
def test_consistent_with_hider(fixture, h, th, request):
    d = request.getfixturevalue(fixture)
    res = hide_all(d, th, [h])
    rep = analyze(d, res.transformed, th, [h], moves=len(res.moves))
    assert rep.surviving_sensitive == res.unhidden
    assert rep.transactions_modified <= 2 * rep.moves_applied
