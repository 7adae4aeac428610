import pytest
from hypothesis import given, settings

from bddkenum.bdd import constant
from bddkenum.counting import gen_poly
from bddkenum.oracle import node_weight_sets
from bddkenum.schedule import (CardSet, compute_card1, compute_card2,
                               function_card1, make_schedule)
from strategies import bdds

I = CardSet.interval


def test_cardset_basics():
    s = CardSet.of([0, 1, 2, 5])
    assert list(s) == [0, 1, 2, 5]
    assert s.intervals() == [(0, 2), (5, 5)]
    assert str(s) == "[0,2],[5,5]"
    assert str(CardSet()) == "{}"
    assert I(2, 4) <= I(0, 7)
    assert len(I(3, 4)) == 2


def test_card1_psi(psi, psi_ids):
    card1 = compute_card1(psi)
    got = {x: card1[psi_ids[x]] for x in "abcdef"}
    assert got == {"a": I(0, 3), "b": I(1, 3), "c": I(2, 4),
                   "d": I(0, 7), "e": I(0, 8), "f": I(0, 10)}


def test_card1_terminal_roots():
    assert function_card1(constant(6, True)) == I(0, 6)
    assert function_card1(constant(6, False)) == CardSet()


def test_card2_psi(psi, psi_ids):
    card2 = compute_card2(psi, 4)
    got = {x: card2[psi_ids[x]] for x in "abcdef"}
    assert got == {"f": CardSet.of([4]), "e": I(3, 4), "d": I(1, 3),
                   "c": CardSet.of([2]), "b": I(1, 3), "a": I(0, 3)}


def test_card2_psi_k0(psi, psi_ids):
    card2 = compute_card2(psi, 0)
    truth = node_weight_sets(psi)
    # only all-zero completions are usable, so only weight 0 is ever needed
    for a, s in card2.items():
        assert set(s) <= {0} and set(s) <= truth[a]
    assert card2[psi_ids["f"]] == CardSet.of([0])
    assert card2[psi_ids["e"]] == CardSet.of([0])
    assert card2[psi_ids["a"]] == CardSet.of([0])


def test_card2_infeasible_k():
    from bddkenum.bdd import parse_bdd
    # x1 and x2 both forced to 1: no model of weight 0 or 1
    bdd = parse_bdd("nvars 3\nnode y 2 F T\nnode x 1 F y\nroot x\n")
    for k in (0, 1):
        assert not any(compute_card2(bdd, k).values())
        assert not make_schedule(bdd, k).feasible


def test_card2_rejects_bad_k(psi):
    with pytest.raises(ValueError):
        compute_card2(psi, 11)


@settings(max_examples=60, deadline=None)
@given(bdds(max_n=12))
def test_card1_matches_oracle(bdd):
    card1 = compute_card1(bdd)
    truth = node_weight_sets(bdd)
    for a in range(bdd.size):
        assert set(card1[a]) == truth[a]
    poly = gen_poly(bdd)
    assert set(function_card1(bdd, card1)) == {k for k, c in enumerate(poly) if c}


@settings(max_examples=60, deadline=None)
@given(bdds(max_n=12))
def test_card2_subset_of_card1(bdd):
    card1 = compute_card1(bdd)
    for k in range(bdd.nvars + 1):
        card2 = compute_card2(bdd, k, card1)
        assert all(card2[a] <= card1[a] for a in card2)
        if bdd.root >= 0 and bdd.var(bdd.root) == 1:
            want = CardSet.of([k]) & card1[bdd.root]
            assert card2[bdd.root] == want
