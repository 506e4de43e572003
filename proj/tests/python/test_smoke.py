"""Smoke tests for the propiso_core extension module."""

import pytest

import propiso_core as pc


def test_parse_print_roundtrip():
    f = pc.parse("p & (q | ~r)")
    assert pc.print_formula(f) == "p & (q | ~r)"
    assert pc.Formula.parse("p & (q | ~r)") == f
    assert str(f) == "p & (q | ~r)"


def test_parse_error():
    with pytest.raises(pc.PropisoError):
        pc.parse("p &")


def test_basic_predicates():
    f = pc.parse("p & (q | p)")
    assert pc.letters(f) == {"p", "q"}
    assert not pc.is_diversified(f)
    assert pc.is_neg_reduced(pc.parse("~p & q"))
    assert not pc.is_neg_reduced(pc.parse("~(p & q)"))
    assert pc.occurrences(pc.parse("~p & q")) == [(0, "p", "neg"), (1, "q", "pos")]
    assert pc.signed_counts(pc.parse("~p & (q | p)")) == {
        ("p", "neg"): 1, ("p", "pos"): 1, ("q", "pos"): 1}


def test_semantics():
    assert pc.is_tautology(pc.parse("~p | p"))
    assert not pc.is_tautology(pc.parse("p"))
    assert pc.are_equivalent(pc.parse("p | (p & q)"), pc.parse("p & (p | q)"))


def test_canonical_and_derive():
    assert pc.canonical(pc.parse("q & p & p")) == "AND[p, p, q]"
    reduced, trace = pc.nnf(pc.parse("~~p"))
    assert str(reduced) == "p" and len(trace) == 1
    assert pc.is_theorem_av(pc.parse("(p & q) & r"), pc.parse("p & (q & r)"))
    assert pc.is_theorem_nav(pc.parse("~(p | q)"), pc.parse("~p & ~q"))
    assert len(pc.derive(pc.parse("p & q"), pc.parse("q & p"))) >= 1
    with pytest.raises(pc.PropisoError):
        pc.derive(pc.parse("p"), pc.parse("q"))


def test_substitute():
    out = pc.substitute(pc.parse("p & q"), "p", pc.parse("T"))
    assert out == pc.parse("T & q")


def test_decide_iso_boolean():
    v = pc.decide_iso_boolean(pc.parse("p | (p & q)"), pc.parse("p & (p | q)"))
    assert v["iso"]
    w = v["witness"]
    assert w["gf_is_identity"] and w["fg_is_identity"]
    assert sorted(w["f"]) == [(0, 0), (1, 1), (2, 2)]

    v = pc.decide_iso_boolean(pc.parse("p & (~p | p)"), pc.parse("p"))
    assert not v["iso"] and v["reason"] == "letter-homogeneity fails"


def test_decide_iso_generality():
    v = pc.decide_iso_generality(pc.parse("~(p & q)"), pc.parse("~p | ~q"))
    assert v["iso"]
    assert sorted(v["bijection"]) == [(0, 0), (1, 1)]
    assert not pc.decide_iso_generality(pc.parse("p | (p & q)"), pc.parse("p & (p | q)"))["iso"]
    with pytest.raises(pc.PropisoError):
        pc.decide_iso_generality(pc.parse("p & T"), pc.parse("p"))


def test_generalize():
    a1, b1, sub = pc.generalize(pc.parse("p & (~p | p)"), pc.parse("p"), "s0 s1 | s2 t0")
    assert str(a1) == "q1 & (~q1 | q2)"
    assert str(b1) == "q2"
    assert sub == {"q1": "p", "q2": "p"}


def test_oracle():
    assert pc.oracle_theorem(pc.parse("p & q"), pc.parse("q & p"), 1) == "yes"
    assert pc.oracle_theorem(pc.parse("p"), pc.parse("q"), 4) == "unknown"
