from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from eventcalc.avm import (
    Avm, Clash, Var, alpha_equal, avm, fresh_name, get_path, indices, measure, rename,
    rename_fresh, subsumes, substitute, unify,
)
from eventcalc.avmtext import parse_text

from generators import apart, avms

LAWS = settings(max_examples=300, deadline=None)


def _unify_or_none(a, b):
    try:
        return unify(a, b)
    except Clash:
        return None


@LAWS
@given(avms, avms)
def test_unify_commutative(a, b):
    assert _unify_or_none(a, b) == _unify_or_none(b, a)


@LAWS
@given(avms, avms, avms)
def test_unify_associative(a, b, c):
    a, b, c = apart(a, 1), apart(b, 2), apart(c, 3)
    ab = _unify_or_none(a, b)
    bc = _unify_or_none(b, c)
    left = None if ab is None else _unify_or_none(ab, c)
    right = None if bc is None else _unify_or_none(a, bc)
    assert left == right


@LAWS
@given(avms, avms)
def test_clash_symmetric(a, b):
    def clash_of(x, y):
        try:
            unify(x, y)
        except Clash as exc:
            return exc
        return None

    left, right = clash_of(a, b), clash_of(b, a)
    assert (left is None) == (right is None)
    if left is not None:
        assert left.path == right.path
        assert {str(left.left), str(left.right)} == {str(right.left), str(right.right)}


@LAWS
@given(avms)
def test_unify_idempotent(a):
    assert unify(a, a) == a


@LAWS
@given(avms, avms)
def test_unifier_is_subsumed_by_both(a, b):
    u = _unify_or_none(a, b)
    assume(u is not None)
    assert subsumes(a, u) and subsumes(b, u)


@LAWS
@given(avms)
def test_subsumption_reflexive(a):
    assert subsumes(a, a)


@LAWS
@given(avms, avms, avms)
def test_subsumption_transitive(a, x, y):
    b = _unify_or_none(a, x)
    assume(b is not None)
    c = _unify_or_none(b, y)
    assume(c is not None)
    assert subsumes(a, b) and subsumes(b, c)
    assert subsumes(a, c)


@LAWS
@given(avms)
def test_rename_fresh_is_alpha_equal(a):
    assert alpha_equal(a, rename_fresh(a))


def test_names_shared_across_arguments_break_grouping():
    # a.b aliases b to a and drops the name b, so c's b stays a separate entity
    a, b = avm("a"), avm("b")
    c = avm(None, pred=avm("b"))
    assert unify(unify(a, b), c) == avm("a", pred=avm("b"))
    assert unify(a, unify(b, c)) == avm("a", pred=avm("a"))


def test_sorts_meet_during_unification():
    a = avm("e", "eventuality", pred="pour")
    b = avm("e1", "process", agent="jack")
    u = unify(a, b)
    assert u == avm("e", "process", pred="pour", agent="jack")


def test_index_aliasing_uses_least_name():
    a = avm("e2", "event", patient=avm("x", "object"), goal=avm("x", "object"))
    b = avm("e1", "event", patient=avm("w", "object"))
    u = unify(a, b)
    assert u.index == "e1"
    assert u["patient"].index == "w" and u["goal"].index == "w"


def test_clash_carries_path():
    a = avm("e", "event", patient=avm("x", "substance"))
    b = avm("e", "event", patient=avm("x", "object"))
    with pytest.raises(Clash) as info:
        unify(a, b)
    assert info.value.path == ("patient",)
    assert {info.value.left, info.value.right} == {"substance", "object"}


def test_atom_clash():
    with pytest.raises(Clash) as info:
        unify(avm("e", pred="pour"), avm("e", pred="fill"))
    assert info.value.path == ("pred",)


def test_partial_description_subsumes_ground_fact():
    fact = parse_text(
        "[index: e1, sort: event, pred: fill, agent: jack,"
        " patient: [index: x0, sort: object, pred: bucket, card: 5]]"
    )
    assert subsumes(parse_text("[sort: eventuality, pred: fill]"), fact)
    assert subsumes(parse_text("[index: q, patient: [index: y]]"), fact)
    assert not subsumes(parse_text("[index: q, agent: [index: q]]"), fact)
    assert not subsumes(parse_text("[sort: process]"), fact)


def test_subsumption_index_mapping_must_be_functional():
    g = parse_text("[patient: [index: a], goal: [index: a]]")
    s1 = parse_text("[patient: [index: x], goal: [index: x]]")
    s2 = parse_text("[patient: [index: x], goal: [index: y]]")
    assert subsumes(g, s1)
    assert not subsumes(g, s2)


def test_alpha_equal_requires_bijection():
    a = parse_text("[index: e, patient: [index: x], goal: [index: y]]")
    b = parse_text("[index: f, patient: [index: z], goal: [index: z]]")
    assert not alpha_equal(a, b)
    assert alpha_equal(a, rename(a, {"e": "f", "x": "u", "y": "v"}))


def test_fresh_names_are_distinct():
    names = {fresh_name("e") for _ in range(50)}
    assert len(names) == 50
    assert all(n.startswith("e'") for n in names)
    assert fresh_name("e'3").count("'") == 1


def test_substitute_and_pattern_vars():
    pattern = Avm("event", {"duration": measure(Var("N"), "seconds")}, index=Var("E"))
    assert not pattern.is_ground()
    ground = substitute(pattern, {"N": 25, "E": "e2"})
    assert ground.is_ground()
    assert get_path(ground, ("duration", "number")) == Fraction(25)
    assert ground.index == "e2"


def test_construction_validates():
    with pytest.raises(ValueError):
        Avm("event", {"index": "x"})
    with pytest.raises(ValueError):
        avm("E1")
    with pytest.raises(ValueError):
        Avm("liquid")
    with pytest.raises(TypeError):
        avm("e", number=0.5)


def test_features_are_kept_in_canonical_order():
    a = avm("e", "event", duration=measure(1, "seconds"), pred="pour", agent="jack")
    assert list(a.features) == ["pred", "agent", "duration"]
    assert list(indices(avm("e", patient=avm("x")))) == ["e", "x"]
