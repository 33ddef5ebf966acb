"""Cyclic words, canonical rotation, and renamings."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from surfops.lexer import ParseError
from surfops.words import CyclicWord, Renaming, glue, is_glue, min_rotation

labels = st.text(alphabet="abcxyz123", min_size=1, max_size=3)
label_lists = st.lists(labels, unique=True, max_size=6)


def test_min_rotation_examples():
    assert min_rotation(("b", "a", "c")) == ("a", "c", "b")
    assert min_rotation(()) == ()
    assert min_rotation(("x",)) == ("x",)


@given(st.lists(st.text(alphabet="abc1", min_size=1, max_size=2), max_size=7))
def test_min_rotation_is_rotation_invariant(items):
    tup = tuple(items)
    for k in range(max(1, len(tup))):
        rotated = tup[k:] + tup[:k]
        assert min_rotation(rotated) == min_rotation(tup)


def test_word_equality_up_to_rotation():
    assert CyclicWord(("1", "2", "3")) == CyclicWord(("3", "1", "2"))
    assert CyclicWord(("1", "2", "3")) != CyclicWord(("1", "3", "2"))


def test_word_rejects_duplicates_and_bad_items():
    with pytest.raises(ValueError):
        CyclicWord(("a", "a"))
    with pytest.raises(ValueError):
        CyclicWord(("a", "b c"))
    with pytest.raises(ValueError):
        CyclicWord(("#x",))  # reserved prefix but not a glue token


def test_glue_tokens():
    assert glue(7) == "#7"
    assert is_glue("#12")
    assert not is_glue("#0")
    assert not is_glue("#01")
    assert not is_glue("x")
    assert CyclicWord(("a", "#1")).items  # tokens are valid word items


def test_word_parse_and_str():
    w = CyclicWord.parse("( b a c )")
    assert str(w) == "( a c b )"
    assert str(CyclicWord.parse("()")) == "( )"
    with pytest.raises(ParseError):
        CyclicWord.parse("( a a )")
    with pytest.raises(ParseError):
        CyclicWord.parse("( a")


def test_rename_examples():
    w = CyclicWord(("a", "b"))
    assert w.rename(Renaming({"a": "x", "b": "y"})) == CyclicWord(("x", "y"))
    assert w.rename(Renaming.identity(["a", "b"])) == w
    assert CyclicWord(()).rename(Renaming({})) == CyclicWord(())


def test_rename_then_canonicalize():
    # (a b c) under a->cp, b->ap, c->bp lands on (cp ap bp), canonically (ap bp cp)
    w = CyclicWord(("a", "b", "c"))
    out = w.rename(Renaming({"a": "cp", "b": "ap", "c": "bp"}))
    assert out.items == ("ap", "bp", "cp")


def test_rename_requires_full_domain():
    with pytest.raises(ValueError):
        CyclicWord(("a", "b")).rename(Renaming({"a": "x"}))


def test_renaming_validation():
    with pytest.raises(ValueError):
        Renaming({"a": "x", "b": "x"})  # not injective
    with pytest.raises(ValueError):
        Renaming([("a", "x"), ("a", "y")])  # duplicate source
    r = Renaming({"a": "x", "b": "y"})
    assert r("a") == "x"
    assert r.inverse()("y") == "b"
    assert r.restrict(["a"]).domain == frozenset({"a"})
    with pytest.raises(ValueError):
        r("z")


def test_renaming_after_and_union():
    first = Renaming({"a": "m", "b": "n"})
    second = Renaming({"m": "1", "n": "2"})
    composite = second.after(first)
    assert composite("a") == "1" and composite("b") == "2"
    both = Renaming({"a": "x"}).union(Renaming({"b": "y"}))
    assert both.domain == frozenset({"a", "b"})
    with pytest.raises(ValueError):
        Renaming({"a": "x"}).union(Renaming({"a": "y"}))


@given(label_lists, st.integers(0, 5))
def test_word_rotations_all_equal(names, k):
    w = CyclicWord(names)
    if names:
        rotated = CyclicWord(tuple(names[k % len(names):]) + tuple(names[: k % len(names)]))
        assert rotated == w


@given(label_lists)
def test_rename_functorial_on_words(names):
    w = CyclicWord(names)
    first = Renaming({x: x + "_1" for x in names})
    second = Renaming({x + "_1": x + "_2" for x in names})
    assert w.rename(first).rename(second) == w.rename(second.after(first))


def test_rotated_to_and_rotations():
    w = CyclicWord(("a", "c", "b"))
    assert w.rotated_to("c") == ("c", "b", "a")
    assert set(w.rotations()) == {("a", "c", "b"), ("c", "b", "a"), ("b", "a", "c")}
    assert list(CyclicWord(()).rotations()) == [()]
    with pytest.raises(ValueError):
        w.rotated_to("z")
