import random

import pytest
from hypothesis import given

from prooflab import (
    CONTRADICTION,
    TAUTOLOGY,
    ParseError,
    PropClass,
    ResourceLimit,
    all_classes,
    big_and,
    big_or,
    canonicalize,
    class_and,
    class_from_text,
    class_iff,
    class_not,
    class_or,
    entails,
    is_tautology,
    parse,
    render,
    representative,
)

from _oracles import all_assignments, eval_bool, random_formula
from test_formula import formulas


def cls(text):
    return canonicalize(parse(text))


def test_canonicalize_examples():
    assert cls("p | ~p") == PropClass((), (1,))
    assert cls("p & ~p") == CONTRADICTION
    # redundant atom is projected out
    assert cls("p & (q | ~q)") == PropClass(("p",), (0, 1))
    # oracle: exhaustive truth tables agree, so the classes coincide
    f, g = parse("~(p&q)"), parse("~p | ~q")
    assert all(
        eval_bool(f, a) == eval_bool(g, a) for a in all_assignments(["p", "q"])
    )
    assert canonicalize(f) == canonicalize(g)


def test_table_layout_first_atom_most_significant():
    c = cls("p & ~q")
    assert c.support == ("p", "q")
    # rows in counting order: 00, 01, 10, 11
    assert c.table == (0, 0, 1, 0)


def test_propclass_invariants_enforced():
    with pytest.raises(ValueError):
        PropClass(("q", "p"), (0, 0, 0, 1))  # unsorted support
    with pytest.raises(ValueError):
        PropClass(("p",), (0, 1, 1))  # wrong table length
    with pytest.raises(ValueError):
        PropClass(("p", "q"), (0, 0, 1, 1))  # q inessential


def test_class_text_round_trip():
    for text in ("p", "p & q", "p | ~q & r", "p <-> q", "p | ~p", "p & ~p"):
        c = cls(text)
        assert class_from_text(c.text()) == c
    assert TAUTOLOGY.text() == "[;1]"
    assert CONTRADICTION.text() == "[;0]"
    with pytest.raises(ParseError):
        class_from_text("[p,q;0011]")  # p inessential: not canonical
    with pytest.raises(ParseError):
        class_from_text("[p;2]")


def test_connective_examples():
    a, b, c = cls("p"), cls("q"), cls("r")
    assert is_tautology(class_iff(a, a))
    assert class_iff(a, TAUTOLOGY) == a
    assert class_or(a, class_iff(b, c)) == class_iff(class_or(a, b), class_or(a, c))
    assert class_and(a, b) == cls("p & q")
    assert class_not(class_not(a)) == a


def test_big_and_big_or():
    assert big_and([cls("p"), cls("q"), cls("r")]) == cls("p & q & r")
    assert big_or([cls("p"), cls("q")]) == cls("p | q")
    assert big_and([cls("p")]) == cls("p")
    with pytest.raises(ValueError):
        big_and([])
    with pytest.raises(ValueError):
        big_or([])


def test_entails():
    assert entails(cls("p & q"), cls("p"))
    assert entails(cls("p"), cls("p | q"))
    assert not entails(cls("p"), cls("q"))
    assert entails(CONTRADICTION, cls("p"))
    assert entails(cls("p"), TAUTOLOGY)
    assert entails(cls("p"), cls("p"))


def test_is_tautology():
    assert is_tautology(cls("p | ~p"))
    assert not is_tautology(cls("p"))
    # oracle: the truth table of (p -> q) <-> (~p | q) is constant 1
    f = parse("(~p | q) <-> (~p | q)")
    assert all(eval_bool(f, a) for a in all_assignments(["p", "q"]))
    assert is_tautology(canonicalize(f))


def test_all_classes_two_atoms():
    pool = all_classes(["p", "q"])
    assert len(pool) == 16
    assert len(set(pool)) == 16
    assert TAUTOLOGY in pool and CONTRADICTION in pool


def test_boolean_algebra_laws_over_two_atom_classes():
    pool = all_classes(["p", "q"])
    for a in pool:
        assert class_and(a, a) == a
        assert class_or(a, a) == a
        assert class_or(a, class_not(a)) == TAUTOLOGY
        assert class_and(a, class_not(a)) == CONTRADICTION
        for b in pool:
            assert class_and(a, b) == class_and(b, a)
            assert class_or(a, b) == class_or(b, a)
            # De Morgan
            assert class_not(class_and(a, b)) == class_or(class_not(a), class_not(b))
            assert class_and(a, class_or(a, b)) == a
            for c in pool:
                assert class_and(class_and(a, b), c) == class_and(a, class_and(b, c))
                assert class_or(class_or(a, b), c) == class_or(a, class_or(b, c))
                assert class_and(a, class_or(b, c)) == class_or(
                    class_and(a, b), class_and(a, c)
                )


def test_no_operation_output_carries_inessential_atoms():
    # PropClass.__post_init__ enforces essentiality, so construction is proof
    rng = random.Random(7)
    for _ in range(300):
        a = canonicalize(random_formula(rng, ["p", "q", "r"]))
        b = canonicalize(random_formula(rng, ["q", "r", "s"]))
        for c in (class_and(a, b), class_or(a, b), class_iff(a, b), class_not(a)):
            assert isinstance(c, PropClass)


def test_soundness_completeness_2000_random_pairs():
    # class equality must coincide with agreement under every valuation
    rng = random.Random(42)
    atoms = ["p", "q", "r", "s"]
    for _ in range(2000):
        f = random_formula(rng, atoms)
        g = random_formula(rng, atoms)
        semantically_equal = all(
            eval_bool(f, a) == eval_bool(g, a) for a in all_assignments(atoms)
        )
        assert (canonicalize(f) == canonicalize(g)) == semantically_equal


def test_canonical_representative_idempotence():
    rng = random.Random(3)
    for _ in range(200):
        c = canonicalize(random_formula(rng, ["p", "q", "r"]))
        assert canonicalize(parse(render(representative(c)))) == c
    assert canonicalize(representative(TAUTOLOGY)) == TAUTOLOGY
    assert canonicalize(representative(CONTRADICTION)) == CONTRADICTION


@given(formulas, formulas)
def test_entailment_antisymmetry(f, g):
    a, b = canonicalize(f), canonicalize(g)
    assert (entails(a, b) and entails(b, a)) == (a == b)


def test_atom_cap():
    wide = " & ".join(f"a{i}" for i in range(17))
    with pytest.raises(ResourceLimit):
        canonicalize(parse(wide))
    # combining two classes may also exceed the cap
    left = canonicalize(parse(" & ".join(f"a{i}" for i in range(9))))
    right = canonicalize(parse(" & ".join(f"b{i}" for i in range(9))))
    with pytest.raises(ResourceLimit):
        class_and(left, right)
    assert canonicalize(parse(wide), atom_cap=17).support == tuple(
        sorted(f"a{i}" for i in range(17))
    )
