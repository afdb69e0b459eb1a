import random

import pytest

from twistedhom import (
    Generator,
    ParseError,
    Word,
    identity_word,
    invert,
    multiply,
    parse_word,
    word_to_text,
)

from support import random_word

AB = (Generator("a"), Generator("b"))
ABGD = tuple(Generator(n) for n in "abgd")


def test_generator_name_rules():
    Generator("x_1")
    Generator("_tmp")
    for bad in ("", "1a", "a-b", "a b"):
        with pytest.raises(ValueError):
            Generator(bad)


def test_parse_simple():
    w = parse_word("a b a^-1", AB)
    assert len(w) == 3
    assert w.letters == ((0, 1), (1, 1), (0, -1))


def test_parse_reduces():
    assert parse_word("a a^-1 b", AB) == parse_word("b", AB)
    assert len(parse_word("a a^-1 b", AB)) == 1


def test_parse_exponent_expansion():
    w = parse_word("d^3", ABGD)
    assert w.letters == ((3, 1), (3, 1), (3, 1))
    assert parse_word("a^-2", AB).letters == ((0, -1), (0, -1))


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_word("a c", AB)
    assert err.value.position == 1
    with pytest.raises(ParseError):
        parse_word("a^x", AB)
    with pytest.raises(ParseError):
        parse_word("a^0", AB)


def test_multiply_cancellation():
    u = parse_word("a b", AB)
    v = parse_word("b^-1 a", AB)
    assert multiply(u, v) == parse_word("a a", AB)


def test_multiply_identity_neutral():
    w = parse_word("a b a", AB)
    e = identity_word(AB)
    assert multiply(w, e) == w
    assert multiply(e, w) == w


def test_multiply_no_cancellation():
    ag = parse_word("a g", ABGD)
    assert multiply(ag, ag) == parse_word("a g a g", ABGD)


def test_multiply_alphabet_mismatch():
    with pytest.raises(ValueError):
        multiply(parse_word("a", AB), parse_word("a", ABGD))


def test_invert():
    assert invert(parse_word("a b", AB)) == parse_word("b^-1 a^-1", AB)
    assert invert(identity_word(AB)) == identity_word(AB)
    assert invert(parse_word("d d", ABGD)) == parse_word("d^-1 d^-1", ABGD)
    assert invert(invert(parse_word("a b^-1 a", AB))) == parse_word("a b^-1 a", AB)


def test_construction_rejects_bad_letters():
    with pytest.raises(ValueError):
        Word(AB, ((2, 1),))
    with pytest.raises(ValueError):
        Word(AB, ((0, 2),))


def test_eager_reduction_invariant():
    w = Word(AB, ((0, 1), (0, -1), (1, 1), (1, 1), (1, -1)))
    assert w.letters == ((1, 1),)


def _is_reduced(w):
    return all(
        (a, sa) != (b, -sb) for (a, sa), (b, sb) in zip(w.letters, w.letters[1:])
    )


def test_word_algebra_axioms_randomized():
    rng = random.Random(20260811)
    for _ in range(100):
        u = random_word(rng, ABGD)
        v = random_word(rng, ABGD)
        w = random_word(rng, ABGD)
        assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))
        assert multiply(w, invert(w)) == identity_word(ABGD)
        assert multiply(invert(w), w) == identity_word(ABGD)
        for result in (multiply(u, v), invert(w)):
            assert _is_reduced(result)
        assert parse_word(word_to_text(w), ABGD) == w
