import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reflector.reflib.errors import ValidationError
from reflector.reflib.words import (Word, bounded_join, distributivity_counterexample_checks, sample_words,
                                    word_leq, word_mult)

W = Word.parse


def words(max_letters=1, max_coeff=2):
    letters = st.text(alphabet='xyz', max_size=max_letters)
    return letters.flatmap(lambda ls: st.tuples(
        st.lists(st.integers(0, max_coeff), min_size=len(ls) + 1, max_size=len(ls) + 1), st.just(ls),
    )).map(lambda pair: Word(tuple(pair[0]), pair[1]))


def test_parse_and_print():
    w = W('1x1y2')
    assert w.coeffs == (1, 1, 2)
    assert w.letters == 'xy'
    assert str(w) == '1x1y2'
    assert len(W('7')) == 0
    with pytest.raises(ValidationError):
        W('1x')
    with pytest.raises(ValidationError):
        Word((1, 2), '')


def test_multiplication_fuses_boundary_coefficients():
    assert word_mult(W('1'), W('0x0')) == W('1x0')
    assert word_mult(W('0x0'), W('1')) == W('0x1')
    assert word_mult(W('2x3'), W('1y0')) == W('2x4y0')
    assert word_mult(W('0'), W('0')) == W('0')


def test_order():
    assert all(word_leq(W('0z0'), W(f"{k}z{k}")) for k in range(5))
    assert word_leq(W('1x1'), W('0z0'))
    assert not word_leq(W('0'), W('1'))
    assert word_leq(W('0z0'), W('1z1'))
    assert not word_leq(W('1z1'), W('0z0'))
    assert not word_leq(W('0x0'), W('0y0'))
    assert not word_leq(W('0x0'), W('0x0y0'))


def test_bounded_join():
    assert bounded_join([W('0x0'), W('0y0')]) == W('0z0')
    assert bounded_join([W('2x3')]) == W('2x3')
    assert bounded_join([W('0'), W('1')]) is None
    assert bounded_join([W('2x3x0'), W('2x3y0')]) == W('2x3z0')


def test_distributivity_counterexample():
    rep = distributivity_counterexample_checks()
    assert rep.ok, rep.render()
    assert [c.name for c in rep.checks] == [
        'join', 'left-distributive', 'right-distributive', 'two-sided-failure',
    ]
    assert all(c.status == 'PASS' for c in rep.checks)


def test_sample_size():
    assert len(list(sample_words(2, 3))) == 4 + 3 * 16 + 9 * 64


@settings(max_examples=200, deadline=None)
@given(words(), words(), words())
def test_order_is_a_partial_order(a, b, c):
    assert word_leq(a, a)
    if word_leq(a, b) and word_leq(b, a):
        assert a == b
    if word_leq(a, b) and word_leq(b, c):
        assert word_leq(a, c)


@settings(max_examples=200, deadline=None)
@given(words(), words(), words())
def test_multiplication_is_associative_and_additive(a, b, c):
    assert word_mult(word_mult(a, b), c) == word_mult(a, word_mult(b, c))
    assert len(word_mult(a, b)) == len(a) + len(b)


@settings(max_examples=200, deadline=None)
@given(words(), words(), words(), words())
def test_multiplication_is_compatible(a1, b1, a2, b2):
    if word_leq(a1, b1) and word_leq(a2, b2):
        assert word_leq(word_mult(a1, a2), word_mult(b1, b2))
