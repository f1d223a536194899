import pytest

from reflector.reflib.errors import AntisymmetryViolation, CapExceeded, UnknownElement, ValidationError
from reflector.reflib.order import (Morphism, down_closure, hasse, is_monotone, is_order_embedding,
                                    join, lower_sets, meet, set_labels, validate_poset)
from reflector.reflib.util import set_label, sort_canonical, submasks


def _vee():
    # b, c below a
    return validate_poset(['a', 'b', 'c'], [('b', 'a'), ('c', 'a')])


def test_transitive_closure_of_generating_pairs():
    p = validate_poset(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
    assert p.le(0, 2)
    assert not p.le(2, 0)
    assert hasse(p) == [('a', 'b'), ('b', 'c')]


def test_cycle_is_rejected_with_witness():
    with pytest.raises(AntisymmetryViolation) as exc:
        validate_poset(['a', 'b'], [('a', 'b'), ('b', 'a')])
    assert set(exc.value.witness) == {'a', 'b'}


def test_unknown_and_duplicate_names():
    with pytest.raises(UnknownElement):
        validate_poset(['a'], [('a', 'q')])
    with pytest.raises(ValidationError):
        validate_poset(['a', 'a'], [])


def test_join_and_meet_may_be_missing():
    p = _vee()
    bc = p.mask(['b', 'c'])
    assert p.elements[join(p, bc)] == 'a'
    assert meet(p, bc) is None
    assert join(p, 0) is None
    assert p.elements[p.top()] == 'a'
    assert p.bottom() is None


def test_lower_sets_in_canonical_order():
    p = _vee()
    assert set_labels(p, lower_sets(p)) == ['{}', '{b}', '{c}', '{b,c}', '{a,b,c}']


def test_lower_sets_respects_cap():
    with pytest.raises(CapExceeded) as exc:
        lower_sets(_vee(), cap=2)
    assert exc.value.cap == 2


def test_down_closure_and_labels():
    p = _vee()
    assert set_label(p.elements, down_closure(p, p.mask(['a']))) == '{a,b,c}'
    assert set_label(p.elements, 0) == '{}'


def test_canonical_sort_breaks_ties_by_name():
    names = ['c', 'a', 'b']
    masks = [0b001, 0b010, 0b100, 0b011]
    labels = [set_label(names, m) for m in sort_canonical(names, masks)]
    assert labels == ['{a}', '{b}', '{c}', '{a,c}']


def test_submasks_include_both_ends():
    assert sorted(submasks(0b101)) == [0b000, 0b001, 0b100, 0b101]


def test_monotone_versus_embedding():
    p = _vee()
    chain = validate_poset(['0', '1'], [('0', '1')])
    collapse = Morphism('collapse', (1, 0, 0))
    assert is_monotone(collapse, p, chain)
    assert not is_order_embedding(collapse, p, chain)
    flip = Morphism('flip', (0, 1, 1))
    assert not is_monotone(flip, p, chain)


def test_morphism_image_preimage_compose():
    f = Morphism('f', (1, 0, 0))
    g = Morphism('g', (1, 0))
    assert f.image(0b110) == 0b001
    assert f.preimage(0b01) == 0b110
    assert g.compose(f).images == (0, 1, 1)
