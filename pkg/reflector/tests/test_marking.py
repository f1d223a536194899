import pytest

from builders import chain, constant, marked
from reflector.reflib.errors import ValidationError
from reflector.reflib.marking import (Level, MarkedPosemigroup, MarkingKind, builtin_marking,
                                      check_marked_morphism, check_marked_quantale, check_marking_axioms,
                                      d_admissibility_witness, is_D_admissible, marking_from_spec)
from reflector.reflib.order import identity_morphism
from reflector.reflib.util import submasks


def test_explicit_marking_on_the_cube(cube):
    ms = cube.get('cube')
    p = ms.sg.poset
    assert ms.is_admissible(p.mask(['b', 'c']))
    assert not ms.is_admissible(p.mask(['d', 'e']))
    assert ms.marking.spec().startswith('explicit {a} {b}')


def test_bounded_pairs_on_a_chain_satisfy_the_axioms(cube):
    sg = cube.get('chain').sg
    marking = builtin_marking(sg, MarkingKind.BOUNDED_PAIRS)
    assert check_marking_axioms(sg, marking).ok
    assert marking.is_admissible(sg.poset.mask(['b', 'v']))
    assert not marking.is_admissible(sg.poset.mask(['u', 'b', 'd']))


def test_marking_without_singletons_is_reported(three):
    sg = three.get('S').sg
    marking = marking_from_spec(sg, 'explicit {b,c}')
    rep = check_marking_axioms(sg, marking)
    assert not rep.ok
    assert rep.check('singletons').witness == 'a'


def test_marking_not_closed_under_translation(three):
    sg = three.get('S').sg
    marking = marking_from_spec(sg, 'explicit {a} {b} {c} {b,c}')
    assert check_marking_axioms(sg, marking).ok
    broken = marking_from_spec(sg, 'explicit {a} {b} {c} {a,b}')
    rep = check_marking_axioms(sg, broken)
    assert rep.check('singletons').ok
    assert rep.check('translations').witness == {'G': '{a,b}', 'a': 'a', 'b': '1', 'translate': '{a,c}'}


def test_d_admissibility_of_the_vee(three):
    sg = three.get('S').sg
    p = sg.poset
    assert not is_D_admissible(sg, p.mask(['b', 'c']))
    witness = d_admissibility_witness(sg, p.mask(['b', 'c']))
    assert witness['M'] == '{b,c}'
    assert witness['translate of join'] == 'a'
    assert witness['join of translate'] == 'c'
    assert is_D_admissible(sg, p.mask(['a', 'b']))
    assert not is_D_admissible(sg, 0)


def test_every_nonempty_subset_of_the_cube_is_d_admissible(cube):
    sg = cube.get('cube').sg
    assert all(is_D_admissible(sg, M) for M in submasks(sg.full))


def test_d_marking_satisfies_the_axioms_everywhere(bundled):
    for ms in bundled.values():
        marking = builtin_marking(ms.sg, MarkingKind.D)
        assert check_marking_axioms(ms.sg, marking).ok, ms.name


def test_directed_sets_of_the_vee(three):
    sg = three.get('S').sg
    marking = builtin_marking(sg, MarkingKind.DIRECTED)
    labels = {sg.label(M) for M in marking.admissible_subsets()}
    assert labels == {'{a}', '{b}', '{c}', '{a,b}', '{a,c}', '{a,b,c}'}


def test_marked_quantale_check(three, cube):
    assert check_marked_quantale(three.get('S')).ok
    assert check_marked_quantale(cube.get('cube')).ok
    sg = three.get('S').sg
    wide = MarkedPosemigroup(sg, marking_from_spec(sg, 'explicit {a} {b} {c} {b,c}'))
    rep = check_marked_quantale(wide)
    assert not rep.ok
    assert rep.witness['M'] == '{b,c}'


def test_marking_specs():
    sg = chain(3)
    assert marking_from_spec(sg, 'card<=2').spec() == 'card<=2'
    assert marking_from_spec(sg, 'explicit {0,1}').family == (sg.poset.mask(['0', '1']),)
    assert marking_from_spec(sg, 'chains').kind is MarkingKind.CHAINS
    with pytest.raises(ValidationError):
        marking_from_spec(sg, 'sideways')
    with pytest.raises(ValidationError):
        builtin_marking(sg, MarkingKind.CARD_LE, n=0)


def test_explicit_empty_set_needs_a_bottom(three):
    sg = three.get('S').sg
    with pytest.raises(ValidationError):
        marking_from_spec(sg, 'explicit {} {a} {b} {c}')
    assert marking_from_spec(chain(2), 'explicit {} {0} {1}').is_admissible(0)


def test_full_and_singletons_on_the_empty_set():
    sg = chain(2)
    assert builtin_marking(sg, MarkingKind.FULL).is_admissible(0)
    assert not builtin_marking(sg, MarkingKind.SINGLETONS).is_admissible(0)
    assert not builtin_marking(sg, MarkingKind.CARD_LE, n=3).is_admissible(0)


def test_memo_is_stable(cube):
    marking = builtin_marking(cube.get('cube').sg, MarkingKind.D)
    first = [marking.is_admissible(M) for M in range(256)]
    assert first == [M in marking for M in range(256)]


def test_identity_is_a_morphism_at_every_level(cube):
    ms = cube.get('cube')
    ident = identity_morphism(ms.sg.size)
    for level in Level:
        assert check_marked_morphism(ident, ms, ms, level).ok


def test_constant_into_a_non_idempotent_fails_multiplication(three):
    ms = three.get('S')
    rep = check_marked_morphism(constant('to_b', 3, 1), ms, ms, Level.POSEMIGROUP)
    assert rep.check('monotone').ok
    assert rep.check('multiplication').status == 'FAIL'


def test_inclusion_of_the_chain_into_the_cube(cube):
    decl = cube.morphism('incl')
    rep = check_marked_morphism(decl.morphism, cube.get('chain'), cube.get('cube'), Level.MARKED_QUANTALE)
    assert rep.ok, rep.render()


def test_marked_level_checks_images_of_admissible_sets():
    src = marked(chain(3), MarkingKind.FULL)
    dst = marked(chain(3), MarkingKind.SINGLETONS)
    rep = check_marked_morphism(identity_morphism(3), src, dst, Level.MARKED)
    assert rep.check('marking').status == 'FAIL'


def test_bounded_directed_and_finite_kinds_on_the_vee(three):
    sg = three.get('S').sg
    p = sg.poset
    bounded = builtin_marking(sg, MarkingKind.BOUNDED)
    bounded_directed = marking_from_spec(sg, 'bounded-directed')
    finite = marking_from_spec(sg, 'finite')
    nonempty = list(range(1, 1 << sg.size))
    assert [M for M in nonempty if bounded.is_admissible(M)] == nonempty
    assert not bounded_directed.is_admissible(p.mask(['b', 'c']))
    assert bounded_directed.is_admissible(p.mask(['a', 'b', 'c']))
    assert sum(bounded_directed.is_admissible(M) for M in nonempty) == 6
    card = builtin_marking(sg, MarkingKind.CARD_LE, n=sg.size)
    assert [finite.is_admissible(M) for M in range(1 << sg.size)] == \
        [card.is_admissible(M) for M in range(1 << sg.size)]
    for marking in (bounded, bounded_directed, finite):
        assert not marking.is_admissible(0)
        assert check_marking_axioms(sg, marking).ok, marking.spec()


def test_bounded_directed_vee_is_a_marked_quantale(three):
    sg = three.get('S').sg
    assert check_marked_quantale(marked(sg, MarkingKind.BOUNDED_DIRECTED)).ok
    rep = check_marked_quantale(marked(sg, MarkingKind.BOUNDED))
    assert not rep.ok
