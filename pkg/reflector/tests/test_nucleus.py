import dataclasses

import pytest

from builders import chain, chain_quantale, marked
from reflector.reflib.closure import closed_quantale, closure_nucleus, star_closure
from reflector.reflib.errors import HypothesisFailed, NucleusInvalid, PreconditionFailed
from reflector.reflib.ideals import ideal_nucleus
from reflector.reflib.marking import MarkingKind
from reflector.reflib.nucleus import (Nucleus, check_principal_join_law, check_quantic_nucleus,
                                      check_representation, find_isomorphism, identity_nucleus,
                                      is_principal_closed, is_quantale, principal_embedding_properties,
                                      quantale_axioms, quotient)
from reflector.reflib.order import lower_sets


def test_identity_nucleus_gives_all_lower_sets(five):
    sg = five.get('S').sg
    q = quotient(sg, identity_nucleus(sg))
    assert q.size == 20
    assert quantale_axioms(q).ok


def test_empty_operator_is_not_inflationary(three):
    sg = three.get('S').sg
    rep = check_quantic_nucleus(sg, Nucleus(sg, lambda D: 0, name='empty'))
    assert rep.check('lower-set').ok
    assert rep.check('inflationary').status == 'FAIL'
    with pytest.raises(NucleusInvalid):
        quotient(sg, Nucleus(sg, lambda D: 0, name='empty'))


def test_closure_is_a_principal_closed_nucleus(three):
    sg = three.get('S').sg
    j = closure_nucleus(sg)
    assert check_quantic_nucleus(sg, j).ok
    assert is_principal_closed(sg, j)
    assert quotient(sg, j).labels == ('{}', '{b}', '{c}', '{b,c}', '{a,b,c}')


def test_constant_top_is_not_principal_closed():
    sg = chain(2)
    j = Nucleus(sg, lambda D: sg.full, name='top')
    assert check_quantic_nucleus(sg, j).ok
    assert not is_principal_closed(sg, j)
    with pytest.raises(PreconditionFailed):
        check_principal_join_law(sg, j, 0)


def test_principal_join_law(three, cube):
    sg = three.get('S').sg
    j = closure_nucleus(sg)
    p = sg.poset
    assert check_principal_join_law(sg, j, p.mask(['b', 'c'])).status == 'VACUOUS'
    assert check_principal_join_law(sg, j, p.down_masks[p.index('b')]).status == 'PASS'
    ms = marked(cube.get('cube').sg, MarkingKind.D)
    jd = ideal_nucleus(ms)
    for D in lower_sets(ms.sg.poset):
        assert check_principal_join_law(ms.sg, jd, D).status == 'PASS'


def test_representation_of_a_quantale(cube):
    rep = check_representation(chain(2), ideal_nucleus(marked(chain(2), MarkingKind.FULL)))
    assert rep.ok
    assert rep.data['isomorphism'].images == (0, 1)
    ms = marked(cube.get('cube').sg, MarkingKind.D)
    rep = check_representation(ms.sg, ideal_nucleus(ms))
    assert rep.ok, rep.render()
    assert sorted(rep.data['isomorphism'].images) == list(range(8))


def test_representation_needs_a_quantale(three):
    sg = three.get('S').sg
    with pytest.raises(HypothesisFailed):
        check_representation(sg, closure_nucleus(sg))


def test_principal_embedding(three, five):
    sg = three.get('S').sg
    assert principal_embedding_properties(sg, closure_nucleus(sg)).ok
    single = chain(1)
    assert principal_embedding_properties(single, closure_nucleus(single)).ok

    ms = five.get('S')
    j = ideal_nucleus(ms)
    rep = principal_embedding_properties(ms.sg, j)
    assert rep.ok
    q = quotient(ms.sg, j, check=False)
    eta = rep.data['eta']
    p = ms.sg.poset
    joined = q.join_all(eta(p.index(x)) for x in 'bcd')
    assert q.labels[joined] == '{b,c,d}'


def test_quantale_axioms_catch_a_corrupted_product(three):
    q = closed_quantale(three.get('S').sg)
    assert quantale_axioms(q).ok
    mult = q.mult.copy()
    mult[q.top, q.top] = q.bottom
    rep = quantale_axioms(dataclasses.replace(q, mult=mult))
    assert not rep.ok
    assert rep.check('left-distributivity').status == 'FAIL'


def test_is_quantale(three, cube):
    assert is_quantale(cube.get('cube').sg)
    assert not is_quantale(three.get('S').sg)
    assert is_quantale(chain(4))
    assert not is_quantale(chain(3, mult='max'))


def test_isomorphism_search(three):
    sg = three.get('S').sg
    q = closed_quantale(sg)
    assert find_isomorphism(q, q) is not None
    star = quotient(sg, Nucleus(sg, lambda D: star_closure(sg, D), name='star'))
    iso = find_isomorphism(q, star)
    assert iso is not None
    assert find_isomorphism(star, q) is not None
    assert find_isomorphism(chain_quantale(2), chain_quantale(3)) is None


def test_isomorphism_respects_multiplication():
    # same lattice, different products
    meet = chain_quantale(3)
    flat = dataclasses.replace(meet, mult=meet.mult.copy())
    flat.mult[2, 2] = 1
    assert find_isomorphism(meet, flat) is None
