"""Expected values for the bundled scenarios, checked end to end."""

from __future__ import annotations

import logging
from typing import Callable

from .closure import closed_quantale, closure, closure_reflection, is_closure_preserving
from .dot import emit_dot
from .ideals import extend_to_ideals, ideal_quantale, ideal_reflection
from .marking import Level, MarkedPosemigroup, check_marked_morphism, marking_from_spec
from .order import down_closure, hasse
from .reports import Report
from .scenario import load_scenario
from .words import distributivity_counterexample_checks

log = logging.getLogger(__name__)


def _expect(name: str, got, expected) -> Report:
    if got == expected:
        return Report.passed(name)
    return Report.failed(name, {'got': got, 'expected': expected})


def _remarked(ms: MarkedPosemigroup, spec: str) -> MarkedPosemigroup:
    return MarkedPosemigroup(ms.sg, marking_from_spec(ms.sg, spec))


def three_element() -> Report:
    rep = Report('three-element')
    scenario = load_scenario('three-element')
    ms = scenario.get('S')
    sg = ms.sg
    lattice = ['{}', '{b}', '{c}', '{b,c}', '{a,b,c}']
    ideals, closed = ideal_quantale(ms), closed_quantale(sg)
    rep.add(_expect('ideals', list(ideals.labels), lattice))
    rep.add(_expect('closed', list(closed.labels), lattice))
    rep.add(_expect('hasse', hasse(closed.poset), [
        ('{b,c}', '{a,b,c}'), ('{b}', '{b,c}'), ('{c}', '{b,c}'), ('{}', '{b}'), ('{}', '{c}'),
    ]))
    _, refl = ideal_reflection(ms)
    rep.add(_expect('unpreserved-join', refl.data['unpreserved_joins'][:1],
                    [('{b,c}', '{a,b,c}', '{b,c}')]))
    const = scenario.morphism('const').morphism
    rep.add(_expect('constant-closure-preserving', is_closure_preserving(const, sg, sg).status, 'PASS'))
    bc = sg.poset.mask(['b', 'c'])
    rep.add(_expect('constant-image', (
        sg.label(const.image(closure(sg, bc))),
        sg.label(closure(sg, down_closure(sg.poset, const.image(bc)))),
    ), ('{a}', '{a,b,c}')))
    return rep


def five_element() -> Report:
    rep = Report('five-element')
    ms = load_scenario('five-element').get('S')
    sg = ms.sg
    rep.add(_expect('ideals', ideal_quantale(ms).size, 20))
    closed = closed_quantale(sg)
    rep.add(_expect('closed', set(closed.labels), {
        '{}', '{a}', '{d}', '{e}', '{b,d}', '{c,d}', '{d,e}', '{b,c,d}', '{b,c,d,e}', '{a,b,c,d,e}',
    }))
    tau, _ = closure_reflection(sg)
    g, ext = extend_to_ideals(ms, closed, tau)
    ideals = ideal_quantale(ms)
    images = [closed.labels[g(ideals.index_of_set(sg.poset.mask(names)))]
              for names in (['a', 'b', 'c', 'd'], ['a', 'b', 'd', 'e'])]
    rep.add(_expect('extension', images, ['{a,b,c,d,e}', '{a,b,c,d,e}']))
    rep.add(_expect('extension-laws', ext.status, 'PASS'))
    return rep


def boolean_cube() -> Report:
    rep = Report('boolean-cube')
    ms = load_scenario('boolean-cube').get('cube')
    principal = {ms.sg.label(d) for d in ms.sg.poset.down_masks}
    d_ideals = ideal_quantale(_remarked(ms, 'D'))
    rep.add(_expect('ideals-D', set(d_ideals.labels), principal))
    rep.add(_expect('ideals-A', set(ideal_quantale(ms).labels), {
        '{}', '{u}', '{a,u}', '{b,u}', '{c,u}', '{a,b,u}', '{a,c,u}', '{a,b,d,u}', '{a,c,e,u}',
        '{b,c,f,u}', '{a,b,c,f,u}', '{a,b,c,d,f,u}', '{a,b,c,e,f,u}', '{a,b,c,d,e,f,u}',
        '{a,b,c,d,e,f,u,v}',
    }))
    rep.add(_expect('ideals-singletons', ideal_quantale(_remarked(ms, 'singletons')).size, 20))
    dot = emit_dot(ideal_quantale(ms), 'ideals')
    rep.add(_expect('dot-nodes', dot.count('[label='), 15))
    return rep


def closure_counterexample() -> Report:
    rep = Report('closure-counterexample')
    scenario = load_scenario('closure-counterexample')
    s1, s2 = scenario.get('S1'), scenario.get('S2')
    iota = scenario.morphism('iota').morphism
    rep.add(_expect('marked', check_marked_morphism(iota, s1, s2, Level.MARKED).status, 'PASS'))
    cp = is_closure_preserving(iota, s1.sg, s2.sg)
    rep.add(_expect('closure-witness', cp.check('definition').witness,
                    {'M': '{b,c}', 'f(cl M)': '{b,c,d}', 'cl f(M)': '{b,c}'}))
    return rep


def words() -> Report:
    rep = distributivity_counterexample_checks()
    rep.name = 'word-posemigroup'
    return rep


SUITE: list[tuple[str, Callable[[], Report]]] = [
    ('three-element', three_element),
    ('five-element', five_element),
    ('boolean-cube', boolean_cube),
    ('closure-counterexample', closure_counterexample),
    ('words', words),
]


def golden_suite() -> Report:
    rep = Report('examples')
    for name, run in SUITE:
        log.info("running golden checks for %s", name)
        rep.add(run())
    return rep
