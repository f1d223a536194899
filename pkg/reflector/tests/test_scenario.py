import pytest

from builders import chain
from reflector.reflib.closure import closed_quantale
from reflector.reflib.dot import emit_dot
from reflector.reflib.errors import AssociativityViolation, ParseError, ValidationError
from reflector.reflib.golden import golden_suite
from reflector.reflib.ideals import ideal_quantale
from reflector.reflib.scenario import bundled_names, load_scenario, parse_scenario, print_scenario

VEE = """\
posemigroup S
elements: a b c
order: b<a c<a
table:
a: a c c
b: a c c
c: a c c
marking: D
"""


def test_bundled_scenarios_are_listed():
    assert bundled_names() == ['boolean-cube', 'closure-counterexample', 'five-element', 'three-element']


def test_parse_a_single_block():
    scenario = parse_scenario(VEE)
    ms = scenario.first()
    assert ms.sg.elements == ('a', 'b', 'c')
    assert ms.marking.spec() == 'D'
    assert scenario.morphisms == {}


@pytest.mark.parametrize('name', ['boolean-cube', 'closure-counterexample', 'five-element', 'three-element'])
def test_print_then_parse_keeps_the_structure(name):
    original = load_scenario(name)
    again = parse_scenario(print_scenario(original))
    assert list(again.posemigroups) == list(original.posemigroups)
    for key, ms in original.posemigroups.items():
        other = again.posemigroups[key]
        assert other.sg.elements == ms.sg.elements
        assert (other.sg.poset.leq == ms.sg.poset.leq).all()
        assert (other.sg.table == ms.sg.table).all()
        assert other.marking.spec() == ms.marking.spec()
    assert {k: d.pairs for k, d in again.morphisms.items()} == {k: d.pairs for k, d in original.morphisms.items()}


def test_undeclared_element_in_the_table():
    text = VEE.replace('c: a c c', 'c: a c q')
    with pytest.raises(ParseError) as exc:
        parse_scenario(text)
    assert exc.value.line == 7


def test_undeclared_element_in_the_order():
    with pytest.raises(ParseError):
        parse_scenario(VEE.replace('c<a', 'q<a'))


def test_statement_outside_a_block():
    with pytest.raises(ParseError) as exc:
        parse_scenario('elements: a b\n')
    assert exc.value.line == 1


def test_non_associative_table_is_a_validation_error():
    text = """\
posemigroup N
elements: a b
table:
a: b a
b: a a
"""
    with pytest.raises(ValidationError) as exc:
        parse_scenario(text)
    assert isinstance(exc.value.__cause__, AssociativityViolation)


def test_marking_that_breaks_the_axioms_is_refused():
    with pytest.raises(ValidationError):
        parse_scenario(VEE.replace('marking: D', 'marking: explicit {a} {b} {c} {a,b}'))


def test_morphism_must_be_total():
    text = VEE + 'morphism f: a->a b->a from S to S\n'
    with pytest.raises(ParseError):
        parse_scenario(text)


def test_morphism_to_an_unknown_block():
    with pytest.raises(ParseError):
        parse_scenario(VEE + 'morphism f: a->a b->a c->a from S to T\n')


def test_comments_and_blank_lines_are_skipped():
    text = '# heading\n\n' + VEE.replace('marking: D', 'marking: D  # trailing')
    assert parse_scenario(text).first().marking.spec() == 'D'


def test_missing_scenario():
    with pytest.raises(ValidationError):
        load_scenario('no-such-scenario')


def test_dot_output(three, cube):
    dot = emit_dot(closed_quantale(three.get('S').sg), 'Q(S)')
    assert dot.startswith('digraph "Q(S)" {')
    assert dot.count('[label=') == 5
    assert dot.count(' -> ') == 5
    assert '"n0" -> "n1" ;' in dot
    assert emit_dot(chain(1).poset).count(' -> ') == 0
    assert emit_dot(ideal_quantale(cube.get('cube'))).count('[label=') == 15


def test_golden_suite_passes():
    rep = golden_suite()
    assert rep.ok, rep.render()
    assert [c.name for c in rep.checks] == [
        'three-element', 'five-element', 'boolean-cube', 'closure-counterexample', 'word-posemigroup',
    ]
