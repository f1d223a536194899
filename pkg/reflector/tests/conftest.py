import pytest

from reflector.reflib.scenario import load_scenario


@pytest.fixture
def three():
    return load_scenario('three-element')


@pytest.fixture
def five():
    return load_scenario('five-element')


@pytest.fixture
def cube():
    return load_scenario('boolean-cube')


@pytest.fixture
def counterexample():
    return load_scenario('closure-counterexample')


@pytest.fixture
def bundled(three, five, cube, counterexample):
    """Every posemigroup shipped with the scenarios, by name."""
    out = {}
    for label, scenario in (('three', three), ('five', five), ('cube', cube),
                            ('counterexample', counterexample)):
        for name, ms in scenario.posemigroups.items():
            out[f"{label}.{name}"] = ms
    return out
