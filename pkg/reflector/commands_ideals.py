from __future__ import annotations

try:
    from registry import SCENARIO_ARGS, Outcome, registry
except ImportError:
    from .registry import SCENARIO_ARGS, Outcome, registry

try:
    from reflib.ideals import ideal_quantale, ideal_reflection
except ModuleNotFoundError:
    from .reflib.ideals import ideal_quantale, ideal_reflection

try:
    from deps import _lattice_output, _load_scenario, _marked, _render
except ImportError:
    from .deps import _lattice_output, _load_scenario, _marked, _render


@registry.command('ideals', help='list the ideals of a marked posemigroup', arguments=SCENARIO_ARGS)
def ideals(args) -> Outcome:
    ms = _marked(args, _load_scenario(args))
    return Outcome(_lattice_output(args, f"Id[{ms.marking.spec()}]({ms.name})", ideal_quantale(ms)))


@registry.command('reflect-ideal', help='check the reflection into the ideal quantale', arguments=SCENARIO_ARGS)
def reflect_ideal(args) -> Outcome:
    ms = _marked(args, _load_scenario(args))
    _, report = ideal_reflection(ms)
    text = _render(report)
    for subset, image, joined in report.data['unpreserved_joins']:
        text += f"  non-admissible join of {subset}: t(join) = {image}, join of t = {joined}\n"
    return Outcome(text, failed=not report.ok)
