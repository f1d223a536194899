from __future__ import annotations

try:
    from registry import SCENARIO_ARGS, Outcome, registry
except ImportError:
    from .registry import SCENARIO_ARGS, Outcome, registry

try:
    from reflib.closure import closed_quantale, closure_reflection, inclusion_check
    from reflib.ideals import ideal_quantale
    from reflib.nucleus import find_isomorphism
    from reflib.reports import Report
except ModuleNotFoundError:
    from .reflib.closure import closed_quantale, closure_reflection, inclusion_check
    from .reflib.ideals import ideal_quantale
    from .reflib.nucleus import find_isomorphism
    from .reflib.reports import Report

try:
    from deps import _lattice_output, _load_scenario, _marked, _render
except ImportError:
    from .deps import _lattice_output, _load_scenario, _marked, _render


@registry.command('closed', help='list the closed lower sets', arguments=SCENARIO_ARGS)
def closed(args) -> Outcome:
    ms = _marked(args, _load_scenario(args))
    return Outcome(_lattice_output(args, f"Q({ms.name})", closed_quantale(ms.sg)))


@registry.command('reflect-closure', help='check the reflection into the closed-set quantale',
                  arguments=SCENARIO_ARGS)
def reflect_closure(args) -> Outcome:
    ms = _marked(args, _load_scenario(args))
    _, report = closure_reflection(ms.sg)
    return Outcome(_render(report), failed=not report.ok)


@registry.command('compare', help='closed sets against ideals, with isomorphism search', arguments=SCENARIO_ARGS)
def compare(args) -> Outcome:
    ms = _marked(args, _load_scenario(args))
    report = Report('compare', message=ms.name)
    report.add(inclusion_check(ms))
    closed_q, ideals_q = closed_quantale(ms.sg), ideal_quantale(ms)
    iso = None
    if closed_q.size == ideals_q.size:
        iso = find_isomorphism(closed_q, ideals_q)
    report.add(Report.passed('isomorphism', 'found') if iso else Report.vacuous('isomorphism', 'none'))
    text = _render(report)
    text += f"  closed sets: {closed_q.size}, ideals: {ideals_q.size}\n"
    return Outcome(text, failed=not report.ok)
