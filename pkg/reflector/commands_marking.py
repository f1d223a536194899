from __future__ import annotations

try:
    from registry import SCENARIO_ARGS, Outcome, arg, registry
except ImportError:
    from .registry import SCENARIO_ARGS, Outcome, arg, registry

try:
    from reflib.closure import check_morphism_theorems, is_closure_preserving
    from reflib.marking import Level, check_marked_morphism, check_marked_quantale, check_marking_axioms
    from reflib.reports import Report
except ModuleNotFoundError:
    from .reflib.closure import check_morphism_theorems, is_closure_preserving
    from .reflib.marking import Level, check_marked_morphism, check_marked_quantale, check_marking_axioms
    from .reflib.reports import Report

try:
    from deps import _load_scenario, _marked, _render
except ImportError:
    from .deps import _load_scenario, _marked, _render


@registry.command('marking-check', help='marking axioms and marked-quantale check', arguments=SCENARIO_ARGS)
def marking_check(args) -> Outcome:
    ms = _marked(args, _load_scenario(args))
    report = Report('marking', message=ms.name)
    report.add(check_marking_axioms(ms.sg, ms.marking))
    report.add(check_marked_quantale(ms))
    return Outcome(_render(report), failed=not report.ok)


@registry.command('check-morphism', help='check a declared morphism at the given level', arguments=[
    arg('scenario', help='scenario file or bundled scenario name'),
    arg('--morphism', help='morphism to check (default: the first declared)'),
    arg('--level', choices=['posemigroup', 'marked', 'quantale', 'closure', 'theorems'], default='marked'),
])
def check_morphism(args) -> Outcome:
    scenario = _load_scenario(args)
    decl = scenario.morphism(args.morphism)
    src, dst = scenario.get(decl.src), scenario.get(decl.dst)
    f = decl.morphism
    if args.level == 'closure':
        report = is_closure_preserving(f, src.sg, dst.sg)
    elif args.level == 'theorems':
        report = check_morphism_theorems(f, src, dst)
    else:
        report = check_marked_morphism(f, src, dst, Level(args.level))
    return Outcome(_render(report), failed=not report.ok)
