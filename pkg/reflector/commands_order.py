from __future__ import annotations

try:
    from registry import SCENARIO_ARGS, Outcome, arg, registry
except ImportError:
    from .registry import SCENARIO_ARGS, Outcome, arg, registry

try:
    from reflib.closure import closed_quantale
    from reflib.dot import emit_dot
    from reflib.ideals import ideal_quantale
    from reflib.order import hasse
    from reflib.words import Word, bounded_join, distributivity_counterexample_checks, word_leq
except ModuleNotFoundError:
    from .reflib.closure import closed_quantale
    from .reflib.dot import emit_dot
    from .reflib.ideals import ideal_quantale
    from .reflib.order import hasse
    from .reflib.words import Word, bounded_join, distributivity_counterexample_checks, word_leq

try:
    from deps import _load_scenario, _marked, _render
except ImportError:
    from .deps import _load_scenario, _marked, _render


@registry.command('validate', help='parse a scenario and summarise its posemigroups', arguments=SCENARIO_ARGS)
def validate(args) -> Outcome:
    scenario = _load_scenario(args)
    lines = []
    for name in scenario.posemigroups:
        ms = _marked(args, scenario, name)
        sg = ms.sg
        unit = sg.identity()
        lines.append(f"posemigroup {name}: {sg.size} elements")
        lines.append('  covers: ' + (' '.join(f"{x}<{y}" for x, y in hasse(sg.poset)) or '-'))
        lines.append(f"  identity: {sg.elements[unit] if unit is not None else '-'}")
        lines.append(f"  marking: {ms.marking.spec()}")
    for decl in scenario.morphisms.values():
        lines.append(f"morphism {decl.name}: {decl.src} -> {decl.dst}")
    return Outcome('\n'.join(lines) + '\n')


@registry.command('dot', help='Hasse diagram in DOT', arguments=SCENARIO_ARGS + [
    arg('--target', choices=['ideals', 'closed', 'poset'], default='poset'),
])
def dot(args) -> Outcome:
    ms = _marked(args, _load_scenario(args))
    if args.target == 'ideals':
        return Outcome(emit_dot(ideal_quantale(ms), f"Id({ms.name})"))
    if args.target == 'closed':
        return Outcome(emit_dot(closed_quantale(ms.sg), f"Q({ms.name})"))
    return Outcome(emit_dot(ms.sg.poset, ms.name))


@registry.command('word-check', help='distributivity checks in the word posemigroup', arguments=[
    arg('--letters', type=int, default=None, help='letters per sampled multiplier'),
    arg('--coeff', type=int, default=None, help='largest sampled coefficient'),
    arg('--join', nargs='+', metavar='WORD', help='bounded join of the given words instead'),
    arg('--leq', nargs=2, metavar='WORD', help='decide WORD1 <= WORD2 instead'),
])
def word_check(args) -> Outcome:
    if args.leq:
        a, b = (Word.parse(w) for w in args.leq)
        return Outcome(f"{a} <= {b}: {'yes' if word_leq(a, b) else 'no'}\n")
    if args.join:
        words = [Word.parse(w) for w in args.join]
        found = bounded_join(words, max_coeff=args.coeff)
        return Outcome(f"join: {found if found is not None else 'none within bound'}\n")
    report = distributivity_counterexample_checks(args.letters, args.coeff)
    return Outcome(_render(report), failed=not report.ok)
