from __future__ import annotations

from typing import Optional

try:
    from reflib import scenario as scenario_io
    from reflib.dot import emit_dot
    from reflib.marking import MarkedPosemigroup, marking_from_spec
    from reflib.reports import Report
except ModuleNotFoundError:  # package mode
    from .reflib import scenario as scenario_io
    from .reflib.dot import emit_dot
    from .reflib.marking import MarkedPosemigroup, marking_from_spec
    from .reflib.reports import Report


def _load_scenario(args) -> scenario_io.Scenario:
    return scenario_io.load_scenario(args.scenario)


def _marked(args, scenario: scenario_io.Scenario, name: Optional[str] = None) -> MarkedPosemigroup:
    """The selected posemigroup, re-marked when --marking is given."""
    ms = scenario.get(name or getattr(args, 'name', None))
    spec = getattr(args, 'marking', None)
    if spec:
        ms = MarkedPosemigroup(ms.sg, marking_from_spec(ms.sg, spec))
    return ms


def _render(report: Report) -> str:
    return report.render() + '\n'


def _listing(title: str, labels) -> str:
    labels = list(labels)
    return '\n'.join([f"{title}: {len(labels)}"] + [f"  {label}" for label in labels]) + '\n'


def _lattice_output(args, title: str, q) -> str:
    if getattr(args, 'format', 'text') == 'dot':
        return emit_dot(q, title)
    return _listing(title, q.labels)
