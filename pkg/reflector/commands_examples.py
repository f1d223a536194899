from __future__ import annotations

try:
    from registry import Outcome, registry
except ImportError:
    from .registry import Outcome, registry

try:
    from reflib.golden import golden_suite
except ModuleNotFoundError:
    from .reflib.golden import golden_suite

try:
    from deps import _render
except ImportError:
    from .deps import _render


@registry.command('examples', help='run every bundled scenario against its expected values')
def examples(args) -> Outcome:
    report = golden_suite()
    return Outcome(_render(report), failed=not report.ok)
