from __future__ import annotations

import argparse

try:
    from registry import registry
except ImportError:
    from .registry import registry


def create_cli() -> argparse.ArgumentParser:
    # Import command modules for side effects (registering on the registry).
    # Keep imports inside factory to avoid circular imports.
    try:
        import commands_closure  # noqa: F401
        import commands_examples  # noqa: F401
        import commands_ideals  # noqa: F401
        import commands_marking  # noqa: F401
        import commands_order  # noqa: F401
    except ImportError:
        from . import commands_closure  # noqa: F401
        from . import commands_examples  # noqa: F401
        from . import commands_ideals  # noqa: F401
        from . import commands_marking  # noqa: F401
        from . import commands_order  # noqa: F401

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for info, -vv for debug logging')
    common.add_argument('--cap', type=int, default=None, help='largest carrier for subset enumeration')
    common.add_argument('--out', help='write the report to FILE instead of stdout')
    common.add_argument('--format', choices=['text', 'dot'], default='text')

    parser = argparse.ArgumentParser(
        prog='reflector',
        description='Ideal and closure reflections of finite posemigroups into quantales.',
    )
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True
    for name in sorted(registry.commands):
        command = registry.commands[name]
        p = sub.add_parser(name, help=command.help, parents=[common])
        for flags, kwargs in command.arguments:
            p.add_argument(*flags, **kwargs)
        p.set_defaults(handler=command.handler)
    return parser
