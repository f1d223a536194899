from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable


@dataclass
class Outcome:
    text: str
    failed: bool = False


@dataclass
class Command:
    name: str
    handler: Callable[[Any], Outcome]
    help: str = ''
    arguments: list[tuple[tuple[str, ...], dict]] = field(default_factory=list)


class CommandRegistry:
    def __init__(self):
        self.commands: dict[str, Command] = {}

    def command(self, name: str, help: str = '', arguments=()):
        def register(fn):
            self.commands[name] = Command(name, fn, help, list(arguments))
            return fn
        return register


registry = CommandRegistry()


def arg(*flags: str, **kwargs) -> tuple[tuple[str, ...], dict]:
    return flags, kwargs


SCENARIO_ARGS = [
    arg('scenario', help='scenario file or bundled scenario name'),
    arg('--name', help='posemigroup block to use (default: the first)'),
    arg('--marking', help='override the marking, e.g. D, singletons, full, card<=2'),
]
