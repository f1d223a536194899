from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

PASS = 'PASS'
FAIL = 'FAIL'
VACUOUS = 'VACUOUS'


@dataclass
class Report:
    """Outcome of a law check. Failed laws are reported, never raised."""

    name: str
    status: str = PASS
    witness: Optional[Any] = None
    message: str = ''
    checks: list['Report'] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def passed(cls, name: str, message: str = '', **data) -> 'Report':
        return cls(name, PASS, None, message, data=data)

    @classmethod
    def failed(cls, name: str, witness: Any, message: str = '', **data) -> 'Report':
        return cls(name, FAIL, witness, message, data=data)

    @classmethod
    def vacuous(cls, name: str, message: str = '', **data) -> 'Report':
        return cls(name, VACUOUS, None, message, data=data)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def __bool__(self) -> bool:
        return self.ok

    def add(self, sub: 'Report') -> 'Report':
        self.checks.append(sub)
        if sub.status == FAIL and self.status != FAIL:
            self.status = FAIL
            if self.witness is None:
                self.witness = {'check': sub.name, 'witness': sub.witness}
        return sub

    def check(self, name: str) -> 'Report':
        for sub in self.checks:
            if sub.name == name:
                return sub
        raise KeyError(name)

    def render(self, indent: int = 0) -> str:
        pad = '  ' * indent
        line = f"{pad}{self.status:<8}{self.name}"
        if self.message:
            line += f": {self.message}"
        if self.status == FAIL and self.witness is not None and not self.checks:
            line += f"  witness={_format_witness(self.witness)}"
        lines = [line]
        for sub in self.checks:
            lines.append(sub.render(indent + 1))
        return '\n'.join(lines)



def _format_witness(w: Any) -> str:
    if isinstance(w, dict):
        return '{' + ', '.join(f"{k}: {_format_witness(v)}" for k, v in w.items()) + '}'
    if isinstance(w, (list, tuple)):
        return '(' + ', '.join(_format_witness(v) for v in w) + ')'
    return str(w)
