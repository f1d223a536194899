"""Line-oriented scenario files: posemigroup blocks, markings and morphisms.

    posemigroup S
    elements: a b c
    order: b<a c<a
    table:
    a: a c c
    b: a c c
    c: a c c
    marking: D
    morphism f: a->a b->a c->a from S to S
"""

from __future__ import annotations

import logging
import os
import re
from dataclasses import dataclass, field
from typing import Optional

from . import config
from .errors import (AntisymmetryViolation, AssociativityViolation, CompatibilityViolation, ParseError,
                     UnknownElement, ValidationError)
from .marking import MarkedPosemigroup, check_marking_axioms, marking_from_spec
from .order import Morphism, hasse, validate_poset
from .posemigroup import validate_posemigroup

log = logging.getLogger(__name__)

_MORPHISM_RE = re.compile(r"^morphism\s+(\w+)\s*:\s*(.*?)\s+from\s+(\w+)\s+to\s+(\w+)\s*$")
_KEY_RE = re.compile(r"^(elements|order|table|marking)\s*:\s*(.*)$")
_ROW_RE = re.compile(r"^(\w+)\s*:\s*(.*)$")


@dataclass
class MorphismDecl:
    name: str
    morphism: Morphism
    src: str
    dst: str
    pairs: list[tuple[str, str]] = field(default_factory=list)


@dataclass
class Scenario:
    posemigroups: dict[str, MarkedPosemigroup] = field(default_factory=dict)
    morphisms: dict[str, MorphismDecl] = field(default_factory=dict)
    source: str = ''

    def first(self) -> MarkedPosemigroup:
        if not self.posemigroups:
            raise ValidationError('scenario declares no posemigroup')
        return next(iter(self.posemigroups.values()))

    def get(self, name: Optional[str]) -> MarkedPosemigroup:
        if name is None:
            return self.first()
        try:
            return self.posemigroups[name]
        except KeyError:
            raise UnknownElement(f"no posemigroup named {name!r}", name) from None

    def morphism(self, name: Optional[str] = None) -> MorphismDecl:
        if not self.morphisms:
            raise ValidationError('scenario declares no morphism')
        if name is None:
            return next(iter(self.morphisms.values()))
        try:
            return self.morphisms[name]
        except KeyError:
            raise UnknownElement(f"no morphism named {name!r}", name) from None


@dataclass
class _Block:
    name: str
    line: int
    elements: list[str] = field(default_factory=list)
    order: list[tuple[str, str]] = field(default_factory=list)
    rows: dict[str, list[str]] = field(default_factory=dict)
    marking: str = 'singletons'
    in_table: bool = False


def _strip(raw: str) -> str:
    return raw.split('#', 1)[0].strip()


def _order_pairs(text: str, lineno: int) -> list[tuple[str, str]]:
    pairs = []
    for token in text.split():
        chain = token.split('<')
        if len(chain) < 2 or not all(chain):
            raise ParseError(lineno, f"bad order relation {token!r}")
        pairs.extend(zip(chain, chain[1:]))
    return pairs


def _finish(block: _Block) -> MarkedPosemigroup:
    try:
        poset = validate_poset(block.elements, block.order)
    except AntisymmetryViolation as e:
        raise ValidationError(str(e), e.witness) from e
    idx = {n: i for i, n in enumerate(block.elements)}
    missing = [n for n in block.elements if n not in block.rows]
    if missing:
        raise ParseError(block.line, f"table of {block.name} has no row for {missing[0]}")
    table = [[idx[v] for v in block.rows[n]] for n in block.elements]
    try:
        sg = validate_posemigroup(poset, table, name=block.name)
    except (AssociativityViolation, CompatibilityViolation) as e:
        raise ValidationError(f"{block.name}: {e}", e.witness) from e
    marking = marking_from_spec(sg, block.marking)
    axioms = check_marking_axioms(sg, marking)
    if not axioms.ok:
        raise ValidationError(f"{block.name}: marking {marking.spec()} violates the marking axioms",
                              axioms.witness)
    return MarkedPosemigroup(sg, marking)


def parse_scenario(text: str, source: str = '') -> Scenario:
    scenario = Scenario(source=source)
    blocks: list[_Block] = []
    pending: list[tuple[int, re.Match]] = []
    block: Optional[_Block] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith('posemigroup'):
            parts = line.split()
            if len(parts) != 2 or not config.ELEMENT_NAME_RE.match(parts[1]):
                raise ParseError(lineno, 'expected "posemigroup <name>"')
            if any(b.name == parts[1] for b in blocks):
                raise ParseError(lineno, f"posemigroup {parts[1]} declared twice")
            block = _Block(parts[1], lineno)
            blocks.append(block)
            continue
        if line.startswith('morphism'):
            m = _MORPHISM_RE.match(line)
            if not m:
                raise ParseError(lineno, 'expected "morphism <name>: x->y ... from <S> to <T>"')
            pending.append((lineno, m))
            block = None
            continue
        if block is None:
            raise ParseError(lineno, 'statement outside a posemigroup block')
        key = _KEY_RE.match(line)
        if key and not (block.in_table and key.group(1) in block.elements):
            block.in_table = False
            word, rest = key.group(1), key.group(2)
            if word == 'elements':
                names = rest.split()
                bad = [n for n in names if not config.ELEMENT_NAME_RE.match(n)]
                if bad or not names:
                    raise ParseError(lineno, f"bad element name {bad[0]!r}" if bad else 'no elements')
                block.elements = names
            elif word == 'order':
                for x, y in _order_pairs(rest, lineno):
                    for n in (x, y):
                        if n not in block.elements:
                            raise ParseError(lineno, f"order mentions undeclared element {n!r}")
                    block.order.append((x, y))
            elif word == 'table':
                if rest:
                    raise ParseError(lineno, 'rows go on the lines after "table:"')
                block.in_table = True
            else:
                block.marking = rest
            continue
        row = _ROW_RE.match(line)
        if not block.in_table or not row:
            raise ParseError(lineno, f"unexpected line {line!r}")
        name, values = row.group(1), row.group(2).split()
        for n in [name] + values:
            if n not in block.elements:
                raise ParseError(lineno, f"table mentions undeclared element {n!r}")
        if len(values) != len(block.elements):
            raise ParseError(lineno, f"row {name} needs {len(block.elements)} entries")
        if name in block.rows:
            raise ParseError(lineno, f"row {name} given twice")
        block.rows[name] = values

    for b in blocks:
        try:
            scenario.posemigroups[b.name] = _finish(b)
        except UnknownElement as e:
            raise ParseError(b.line, str(e)) from e

    for lineno, m in pending:
        name, body, src, dst = m.groups()
        if src not in scenario.posemigroups or dst not in scenario.posemigroups:
            raise ParseError(lineno, f"morphism {name} refers to an unknown posemigroup")
        s, t = scenario.posemigroups[src].sg, scenario.posemigroups[dst].sg
        mapping: dict[str, str] = {}
        for token in body.split():
            if '->' not in token:
                raise ParseError(lineno, f"bad assignment {token!r}")
            x, y = token.split('->', 1)
            if x not in s.elements or y not in t.elements:
                raise ParseError(lineno, f"morphism {name} maps unknown element in {token!r}")
            mapping[x] = y
        absent = [x for x in s.elements if x not in mapping]
        if absent:
            raise ParseError(lineno, f"morphism {name} is not defined on {absent[0]}")
        images = tuple(t.poset.index(mapping[x]) for x in s.elements)
        scenario.morphisms[name] = MorphismDecl(name, Morphism(name, images), src, dst,
                                                [(x, mapping[x]) for x in s.elements])
    log.debug("parsed %d posemigroups and %d morphisms from %s",
              len(scenario.posemigroups), len(scenario.morphisms), source or '<text>')
    return scenario


def print_scenario(scenario: Scenario) -> str:
    lines: list[str] = []
    for name, ms in scenario.posemigroups.items():
        sg = ms.sg
        if sg.partial:
            raise ValidationError(f"posemigroup {name} has undefined products", name)
        if lines:
            lines.append('')
        lines.append(f"posemigroup {name}")
        lines.append('elements: ' + ' '.join(sg.elements))
        covers = hasse(sg.poset)
        if covers:
            lines.append('order: ' + ' '.join(f"{x}<{y}" for x, y in covers))
        lines.append('table:')
        for i, x in enumerate(sg.elements):
            lines.append(f"{x}: " + ' '.join(sg.elements[int(v)] for v in sg.table[i]))
        lines.append(f"marking: {ms.marking.spec()}")
    if scenario.morphisms:
        lines.append('')
    for decl in scenario.morphisms.values():
        body = ' '.join(f"{x}->{y}" for x, y in decl.pairs)
        lines.append(f"morphism {decl.name}: {body} from {decl.src} to {decl.dst}")
    return '\n'.join(lines) + '\n'


def scenario_path(name: str) -> str:
    """A bundled scenario name, or a path to a scenario file."""
    if os.path.exists(name):
        return name
    candidate = os.path.join(config.SCENARIO_DIR, name)
    if not candidate.endswith(config.SCENARIO_SUFFIX):
        candidate += config.SCENARIO_SUFFIX
    if os.path.exists(candidate):
        return candidate
    raise ValidationError(f"no scenario file or bundled scenario named {name!r}", name)


def load_scenario(name: str) -> Scenario:
    path = scenario_path(name)
    with open(path, encoding='utf-8') as fh:
        return parse_scenario(fh.read(), source=path)


def bundled_names() -> list[str]:
    if not os.path.isdir(config.SCENARIO_DIR):
        return []
    return sorted(f[:-len(config.SCENARIO_SUFFIX)] for f in os.listdir(config.SCENARIO_DIR)
                  if f.endswith(config.SCENARIO_SUFFIX))
