"""Markings: which subsets of a posemigroup carry a specified join.

A marking is a predicate with a memo, not a materialised family; only
EXPLICIT markings list their members.
"""

from __future__ import annotations

import logging
import re
import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Sequence

import numpy as np

from . import config
from .errors import CapExceeded, ValidationError
from .order import Morphism, is_monotone, join, upper_bounds
from .posemigroup import Posemigroup, product_mismatches, translate
from .reports import Report
from .util import bits, popcount, sort_canonical, submasks

log = logging.getLogger(__name__)


class MarkingKind(Enum):
    SINGLETONS = 'singletons'
    FULL = 'full'
    D = 'D'
    CARD_LE = 'card<='
    FINITE_NONEMPTY = 'finite'
    CHAINS = 'chains'
    DIRECTED = 'directed'
    BOUNDED = 'bounded'
    BOUNDED_DIRECTED = 'bounded-directed'
    BOUNDED_PAIRS = 'bounded-pairs'
    EXPLICIT = 'explicit'
    PRODUCT = 'product'


class Level(Enum):
    POSEMIGROUP = 'posemigroup'
    MARKED = 'marked'
    MARKED_QUANTALE = 'quantale'


class Marking:
    def __init__(self, sg: Posemigroup, kind: MarkingKind, n: Optional[int] = None,
                 family: Sequence[int] = (), factors: Optional[tuple['Marking', 'Marking']] = None):
        self.sg = sg
        self.kind = kind
        self.n = n
        self.family = tuple(sort_canonical(sg.elements, set(family)))
        self._family_set = frozenset(self.family)
        self.factors = factors
        self._memo: dict[int, bool] = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Marking({self.spec()})"

    def __contains__(self, M: int) -> bool:
        return self.is_admissible(M)

    def is_admissible(self, M: int) -> bool:
        with self._lock:
            hit = self._memo.get(M)
        if hit is not None:
            return hit
        verdict = self._decide(M)
        with self._lock:
            self._memo[M] = verdict
        return verdict

    def _decide(self, M: int) -> bool:
        sg, kind = self.sg, self.kind
        p = sg.poset
        k = popcount(M)
        if kind is MarkingKind.FULL:
            return True
        if kind is MarkingKind.D:
            return is_D_admissible(sg, M)
        if kind is MarkingKind.EXPLICIT:
            return M in self._family_set
        if kind is MarkingKind.PRODUCT:
            return _rectangle_admissible(sg, self.factors, M)
        if k == 0:
            return False
        if kind is MarkingKind.SINGLETONS:
            return k == 1
        if kind is MarkingKind.CARD_LE:
            return k <= self.n
        if kind is MarkingKind.FINITE_NONEMPTY:
            return True
        if kind is MarkingKind.CHAINS:
            return all(p.leq[x, y] or p.leq[y, x] for x in bits(M) for y in bits(M))
        if kind is MarkingKind.BOUNDED_PAIRS:
            return k == 1 or (k == 2 and _comparable_pair(p, M))
        directed = _is_directed(p, M)
        bounded = upper_bounds(p, M) != 0
        if kind is MarkingKind.DIRECTED:
            return directed
        if kind is MarkingKind.BOUNDED:
            return bounded
        if kind is MarkingKind.BOUNDED_DIRECTED:
            return directed and bounded
        raise ValidationError(f"unsupported marking kind {kind}")

    def admissible_subsets(self, within: Optional[int] = None, skip_singletons: bool = False,
                           cap: Optional[int] = None) -> Iterator[int]:
        """Admissible subsets of `within` (default: the whole carrier)."""
        within = self.sg.full if within is None else within
        if self.kind is MarkingKind.EXPLICIT:
            for M in self.family:
                if M & ~within == 0 and not (skip_singletons and popcount(M) == 1):
                    yield M
            return
        if self.kind is MarkingKind.SINGLETONS:
            if not skip_singletons:
                for i in bits(within):
                    yield 1 << i
            return
        cap = config.SUBSET_CAP if cap is None else cap
        if popcount(within) > cap:
            raise CapExceeded('admissible subset enumeration', popcount(within), cap)
        for M in submasks(within):
            if skip_singletons and popcount(M) == 1:
                continue
            if self.is_admissible(M):
                yield M

    def spec(self) -> str:
        """The scenario-file spelling of this marking."""
        if self.kind is MarkingKind.CARD_LE:
            return f"card<={self.n}"
        if self.kind is MarkingKind.EXPLICIT:
            return ' '.join(['explicit'] + [self.sg.label(M) for M in self.family])
        if self.kind is MarkingKind.PRODUCT:
            return f"product({self.factors[0].spec()}; {self.factors[1].spec()})"
        return self.kind.value


@dataclass(eq=False)
class MarkedPosemigroup:
    sg: Posemigroup
    marking: Marking
    _cache: dict = field(init=False, repr=False, default_factory=dict)

    @property
    def name(self) -> str:
        return self.sg.name

    def is_admissible(self, M: int) -> bool:
        return self.marking.is_admissible(M)


def _comparable_pair(p, M: int) -> bool:
    x, y = bits(M)
    return bool(p.leq[x, y] or p.leq[y, x])


def _is_directed(p, M: int) -> bool:
    members = list(bits(M))
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if p.up_masks[x] & p.up_masks[y] & M == 0:
                return False
    return bool(members)


def _rectangle_admissible(sg: Posemigroup, factors, M: int) -> bool:
    left, right = factors
    n2 = right.sg.size
    if M == 0:
        return left.is_admissible(0) and right.is_admissible(0)
    p1 = p2 = 0
    for i in bits(M):
        p1 |= 1 << (i // n2)
        p2 |= 1 << (i % n2)
    if popcount(M) != popcount(p1) * popcount(p2):
        return False
    return left.is_admissible(p1) and right.is_admissible(p2)


def is_admissible(ms: MarkedPosemigroup, M: int) -> bool:
    return ms.marking.is_admissible(M)


def d_admissibility_witness(sg: Posemigroup, M: int) -> Optional[dict]:
    """None when M is D-admissible, otherwise the first failing translation pair."""
    p = sg.poset
    m = join(p, M)
    if m is None:
        return {'M': sg.label(M), 'reason': 'no join'}
    for a in sg.multipliers():
        for b in sg.multipliers():
            tM = translate(sg, a, M, b)
            expected = sg.mul3(a, m, b)
            if expected < 0 and tM == 0:
                continue
            got = join(p, tM)
            if got != expected:
                return {
                    'M': sg.label(M),
                    'a': sg.multiplier_name(a),
                    'b': sg.multiplier_name(b),
                    'join of translate': None if got is None else sg.elements[got],
                    'translate of join': sg.elements[expected] if expected >= 0 else 'undefined',
                }
    return None


def is_D_admissible(sg: Posemigroup, M: int) -> bool:
    """Join of M exists and commutes with every two-sided translation by S^1.

    For M empty this asks for a bottom that absorbs every translation.
    """
    return d_admissibility_witness(sg, M) is None


_CARD_RE = re.compile(r"^card<=(\d+)$")
_SET_RE = re.compile(r"\{([^{}]*)\}")


def builtin_marking(sg: Posemigroup, kind, n: Optional[int] = None,
                    family: Sequence[int] = ()) -> Marking:
    """Construct a marking. On a finite carrier the countable and cardinal-bounded
    families collapse to FULL and CARD_LE."""
    kind = kind if isinstance(kind, MarkingKind) else MarkingKind(kind)
    if kind is MarkingKind.CARD_LE and (n is None or n < 1):
        raise ValidationError('card<= marking needs n >= 1', n)
    if kind is MarkingKind.PRODUCT:
        raise ValidationError('product markings come from product()')
    if kind is MarkingKind.EXPLICIT and 0 in family and sg.poset.bottom() is None:
        raise ValidationError('explicit marking lists {} but the carrier has no bottom', '{}')
    return Marking(sg, kind, n=n, family=family)


def product_marking(sg: Posemigroup, left: Marking, right: Marking) -> Marking:
    return Marking(sg, MarkingKind.PRODUCT, factors=(left, right))


def marking_from_spec(sg: Posemigroup, text: str) -> Marking:
    """Parse `D`, `card<=2`, `explicit {b,c} {u,b}` and the other kind names."""
    text = text.strip()
    m = _CARD_RE.match(text)
    if m:
        return builtin_marking(sg, MarkingKind.CARD_LE, n=int(m.group(1)))
    if text.startswith('explicit'):
        family = []
        for group in _SET_RE.findall(text[len('explicit'):]):
            names = [t.strip() for t in group.split(',') if t.strip()]
            family.append(sg.poset.mask(names))
        return builtin_marking(sg, MarkingKind.EXPLICIT, family=family)
    try:
        kind = MarkingKind(text)
    except ValueError:
        raise ValidationError(f"unknown marking {text!r}", text) from None
    return builtin_marking(sg, kind)


def check_marking_axioms(sg: Posemigroup, marking: Marking) -> Report:
    rep = Report('marking-axioms', message=marking.spec())
    missing = [i for i in range(sg.size) if not marking.is_admissible(1 << i)]
    if missing:
        rep.add(Report.failed('singletons', sg.elements[missing[0]], 'singleton not admissible'))
    else:
        rep.add(Report.passed('singletons'))

    translations = Report.passed('translations')
    for G in marking.admissible_subsets():
        witness = _translation_witness(sg, marking, G)
        if witness is not None:
            translations = Report.failed('translations', witness, 'translate not admissible')
            break
    rep.add(translations)
    return rep


def _translation_witness(sg: Posemigroup, marking: Marking, G: int) -> Optional[dict]:
    for a in sg.multipliers():
        for b in sg.multipliers():
            tG = translate(sg, a, G, b)
            if tG == 0 and G:
                continue
            if not marking.is_admissible(tG):
                return {'G': sg.label(G), 'a': sg.multiplier_name(a), 'b': sg.multiplier_name(b),
                        'translate': sg.label(tG)}
    return None


def check_marked_quantale(ms: MarkedPosemigroup) -> Report:
    for M in ms.marking.admissible_subsets():
        witness = d_admissibility_witness(ms.sg, M)
        if witness is not None:
            return Report.failed('marked-quantale', witness, f"{ms.sg.label(M)} is not D-admissible")
    return Report.passed('marked-quantale')


def _multiplication_witness(f: Morphism, src: Posemigroup, dst: Posemigroup) -> Optional[tuple]:
    img = np.asarray(f.images, dtype=int)
    bad = product_mismatches(img, src.table, dst.table)
    if len(bad) == 0:
        return None
    x, y = (int(v) for v in bad[0])
    return (src.elements[x], src.elements[y])


def check_posemigroup_morphism(f: Morphism, src: Posemigroup, dst: Posemigroup) -> Report:
    rep = Report('posemigroup-morphism', message=f.name)
    if len(f.images) != src.size or any(not 0 <= y < dst.size for y in f.images):
        rep.add(Report.failed('total', f.name, 'map is not total into the target'))
        return rep
    if is_monotone(f, src.poset, dst.poset):
        rep.add(Report.passed('monotone'))
    else:
        p, q = src.poset, dst.poset
        pair = next((src.elements[x], src.elements[y]) for x in range(src.size) for y in range(src.size)
                    if p.leq[x, y] and not q.leq[f(x), f(y)])
        rep.add(Report.failed('monotone', pair))
    witness = _multiplication_witness(f, src, dst)
    rep.add(Report.passed('multiplication') if witness is None else Report.failed('multiplication', witness))
    return rep


def check_marked_morphism(f: Morphism, src: MarkedPosemigroup, dst: MarkedPosemigroup,
                          level: Level = Level.MARKED) -> Report:
    level = level if isinstance(level, Level) else Level(level)
    rep = check_posemigroup_morphism(f, src.sg, dst.sg)
    rep.name = f"{level.value}-morphism"
    if not rep.ok or level is Level.POSEMIGROUP:
        return rep

    marking = Report.passed('marking')
    for M in src.marking.admissible_subsets():
        fM = f.image(M)
        if not dst.is_admissible(fM):
            marking = Report.failed('marking', {'M': src.sg.label(M), 'f(M)': dst.sg.label(fM)})
            break
    rep.add(marking)
    if level is Level.MARKED:
        return rep

    joins = Report.passed('admissible-joins')
    for M in src.marking.admissible_subsets():
        m = join(src.sg.poset, M)
        fm = join(dst.sg.poset, f.image(M))
        if m is None or fm is None or f(m) != fm:
            joins = Report.failed('admissible-joins', {
                'M': src.sg.label(M),
                'f(join M)': None if m is None else dst.sg.elements[f(m)],
                'join f(M)': None if fm is None else dst.sg.elements[fm],
            })
            break
    rep.add(joins)
    return rep
