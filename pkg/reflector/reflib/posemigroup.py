"""Posemigroups: multiplication tables over finite posets.

The adjoined identity of S^1 is never a carrier element; a multiplier of
`None` means "omit this factor". In a partial table an undefined product is
-1 and drops out of every image.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import config
from .errors import AssociativityViolation, CapExceeded, CompatibilityViolation, ValidationError
from .order import Poset, down_closure, poset_from_matrix
from .util import bits, mask_of

log = logging.getLogger(__name__)

OptElement = Optional[int]


@dataclass(frozen=True, eq=False)
class Posemigroup:
    poset: Poset
    table: np.ndarray
    name: str = ''
    partial: bool = False
    _cache: dict = field(init=False, repr=False, default_factory=dict)

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def elements(self) -> tuple[str, ...]:
        return self.poset.elements

    @property
    def full(self) -> int:
        return self.poset.full

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def mul3(self, a: OptElement, x: int, b: OptElement) -> int:
        if a is not None:
            x = int(self.table[a, x])
        if b is not None and x >= 0:
            x = int(self.table[x, b])
        return x

    def identity(self) -> Optional[int]:
        if 'identity' not in self._cache:
            found = None
            if not self.partial:
                ar = np.arange(self.size)
                for e in range(self.size):
                    if np.array_equal(self.table[e, :], ar) and np.array_equal(self.table[:, e], ar):
                        found = e
                        break
            self._cache['identity'] = found
        return self._cache['identity']

    def multipliers(self) -> list[OptElement]:
        """S^1 as multipliers; an existing identity stands in for the adjoined one."""
        if self.identity() is not None:
            return list(range(self.size))
        return [None] + list(range(self.size))

    def translations(self) -> list[tuple[OptElement, OptElement, np.ndarray]]:
        """Every two-sided translation x -> a x b with a, b in S^1, as index arrays."""
        cached = self._cache.get('translations')
        if cached is None:
            cached = [(a, b, self.translation_map(a, b)) for a in self.multipliers() for b in self.multipliers()]
            self._cache['translations'] = cached
        return cached

    def translation_map(self, a: OptElement, b: OptElement) -> np.ndarray:
        """x -> a x b as an index array, -1 where undefined."""
        img = np.arange(self.size)
        if b is not None:
            img = self.table[img, b]
        if a is not None:
            img = np.where(img >= 0, self.table[a, np.maximum(img, 0)], -1)
        return img

    def multiplier_name(self, a: OptElement) -> str:
        return '1' if a is None else self.elements[a]

    def label(self, mask: int) -> str:
        return self.poset.label(mask)


def _witness_names(sg_names: Sequence[str], idx) -> tuple[str, ...]:
    return tuple(sg_names[int(i)] for i in idx)


def validate_posemigroup(poset: Poset, table, name: str = '', partial: bool = False) -> Posemigroup:
    """Check associativity and order compatibility; partial tables mark undefined products with -1."""
    n = poset.size
    t = np.asarray(table, dtype=int)
    if t.shape != (n, n):
        raise ValidationError(f"multiplication table must be {n}x{n}, got {t.shape}", t.shape)
    defined = t >= 0
    if not partial and not defined.all():
        raise ValidationError('multiplication table has undefined entries')
    if (t >= n).any():
        raise ValidationError('multiplication table refers to unknown elements')
    tz = np.where(defined, t, 0)
    ar = np.arange(n)

    left = tz[tz[:, :, None], ar[None, None, :]]
    right = tz[ar[:, None, None], tz[None, :, :]]
    both = (defined[:, :, None] & defined[tz[:, :, None], ar[None, None, :]]
            & defined[None, :, :] & defined[ar[:, None, None], tz[None, :, :]])
    bad = np.argwhere(both & (left != right))
    if len(bad):
        x, y, z = _witness_names(poset.elements, bad[0])
        raise AssociativityViolation(f"({x}{y}){z} != {x}({y}{z})", (x, y, z))

    leq = poset.leq
    cond = leq[:, None, :, None] & leq[None, :, None, :]
    valid = defined[:, :, None, None] & defined[None, None, :, :]
    ordered = leq[tz[:, :, None, None], tz[None, None, :, :]]
    bad = np.argwhere(cond & valid & ~ordered)
    if len(bad):
        a1, a2, b1, b2 = _witness_names(poset.elements, bad[0])
        raise CompatibilityViolation(
            f"{a1}<={b1} and {a2}<={b2} but {a1}{a2} is not <= {b1}{b2}", (a1, b1, a2, b2),
        )
    return Posemigroup(poset, t, name=name, partial=partial or not defined.all())


def translate(sg: Posemigroup, a: OptElement, X: int, b: OptElement) -> int:
    return mask_of(y for y in (sg.mul3(a, x, b) for x in bits(X)) if y >= 0)


def product_mismatches(img: np.ndarray, table: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Pairs (x, y) with x y defined and img(x y) != img(x) img(y) in `target`."""
    defined = table >= 0
    mapped = img[np.where(defined, table, 0)]
    return np.argwhere(defined & (mapped != target[np.ix_(img, img)]))


def set_product(sg: Posemigroup, X: int, Y: int) -> int:
    """(X . Y) down-closed."""
    prods = 0
    ys = list(bits(Y))
    for x in bits(X):
        row = sg.table[x]
        for y in ys:
            if row[y] >= 0:
                prods |= 1 << int(row[y])
    return down_closure(sg.poset, prods)


def trivial_markings(sg: Posemigroup):
    """The singleton marking and the full marking of `sg`."""
    from .marking import MarkingKind, builtin_marking

    return builtin_marking(sg, MarkingKind.SINGLETONS), builtin_marking(sg, MarkingKind.FULL)


def product(ms1, ms2, cap: Optional[int] = None):
    """Cartesian product with pointwise order, multiplication and rectangle marking."""
    from .marking import Level, MarkedPosemigroup, check_marked_morphism, product_marking
    from .order import Morphism

    cap = config.SUBSET_CAP if cap is None else cap
    s1, s2 = ms1.sg, ms2.sg
    if s1.partial or s2.partial:
        raise ValidationError('products need total multiplication tables')
    n1, n2 = s1.size, s2.size
    if n1 * n2 > cap:
        raise CapExceeded('product', n1 * n2, cap)
    names = [f"({x},{y})" for x in s1.elements for y in s2.elements]
    leq = np.kron(s1.poset.leq.astype(int), s2.poset.leq.astype(int)).astype(bool)
    table = (s1.table[:, None, :, None] * n2 + s2.table[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    sg = Posemigroup(poset_from_matrix(names, leq), table, name=f"{s1.name}x{s2.name}")
    prod = MarkedPosemigroup(sg, product_marking(sg, ms1.marking, ms2.marking))

    pi1 = Morphism('pi1', tuple(i // n2 for i in range(n1 * n2)))
    pi2 = Morphism('pi2', tuple(i % n2 for i in range(n1 * n2)))
    for pi, target in ((pi1, ms1), (pi2, ms2)):
        rep = check_marked_morphism(pi, prod, target, Level.MARKED)
        if not rep.ok:
            raise ValidationError(f"projection {pi.name} is not a marked morphism", rep.witness)
    return prod


def free_marked_posemigroup(alphabet: Sequence[str], max_word_len: int, cap: Optional[int] = None):
    """Words of length 1..max_word_len as an antichain under concatenation.

    Concatenations longer than the bound are undefined (-1) and the result is
    flagged `partial`.
    """
    from .marking import MarkedPosemigroup, MarkingKind, builtin_marking

    cap = config.SUBSET_CAP if cap is None else cap
    size = sum(len(alphabet) ** k for k in range(1, max_word_len + 1))
    if size > cap:
        raise CapExceeded('free_marked_posemigroup', size, cap)
    words = [''.join(w) for k in range(1, max_word_len + 1) for w in itertools.product(alphabet, repeat=k)]
    idx = {w: i for i, w in enumerate(words)}
    table = np.full((size, size), -1, dtype=int)
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            table[i, j] = idx.get(u + v, -1)
    poset = poset_from_matrix(words, np.eye(size, dtype=bool))
    sg = validate_posemigroup(poset, table, name='free', partial=True)
    log.debug("free posemigroup over %s truncated at length %d: %d words", ''.join(alphabet), max_word_len, size)
    return MarkedPosemigroup(sg, builtin_marking(sg, MarkingKind.SINGLETONS))
