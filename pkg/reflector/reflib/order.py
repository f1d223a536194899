"""Finite posets, subsets as bit masks, lower sets, joins/meets and Hasse covers.

A subset of a carrier is a plain int whose bit i is element i (declaration
order). Lower sets are subsets that happen to be down-closed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import networkx as nx
import numpy as np

from . import config
from .errors import AntisymmetryViolation, CapExceeded, UnknownElement, ValidationError
from .util import bits, full_mask, mask_of, set_label, sort_canonical

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Poset:
    elements: tuple[str, ...]
    leq: np.ndarray
    down_masks: tuple[int, ...] = field(init=False, repr=False)
    up_masks: tuple[int, ...] = field(init=False, repr=False)
    _cache: dict = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self):
        n = len(self.elements)
        object.__setattr__(
            self, 'down_masks',
            tuple(mask_of(np.flatnonzero(self.leq[:, i])) for i in range(n)),
        )
        object.__setattr__(
            self, 'up_masks',
            tuple(mask_of(np.flatnonzero(self.leq[i, :])) for i in range(n)),
        )

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return full_mask(self.size)

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise UnknownElement(f"unknown element {name!r}", name) from None

    def mask(self, names: Iterable[str]) -> int:
        return mask_of(self.index(n) for n in names)

    def names(self, mask: int) -> list[str]:
        return sorted(self.elements[i] for i in bits(mask))

    def label(self, mask: int) -> str:
        return set_label(self.elements, mask)

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def bottom(self) -> Optional[int]:
        return join(self, 0)

    def top(self) -> Optional[int]:
        return meet(self, 0)


@dataclass(frozen=True)
class Morphism:
    """Element-to-element map between two finite carriers, by index."""

    name: str
    images: tuple[int, ...]
    roles: frozenset[str] = frozenset()

    def __call__(self, i: int) -> int:
        return self.images[i]

    def image(self, mask: int) -> int:
        return mask_of(self.images[i] for i in bits(mask))

    def preimage(self, mask: int) -> int:
        return mask_of(i for i, y in enumerate(self.images) if mask >> y & 1)

    def compose(self, other: 'Morphism', name: str = '') -> 'Morphism':
        """self after other."""
        return Morphism(name or f"{self.name}.{other.name}", tuple(self.images[y] for y in other.images))


def identity_morphism(n: int, name: str = 'id') -> Morphism:
    return Morphism(name, tuple(range(n)))


def _closure(rel: np.ndarray) -> np.ndarray:
    closed = rel.copy()
    for k in range(closed.shape[0]):
        closed |= closed[:, k:k + 1] & closed[k:k + 1, :]
    return closed


def validate_poset(names: Sequence[str], relation_pairs: Iterable[tuple[str, str]]) -> Poset:
    """Build a poset from a generating set of strict pairs (x, y) meaning x < y."""
    elements = tuple(names)
    if len(set(elements)) != len(elements):
        dup = sorted({n for n in elements if elements.count(n) > 1})
        raise ValidationError(f"duplicate element names: {', '.join(dup)}", dup)
    idx = {n: i for i, n in enumerate(elements)}
    n = len(elements)
    rel = np.eye(n, dtype=bool)
    graph = nx.DiGraph()
    graph.add_nodes_from(elements)
    for x, y in relation_pairs:
        for name in (x, y):
            if name not in idx:
                raise UnknownElement(f"order mentions undeclared element {name!r}", name)
        if x == y:
            continue
        rel[idx[x], idx[y]] = True
        graph.add_edge(x, y)
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle:
        witness = [u for u, _ in cycle] + [cycle[0][0]]
        raise AntisymmetryViolation(f"order has a cycle: {' < '.join(witness)}", witness)
    return Poset(elements, _closure(rel))


def poset_from_matrix(names: Sequence[str], leq: np.ndarray) -> Poset:
    """Trusted constructor for relations that are already partial orders."""
    return Poset(tuple(names), np.asarray(leq, dtype=bool))


def down_closure(p: Poset, X: int) -> int:
    out = 0
    for i in bits(X):
        out |= p.down_masks[i]
    return out


def is_lower(p: Poset, X: int) -> bool:
    return all(p.down_masks[i] & ~X == 0 for i in bits(X))


def upper_bounds(p: Poset, X: int) -> int:
    ub = p.full
    for i in bits(X):
        ub &= p.up_masks[i]
    return ub


def lower_bounds(p: Poset, X: int) -> int:
    lb = p.full
    for i in bits(X):
        lb &= p.down_masks[i]
    return lb


def join(p: Poset, X: int) -> Optional[int]:
    """Least upper bound of X; for X empty this is the bottom, if any."""
    ub = upper_bounds(p, X)
    for u in bits(ub):
        if ub & ~p.up_masks[u] == 0:
            return u
    return None


def meet(p: Poset, X: int) -> Optional[int]:
    lb = lower_bounds(p, X)
    for m in bits(lb):
        if lb & ~p.down_masks[m] == 0:
            return m
    return None


def is_lattice(p: Poset) -> bool:
    """Bottom plus every binary join; on a finite carrier every subset then has a join."""
    if 'lattice' not in p._cache:
        p._cache['lattice'] = p.size > 0 and p.bottom() is not None and all(
            join(p, (1 << i) | (1 << k)) is not None for i in range(p.size) for k in range(i + 1, p.size)
        )
    return p._cache['lattice']


def lower_sets(p: Poset, cap: Optional[int] = None) -> list[int]:
    """All lower sets in canonical order (cardinality, then sorted names)."""
    cap = config.SUBSET_CAP if cap is None else cap
    if p.size > cap:
        raise CapExceeded('lower_sets', p.size, cap)
    cached = p._cache.get('lower_sets')
    if cached is None:
        found = [m for m in range(1 << p.size) if is_lower(p, m)]
        cached = sort_canonical(p.elements, found)
        p._cache['lower_sets'] = cached
        log.debug("enumerated %d lower sets over %d elements", len(cached), p.size)
    return list(cached)


def all_subsets(p: Poset, cap: Optional[int] = None) -> range:
    cap = config.SUBSET_CAP if cap is None else cap
    if p.size > cap:
        raise CapExceeded('subset enumeration', p.size, cap)
    return range(1 << p.size)


def hasse(p: Poset) -> list[tuple[str, str]]:
    """Cover pairs (x, y) with x < y and nothing strictly between, sorted by name."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(p.size))
    lt = p.leq & ~np.eye(p.size, dtype=bool)
    graph.add_edges_from(zip(*np.nonzero(lt)))
    reduced = nx.transitive_reduction(graph)
    return sorted((p.elements[int(x)], p.elements[int(y)]) for x, y in reduced.edges())


def is_order_embedding(f: Morphism, P: Poset, Q: Poset) -> bool:
    img = np.asarray(f.images, dtype=int)
    return bool(np.array_equal(P.leq, Q.leq[np.ix_(img, img)]))


def is_monotone(f: Morphism, P: Poset, Q: Poset) -> bool:
    img = np.asarray(f.images, dtype=int)
    return bool(np.all(~P.leq | Q.leq[np.ix_(img, img)]))


def set_labels(p: Poset, masks: Iterable[int]) -> list[str]:
    return [set_label(p.elements, m) for m in masks]
