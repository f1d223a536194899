"""Quantic nuclei on the lower-set quantale of a posemigroup, and finite quantales.

Every complete-join law is checked in its finite form: binary joins plus
absorption by the bottom.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from . import config
from .errors import CapExceeded, HypothesisFailed, NucleusInvalid, PreconditionFailed
from .order import (Morphism, Poset, all_subsets, is_lower, is_order_embedding,
                    join, lower_sets, meet, poset_from_matrix)
from .posemigroup import Posemigroup, set_product
from .reports import Report
from .util import bits

log = logging.getLogger(__name__)


class Nucleus:
    """A lower-set operator with a memo; the fixpoint table is built on first use."""

    def __init__(self, sg: Posemigroup, fn: Callable[[int], int], name: str = 'j'):
        self.sg = sg
        self.name = name
        self._fn = fn
        self._values: dict[int, int] = {}
        self._fixpoints: Optional[list[int]] = None
        self._lock = threading.Lock()

    def __call__(self, D: int) -> int:
        with self._lock:
            hit = self._values.get(D)
        if hit is not None:
            return hit
        value = self._fn(D)
        with self._lock:
            self._values[D] = value
        return value

    def fixpoints(self, cap: Optional[int] = None) -> list[int]:
        if self._fixpoints is None:
            found = [D for D in lower_sets(self.sg.poset, cap) if self(D) == D]
            with self._lock:
                self._fixpoints = found
            log.debug("nucleus %s on %s: %d fixpoints", self.name, self.sg.name, len(found))
        return list(self._fixpoints)


def identity_nucleus(sg: Posemigroup) -> Nucleus:
    return Nucleus(sg, lambda D: D, name='identity')


@dataclass(eq=False)
class FiniteQuantale:
    labels: tuple[str, ...]
    leq: np.ndarray
    mult: np.ndarray
    join_table: np.ndarray
    meet_table: np.ndarray
    bottom: int
    top: int
    name: str = ''
    sets: Optional[tuple[int, ...]] = None
    base: Optional[Posemigroup] = None
    _cache: dict = field(init=False, repr=False, default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def poset(self) -> Poset:
        if 'poset' not in self._cache:
            self._cache['poset'] = poset_from_matrix(self.labels, self.leq)
        return self._cache['poset']

    def index_of_set(self, D: int) -> int:
        if 'set_index' not in self._cache:
            self._cache['set_index'] = {s: i for i, s in enumerate(self.sets or ())}
        return self._cache['set_index'][D]

    def join_all(self, indices: Iterable[int]) -> int:
        out = self.bottom
        for i in indices:
            out = int(self.join_table[out, i])
        return out

    def as_posemigroup(self) -> Posemigroup:
        if 'posemigroup' not in self._cache:
            self._cache['posemigroup'] = Posemigroup(self.poset, self.mult, name=self.name)
        return self._cache['posemigroup']

    def as_marked(self):
        """This quantale with every subset admissible."""
        from .marking import MarkedPosemigroup, MarkingKind, builtin_marking

        if 'marked' not in self._cache:
            sg = self.as_posemigroup()
            self._cache['marked'] = MarkedPosemigroup(sg, builtin_marking(sg, MarkingKind.FULL))
        return self._cache['marked']


def _lattice_tables(p: Poset) -> tuple[np.ndarray, np.ndarray, int, int]:
    n = p.size
    joins = np.zeros((n, n), dtype=int)
    meets = np.zeros((n, n), dtype=int)
    bottom, top = p.bottom(), p.top()
    if n == 0 or bottom is None or top is None:
        raise HypothesisFailed('carrier is not a complete lattice', 'no bottom or top')
    for i in range(n):
        for k in range(i, n):
            pair = (1 << i) | (1 << k)
            j, m = join(p, pair), meet(p, pair)
            if j is None or m is None:
                raise HypothesisFailed(
                    'carrier is not a complete lattice', (p.elements[i], p.elements[k]),
                )
            joins[i, k] = joins[k, i] = j
            meets[i, k] = meets[k, i] = m
    return joins, meets, bottom, top


def quantale_from_posemigroup(sg: Posemigroup, name: str = '') -> FiniteQuantale:
    """View a posemigroup whose order is a complete lattice as a finite quantale."""
    if sg.partial:
        raise HypothesisFailed(f"{sg.name or 'posemigroup'} has undefined products", sg.name)
    joins, meets, bottom, top = _lattice_tables(sg.poset)
    return FiniteQuantale(sg.elements, sg.poset.leq, sg.table, joins, meets, bottom, top,
                          name=name or sg.name, base=None)


def is_quantale(sg: Posemigroup) -> bool:
    try:
        q = quantale_from_posemigroup(sg)
    except HypothesisFailed:
        return False
    return quantale_axioms(q).ok


def check_quantic_nucleus(sg: Posemigroup, j: Nucleus) -> Report:
    rep = Report('quantic-nucleus', message=j.name)
    L = lower_sets(sg.poset)
    label = sg.label
    values = {D: j(D) for D in L}

    def first(name, failing):
        for witness in failing:
            return rep.add(Report.failed(name, witness))
        return rep.add(Report.passed(name))

    first('lower-set', (label(D) for D in L if not is_lower(sg.poset, values[D])))
    first('inflationary', (label(D) for D in L if D & ~values[D]))
    first('idempotent', (label(D) for D in L if j(values[D]) != values[D]))
    first('monotone', ((label(D), label(E)) for D in L for E in L
                       if D & ~E == 0 and values[D] & ~values[E]))
    first('submultiplicative', (
        (label(A), label(B)) for A in L for B in L
        if set_product(sg, values[A], values[B]) & ~j(set_product(sg, A, B))
    ))
    return rep


def is_principal_closed(sg: Posemigroup, j: Nucleus) -> bool:
    return all(j(d) == d for d in sg.poset.down_masks)


def quotient(sg: Posemigroup, j: Nucleus, check: bool = True, name: str = '') -> FiniteQuantale:
    """Fixpoints of `j` as a quantale: product and join re-closed by `j`, meet as intersection."""
    if check:
        rep = check_quantic_nucleus(sg, j)
        if not rep.ok:
            raise NucleusInvalid(f"{j.name} is not a quantic nucleus", rep.witness)
    carrier = j.fixpoints()
    idx = {D: i for i, D in enumerate(carrier)}
    n = len(carrier)
    leq = np.array([[D & ~E == 0 for E in carrier] for D in carrier], dtype=bool).reshape(n, n)
    mult = np.zeros((n, n), dtype=int)
    joins = np.zeros((n, n), dtype=int)
    meets = np.zeros((n, n), dtype=int)
    for a, D in enumerate(carrier):
        for b, E in enumerate(carrier):
            mult[a, b] = idx[j(set_product(sg, D, E))]
            joins[a, b] = idx[j(D | E)]
            meets[a, b] = idx[D & E]
    q = FiniteQuantale(
        tuple(sg.label(D) for D in carrier), leq, mult, joins, meets,
        bottom=idx[j(0)], top=idx[sg.full], name=name or f"{sg.name}/{j.name}",
        sets=tuple(carrier), base=sg,
    )
    if check:
        rep = quantale_axioms(q)
        if not rep.ok:
            raise NucleusInvalid(f"quotient by {j.name} is not a quantale", rep.witness)
    return q


def check_principal_join_law(sg: Posemigroup, j: Nucleus, D: int) -> Report:
    """If the join of D exists and lies in j(D), then j(D) is its principal downset."""
    if not is_principal_closed(sg, j):
        raise PreconditionFailed(f"{j.name} is not principal closed")
    p = sg.poset
    top = join(p, D)
    jD = j(D)
    if top is None or not jD >> top & 1:
        return Report.vacuous('principal-join', f"{sg.label(D)}: join missing or outside j(D)")
    if jD != p.down_masks[top] or join(p, jD) != top:
        return Report.failed('principal-join', {'D': sg.label(D), 'j(D)': sg.label(jD),
                                                'join': sg.elements[top]})
    return Report.passed('principal-join', sg.label(D))


def quantale_morphism_report(h: Morphism, src: FiniteQuantale, dst: FiniteQuantale,
                             name: str = 'quantale-morphism') -> Report:
    """Multiplication, binary joins and bottom; on finite lattices this gives all joins."""
    rep = Report(name, message=h.name)
    img = np.asarray(h.images, dtype=int)
    for law, lhs, rhs in (
        ('multiplication', img[src.mult], dst.mult[np.ix_(img, img)]),
        ('joins', img[src.join_table], dst.join_table[np.ix_(img, img)]),
    ):
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            x, y = (int(v) for v in bad[0])
            rep.add(Report.failed(law, (src.labels[x], src.labels[y])))
        else:
            rep.add(Report.passed(law))
    if h(src.bottom) == dst.bottom:
        rep.add(Report.passed('bottom'))
    else:
        rep.add(Report.failed('bottom', dst.labels[h(src.bottom)]))
    return rep


def check_representation(sg: Posemigroup, j: Nucleus) -> Report:
    """For a quantale S whose nucleus sends every D to the principal downset of its join,
    s -> s down is an isomorphism onto the quotient."""
    q_s = quantale_from_posemigroup(sg)
    axioms = quantale_axioms(q_s)
    if not axioms.ok:
        raise HypothesisFailed(f"{sg.name or 'carrier'} is not a quantale", axioms.witness)
    p = sg.poset
    for D in lower_sets(p):
        expected = p.down_masks[join(p, D)]
        if j(D) != expected:
            raise HypothesisFailed(f"{j.name} does not send {sg.label(D)} to a principal downset",
                                   sg.label(D))
    q = quotient(sg, j, check=False)
    eta = Morphism('eta', tuple(q.index_of_set(d) for d in p.down_masks))
    rep = Report('representation', message=f"{sg.size} elements")
    if sorted(eta.images) == list(range(q.size)):
        rep.add(Report.passed('bijective'))
    else:
        rep.add(Report.failed('bijective', [q.labels[i] for i in range(q.size) if i not in eta.images]))
    rep.add(Report.passed('order') if is_order_embedding(eta, p, q.poset)
            else Report.failed('order', 'eta does not reflect the order'))
    rep.add(quantale_morphism_report(eta, q_s, q))
    rep.data['isomorphism'] = eta
    return rep


def principal_embedding_properties(sg: Posemigroup, j: Nucleus, q: Optional[FiniteQuantale] = None,
                                   cap: Optional[int] = None) -> Report:
    """s -> s down into the fixpoints: order embedding, existing meets, join density."""
    if not is_principal_closed(sg, j):
        raise PreconditionFailed(f"{j.name} is not principal closed")
    q = q or quotient(sg, j, check=False)
    p = sg.poset
    eta = Morphism('eta', tuple(q.index_of_set(d) for d in p.down_masks))
    rep = Report('principal-embedding')
    rep.add(Report.passed('order-embedding') if is_order_embedding(eta, p, q.poset)
            else Report.failed('order-embedding', 'eta does not reflect the order'))

    meets = Report.passed('meets')
    for X in all_subsets(p, cap):
        m = meet(p, X)
        if m is None:
            continue
        inter = sg.full
        for x in bits(X):
            inter &= p.down_masks[x]
        if inter != p.down_masks[m]:
            meets = Report.failed('meets', {'X': sg.label(X), 'meet': p.elements[m]})
            break
    rep.add(meets)

    density = Report.passed('join-density')
    for i, D in enumerate(q.sets):
        if q.join_all(eta(d) for d in bits(D)) != i:
            density = Report.failed('join-density', q.labels[i])
            break
    rep.add(density)
    rep.data['eta'] = eta
    return rep


def quantale_axioms(q: FiniteQuantale) -> Report:
    rep = Report('quantale-axioms', message=q.name)
    n = q.size
    leq, J, M, T = q.leq, q.join_table, q.meet_table, q.mult
    names = q.labels

    def fail(name, idx):
        return rep.add(Report.failed(name, tuple(names[int(i)] for i in idx)))

    lattice = None
    for i in range(n):
        for k in range(n):
            ub = leq[i, :] & leq[k, :]
            lb = leq[:, i] & leq[:, k]
            if not ub[J[i, k]] or not leq[J[i, k], ub].all():
                lattice = ('join', i, k)
                break
            if not lb[M[i, k]] or not leq[lb, M[i, k]].all():
                lattice = ('meet', i, k)
                break
        if lattice:
            break
    if lattice:
        rep.add(Report.failed('lattice', (lattice[0], names[lattice[1]], names[lattice[2]])))
    elif n == 0 or not leq[q.bottom, :].all() or not leq[:, q.top].all():
        rep.add(Report.failed('lattice', 'bottom or top'))
    else:
        rep.add(Report.passed('lattice'))

    ar = np.arange(n)
    bad = np.argwhere(T[T[:, :, None], ar[None, None, :]] != T[ar[:, None, None], T[None, :, :]])
    if len(bad):
        fail('associativity', bad[0])
    else:
        rep.add(Report.passed('associativity'))

    bad = np.argwhere(T[ar[:, None, None], J[None, :, :]] != J[T[:, :, None], T[:, None, :]])
    if len(bad):
        fail('left-distributivity', bad[0])
    else:
        rep.add(Report.passed('left-distributivity'))

    bad = np.argwhere(T[J[:, :, None], ar[None, None, :]] != J[T[:, None, :], T[None, :, :]])
    if len(bad):
        fail('right-distributivity', bad[0])
    else:
        rep.add(Report.passed('right-distributivity'))

    if n and (T[:, q.bottom] == q.bottom).all() and (T[q.bottom, :] == q.bottom).all():
        rep.add(Report.passed('bottom-absorption'))
    else:
        rep.add(Report.failed('bottom-absorption', names[q.bottom] if n else None))
    return rep


def _invariants(q: FiniteQuantale) -> list[tuple]:
    below = q.leq.sum(axis=0)
    above = q.leq.sum(axis=1)
    level = [0] * q.size
    for i in sorted(range(q.size), key=lambda i: below[i]):
        lower = [k for k in range(q.size) if q.leq[k, i] and k != i]
        level[i] = 1 + max((level[k] for k in lower), default=-1)
    return [(int(below[i]), int(above[i]), level[i], bool(q.mult[i, i] == i)) for i in range(q.size)]


def find_isomorphism(q1: FiniteQuantale, q2: FiniteQuantale,
                     cap: Optional[int] = None) -> Optional[Morphism]:
    """Order- and multiplication-preserving bijection q1 -> q2, or None."""
    cap = config.ISO_CAP if cap is None else cap
    for q in (q1, q2):
        if q.size > cap:
            raise CapExceeded('find_isomorphism', q.size, cap)
    n = q1.size
    if n != q2.size:
        return None
    inv1, inv2 = _invariants(q1), _invariants(q2)
    if sorted(inv1) != sorted(inv2):
        return None
    candidates = [[y for y in range(n) if inv2[y] == inv1[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: len(candidates[x]))
    assign: dict[int, int] = {}
    used: set[int] = set()
    nodes = 0

    def consistent(x: int, y: int) -> bool:
        for u, v in assign.items():
            if q1.leq[u, x] != q2.leq[v, y] or q1.leq[x, u] != q2.leq[y, v]:
                return False
        assign[x] = y
        try:
            for a in assign:
                for b in assign:
                    r = int(q1.mult[a, b])
                    if r in assign and assign[r] != q2.mult[assign[a], assign[b]]:
                        return False
            return True
        finally:
            del assign[x]

    def search(k: int) -> bool:
        nonlocal nodes
        if k == n:
            return True
        x = order[k]
        for y in candidates[x]:
            if y in used:
                continue
            nodes += 1
            if consistent(x, y):
                assign[x] = y
                used.add(y)
                if search(k + 1):
                    return True
                del assign[x]
                used.discard(y)
        return False

    found = search(0)
    log.debug("isomorphism search %s -> %s: %d nodes, found=%s", q1.name, q2.name, nodes, found)
    if not found:
        return None
    iso = Morphism('iso', tuple(assign[x] for x in range(n)))
    img = np.asarray(iso.images)
    if not np.array_equal(img[q1.mult], q2.mult[np.ix_(img, img)]):
        return None
    return iso

