"""Lower sets closed under admissible joins, and the reflection s -> s down into them."""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from . import config
from .errors import CapExceeded, NotMarkedQuantale, PreconditionFailed
from .marking import (Level, MarkedPosemigroup, MarkingKind, check_marked_morphism,
                      check_marked_quantale)
from .nucleus import (FiniteQuantale, Nucleus, principal_embedding_properties,
                      quantale_morphism_report, quotient)
from .order import Morphism, all_subsets, down_closure, is_lattice, is_lower, join, lower_sets
from .posemigroup import product_mismatches
from .reports import Report
from .util import bits, popcount

log = logging.getLogger(__name__)


def is_ideal(ms: MarkedPosemigroup, D: int) -> bool:
    p = ms.sg.poset
    if not is_lower(p, D):
        return False
    for M in ms.marking.admissible_subsets(D, skip_singletons=True):
        m = join(p, M)
        if m is None or not D >> m & 1:
            return False
    return True


def generated_ideal(ms: MarkedPosemigroup, C: int) -> int:
    """Least ideal containing C, by saturation; the whole carrier when none exists."""
    p = ms.sg.poset
    kind = ms.marking.kind
    D = down_closure(p, C)
    if kind is MarkingKind.SINGLETONS:
        return D
    if kind is MarkingKind.FULL and is_lattice(p):
        return p.down_masks[join(p, D)]
    while True:
        grown = D
        for M in ms.marking.admissible_subsets(D, skip_singletons=True):
            m = join(p, M)
            if m is None:
                log.warning("admissible subset %s of %s has no join", ms.sg.label(M), ms.name)
                return p.full
            grown |= p.down_masks[m]
        if grown == D:
            return D
        D = grown


def generated_ideal_by_intersection(ms: MarkedPosemigroup, C: int) -> int:
    """Intersection of every ideal containing C."""
    out = ms.sg.full
    for D in all_ideals(ms):
        if C & ~D == 0:
            out &= D
    return out


def all_ideals(ms: MarkedPosemigroup) -> list[int]:
    cached = ms._cache.get('all_ideals')
    if cached is None:
        cached = [D for D in lower_sets(ms.sg.poset) if is_ideal(ms, D)]
        ms._cache['all_ideals'] = cached
    return list(cached)


def ideal_nucleus(ms: MarkedPosemigroup) -> Nucleus:
    if 'nucleus' not in ms._cache:
        ms._cache['nucleus'] = Nucleus(ms.sg, lambda C: generated_ideal(ms, C),
                                       name=f"ideals[{ms.marking.spec()}]")
    return ms._cache['nucleus']


def ideal_quantale(ms: MarkedPosemigroup) -> FiniteQuantale:
    """The ideals under j(D E) and j(D | E); refused when an admissible subset has no join."""
    if 'ideal_quantale' not in ms._cache:
        if not is_ideal(ms, ms.sg.full):
            p = ms.sg.poset
            M = next(M for M in ms.marking.admissible_subsets(skip_singletons=True)
                     if join(p, M) is None)
            raise PreconditionFailed(
                f"admissible subset {ms.sg.label(M)} of {ms.name} has no join", ms.sg.label(M),
            )
        q = quotient(ms.sg, ideal_nucleus(ms), check=False, name=f"Id({ms.name})")
        log.debug("ideal quantale of %s: %d ideals", ms.name, q.size)
        ms._cache['ideal_quantale'] = q
    return ms._cache['ideal_quantale']


def _principal_map(ms: MarkedPosemigroup, q: FiniteQuantale, name: str) -> Morphism:
    return Morphism(name, tuple(q.index_of_set(d) for d in ms.sg.poset.down_masks))


def ideal_reflection(ms: MarkedPosemigroup, cap: Optional[int] = None) -> tuple[Morphism, Report]:
    """t: s -> s down into the ideal quantale, with every law it satisfies checked."""
    mq = check_marked_quantale(ms)
    if not mq.ok:
        raise NotMarkedQuantale(f"{ms.name} is not a marked quantale", mq.witness)
    sg, p = ms.sg, ms.sg.poset
    q = ideal_quantale(ms)
    t = _principal_map(ms, q, 't')
    rep = Report('ideal-reflection', message=f"{q.size} ideals")

    img = np.asarray(t.images, dtype=int)
    bad = product_mismatches(img, sg.table, q.mult)
    if len(bad):
        x, y = (sg.elements[int(v)] for v in bad[0])
        rep.add(Report.failed('multiplication', (x, y)))
    else:
        rep.add(Report.passed('multiplication'))

    joins = Report.passed('admissible-joins')
    for M in ms.marking.admissible_subsets():
        m = join(p, M)
        if t(m) != q.join_all(t(x) for x in bits(M)):
            joins = Report.failed('admissible-joins', sg.label(M))
            break
    rep.add(joins)

    for sub in principal_embedding_properties(sg, ideal_nucleus(ms), q, cap).checks:
        rep.add(sub)

    unpreserved = []
    for X in all_subsets(p, cap):
        m = join(p, X)
        if m is None or popcount(X) < 2 or ms.is_admissible(X):
            continue
        joined = q.join_all(t(x) for x in bits(X))
        if t(m) != joined:
            unpreserved.append((sg.label(X), q.labels[t(m)], q.labels[joined]))
    rep.data['unpreserved_joins'] = unpreserved
    return t, rep


def extend_to_ideals(ms: MarkedPosemigroup, q: FiniteQuantale, f: Morphism) -> tuple[Morphism, Report]:
    """g(D) = join of f(D); the unique quantale morphism with g . t = f."""
    pre = check_marked_morphism(f, ms, q.as_marked(), Level.MARKED_QUANTALE)
    if not pre.ok:
        raise PreconditionFailed(f"{f.name} is not a marked-quantale morphism into {q.name}", pre.witness)
    ideals = ideal_quantale(ms)
    g = Morphism('g', tuple(q.join_all(f(d) for d in bits(D)) for D in ideals.sets))
    rep = Report('ideal-extension', message=f"{f.name} into {q.name}")
    rep.add(quantale_morphism_report(g, ideals, q))
    t = _principal_map(ms, ideals, 't')
    bad = [s for s in range(ms.sg.size) if g(t(s)) != f(s)]
    rep.add(Report.failed('factorisation', ms.sg.elements[bad[0]]) if bad else Report.passed('factorisation'))
    return g, rep


def _monotone_maps(src: FiniteQuantale, dst: FiniteQuantale, fixed: dict[int, int]):
    """Every monotone map src -> dst agreeing with `fixed`; src.sets are in cardinality order."""
    n = src.size
    assign = [-1] * n

    def extend(k: int):
        if k == n:
            yield tuple(assign)
            return
        options = [fixed[k]] if k in fixed else range(dst.size)
        for y in options:
            if all(dst.leq[assign[u], y] for u in range(k) if src.leq[u, k]):
                assign[k] = y
                yield from extend(k + 1)
        assign[k] = -1

    yield from extend(0)


def uniqueness_check(ms: MarkedPosemigroup, q: FiniteQuantale, f: Morphism,
                     cap: Optional[int] = None) -> bool:
    """Exactly one quantale morphism h out of the ideal quantale with h . t = f, and it is g."""
    cap = config.UNIQUENESS_CAP if cap is None else cap
    ideals = ideal_quantale(ms)
    for side in (ideals, q):
        if side.size > cap:
            raise CapExceeded('uniqueness_check', side.size, cap)
    g, _ = extend_to_ideals(ms, q, f)
    t = _principal_map(ms, ideals, 't')
    fixed = {t(s): f(s) for s in range(ms.sg.size)}
    found = []
    for images in _monotone_maps(ideals, q, fixed):
        h = Morphism('h', images)
        if quantale_morphism_report(h, ideals, q).ok:
            found.append(h)
    log.debug("uniqueness check on %s: %d morphisms", ms.name, len(found))
    return len(found) == 1 and found[0].images == g.images


def ideal_functor(f: Morphism, src: MarkedPosemigroup, dst: MarkedPosemigroup) -> tuple[Morphism, Report]:
    """D -> least ideal of the target containing f(D)."""
    pre = check_marked_morphism(f, src, dst, Level.MARKED_QUANTALE)
    if not pre.ok:
        raise PreconditionFailed(f"{f.name} is not a marked-quantale morphism", pre.witness)
    qs, qt = ideal_quantale(src), ideal_quantale(dst)
    lifted = Morphism(f"Id({f.name})", tuple(
        qt.index_of_set(generated_ideal(dst, f.image(D))) for D in qs.sets
    ))
    ts, tt = _principal_map(src, qs, 't'), _principal_map(dst, qt, 't')
    rep = Report('ideal-functor', message=f.name)
    bad = [s for s in range(src.sg.size) if lifted(ts(s)) != tt(f(s))]
    rep.add(Report.failed('square', src.sg.elements[bad[0]]) if bad else Report.passed('square'))
    rep.add(quantale_morphism_report(lifted, qs, qt))
    return lifted, rep


def counit_check(q: FiniteQuantale) -> Report:
    """Every ideal of a finite quantale under the full marking is principal, and a down -> a
    is an isomorphism."""
    ms = q.as_marked()
    ideals = ideal_quantale(ms)
    p = ms.sg.poset
    rep = Report('counit', message=q.name)
    principal = set(p.down_masks)
    extra = [ideals.labels[i] for i, D in enumerate(ideals.sets) if D not in principal]
    rep.add(Report.failed('principal', extra[0]) if extra else Report.passed('principal'))
    if extra:
        return rep
    counit = Morphism('counit', tuple(join(p, D) for D in ideals.sets))
    rep.add(quantale_morphism_report(counit, ideals, q))
    if sorted(counit.images) != list(range(q.size)):
        rep.add(Report.failed('bijective', counit.images))
    else:
        rep.add(Report.passed('bijective'))
    return rep


def ideals_shrink(ms_small: MarkedPosemigroup, ms_large: MarkedPosemigroup) -> bool:
    """A marking contained in another yields at least as many ideals."""
    return set(all_ideals(ms_large)) <= set(all_ideals(ms_small))

