"""The translation-bound closure on lower sets, its quantale of closed sets and
closure-preserving morphisms.

x lies in the closure of D when every upper bound of a translate bDc also
bounds bxc.
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional

import numpy as np

from .errors import PreconditionFailed
from .ideals import all_ideals, is_ideal
from .marking import (MarkedPosemigroup, check_marked_quantale, check_posemigroup_morphism,
                      is_D_admissible)
from .nucleus import (FiniteQuantale, Nucleus, is_quantale, principal_embedding_properties,
                      quantale_from_posemigroup, quantale_morphism_report, quotient)
from .order import (Morphism, all_subsets, down_closure, is_order_embedding, join, lower_sets,
                    upper_bounds)
from .posemigroup import OptElement, Posemigroup, product_mismatches
from .reports import Report
from .util import bits, sort_canonical

log = logging.getLogger(__name__)


def _bounded_by_translates(sg: Posemigroup, X: int, pairs: Iterable[tuple[OptElement, OptElement]]) -> int:
    p = sg.poset
    out = p.full
    for a, b in pairs:
        img = sg.translation_map(a, b)
        bound = upper_bounds(p, _image(img, X))
        keep = 0
        for x in range(sg.size):
            if img[x] < 0 or bound & ~p.up_masks[int(img[x])] == 0:
                keep |= 1 << x
        out &= keep
        if not out:
            break
    return out


def _image(img: np.ndarray, X: int) -> int:
    out = 0
    for x in bits(X):
        if img[x] >= 0:
            out |= 1 << int(img[x])
    return out


def closure(sg: Posemigroup, D: int) -> int:
    pairs = [(a, b) for a, b, _ in sg.translations()]
    return _bounded_by_translates(sg, D, pairs)


def closure_nucleus(sg: Posemigroup) -> Nucleus:
    if 'closure' not in sg._cache:
        sg._cache['closure'] = Nucleus(sg, lambda D: closure(sg, D), name='closure')
    return sg._cache['closure']


def closed_quantale(sg: Posemigroup) -> FiniteQuantale:
    if 'closed_quantale' not in sg._cache:
        q = quotient(sg, closure_nucleus(sg), check=False, name=f"Q({sg.name})")
        log.debug("closed-set quantale of %s: %d sets", sg.name, q.size)
        sg._cache['closed_quantale'] = q
    return sg._cache['closed_quantale']


def star_closure(sg: Posemigroup, X: int) -> int:
    """Upper-lower closure intersected with its left, right and two-sided
    variants; multipliers range over S only."""
    n = range(sg.size)
    pairs = [(None, None)]
    pairs += [(None, c) for c in n]
    pairs += [(a, None) for a in n]
    pairs += [(a, c) for a in n for c in n]
    return _bounded_by_translates(sg, X, pairs)


def cl_variant(sg: Posemigroup, I: int) -> int:
    """Two-sided translates only, multipliers from S."""
    return _bounded_by_translates(sg, I, [(a, c) for a in range(sg.size) for c in range(sg.size)])


def is_closure_preserving(f: Morphism, src: Posemigroup, dst: Posemigroup,
                          cap: Optional[int] = None) -> Report:
    pre = check_posemigroup_morphism(f, src, dst)
    if not pre.ok:
        raise PreconditionFailed(f"{f.name} is not a posemigroup morphism", pre.witness)
    ps, pt = src.poset, dst.poset
    rep = Report('closure-preserving', message=f.name)

    definition = Report.passed('definition')
    for M in sort_canonical(src.elements, all_subsets(ps, cap)):
        lhs = f.image(closure(src, down_closure(ps, M)))
        rhs = closure(dst, down_closure(pt, f.image(M)))
        if lhs & ~rhs:
            definition = Report.failed('definition', {
                'M': src.label(M), 'f(cl M)': dst.label(lhs), 'cl f(M)': dst.label(rhs),
            })
            break
    rep.add(definition)

    image = Report.passed('image-closure')
    for D in lower_sets(ps, cap):
        lhs = closure(dst, down_closure(pt, f.image(closure(src, D))))
        rhs = closure(dst, down_closure(pt, f.image(D)))
        if lhs != rhs:
            image = Report.failed('image-closure', src.label(D))
            break
    rep.add(image)

    preimage = Report.passed('preimage-closed')
    for M in closure_nucleus(dst).fixpoints(cap):
        back = f.preimage(M)
        if closure(src, down_closure(ps, back)) != back:
            preimage = Report.failed('preimage-closed', dst.label(M))
            break
    rep.add(preimage)

    verdicts = {definition.ok, image.ok, preimage.ok}
    if len(verdicts) == 1:
        rep.add(Report.passed('equivalence'))
    else:
        rep.add(Report.failed('equivalence', {
            'definition': definition.status, 'image-closure': image.status,
            'preimage-closed': preimage.status,
        }))
    return rep


def closure_reflection(sg: Posemigroup, cap: Optional[int] = None) -> tuple[Morphism, Report]:
    """tau: s -> s down into the closed-set quantale."""
    q = closed_quantale(sg)
    tau = Morphism('tau', tuple(q.index_of_set(d) for d in sg.poset.down_masks))
    rep = Report('closure-reflection', message=f"{q.size} closed sets")

    img = np.asarray(tau.images, dtype=int)
    bad = product_mismatches(img, sg.table, q.mult)
    if len(bad):
        rep.add(Report.failed('multiplication', tuple(sg.elements[int(v)] for v in bad[0])))
    else:
        rep.add(Report.passed('multiplication'))
    for sub in principal_embedding_properties(sg, closure_nucleus(sg), q, cap).checks:
        rep.add(sub)
    rep.add(is_closure_preserving(tau, sg, q.as_posemigroup(), cap))
    return tau, rep


def extend_along_closure(sg: Posemigroup, q: FiniteQuantale, f: Morphism,
                         cap: Optional[int] = None) -> tuple[Morphism, Report]:
    """g(D) = join of f(D) over closed sets D; g . tau = f."""
    target = q.as_posemigroup()
    cp = is_closure_preserving(f, sg, target, cap)
    if not cp.ok:
        raise PreconditionFailed(f"{f.name} is not closure preserving", cp.witness)
    closed = closed_quantale(sg)
    g = Morphism('g', tuple(q.join_all(f(d) for d in bits(D)) for D in closed.sets))
    tau = Morphism('tau', tuple(closed.index_of_set(d) for d in sg.poset.down_masks))
    rep = Report('closure-extension', message=f"{f.name} into {q.name}")
    rep.add(quantale_morphism_report(g, closed, q))
    bad = [s for s in range(sg.size) if g(tau(s)) != f(s)]
    rep.add(Report.failed('factorisation', sg.elements[bad[0]]) if bad else Report.passed('factorisation'))
    embedding = is_order_embedding(f, sg.poset, q.poset)
    if embedding:
        rep.add(Report.passed('order-embedding') if is_order_embedding(g, closed.poset, q.poset)
                else Report.failed('order-embedding', 'g does not reflect the order'))
    rep.data['f_embedding'] = embedding
    rep.data['g_embedding'] = is_order_embedding(g, closed.poset, q.poset)
    return g, rep


def inclusion_check(ms: MarkedPosemigroup, cap: Optional[int] = None) -> Report:
    """Closed sets are ideals; closures sit below principal downsets of joins."""
    sg, p = ms.sg, ms.sg.poset
    rep = Report('closed-in-ideals', message=ms.name)
    closed = closure_nucleus(sg).fixpoints(cap)
    outside = [D for D in closed if not is_ideal(ms, D)]
    rep.add(Report.failed('closed-sets-are-ideals', sg.label(outside[0])) if outside
            else Report.passed('closed-sets-are-ideals'))

    below = Report.passed('closure-below-join')
    admissible = Report.passed('admissible-closure')
    for D in all_subsets(p, cap):
        m = join(p, D)
        if m is None:
            continue
        cl = closure(sg, down_closure(p, D))
        if cl & ~p.down_masks[m]:
            below = Report.failed('closure-below-join', sg.label(D))
            break
        if admissible.ok and ms.is_admissible(D) and (cl != p.down_masks[m] or join(p, cl) != m):
            admissible = Report.failed('admissible-closure', sg.label(D))
    rep.add(below)
    rep.add(admissible)
    ideals = all_ideals(ms)
    rep.data.update(closed=len(closed), ideals=len(ideals), equal=set(closed) == set(ideals))
    return rep


def _preserves_all_joins(f: Morphism, src: Posemigroup, dst: Posemigroup, cap) -> bool:
    for X in all_subsets(src.poset, cap):
        m, fm = join(src.poset, X), join(dst.poset, f.image(X))
        if m is None or fm is None or f(m) != fm:
            return False
    return True


def check_morphism_theorems(f: Morphism, src: MarkedPosemigroup, dst: MarkedPosemigroup,
                            cap: Optional[int] = None) -> Report:
    s, t = src.sg, dst.sg
    cp = is_closure_preserving(f, s, t, cap)
    rep = Report('morphism-theorems', message=f.name)
    rep.add(cp)

    if is_quantale(s) and is_quantale(t):
        qs, qt = quantale_from_posemigroup(s), quantale_from_posemigroup(t)
        qm = quantale_morphism_report(f, qs, qt).ok
        if qm == cp.ok:
            rep.add(Report.passed('quantale-iff-closure'))
        else:
            rep.add(Report.failed('quantale-iff-closure', {'quantale-morphism': qm, 'closure': cp.ok}))
    else:
        rep.add(Report.vacuous('quantale-iff-closure', 'endpoints are not both quantales'))

    marked = check_marked_quantale(src).ok and check_marked_quantale(dst).ok
    joins_kept = marked and all(
        f(join(s.poset, M)) == join(t.poset, f.image(M)) for M in src.marking.admissible_subsets()
    )
    if not cp.ok or not marked:
        rep.add(Report.vacuous('admissible-joins', 'needs a closure-preserving map of marked quantales',
                               converse_counterexample=bool(joins_kept and not cp.ok)))
    else:
        failing = [M for M in src.marking.admissible_subsets()
                   if f(join(s.poset, M)) != join(t.poset, f.image(M))
                   or not is_D_admissible(t, f.image(M))]
        rep.add(Report.failed('admissible-joins', s.label(failing[0])) if failing
                else Report.passed('admissible-joins'))

    if not cp.ok or not marked:
        rep.add(Report.vacuous('join-of-closure', 'needs a closure-preserving map of marked quantales'))
    else:
        failing = []
        for D in all_subsets(s.poset, cap):
            if not dst.is_admissible(f.image(D)):
                continue
            lhs = join(t.poset, f.image(closure(s, down_closure(s.poset, D))))
            rhs = join(t.poset, closure(t, down_closure(t.poset, f.image(D))))
            if lhs != rhs:
                failing.append(D)
                break
        rep.add(Report.failed('join-of-closure', s.label(failing[0])) if failing
                else Report.passed('join-of-closure'))
    rep.data['converse_counterexample'] = bool(joins_kept and not cp.ok)
    return rep


def closure_functor(f: Morphism, src: Posemigroup, dst: Posemigroup,
                    cap: Optional[int] = None) -> tuple[Morphism, Report]:
    """D -> closure of f(D) down."""
    cp = is_closure_preserving(f, src, dst, cap)
    if not cp.ok:
        raise PreconditionFailed(f"{f.name} is not closure preserving", cp.witness)
    qs, qt = closed_quantale(src), closed_quantale(dst)
    lifted = Morphism(f"Q({f.name})", tuple(
        qt.index_of_set(closure(dst, down_closure(dst.poset, f.image(D)))) for D in qs.sets
    ))
    ts = Morphism('tau', tuple(qs.index_of_set(d) for d in src.poset.down_masks))
    tt = Morphism('tau', tuple(qt.index_of_set(d) for d in dst.poset.down_masks))
    rep = Report('closure-functor', message=f.name)
    bad = [x for x in range(src.size) if lifted(ts(x)) != tt(f(x))]
    rep.add(Report.failed('square', src.elements[bad[0]]) if bad else Report.passed('square'))
    rep.add(quantale_morphism_report(lifted, qs, qt))
    return lifted, rep
