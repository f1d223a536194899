"""Small posemigroups built in code, shared by the test modules."""

from __future__ import annotations

import itertools

from reflector.reflib.marking import MarkedPosemigroup, MarkingKind, builtin_marking
from reflector.reflib.nucleus import quantale_from_posemigroup
from reflector.reflib.order import Morphism, validate_poset
from reflector.reflib.posemigroup import validate_posemigroup


def chain(n: int, mult: str = 'min', name: str = ''):
    """0 < 1 < ... < n-1 under min (a quantale) or max."""
    names = [str(i) for i in range(n)]
    op = min if mult == 'min' else max
    table = [[op(i, k) for k in range(n)] for i in range(n)]
    poset = validate_poset(names, zip(names, names[1:]))
    return validate_posemigroup(poset, table, name=name or f"chain{n}")


def chain_quantale(n: int):
    return quantale_from_posemigroup(chain(n))


def band(names, pairs, side: str = 'left', name: str = 'band'):
    """x . y = x (left) or y (right); compatible with every order."""
    n = len(names)
    poset = validate_poset(names, pairs)
    if side == 'left':
        table = [[i] * n for i in range(n)]
    else:
        table = [list(range(n)) for _ in range(n)]
    return validate_posemigroup(poset, table, name=name)


def null(names, pairs, zero: int = 0, name: str = 'null'):
    """Every product is the element `zero`."""
    n = len(names)
    poset = validate_poset(names, pairs)
    return validate_posemigroup(poset, [[zero] * n for _ in range(n)], name=name)


def marked(sg, kind=MarkingKind.D, **kwargs) -> MarkedPosemigroup:
    return MarkedPosemigroup(sg, builtin_marking(sg, kind, **kwargs))


def constant(name: str, n: int, value: int) -> Morphism:
    return Morphism(name, (value,) * n)


def all_maps(n: int, m: int):
    for images in itertools.product(range(m), repeat=n):
        yield Morphism('f', images)
