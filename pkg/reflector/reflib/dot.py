from __future__ import annotations

from typing import Union

from .nucleus import FiniteQuantale
from .order import Poset, hasse

_TEMPLATE = """digraph "%s" {
      rankdir = "BT" ;
      nodesep = 0.25 ;
      node [fontname="Helvetica", fontsize=10, shape=plaintext] ;

      // The nodes
      %s

      // The edges
      %s
}
"""


def emit_dot(lattice: Union[FiniteQuantale, Poset], name: str = 'G') -> str:
    """Hasse diagram of a poset or quantale carrier; covers only, bottom at the bottom."""
    poset = lattice.poset if isinstance(lattice, FiniteQuantale) else lattice
    labels = poset.elements
    index = {label: i for i, label in enumerate(labels)}

    nodes = ['"n%d" [label="%s"] ;' % (i, label.replace('"', r'\"')) for i, label in enumerate(labels)]
    covers = sorted((index[x], index[y]) for x, y in hasse(poset))
    edges = ['"n%d" -> "n%d" ;' % (x, y) for x, y in covers]
    return _TEMPLATE % (name.replace('"', r'\"'), '\n      '.join(nodes), '\n      '.join(edges))
