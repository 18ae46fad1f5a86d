# -*- coding: utf-8 -*-
"""Numerical intersection theory of graphs of maps inside a product of two curves."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import ParameterOutOfRange, UnsupportedConfiguration
from .topology_core import Genus


@dataclass(frozen=True)
class GraphDivisor:
    """The graph of a degree-`degree` map from a genus-`domain_genus` curve to a
    genus-`target_genus` curve, as a curve in their product."""

    domain_genus: Genus
    target_genus: Genus
    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise ParameterOutOfRange('graph of a map of degree %d' % self.degree)
        if self.domain_genus < 0 or self.target_genus < 0:
            raise ParameterOutOfRange('negative genus in %r' % (self,))

    def as_dict(self):
        return {'domain_genus': self.domain_genus, 'target_genus': self.target_genus,
                'degree': self.degree}


@dataclass(frozen=True)
class BranchClass:
    """A sum (or difference) of graph curves.

    Disjointness is declared by whoever builds the class, not computed: it is a geometric fact
    about the maps (they never agree at a point) that numbers alone cannot see.
    """

    components: Tuple[GraphDivisor, ...] = ()
    pairwise_disjoint: bool = True

    def as_dict(self):
        return {'components': [c.as_dict() for c in self.components],
                'pairwise_disjoint': self.pairwise_disjoint}


def graph_self_intersection(gd: GraphDivisor) -> int:
    """Self-intersection of a graph curve by adjunction.

    The graph is isomorphic to the domain curve, so 2g(graph) - 2 = 2g(domain) - 2, and the
    canonical class of the product meets it in 2g(domain) - 2 + degree * (2g(target) - 2).
    """
    domain_term = 2 * gd.domain_genus - 2
    canonical_dot = domain_term + gd.degree * (2 * gd.target_genus - 2)
    return domain_term - canonical_dot


def branch_class_square(bc: BranchClass) -> int:
    """Square of a class made of pairwise disjoint graphs: the cross terms vanish, and the sign of
    each component (sum or difference) squares away."""
    if not bc.pairwise_disjoint:
        raise UnsupportedConfiguration('branch curves that meet need their intersection numbers; '
                                       'only pairwise disjoint graphs are supported')
    return sum(graph_self_intersection(c) for c in bc.components)
