# -*- coding: utf-8 -*-
"""Covers of closed surfaces given by permutation monodromy.

A degree-d cover of a genus-h surface, branched over k points, is a choice of permutations
a_1, b_1, ..., a_h, b_h, z_1, ..., z_k of the sheets {0, ..., d-1} with

    [a_1, b_1] ... [a_h, b_h] z_1 ... z_k = 1,    [a, b] = a b a⁻¹ b⁻¹.

Products are read left to right (`p * q` applies p first), which is sympy's convention; cover
files must use the same one. The cover is connected iff the permutations act transitively, and a
branch point over which z has c cycles has d - c ramification.

Cover files are JSON objects::

    {"base_genus": 2, "degree": 3,
     "handles": [[[0, 1, 2], [0, 1, 2]], ["()", "()"]],
     "branches": ["(0 1 2)", [2, 0, 1]]}

where each permutation is an image array or a cycle string.
"""
from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from .errors import InvalidCoverData
from .topology_core import EulerChar, Genus

logger = logging.getLogger(__name__)

_CYCLE_STRING = re.compile(r'^\s*(\([\d\s,]*\)\s*)*$')
_CYCLE = re.compile(r'\(([\d\s,]*)\)')


@dataclass(frozen=True)
class PermutationCover:
    base_genus: Genus
    degree: int
    handle_perms: Tuple[Tuple[Permutation, Permutation], ...] = ()
    branch_perms: Tuple[Permutation, ...] = ()

    def permutations(self) -> List[Permutation]:
        perms = [p for pair in self.handle_perms for p in pair]
        perms.extend(self.branch_perms)
        return perms

    def relabel(self, sigma: Permutation) -> 'PermutationCover':
        """The same cover with sheets renamed by `sigma` (every permutation conjugated)."""
        return PermutationCover(
            self.base_genus, self.degree,
            tuple((a ^ sigma, b ^ sigma) for a, b in self.handle_perms),
            tuple(z ^ sigma for z in self.branch_perms))


def identity(degree: int) -> Permutation:
    return Permutation(list(range(degree)))


def rotation(degree: int, shift: int) -> Permutation:
    return Permutation([(i + shift) % degree for i in range(degree)])


def relation_product(pc: PermutationCover) -> Permutation:
    product = identity(pc.degree)
    for a, b in pc.handle_perms:
        product = product * a * b * ~a * ~b
    for z in pc.branch_perms:
        product = product * z
    return product


def validate(pc: PermutationCover) -> bool:
    if pc.degree < 1 or pc.base_genus < 0 or len(pc.handle_perms) != pc.base_genus:
        return False
    if any(p.size != pc.degree for p in pc.permutations()):
        return False
    return relation_product(pc).is_Identity


def _require_valid(pc):
    if not validate(pc):
        raise InvalidCoverData('permutations do not define a degree-%d cover of a genus-%d surface'
                               % (pc.degree, pc.base_genus))


def orbits(pc: PermutationCover) -> List[List[int]]:
    _require_valid(pc)
    group = PermutationGroup([identity(pc.degree)] + pc.permutations())
    return sorted(sorted(orbit) for orbit in group.orbits())


def component_count(pc: PermutationCover) -> int:
    return len(orbits(pc))


def perm_cover_euler(pc: PermutationCover) -> EulerChar:
    """Riemann-Hurwitz with the ramification over each branch point read off as d - #cycles."""
    _require_valid(pc)
    d = pc.degree
    return d * (2 - 2 * pc.base_genus) - sum(d - z.cycles for z in pc.branch_perms)


def components(pc: PermutationCover) -> List[PermutationCover]:
    """The connected components, each as a cover on its own sheets renumbered from 0."""
    pieces = []
    for orbit in orbits(pc):
        index = {sheet: i for i, sheet in enumerate(orbit)}

        def restrict(p, orbit=orbit, index=index):
            return Permutation([index[p.array_form[sheet]] for sheet in orbit])

        pieces.append(PermutationCover(
            pc.base_genus, len(orbit),
            tuple((restrict(a), restrict(b)) for a, b in pc.handle_perms),
            tuple(restrict(z) for z in pc.branch_perms)))
    logger.debug('cover of degree %d splits into %d component(s)', pc.degree, len(pieces))
    return pieces


def cyclic_cover_spec(g: Genus, n: int, handle_values: Sequence[int]) -> PermutationCover:
    """The n-fold cyclic cover of a genus-g surface branched at two points with monodromy a full
    n-cycle and its inverse; the handles act by the rotations given in `handle_values`."""
    if n < 2:
        raise InvalidCoverData('a cyclic branched cover needs n >= 2, got %d' % n)
    if len(handle_values) != 2 * g:
        raise InvalidCoverData('%d handle values for genus %d, expected %d' % (len(handle_values), g, 2 * g))
    values = [v % n for v in handle_values]
    handles = tuple((rotation(n, values[2 * i]), rotation(n, values[2 * i + 1])) for i in range(g))
    return PermutationCover(g, n, handles, (rotation(n, 1), rotation(n, -1)))


def parse_permutation(value, degree: int) -> Permutation:
    """An image array `[1, 2, 0]` or a cycle string `"(0 1 2)"`; `"()"` and `""` are the identity."""
    if isinstance(value, str):
        if not _CYCLE_STRING.match(value):
            raise InvalidCoverData('not a cycle string: %r' % value)
        image = list(range(degree))
        seen = set()
        for body in _CYCLE.findall(value):
            cycle = [int(token) for token in re.split(r'[\s,]+', body.strip()) if token]
            for i, sheet in enumerate(cycle):
                if sheet >= degree or sheet in seen:
                    raise InvalidCoverData('cycle string %r: sheet %d repeated or not below %d'
                                           % (value, sheet, degree))
                seen.add(sheet)
                image[sheet] = cycle[(i + 1) % len(cycle)]
        return Permutation(image)
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise InvalidCoverData('a permutation is an image array or a cycle string, got %r' % (value,))
    if sorted(value) != list(range(degree)):
        raise InvalidCoverData('%r is not a permutation of 0..%d' % (value, degree - 1))
    return Permutation(value)


def load_cover(document) -> PermutationCover:
    """Parse a cover-file JSON object. Structural problems raise; relation failures do not (that is
    what `validate` reports)."""
    try:
        base_genus = document['base_genus']
        degree = document['degree']
        handles = document.get('handles', [])
        branches = document.get('branches', [])
    except (TypeError, KeyError, AttributeError) as exc:
        raise InvalidCoverData('cover file needs base_genus and degree: %s' % exc) from exc
    if any(isinstance(v, bool) or not isinstance(v, int) for v in (base_genus, degree)) or base_genus < 0 or degree < 1:
        raise InvalidCoverData('base_genus must be an integer >= 0 and degree an integer >= 1')
    if not isinstance(handles, list) or not all(isinstance(h, list) and len(h) == 2 for h in handles):
        raise InvalidCoverData('handles must be a list of [a, b] pairs')
    if not isinstance(branches, list):
        raise InvalidCoverData('branches must be a list')
    return PermutationCover(
        base_genus, degree,
        tuple((parse_permutation(a, degree), parse_permutation(b, degree)) for a, b in handles),
        tuple(parse_permutation(z, degree) for z in branches))


def dump_cover(pc: PermutationCover):
    return {
        'base_genus': pc.base_genus,
        'degree': pc.degree,
        'handles': [[list(a.array_form), list(b.array_form)] for a, b in pc.handle_perms],
        'branches': [list(z.array_form) for z in pc.branch_perms],
    }


def read_cover(path) -> PermutationCover:
    try:
        with open(path, encoding='utf-8') as handle:
            document = json.load(handle)
    except ValueError as exc:
        raise InvalidCoverData('%s is not valid JSON: %s' % (path, exc)) from exc
    return load_cover(document)
