# -*- coding: utf-8 -*-
"""Euler characteristic / genus calculus for closed oriented surfaces.

Everything here is plain `int` arithmetic, which is arbitrary precision: n**(2g-2) leaves the
64-bit range at modest (g, n) and nothing downstream tolerates rounding.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Tuple, Union

from .errors import InvalidCoverData, NotAClosedSurface

# Non-negative genus of a closed oriented surface.
Genus = int
# Euler characteristic; even and <= 2 whenever it belongs to a closed oriented surface.
EulerChar = int


@dataclass(frozen=True)
class RamificationProfile:
    """Multiset of (ramification index, number of points with that index).

    Only the Riemann-Hurwitz sum is ever needed, never the identity of the points.
    """

    entries: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        for index, count in self.entries:
            if index < 2:
                raise InvalidCoverData('ramification index %d < 2' % index)
            if count < 0:
                raise InvalidCoverData('negative point count %d for index %d' % (count, index))

    @classmethod
    def of(cls, data: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None) -> 'RamificationProfile':
        """Build from `{index: count}` or `[(index, count), ...]`; equal indices are merged."""
        if data is None:
            return cls()
        pairs = data.items() if isinstance(data, Mapping) else data
        merged = {}
        for index, count in pairs:
            merged[index] = merged.get(index, 0) + count
        return cls(tuple(sorted((i, c) for i, c in merged.items() if c)))

    @classmethod
    def unramified(cls) -> 'RamificationProfile':
        return cls()

    @classmethod
    def total(cls, degree: int, points: int) -> 'RamificationProfile':
        """`points` points of total ramification (index = degree); empty for degree 1."""
        if degree < 2 or points == 0:
            return cls()
        return cls(((degree, points),))

    @property
    def contribution(self) -> int:
        """The Riemann-Hurwitz correction: sum of count * (index - 1)."""
        return sum(count * (index - 1) for index, count in self.entries)

    @property
    def max_index(self) -> int:
        return max((index for index, _ in self.entries), default=1)

    def as_dict(self):
        return [{'index': index, 'count': count} for index, count in self.entries]


def euler_from_genus(g: Genus) -> EulerChar:
    if g < 0:
        raise NotAClosedSurface('negative genus %d' % g)
    return 2 - 2 * g


def genus_from_euler(x: EulerChar) -> Genus:
    """Inverse of `euler_from_genus`. Rejects rather than rounds."""
    if x > 2 or x % 2:
        raise NotAClosedSurface('Euler characteristic %d is not that of a closed oriented surface' % x)
    return (2 - x) // 2


def rh_cover_genus(base: Genus, degree: int, ram: RamificationProfile = RamificationProfile()) -> Genus:
    """Genus of a connected degree-`degree` cover of a genus-`base` surface (Riemann-Hurwitz).

    Raises InvalidCoverData when the data cannot belong to a connected cover: an index above the
    degree, or a total Euler characteristic that is odd or above 2. Per-component genera of a
    disconnected cover come from `monodromy.components`, which knows the components.
    """
    if base < 0:
        raise InvalidCoverData('negative base genus %d' % base)
    if degree < 1:
        raise InvalidCoverData('cover degree %d < 1' % degree)
    if ram.max_index > degree:
        raise InvalidCoverData('ramification index %d exceeds degree %d' % (ram.max_index, degree))
    chi = degree * euler_from_genus(base) - ram.contribution
    try:
        return genus_from_euler(chi)
    except NotAClosedSurface as exc:
        raise InvalidCoverData('cover of genus %d, degree %d, ramification %s: %s'
                               % (base, degree, list(ram.entries), exc)) from exc


def branched_cover_euler(sheets: int, ambient_chi: EulerChar, branch_chi: EulerChar) -> EulerChar:
    """Euler characteristic of a `sheets`-fold cover totally branched along a locus of Euler
    characteristic `branch_chi` inside a space of Euler characteristic `ambient_chi`."""
    if sheets < 1:
        raise InvalidCoverData('sheet count %d < 1' % sheets)
    return sheets * ambient_chi - (sheets - 1) * branch_chi
