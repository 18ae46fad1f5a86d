# -*- coding: utf-8 -*-
"""Upper and lower bounds for the minimal base genus b_f(m) and its slope G_f = lim b_f(m)/m.

The upper bounds come from the constructions in `surfbundles.constructions` and their pullbacks
along unramified covers of the base; they are certificates, not minima over all bundles. The two
quoted bounds (16/(f-2) above, 2/(f-1) below) are reproduced as quoted, with their domains.
All values are exact `Fraction`s.
"""
from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from sympy import divisors

from .constructions import (SIMPLE_GENUS2, XGN, BundleRecord, ConstructionParams, asymptotic_slope,
                            build_simple_genus2, build_xgn, pullback, xgn_fibrations, xgn_signature)
from .cyclic_signature import signature_quantum
from .errors import ParameterOutOfRange
from .report_core import SCHEMA_VERSION, rational

logger = logging.getLogger(__name__)

GF_UPPER = 'gf_upper'
GF_LOWER = 'gf_lower'
BFM_UPPER = 'bfm_upper'
GF_UPPER_BASE_ROUTE = 'gf_upper_base_route'
BFM_UPPER_BASE_ROUTE = 'bfm_upper_base_route'

SOURCE_CONSTRUCTION = 'this_paper'
SOURCE_EKKOS = 'ekkos_quoted'
SOURCE_KOTSCHICK = 'kotschick_quoted'

EKKOS_NOTE = '16/(f-2) is quoted for even fiber genus only'

TABLE_COLUMNS = ('f', 'gf_upper', 'gf_witness', 'ekkos_upper', 'kotschick_lower')

# bundle over D~ (fiber genus gn) or over C (fiber genus g(gn-1)n^(2g-2)+1)
ROUTE_FIBER = 'fiber'
ROUTE_BASE = 'base'


@dataclass(frozen=True)
class Witness:
    n: int
    g: int
    k: Optional[int] = None
    construction: str = XGN
    route: str = ROUTE_FIBER

    @property
    def pair(self) -> str:
        return '(%d,%d)' % (self.n, self.g)

    def as_dict(self):
        return {'n': self.n, 'g': self.g, 'k': self.k, 'construction': self.construction,
                'route': self.route}


@dataclass(frozen=True)
class BoundReport:
    f: int
    kind: str
    value: Fraction
    witness: Optional[Witness]
    source: str
    note: str = ''

    def as_dict(self):
        return {'f': self.f, 'kind': self.kind, 'value': rational(self.value),
                'witness': self.witness.as_dict() if self.witness else None,
                'source': self.source, 'note': self.note}


def factorizations(f: int) -> List[Tuple[int, int]]:
    """All (n, g) with n·g = f and n, g >= 2, ascending in n."""
    if f < 4:
        return []
    return [(n, f // n) for n in divisors(f) if n >= 2 and f // n >= 2]


def fiber_route_slope(n: int) -> Fraction:
    return Fraction(3 * n, n * n - 1)


def gf_upper(f: int) -> Optional[BoundReport]:
    """G_f <= 3n/(n² - 1) for every split f = n·g; the smallest value, smallest n on ties."""
    if f < 2:
        raise ParameterOutOfRange('fiber genus %d < 2' % f)
    candidates = [(fiber_route_slope(n), n, g) for n, g in factorizations(f)]
    if not candidates:
        return None
    value, n, g = min(candidates)
    return BoundReport(f, GF_UPPER, value, Witness(n, g), SOURCE_CONSTRUCTION)


def ekkos_upper(f: int) -> BoundReport:
    if f < 4 or f % 2:
        raise ParameterOutOfRange('the quoted bound 16/(f-2) applies to even f >= 4, got %d' % f)
    return BoundReport(f, GF_UPPER, Fraction(16, f - 2), None, SOURCE_EKKOS, EKKOS_NOTE)


def kotschick_lower(f: int) -> BoundReport:
    if f < 2:
        raise ParameterOutOfRange('fiber genus %d < 2' % f)
    return BoundReport(f, GF_LOWER, Fraction(2, f - 1), None, SOURCE_KOTSCHICK)


def even_fiber_bound(f: int) -> Fraction:
    """6f/(f² - 4): what `gf_upper` gives for even f, through the split n = f/2, g = 2."""
    return Fraction(6 * f, f * f - 4)


def bfm_upper(f: int, m: int) -> Optional[BoundReport]:
    """b_f(4m) <= k(b₀ - 1) + 1 by pulling the bundle X_{g,n} -> D̃ back along a degree-k cover,
    whenever m = k·m₀ with σ(X_{g,n}) = 4m₀; f = n·g."""
    if m < 1:
        raise ParameterOutOfRange('signature quantum m=%d < 1' % m)
    candidates = []
    for n, g in factorizations(f):
        fibration = build_xgn(ConstructionParams(g, n)).fibration2
        quantum = signature_quantum(fibration.signature)
        if m % quantum:
            continue
        k = m // quantum
        candidates.append((pullback(fibration, k).base_genus, n, g, k))
    logger.debug('bfm_upper(%d, %d): %d dividing construction(s)', f, m, len(candidates))
    if not candidates:
        return None
    base, n, g, k = min(candidates)
    return BoundReport(f, BFM_UPPER, Fraction(base), Witness(n, g, k), SOURCE_CONSTRUCTION)


def _base_route_bundles(f: int) -> Iterator[Tuple[Witness, BundleRecord]]:
    """Constructions whose bundle over C has fiber genus exactly f.

    The fiber genus g(gn - 1)n^(2g-2) + 1 grows in both g and n, which bounds the search.
    """
    g = 2
    while xgn_fibrations(g, 2, 0)[0].fiber_genus <= f:
        n = 2
        while True:
            over_c = xgn_fibrations(g, n, xgn_signature(g, n))[0]
            if over_c.fiber_genus > f:
                break
            if over_c.fiber_genus == f:
                yield Witness(n, g, construction=XGN, route=ROUTE_BASE), over_c
            n += 1
        g += 1
    simple = build_simple_genus2()
    if simple.fibration1.fiber_genus == f:
        yield (Witness(simple.sheets, simple.target_genus, construction=SIMPLE_GENUS2, route=ROUTE_BASE),
               simple.fibration1)


def gf_upper_base_route(f: int) -> Optional[BoundReport]:
    """G_f <= (b - 1)/m₀ from pulling back a bundle over C of fiber genus f."""
    if f < 2:
        raise ParameterOutOfRange('fiber genus %d < 2' % f)
    candidates = [(asymptotic_slope(rec), i, witness)
                  for i, (witness, rec) in enumerate(_base_route_bundles(f))]
    if not candidates:
        return None
    value, _, witness = min(candidates, key=lambda c: c[:2])
    return BoundReport(f, GF_UPPER_BASE_ROUTE, value, witness, SOURCE_CONSTRUCTION)


def bfm_upper_base_route(f: int, m: int) -> Optional[BoundReport]:
    if m < 1:
        raise ParameterOutOfRange('signature quantum m=%d < 1' % m)
    candidates = []
    for i, (witness, rec) in enumerate(_base_route_bundles(f)):
        quantum = signature_quantum(rec.signature)
        if m % quantum == 0:
            k = m // quantum
            candidates.append((pullback(rec, k).base_genus, i, witness, k))
    if not candidates:
        return None
    base, _, witness, k = min(candidates, key=lambda c: c[:2])
    return BoundReport(f, BFM_UPPER_BASE_ROUTE, Fraction(base),
                       Witness(witness.n, witness.g, k, witness.construction, witness.route),
                       SOURCE_CONSTRUCTION)


def best_bfm_upper(f: int, m: int) -> Optional[BoundReport]:
    """The smaller of the two routes; `bfm_upper` wins ties."""
    found = [r for r in (bfm_upper(f, m), bfm_upper_base_route(f, m)) if r is not None]
    if not found:
        return None
    return min(found, key=lambda r: r.value)


@dataclass(frozen=True)
class TableRow:
    f: int
    gf_upper: Optional[BoundReport]
    ekkos_upper: Optional[BoundReport]
    kotschick_lower: BoundReport

    def cells(self):
        return [
            str(self.f),
            rational(self.gf_upper.value) if self.gf_upper else '',
            self.gf_upper.witness.pair if self.gf_upper else '',
            rational(self.ekkos_upper.value) if self.ekkos_upper else '',
            rational(self.kotschick_lower.value),
        ]


def bounds_table(f_max: int) -> List[TableRow]:
    if f_max < 4:
        raise ParameterOutOfRange('table needs f_max >= 4, got %d' % f_max)
    return [TableRow(f, gf_upper(f), ekkos_upper(f) if f % 2 == 0 else None, kotschick_lower(f))
            for f in range(4, f_max + 1)]


def table_csv(rows: List[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(TABLE_COLUMNS)
    for row in rows:
        writer.writerow(row.cells())
    return buffer.getvalue()


def table_document(rows: List[TableRow]):
    return {
        'schema_version': SCHEMA_VERSION,
        'columns': list(TABLE_COLUMNS),
        'rows': [dict(zip(TABLE_COLUMNS, (row.f,) + tuple(c or None for c in row.cells()[1:])))
                 for row in rows],
        'notes': [EKKOS_NOTE],
    }
