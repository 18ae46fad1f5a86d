# -*- coding: utf-8 -*-
"""Surface bundles built as cyclic branched covers of a product of curves.

Two constructions are assembled here, both as an n-fold cyclic cover of Y × C branched along two
disjoint graphs of unramified maps Y → C:

* `build_xgn(params)`: the X_{g,n} family. Y is the top of the tower
  C → E (g-fold, branched at two points), D → C (unramified, degree g),
  D̃ → D (unramified, degree n^(2g-2)), and Y = D̃.
* `build_simple_genus2()`: a double cover of C̃ × C for a genus-2 curve C and its unramified
  degree-16 cover C̃ (the one belonging to H1(C, Z/2)).

The projections to the two factors are the two fibrations. Every number a report carries is
computed along one route and re-derived along another by `cross_validate`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .cyclic_signature import CyclicCoverSpec, hirzebruch_signature, signature_quantum
from .errors import InvalidCoverData, ParameterOutOfRange, SurfaceBundleError, _warn
from .plugins import get_plugin_manager
from .report_core import SCHEMA_VERSION, rational
from .surface_products import BranchClass, GraphDivisor, branch_class_square
from .topology_core import (EulerChar, Genus, RamificationProfile, branched_cover_euler,
                            euler_from_genus, genus_from_euler, rh_cover_genus)

logger = logging.getLogger(__name__)

XGN = 'X_{g,n}'
SIMPLE_GENUS2 = 'simple_genus2'

CONNECTIVITY_NOTE = ('connectivity of the top curve assumed: a disconnected one is replaced by a '
                     'connected unramified cover of the same degree over C, which leaves every '
                     'degree, genus and the signature unchanged')


@dataclass(frozen=True)
class ConstructionParams:
    g: int
    n: int

    def __post_init__(self):
        if self.g < 2 or self.n < 2:
            raise ParameterOutOfRange('X_{g,n} needs g, n >= 2, got g=%d n=%d' % (self.g, self.n))

    def as_dict(self):
        return {'g': self.g, 'n': self.n}


@dataclass(frozen=True)
class CoverStep:
    name: str
    base_genus: Genus
    degree: int
    ram: RamificationProfile
    total_genus: Genus

    @classmethod
    def build(cls, name, base_genus, degree, ram=RamificationProfile()):
        return cls(name, base_genus, degree, ram, rh_cover_genus(base_genus, degree, ram))

    def as_dict(self):
        return {'name': self.name, 'base_genus': self.base_genus, 'degree': self.degree,
                'ramification': self.ram.as_dict(), 'total_genus': self.total_genus}


@dataclass(frozen=True)
class CoverTower:
    steps: Tuple[CoverStep, ...]

    @classmethod
    def chain(cls, base_genus: Genus, links: Sequence[Tuple[str, int, RamificationProfile]]) -> 'CoverTower':
        """Stack covers: each link covers the total space of the previous one."""
        steps = []
        genus = base_genus
        for name, degree, ram in links:
            step = CoverStep.build(name, genus, degree, ram)
            logger.debug('tower step %s: degree %d over genus %d -> genus %d',
                         name, degree, genus, step.total_genus)
            steps.append(step)
            genus = step.total_genus
        return cls(tuple(steps))

    @property
    def top(self) -> CoverStep:
        return self.steps[-1]

    def genus_of(self, name: str) -> Genus:
        for step in self.steps:
            if step.name == name:
                return step.total_genus
        raise KeyError(name)

    def degree_over(self, name: str) -> int:
        """Degree of the top curve over the total space of step `name`."""
        names = [s.name for s in self.steps]
        degree = 1
        for step in self.steps[names.index(name) + 1:]:
            degree *= step.degree
        return degree

    def as_dict(self):
        return [step.as_dict() for step in self.steps]


@dataclass(frozen=True)
class BundleRecord:
    base_genus: Genus
    fiber_genus: Genus
    signature: int
    provenance: str = field(default='', compare=False)

    @property
    def euler_characteristic(self) -> EulerChar:
        return euler_from_genus(self.base_genus) * euler_from_genus(self.fiber_genus)

    def as_dict(self):
        return {'base_genus': self.base_genus, 'fiber_genus': self.fiber_genus,
                'signature': self.signature, 'provenance': self.provenance}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ''

    def as_dict(self):
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail}


@dataclass(frozen=True)
class ConstructionReport:
    construction: str
    params: Optional[ConstructionParams]
    tower: CoverTower
    target_genus: Genus
    graphs: BranchClass
    cover: CyclicCoverSpec
    total_chi: EulerChar
    signature: int
    closed_form_signature: int
    fibration1: BundleRecord
    fibration2: BundleRecord
    components: int = 1
    notes: Tuple[str, ...] = (CONNECTIVITY_NOTE,)

    @property
    def domain_genus(self) -> Genus:
        return self.graphs.components[0].domain_genus

    @property
    def graph_degree(self) -> int:
        return self.graphs.components[0].degree

    @property
    def sheets(self) -> int:
        return self.cover.sheets


def _product_closed_form(sheets, graph_count, graph_degree, target_genus) -> int:
    """σ of an n-fold cover of Y × C branched along disjoint graphs of degree-d maps Y → C, with
    the adjunction and the signature formula folded into one expression."""
    value = Fraction(sheets * sheets - 1, 3 * sheets) * graph_count * graph_degree * (2 * target_genus - 2)
    if value.denominator != 1:
        raise InvalidCoverData('closed-form signature %s is not an integer' % value)
    return int(value)


def xgn_signature(g: int, n: int) -> int:
    """σ(X_{g,n}) = (4/3) g (g-1) (n² - 1) n^(2g-3)."""
    if g < 2 or n < 2:
        raise ParameterOutOfRange('X_{g,n} needs g, n >= 2, got g=%d, n=%d' % (g, n))
    value = Fraction(4, 3) * g * (g - 1) * (n * n - 1) * n ** (2 * g - 3)
    if value.denominator != 1:
        raise InvalidCoverData('signature of X_{%d,%d} is %s, not an integer' % (g, n, value))
    return int(value)


def xgn_fibrations(g: int, n: int, sigma: int) -> Tuple[BundleRecord, BundleRecord]:
    """The two fibrations of X_{g,n} in closed form: over C, and over D̃."""
    power = n ** (2 * g - 2)
    over_c = BundleRecord(g, g * (g * n - 1) * power + 1, sigma, 'X_{%d,%d} -> C' % (g, n))
    over_d = BundleRecord(g * (g - 1) * power + 1, g * n, sigma, 'X_{%d,%d} -> D~' % (g, n))
    return over_c, over_d


def _assemble_cover(domain_genus, target_genus, graph_degree, sheets):
    graphs = BranchClass((GraphDivisor(domain_genus, target_genus, graph_degree),) * 2, pairwise_disjoint=True)
    cover = CyclicCoverSpec(sheets=sheets, ambient_signature=0, branch_square=branch_class_square(graphs))
    ambient_chi = euler_from_genus(domain_genus) * euler_from_genus(target_genus)
    # every graph is a copy of the domain curve
    branch_chi = len(graphs.components) * euler_from_genus(domain_genus)
    total_chi = branched_cover_euler(sheets, ambient_chi, branch_chi)
    return graphs, cover, total_chi


def _fibrations_from_euler(total_chi, target_genus, domain_genus, sigma, label, domain_name):
    """Fiber genera of both projections from χ(total) = χ(base) · χ(fiber)."""
    records = []
    for base, over in ((target_genus, 'C'), (domain_genus, domain_name)):
        base_chi = euler_from_genus(base)
        if base_chi == 0 or total_chi % base_chi:
            raise InvalidCoverData('χ = %d does not split over a base of genus %d' % (total_chi, base))
        records.append(BundleRecord(base, genus_from_euler(total_chi // base_chi), sigma,
                                    '%s -> %s' % (label, over)))
    return records[0], records[1]


def build_xgn(p: ConstructionParams) -> ConstructionReport:
    g, n = p.g, p.n
    tower = CoverTower.chain(1, [
        ('C', g, RamificationProfile.total(g, 2)),
        ('D', g, RamificationProfile.unramified()),
        ('D~', n ** (2 * g - 2), RamificationProfile.unramified()),
    ])
    domain = tower.top.total_genus
    graph_degree = tower.degree_over('C')
    graphs, cover, total_chi = _assemble_cover(domain, g, graph_degree, n)
    sigma = hirzebruch_signature(cover)
    closed = xgn_signature(g, n)
    fibration1, fibration2 = xgn_fibrations(g, n, closed)
    logger.debug('X_{%d,%d}: g(D~)=%d, graph degree %d, branch square %d, σ=%d, χ=%d',
                 g, n, domain, graph_degree, cover.branch_square, sigma, total_chi)
    return ConstructionReport(XGN, p, tower, g, graphs, cover, total_chi, sigma, closed,
                              fibration1, fibration2)


def build_simple_genus2() -> ConstructionReport:
    target = 2
    # H1(C, Z/2) has order 2^(2g)
    tower = CoverTower.chain(target, [('C~', 2 ** (2 * target), RamificationProfile.unramified())])
    domain = tower.top.total_genus
    graphs, cover, total_chi = _assemble_cover(domain, target, tower.top.degree, 2)
    sigma = hirzebruch_signature(cover)
    closed = _product_closed_form(2, len(graphs.components), tower.top.degree, target)
    fibration1, fibration2 = _fibrations_from_euler(total_chi, target, domain, closed, SIMPLE_GENUS2, 'C~')
    logger.debug('simple genus-2 construction: g(C~)=%d, σ=%d, χ=%d', domain, sigma, total_chi)
    return ConstructionReport(SIMPLE_GENUS2, None, tower, target, graphs, cover, total_chi, sigma, closed,
                              fibration1, fibration2)


def split_components(rep: ConstructionReport, components: int) -> ConstructionReport:
    """One connected component of the construction when its top curve falls into `components`
    pieces.

    Each piece is an unramified cover of C of degree d/N, so it has genus (h - 1)/N + 1, and the
    component of the total space is the cyclic cover of piece × C. Both fibrations survive with a
    smaller base (over the piece) or a smaller fiber (over C).
    """
    if components < 1:
        raise ParameterOutOfRange('component count %d < 1' % components)
    if components == 1:
        return rep
    degree, domain = rep.graph_degree, rep.domain_genus
    if degree % components or (domain - 1) % components:
        raise InvalidCoverData('%d components cannot split a degree-%d cover of genus %d'
                               % (components, degree, domain))
    piece_degree = degree // components
    piece = (domain - 1) // components + 1
    graphs, cover, total_chi = _assemble_cover(piece, rep.target_genus, piece_degree, rep.sheets)
    sigma = hirzebruch_signature(cover)
    closed = _product_closed_form(rep.sheets, len(graphs.components), piece_degree, rep.target_genus)
    label = '%s component 1/%d' % (rep.construction, components)
    fibration1, fibration2 = _fibrations_from_euler(total_chi, rep.target_genus, piece, closed, label,
                                                    '%s piece' % rep.tower.top.name)
    note = 'top curve split into %d components; this report describes one of them' % components
    return ConstructionReport(rep.construction, rep.params, rep.tower, rep.target_genus, graphs, cover,
                              total_chi, sigma, closed, fibration1, fibration2, components, (note,))


def pullback(rec: BundleRecord, m: int) -> BundleRecord:
    """Pull back along an unramified degree-m cover of the base: σ and b - 1 scale by m."""
    if m < 1:
        raise ParameterOutOfRange('pullback degree %d < 1' % m)
    provenance = rec.provenance if m == 1 else '%s, pulled back by degree %d' % (rec.provenance, m)
    return BundleRecord(m * (rec.base_genus - 1) + 1, rec.fiber_genus, m * rec.signature, provenance)


def asymptotic_slope(rec: BundleRecord) -> Fraction:
    """The limit of b/m along the pullback sequence of `rec`: (b - 1)/(σ/4)."""
    quantum = signature_quantum(rec.signature)
    if quantum == 0:
        raise ParameterOutOfRange('a bundle of signature 0 has no pullback slope')
    return Fraction(rec.base_genus - 1, quantum)


def _check(name, predicate, detail):
    try:
        return CheckResult(name, bool(predicate()), detail)
    except SurfaceBundleError as exc:
        return CheckResult(name, False, '%s: %s' % (type(exc).__name__, exc))


def _per_plugin(hook_name, rep):
    """Yield (plugin name, results, error) for every plugin implementing `hook_name`.

    Each plugin is called through its own subset hook caller, so wrappers and argument
    handling follow pluggy, and one plugin raising does not hide the others.
    """
    pm = get_plugin_manager()
    names = dict.fromkeys(impl.plugin_name for impl in getattr(pm.hook, hook_name).get_hookimpls())
    for name in names:
        others = [plugin for other, plugin in pm.list_name_plugin() if other != name and plugin is not None]
        caller = pm.subset_hook_caller(hook_name, remove_plugins=others)
        try:
            results = caller(report=rep)
        except Exception as exc:
            yield name, [], exc
            continue
        if not isinstance(results, list):
            results = [results]
        items = []
        for result in results:
            if isinstance(result, list):
                items.extend(result)
            elif result is not None:
                items.append(result)
        yield name, items, None


def _extra_checks(rep) -> List[CheckResult]:
    checks = []
    for name, items, error in _per_plugin('surfbundles_extra_checks', rep):
        if error is not None:
            checks.append(CheckResult('plugin:%s' % name, False,
                                      'hook raised %s: %s' % (type(error).__name__, error)))
            continue
        for item in items:
            if isinstance(item, CheckResult):
                checks.append(item)
            else:
                checks.append(CheckResult('plugin:%s' % name, False,
                                          'hook returned %r, not a CheckResult' % (item,)))
    return checks


def cross_validate(rep: ConstructionReport) -> List[CheckResult]:
    """Re-derive the report's numbers along independent routes. Failures are returned, not raised."""
    f1, f2, n = rep.fibration1, rep.fibration2, rep.sheets
    branch_points = len(rep.graphs.components)
    checks = [
        _check('euler_fibration1', lambda: f1.euler_characteristic == rep.total_chi,
               'χ(base)·χ(fiber) = %d vs branched-cover χ = %d' % (f1.euler_characteristic, rep.total_chi)),
        _check('euler_fibration2', lambda: f2.euler_characteristic == rep.total_chi,
               'χ(base)·χ(fiber) = %d vs branched-cover χ = %d' % (f2.euler_characteristic, rep.total_chi)),
        _check('fibration_bases', lambda: (f1.base_genus, f2.base_genus) == (rep.target_genus, rep.domain_genus),
               'bases (%d, %d) vs curves (%d, %d)'
               % (f1.base_genus, f2.base_genus, rep.target_genus, rep.domain_genus)),
        _check('signature_routes', lambda: rep.signature == rep.closed_form_signature,
               'branched-cover formula %d vs closed form %d' % (rep.signature, rep.closed_form_signature)),
        _check('signature_divisible_by_4',
               lambda: all(s % 4 == 0 for s in (rep.signature, f1.signature, f2.signature)),
               'signatures %d, %d, %d' % (rep.signature, f1.signature, f2.signature)),
        _check('signature_agreement', lambda: f1.signature == f2.signature == rep.signature,
               'fibrations %d, %d vs cover %d' % (f1.signature, f2.signature, rep.signature)),
        _check('fiber_genus_fibration1',
               lambda: rh_cover_genus(rep.domain_genus, n, RamificationProfile.total(n, branch_points * rep.graph_degree))
               == f1.fiber_genus,
               '%d-fold cover of genus %d branched at %d points vs fiber genus %d'
               % (n, rep.domain_genus, branch_points * rep.graph_degree, f1.fiber_genus)),
        _check('fiber_genus_fibration2',
               lambda: rh_cover_genus(rep.target_genus, n, RamificationProfile.total(n, branch_points))
               == f2.fiber_genus,
               '%d-fold cover of genus %d branched at %d points vs fiber genus %d'
               % (n, rep.target_genus, branch_points, f2.fiber_genus)),
        _check('tower_chain', lambda: _tower_chains(rep.tower), '%d steps' % len(rep.tower.steps)),
    ]
    if rep.components == 1:
        checks.append(_check('tower_top_is_domain', lambda: rep.tower.top.total_genus == rep.domain_genus,
                             'tower top genus %d vs graph domain genus %d'
                             % (rep.tower.top.total_genus, rep.domain_genus)))
    if rep.construction == XGN and rep.params is not None and rep.components == 1:
        expected = Fraction(3 * n, n * n - 1)
        checks.append(_check('pullback_slope', lambda: asymptotic_slope(f2) == expected,
                             'slope of fibration 2 vs 3n/(n²-1) = %s' % expected))
    checks.extend(_extra_checks(rep))
    return checks


def _tower_chains(tower: CoverTower) -> bool:
    previous = None
    for step in tower.steps:
        if step.total_genus != rh_cover_genus(step.base_genus, step.degree, step.ram):
            return False
        if previous is not None and step.base_genus != previous.total_genus:
            return False
        previous = step
    return True


def _metadata(rep):
    metadata = {}
    for name, items, error in _per_plugin('surfbundles_report_metadata', rep):
        if error is not None:
            _warn('METADATA_HOOK_ERROR', 'plugin %s failed to add metadata: %s' % (name, error))
            continue
        for item in items:
            if isinstance(item, (tuple, list)) and len(item) == 2:
                metadata[str(item[0])] = item[1]
            else:
                _warn('METADATA_HOOK_ERROR', 'plugin %s returned %r, not a (name, value) pair' % (name, item))
    return metadata


def report_document(rep: ConstructionReport, checks: Optional[List[CheckResult]] = None):
    """The JSON shape of a report; runs `cross_validate` unless checks are given."""
    if checks is None:
        checks = cross_validate(rep)
    return {
        'schema_version': SCHEMA_VERSION,
        'construction': rep.construction,
        'params': rep.params.as_dict() if rep.params else None,
        'tower': rep.tower.as_dict(),
        'target_genus': rep.target_genus,
        'graphs': rep.graphs.as_dict(),
        'cover': rep.cover.as_dict(),
        'signature': rep.signature,
        'closed_form_signature': rep.closed_form_signature,
        'signature_quantum': rep.signature // 4 if rep.signature % 4 == 0 else None,
        'total_chi': rep.total_chi,
        'fibration1': rep.fibration1.as_dict(),
        'fibration2': rep.fibration2.as_dict(),
        'fibration2_slope': _slope_text(rep.fibration2),
        'components': rep.components,
        'notes': list(rep.notes),
        'checks': [c.as_dict() for c in checks],
        'metadata': _metadata(rep),
    }


def _slope_text(rec):
    try:
        return rational(asymptotic_slope(rec))
    except SurfaceBundleError:
        return None

