# -*- coding: utf-8 -*-
"""Command-line entry point.

    surfbundles construct G N        X_{g,n} report (JSON)
    surfbundles simple               the base-genus-2, fiber-genus-49 construction
    surfbundles split G N COMPONENTS one component of X_{g,n} when D~ has that many components
    surfbundles pullback G N M       both fibrations of X_{g,n} pulled back by degree-M covers
    surfbundles bounds F [M]         every bound on G_f (and on b_f(M)) the package knows
    surfbundles table F_MAX          bounds table for f = 4..F_MAX (JSON or --format csv)
    surfbundles verify [G_MAX N_MAX] cross-check sweep, exit 3 when anything fails
    surfbundles monodromy PATH       validate a cover file, count components, compute genera

Exit status: 0 success, 1 usage error, 2 invalid input data, 3 failed verification.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import bounds, constructions, monodromy
from .cyclic_signature import CyclicCoverSpec, hirzebruch_signature
from .errors import SurfaceBundleError
from .report_core import SCHEMA_VERSION, dumps, write_document
from .surface_products import GraphDivisor, graph_self_intersection
from .topology_core import RamificationProfile, genus_from_euler, rh_cover_genus

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_INPUT = 2
EXIT_VERIFICATION_FAILED = 3

PULLBACK_DEGREES = range(1, 11)


class UsageError(Exception):
    """Bad command line; exit status 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on its own; 2 means "invalid input data" here.
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class CommandConfig:
    subcommand: str
    g: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None
    f: Optional[int] = None
    f_max: Optional[int] = None
    components: Optional[int] = None
    g_max: int = 5
    n_max: int = 5
    path: Optional[str] = None
    output_format: str = 'json'
    out: Optional[str] = None
    verbosity: int = 0

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> 'CommandConfig':
        fields = {name: getattr(ns, name) for name in cls.__dataclass_fields__ if getattr(ns, name, None) is not None}
        return cls(**fields)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--format', dest='output_format', choices=('json', 'csv'), default='json',
                        help='Output format. csv is only available for `table`. Default: json.')
    common.add_argument('--out', dest='out', default=None, metavar='PATH',
                        help='Write the document to PATH instead of standard output.')
    common.add_argument('-v', '--verbose', dest='verbosity', action='count', default=0,
                        help='Log to stderr: -v info, -vv debug.')

    parser = _Parser(prog='surfbundles', description='Invariants of surface bundles built as cyclic '
                                                     'branched covers of products of curves.')
    sub = parser.add_subparsers(dest='subcommand', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('construct', parents=[common], help='X_{g,n} report')
    p.add_argument('g', type=int)
    p.add_argument('n', type=int)

    sub.add_parser('simple', parents=[common], help='base genus 2, fiber genus 49 construction')

    p = sub.add_parser('split', parents=[common], help='one component of a disconnected X_{g,n}')
    p.add_argument('g', type=int)
    p.add_argument('n', type=int)
    p.add_argument('components', type=int)

    p = sub.add_parser('pullback', parents=[common], help='pull both fibrations back by degree m')
    p.add_argument('g', type=int)
    p.add_argument('n', type=int)
    p.add_argument('m', type=int)

    p = sub.add_parser('bounds', parents=[common], help='bounds on G_f and b_f(m)')
    p.add_argument('f', type=int)
    p.add_argument('m', type=int, nargs='?')

    p = sub.add_parser('table', parents=[common], help='bounds table for f = 4..f_max')
    p.add_argument('f_max', type=int)

    p = sub.add_parser('verify', parents=[common], help='cross-check sweep over 2..g_max x 2..n_max')
    p.add_argument('g_max', type=int, nargs='?', default=5)
    p.add_argument('n_max', type=int, nargs='?', default=5)

    p = sub.add_parser('monodromy', parents=[common], help='check a permutation cover file')
    p.add_argument('path')
    return parser


def _construct(config):
    rep = constructions.build_xgn(constructions.ConstructionParams(config.g, config.n))
    return EXIT_OK, constructions.report_document(rep)


def _simple(config):
    return EXIT_OK, constructions.report_document(constructions.build_simple_genus2())


def _split(config):
    rep = constructions.build_xgn(constructions.ConstructionParams(config.g, config.n))
    return EXIT_OK, constructions.report_document(constructions.split_components(rep, config.components))


def _pullback(config):
    rep = constructions.build_xgn(constructions.ConstructionParams(config.g, config.n))
    return EXIT_OK, {
        'schema_version': SCHEMA_VERSION,
        'params': rep.params.as_dict(),
        'm': config.m,
        'fibration1': constructions.pullback(rep.fibration1, config.m).as_dict(),
        'fibration2': constructions.pullback(rep.fibration2, config.m).as_dict(),
    }


def _bound_doc(report):
    return report.as_dict() if report is not None else None


def _bounds(config):
    f, m = config.f, config.m
    quoted = f >= 4 and f % 2 == 0
    document = {
        'schema_version': SCHEMA_VERSION,
        'f': f,
        'm': m,
        'gf_upper': _bound_doc(bounds.gf_upper(f)),
        'gf_upper_base_route': _bound_doc(bounds.gf_upper_base_route(f)),
        'ekkos_upper': _bound_doc(bounds.ekkos_upper(f)) if quoted else None,
        'kotschick_lower': _bound_doc(bounds.kotschick_lower(f)),
        'notes': [] if quoted else [bounds.EKKOS_NOTE],
    }
    if m is not None:
        document['bfm_upper'] = _bound_doc(bounds.bfm_upper(f, m))
        document['bfm_upper_base_route'] = _bound_doc(bounds.bfm_upper_base_route(f, m))
        document['best_bfm_upper'] = _bound_doc(bounds.best_bfm_upper(f, m))
    return EXIT_OK, document


def _table(config):
    rows = bounds.bounds_table(config.f_max)
    if config.output_format == 'csv':
        return EXIT_OK, bounds.table_csv(rows)
    return EXIT_OK, bounds.table_document(rows)


def _guarded(case, name, predicate, detail=''):
    try:
        return case, constructions.CheckResult(name, bool(predicate()), detail)
    except SurfaceBundleError as exc:
        return case, constructions.CheckResult(name, False, '%s: %s' % (type(exc).__name__, exc))


def verify_sweep(g_max: int, n_max: int) -> List[Tuple[str, constructions.CheckResult]]:
    """Every cross-check over the box, as (case, result) pairs in a fixed order."""
    results = []
    for g in range(2, g_max + 1):
        for n in range(2, n_max + 1):
            case = 'X_{%d,%d}' % (g, n)
            logger.info('verifying %s', case)
            rep = constructions.build_xgn(constructions.ConstructionParams(g, n))
            results.extend((case, check) for check in constructions.cross_validate(rep))
            results.append(_guarded(case, 'monodromy_oracle', lambda: (
                genus_from_euler(monodromy.perm_cover_euler(monodromy.cyclic_cover_spec(g, n, [0] * (2 * g))))
                == rh_cover_genus(g, n, RamificationProfile.total(n, 2)) == g * n),
                'cycle-counting genus vs Riemann-Hurwitz vs gn = %d' % (g * n)))
            base = rep.fibration2
            results.append(_guarded(case, 'pullback_linearity', lambda: all(
                constructions.pullback(base, m).signature == m * base.signature
                and constructions.pullback(base, m).base_genus - 1 == m * (base.base_genus - 1)
                for m in PULLBACK_DEGREES), 'fibration 2 pulled back by m = 1..10'))
            f = g * n
            results.append(_guarded(case, 'bound_consistency', lambda: (
                bounds.kotschick_lower(f).value <= bounds.gf_upper(f).value <= bounds.fiber_route_slope(n)),
                'kotschick_lower(%d) <= gf_upper(%d) <= 3n/(n²-1)' % (f, f)))
            results.append(_guarded(case, 'graph_square_domain_independence', lambda: len({
                graph_self_intersection(GraphDivisor(domain, g, rep.graph_degree))
                for domain in (0, 1, g, rep.domain_genus)}) == 1,
                'Γ² of degree-%d graphs into genus %d over domains 0, 1, %d, %d'
                % (rep.graph_degree, g, g, rep.domain_genus)))
            squares = [graph_self_intersection(c) for c in rep.graphs.components]
            results.append(_guarded(case, 'signature_linearity', lambda: (
                hirzebruch_signature(CyclicCoverSpec(n, 0, 0)) == 0
                and hirzebruch_signature(CyclicCoverSpec(n, 0, sum(squares)))
                == sum(hirzebruch_signature(CyclicCoverSpec(n, 0, s)) for s in squares)),
                'signature of the branch class vs the sum over its components %s' % squares))
            if f % 2 == 0:
                results.append(_guarded(case, 'even_fiber_comparison', lambda: (
                    bounds.gf_upper(f).value == bounds.even_fiber_bound(f) < bounds.ekkos_upper(f).value),
                    'gf_upper(%d) = 6f/(f²-4) < 16/(f-2)' % f))
    simple = constructions.build_simple_genus2()
    results.extend((constructions.SIMPLE_GENUS2, check) for check in constructions.cross_validate(simple))
    return results


def _verify(config):
    if config.g_max < 2 or config.n_max < 2:
        raise UsageError('verify needs g_max, n_max >= 2')
    results = verify_sweep(config.g_max, config.n_max)
    failures = [{'case': case, 'name': check.name, 'detail': check.detail}
                for case, check in results if not check.passed]
    for failure in failures:
        logger.warning('check failed: %(case)s %(name)s (%(detail)s)', failure)
    document = {
        'schema_version': SCHEMA_VERSION,
        'swept': {'g_max': config.g_max, 'n_max': config.n_max},
        'constructions': (config.g_max - 1) * (config.n_max - 1) + 1,
        'checks': len(results),
        'passed': len(results) - len(failures),
        'failed': len(failures),
        'failures': failures,
        'summary': 'all checks passed' if not failures else '%d check(s) failed' % len(failures),
    }
    return (EXIT_VERIFICATION_FAILED if failures else EXIT_OK), document


def _monodromy(config):
    pc = monodromy.read_cover(config.path)
    document = {
        'schema_version': SCHEMA_VERSION,
        'base_genus': pc.base_genus,
        'degree': pc.degree,
        'valid': monodromy.validate(pc),
        'components': None,
        'euler_characteristic': None,
        'genus': None,
        'component_genera': None,
    }
    if not document['valid']:
        logger.warning('%s: the surface-group relation fails or a permutation has the wrong size', config.path)
        return EXIT_INVALID_INPUT, document
    pieces = monodromy.components(pc)
    document['components'] = len(pieces)
    document['euler_characteristic'] = monodromy.perm_cover_euler(pc)
    document['component_genera'] = [genus_from_euler(monodromy.perm_cover_euler(p)) for p in pieces]
    if len(pieces) == 1:
        document['genus'] = document['component_genera'][0]
    return EXIT_OK, document


_HANDLERS = {
    'construct': _construct,
    'simple': _simple,
    'split': _split,
    'pullback': _pullback,
    'bounds': _bounds,
    'table': _table,
    'verify': _verify,
    'monodromy': _monodromy,
}


def run(config: CommandConfig) -> Tuple[int, str]:
    """Execute one command; returns (exit status, document text). Never writes anything itself."""
    if config.subcommand not in _HANDLERS:
        raise UsageError('unknown command %r' % config.subcommand)
    if config.output_format == 'csv' and config.subcommand != 'table':
        raise UsageError('--format csv is only available for `table`')
    status, document = _HANDLERS[config.subcommand](config)
    text = document if isinstance(document, str) else dumps(document)
    return status, text


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        config = CommandConfig.from_namespace(ns)
        _configure_logging(config.verbosity)
        status, text = run(config)
        write_document(text, config.out)
    except UsageError as exc:
        print('surfbundles: usage error: %s' % exc, file=sys.stderr)
        return EXIT_USAGE
    except (SurfaceBundleError, OSError) as exc:
        print('surfbundles: invalid input: %s' % exc, file=sys.stderr)
        return EXIT_INVALID_INPUT
    return status
