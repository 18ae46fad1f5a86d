# -*- coding: utf-8 -*-
"""pytest support for suites that sweep the X_{g,n} family.

Any test that takes an `xgn_params` argument runs once per (g, n) in the box
2 <= g <= --sweep-g-max, 2 <= n <= --sweep-n-max. The box is an option rather than a constant so
a CI job can widen it without editing tests; the defaults are the box every identity in this
package is pinned on.
"""
import pytest

from .constructions import ConstructionParams, build_simple_genus2, build_xgn

DEFAULT_SWEEP_MAX = 5


def pytest_addoption(parser):
    """Adds all command-line options for the plugin."""
    group = parser.getgroup('surfbundles', 'surfbundles construction sweeps')
    group.addoption('--sweep-g-max', dest='sweep_g_max', type=int, default=DEFAULT_SWEEP_MAX,
                    help='Largest g in the X_{g,n} sweep. Default: %d.' % DEFAULT_SWEEP_MAX)
    group.addoption('--sweep-n-max', dest='sweep_n_max', type=int, default=DEFAULT_SWEEP_MAX,
                    help='Largest n in the X_{g,n} sweep. Default: %d.' % DEFAULT_SWEEP_MAX)


def pytest_configure(config):
    config.addinivalue_line('markers', 'sweep: the test runs over the whole X_{g,n} sweep box')
    if config.option.sweep_g_max < 2 or config.option.sweep_n_max < 2:
        raise pytest.UsageError('--sweep-g-max and --sweep-n-max must be at least 2')


def sweep_params(config):
    return [ConstructionParams(g, n)
            for g in range(2, config.option.sweep_g_max + 1)
            for n in range(2, config.option.sweep_n_max + 1)]


def pytest_generate_tests(metafunc):
    if 'xgn_params' in metafunc.fixturenames:
        params = sweep_params(metafunc.config)
        metafunc.parametrize('xgn_params', params, ids=['g%d-n%d' % (p.g, p.n) for p in params])


@pytest.fixture(scope='session')
def construction_sweep(pytestconfig):
    """Every X_{g,n} report in the sweep box, built once per session."""
    return [build_xgn(p) for p in sweep_params(pytestconfig)]


@pytest.fixture(scope='session')
def simple_genus2_report():
    return build_simple_genus2()
