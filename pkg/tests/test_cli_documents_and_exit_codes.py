# -*- coding: utf-8 -*-
"""The `surfbundles` command, driven through `main(argv)` in-process.

Two guarantees matter more than the document contents, which the library tests already pin:

  - the exit status tells a script what happened (0 ok, 1 usage, 2 invalid input, 3 a failed
    check), and a failing command never leaves a partial `--out` file behind;
  - the same invocation writes the same bytes every time.
"""
from __future__ import annotations

import csv
import io
import json
import os
import sys

import pytest

from surfbundles.cli import (EXIT_INVALID_INPUT, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, CommandConfig,
                             build_parser, main, verify_sweep)
from surfbundles.constructions import CheckResult
from surfbundles.hookspecs import hookimpl
from surfbundles.monodromy import cyclic_cover_spec, dump_cover, identity
from surfbundles.plugins import get_plugin_manager


def _run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_construct_two_two(capsys):
    status, out, _ = _run(capsys, 'construct', '2', '2')
    assert status == EXIT_OK
    document = json.loads(out)
    assert document['schema_version'] == '1'
    assert document['params'] == {'g': 2, 'n': 2}
    assert document['signature'] == document['closed_form_signature'] == 16
    assert document['signature_quantum'] == 4
    assert (document['fibration1']['base_genus'], document['fibration1']['fiber_genus']) == (2, 25)
    assert (document['fibration2']['base_genus'], document['fibration2']['fiber_genus']) == (9, 4)
    assert document['fibration2_slope'] == '2'
    assert all(check['passed'] for check in document['checks'])


def test_simple_construction(capsys):
    status, out, _ = _run(capsys, 'simple')
    document = json.loads(out)
    assert status == EXIT_OK
    assert document['params'] is None
    assert (document['fibration1']['base_genus'], document['fibration1']['fiber_genus'],
            document['fibration1']['signature']) == (2, 49, 32)


def test_split(capsys):
    status, out, _ = _run(capsys, 'split', '2', '2', '2')
    assert status == EXIT_OK
    document = json.loads(out)
    assert document['components'] == 2
    assert document['signature'] == 8


def test_pullback(capsys):
    status, out, _ = _run(capsys, 'pullback', '2', '2', '3')
    assert status == EXIT_OK
    document = json.loads(out)
    assert document['m'] == 3
    assert (document['fibration1']['base_genus'], document['fibration1']['signature']) == (4, 48)
    assert (document['fibration2']['base_genus'], document['fibration2']['fiber_genus']) == (25, 4)


def test_bounds_with_and_without_m(capsys):
    _, out, _ = _run(capsys, 'bounds', '4')
    document = json.loads(out)
    assert document['gf_upper']['value'] == '2'
    assert document['gf_upper']['witness']['n'] == 2
    assert document['ekkos_upper']['value'] == '8'
    assert document['kotschick_lower']['value'] == '2/3'
    assert document['notes'] == []
    assert 'bfm_upper' not in document

    _, out, _ = _run(capsys, 'bounds', '4', '4')
    document = json.loads(out)
    assert document['bfm_upper']['value'] == '9'
    assert document['best_bfm_upper'] == document['bfm_upper']
    assert document['bfm_upper_base_route'] is None


def test_bounds_for_odd_f_has_no_quoted_upper_bound(capsys):
    status, out, _ = _run(capsys, 'bounds', '25')
    document = json.loads(out)
    assert status == EXIT_OK
    assert document['ekkos_upper'] is None
    assert document['notes'] == ['16/(f-2) is quoted for even fiber genus only']
    assert document['gf_upper_base_route']['value'] == '1/4'


def test_table_csv(capsys):
    status, out, _ = _run(capsys, 'table', '10', '--format', 'csv')
    assert status == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ['f', 'gf_upper', 'gf_witness', 'ekkos_upper', 'kotschick_lower']
    assert rows[1] == ['4', '2', '(2,2)', '8', '2/3']
    assert [r[0] for r in rows[1:]] == [str(f) for f in range(4, 11)]


def test_table_json(capsys):
    _, out, _ = _run(capsys, 'table', '6')
    document = json.loads(out)
    assert [row['f'] for row in document['rows']] == [4, 5, 6]
    assert document['rows'][2]['gf_upper'] == '9/8'


def test_verify_passes_on_the_default_box(capsys, construction_sweep, simple_genus2_report):
    status, out, _ = _run(capsys, 'verify', '5', '5')
    document = json.loads(out)
    assert status == EXIT_OK
    assert document['summary'] == 'all checks passed'
    assert document['failed'] == 0
    assert document['constructions'] == len(construction_sweep) + 1 == 17
    assert document['passed'] == document['checks'] > 17 * 10


def test_verify_sweep_runs_every_case_in_order():
    cases = []
    for case, _ in verify_sweep(3, 2):
        if case not in cases:
            cases.append(case)
    assert cases == ['X_{2,2}', 'X_{3,2}', 'simple_genus2']


def test_verify_sweep_covers_the_bounds_and_intersection_identities():
    names_by_case = {}
    for case, check in verify_sweep(3, 3):
        names_by_case.setdefault(case, set()).add(check.name)
        assert check.passed, (case, check)
    common = {'monodromy_oracle', 'pullback_linearity', 'bound_consistency',
              'graph_square_domain_independence', 'signature_linearity'}
    for case in ('X_{2,2}', 'X_{2,3}', 'X_{3,2}', 'X_{3,3}'):
        assert common <= names_by_case[case]
    # the comparison with 16/(f-2) only exists for even f = g·n
    assert 'even_fiber_comparison' in names_by_case['X_{2,3}']
    assert 'even_fiber_comparison' not in names_by_case['X_{3,3}']


def test_output_survives_a_console_that_is_not_utf8(monkeypatch):
    buffer = io.BytesIO()
    console = io.TextIOWrapper(buffer, encoding='cp1252')
    monkeypatch.setattr(sys, 'stdout', console)
    status = main(['construct', '2', '2'])
    console.flush()
    assert status == EXIT_OK
    text = buffer.getvalue().decode('ascii')
    document = json.loads(text)
    assert any('χ' in check['detail'] for check in document['checks'])


class _AlwaysFails:
    @hookimpl
    def surfbundles_extra_checks(self, report):
        return [CheckResult('always_fails', False, 'planted')]


def test_verify_exits_3_when_a_check_fails(capsys):
    pm = get_plugin_manager()
    pm.register(_AlwaysFails(), 'always-fails')
    try:
        status, out, _ = _run(capsys, 'verify', '2', '2')
    finally:
        pm.unregister(name='always-fails')
    document = json.loads(out)
    assert status == EXIT_VERIFICATION_FAILED
    # X_{2,2} and the simple construction
    assert document['failed'] == 2
    assert document['summary'] == '2 check(s) failed'
    assert {f['name'] for f in document['failures']} == {'always_fails'}


@pytest.mark.parametrize('argv', [
    [],
    ['construct', '2'],
    ['construct', 'two', '2'],
    ['nonsense'],
    ['construct', '2', '2', '--format', 'csv'],
    ['verify', '1', '5'],
])
def test_usage_errors_exit_1(capsys, argv):
    status, out, err = _run(capsys, *argv)
    assert status == EXIT_USAGE
    assert out == ''
    assert 'usage error' in err


@pytest.mark.parametrize('argv', [
    ['construct', '1', '2'],
    ['table', '3'],
    ['split', '2', '2', '3'],
    ['pullback', '2', '2', '0'],
])
def test_invalid_parameters_exit_2(capsys, argv):
    status, out, err = _run(capsys, *argv)
    assert status == EXIT_INVALID_INPUT
    assert out == ''
    assert 'invalid input' in err


def test_monodromy_of_a_valid_cover_file(tmp_path, capsys):
    path = tmp_path / 'cover.json'
    path.write_text(json.dumps(dump_cover(cyclic_cover_spec(2, 3, [0, 1, 2, 0]))))
    status, out, _ = _run(capsys, 'monodromy', str(path))
    document = json.loads(out)
    assert status == EXIT_OK
    assert document['valid'] is True
    assert document['components'] == 1
    assert document['euler_characteristic'] == -10
    assert document['genus'] == 6
    assert document['component_genera'] == [6]


def test_monodromy_of_a_disconnected_cover(tmp_path, capsys):
    i2 = identity(2).array_form
    path = tmp_path / 'cover.json'
    path.write_text(json.dumps({'base_genus': 2, 'degree': 2, 'handles': [[i2, i2], [i2, i2]]}))
    _, out, _ = _run(capsys, 'monodromy', str(path))
    document = json.loads(out)
    assert document['components'] == 2
    assert document['genus'] is None
    assert document['component_genera'] == [2, 2]


def test_monodromy_relation_failure_exits_2_with_a_document(tmp_path, capsys):
    path = tmp_path / 'cover.json'
    path.write_text(json.dumps({'base_genus': 0, 'degree': 2, 'branches': ['(0 1)']}))
    status, out, _ = _run(capsys, 'monodromy', str(path))
    assert status == EXIT_INVALID_INPUT
    assert json.loads(out)['valid'] is False


@pytest.mark.parametrize('content', ['{not json', '{"degree": 2}', '{"base_genus": 0, "degree": 2, '
                                                                   '"branches": ["(0 5)"]}'])
def test_broken_cover_files_exit_2(tmp_path, capsys, content):
    path = tmp_path / 'cover.json'
    path.write_text(content)
    status, out, _ = _run(capsys, 'monodromy', str(path))
    assert status == EXIT_INVALID_INPUT
    assert out == ''


def test_missing_cover_file_exits_2(tmp_path, capsys):
    status, _, _ = _run(capsys, 'monodromy', str(tmp_path / 'absent.json'))
    assert status == EXIT_INVALID_INPUT


@pytest.mark.parametrize('argv', [['construct', '3', '2'], ['table', '30', '--format', 'csv'],
                                  ['bounds', '6', '48'], ['verify', '3', '3']])
def test_output_is_byte_identical_across_runs(capsys, argv):
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)
    assert first == second
    assert first


def test_out_writes_the_same_document_to_a_file(tmp_path, capsys):
    _, expected, _ = _run(capsys, 'construct', '2', '3')
    target = tmp_path / 'x23.json'
    status, out, _ = _run(capsys, 'construct', '2', '3', '--out', str(target))
    assert status == EXIT_OK
    assert out == ''
    assert target.read_text(encoding='utf-8') == expected
    assert os.listdir(tmp_path) == ['x23.json']


def test_a_failing_command_leaves_an_existing_out_file_alone(tmp_path, capsys):
    target = tmp_path / 'doc.json'
    target.write_text('previous')
    status, _, _ = _run(capsys, 'construct', '1', '2', '--out', str(target))
    assert status == EXIT_INVALID_INPUT
    assert target.read_text() == 'previous'
    assert os.listdir(tmp_path) == ['doc.json']


def test_out_into_a_missing_directory_exits_2(tmp_path, capsys):
    status, _, _ = _run(capsys, 'simple', '--out', str(tmp_path / 'nowhere' / 'doc.json'))
    assert status == EXIT_INVALID_INPUT


def test_config_from_namespace_keeps_defaults():
    config = CommandConfig.from_namespace(build_parser().parse_args(['verify']))
    assert (config.subcommand, config.g_max, config.n_max, config.output_format, config.out) == \
        ('verify', 5, 5, 'json', None)
    config = CommandConfig.from_namespace(build_parser().parse_args(['bounds', '4', '-vv']))
    assert (config.f, config.m, config.verbosity) == (4, None, 2)
