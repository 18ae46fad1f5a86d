# -*- coding: utf-8 -*-
import pluggy

hookspec = pluggy.HookspecMarker('surfbundles')
hookimpl = pluggy.HookimplMarker('surfbundles')


@hookspec
def surfbundles_extra_checks(report):
    """
    Hook for adding checks to `cross_validate` for a construction report.
    Should return a list of CheckResult.
    """


@hookspec
def surfbundles_report_metadata(report):
    """
    Hook for adding metadata to the JSON document of a construction report.
    Should return a list of (name, value) tuples; values must be JSON-serializable.
    """
