# -*- coding: utf-8 -*-
"""Test harness for surfbundles.

Every quantity in this package is an exact integer or rational, so every assertion below is an
equality. Nothing is compared with a tolerance, and a test that needs one has found a bug.

Expected values come from two places, kept apart on purpose: numbers stated for the constructions
(signature 16 with fiber genus 25 over genus 2; fiber genus 49 with signature 32), and values
re-derived by a second route in the test itself (χ bookkeeping, orbit counting by hand). A test
that recomputes its expectation with the code under test proves nothing, so none do.

`pytester` runs the pytest plugin in a throwaway directory; the plugin is also active here, which
is what parametrizes every test taking `xgn_params`.
"""
pytest_plugins = ["pytester", "surfbundles.pytest_plugin"]
