# -*- coding: utf-8 -*-
"""Exact invariants of surface bundles built as cyclic branched covers of products of curves."""

__version__ = '0.1.0'
