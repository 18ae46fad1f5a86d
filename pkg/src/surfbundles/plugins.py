# -*- coding: utf-8 -*-
"""The process-wide plugin manager.

Third-party packages plug in through the `surfbundles` entry point group; tests and embedding code
can `get_plugin_manager().register(obj)` directly.
"""
import functools
import logging

import pluggy

from . import hookspecs

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def get_plugin_manager() -> pluggy.PluginManager:
    pm = pluggy.PluginManager('surfbundles')
    pm.add_hookspecs(hookspecs)
    loaded = pm.load_setuptools_entrypoints('surfbundles')
    if loaded:
        logger.debug('loaded %d surfbundles plugin(s) from entry points', loaded)
    return pm
